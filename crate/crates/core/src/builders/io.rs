//! Complex files: a JSON object with `name`, `generators`, `differential`
//! and an optional `iota`.
//!
//! ```json
//! {
//!   "name": "HW",
//!   "generators": [{"id": "a", "grw": 0, "grz": -4}, ...],
//!   "differential": [{"from": "b", "to": "a", "u": 2, "v": 0}, ...],
//!   "iota": [{"from": "a", "to": "c", "u": 0, "v": 0}, ...]
//! }
//! ```
//!
//! Each differential entry is one monomial term. Iota entries are read as a
//! conjugation-skew map and verified by the involutive module.

use crate::complex::{BigradedComplex, ChainMap, Generator, Term};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileGenerator {
    id: String,
    grw: i64,
    grz: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileTerm {
    from: String,
    to: String,
    u: u32,
    v: u32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileComplex {
    name: String,
    generators: Vec<FileGenerator>,
    differential: Vec<FileTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    iota: Option<Vec<FileTerm>>,
}

/// A complex read from a file, with its involution if one was supplied.
#[derive(Clone, Debug)]
pub struct LoadedComplex {
    pub complex: BigradedComplex,
    pub iota: Option<ChainMap>,
}

fn file_err(origin: &str, msg: impl Into<String>) -> Error {
    Error::File {
        path: origin.to_string(),
        msg: msg.into(),
    }
}

fn terms_by_source(
    origin: &str,
    field: &str,
    entries: &[FileTerm],
    index: &HashMap<&str, usize>,
    n: usize,
) -> Result<Vec<Vec<Term>>> {
    let mut seen = HashSet::new();
    let mut out = vec![Vec::new(); n];
    for (k, e) in entries.iter().enumerate() {
        let lookup = |id: &str, key: &str| {
            index.get(id).copied().ok_or_else(|| {
                file_err(
                    origin,
                    format!("{field}[{k}].{key}: unknown generator `{id}`"),
                )
            })
        };
        let from = lookup(&e.from, "from")?;
        let to = lookup(&e.to, "to")?;
        if !seen.insert(e) {
            return Err(file_err(
                origin,
                format!(
                    "{field}[{k}]: duplicate entry (from `{}`, to `{}`, u {}, v {})",
                    e.from, e.to, e.u, e.v
                ),
            ));
        }
        out[from].push(Term::new(to, e.u, e.v));
    }
    Ok(out)
}

/// Parses complex-file text. `origin` labels error messages.
pub fn parse_complex(text: &str, origin: &str) -> Result<LoadedComplex> {
    let raw: FileComplex =
        serde_json::from_str(text).map_err(|e| file_err(origin, e.to_string()))?;
    let gens: Vec<Generator> = raw
        .generators
        .iter()
        .map(|g| Generator::new(g.id.clone(), g.grw, g.grz))
        .collect();
    let n = gens.len();
    let mut index = HashMap::new();
    for (i, g) in raw.generators.iter().enumerate() {
        if index.insert(g.id.as_str(), i).is_some() {
            return Err(file_err(
                origin,
                format!("generators[{i}]: duplicate id `{}`", g.id),
            ));
        }
    }
    let diff = terms_by_source(origin, "differential", &raw.differential, &index, n)?;
    let iota = raw
        .iota
        .as_ref()
        .map(|entries| terms_by_source(origin, "iota", entries, &index, n))
        .transpose()?
        .map(|m| ChainMap::new(m, n, true));
    let complex = BigradedComplex::new(raw.name, gens, diff).map_err(Error::Invalid)?;
    Ok(LoadedComplex { complex, iota })
}

pub fn load_complex(path: impl AsRef<Path>) -> Result<LoadedComplex> {
    let path = path.as_ref();
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| file_err(&origin, e.to_string()))?;
    parse_complex(&text, &origin)
}

fn file_terms(c: &BigradedComplex, m: &[Vec<Term>]) -> Vec<FileTerm> {
    m.iter()
        .enumerate()
        .flat_map(|(i, col)| {
            col.iter().map(move |t| FileTerm {
                from: c.gen(i).id.clone(),
                to: c.gen(t.target as usize).id.clone(),
                u: t.u,
                v: t.v,
            })
        })
        .collect()
}

/// Serializes a complex, and optionally its involution, in file format.
pub fn complex_to_string(c: &BigradedComplex, iota: Option<&ChainMap>) -> String {
    let raw = FileComplex {
        name: c.name().to_string(),
        generators: c
            .gens()
            .iter()
            .map(|g| FileGenerator {
                id: g.id.clone(),
                grw: g.grw,
                grz: g.grz,
            })
            .collect(),
        differential: file_terms(c, c.diffs()),
        iota: iota.map(|m| file_terms(c, &m.matrix)),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("complex serializes");
    s.push('\n');
    s
}

pub fn save_complex(
    c: &BigradedComplex,
    iota: Option<&ChainMap>,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, complex_to_string(c, iota))
        .map_err(|e| file_err(&path.display().to_string(), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Violation;

    const HW: &str = include_str!("../../data/hw.cfk");

    #[test]
    fn hedden_watson_file() {
        let l = parse_complex(HW, "hw.cfk").unwrap();
        assert_eq!(l.complex, super::super::named::hedden_watson());
        assert!(l.iota.is_some());
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let l = parse_complex(HW, "hw.cfk").unwrap();
        let s = complex_to_string(&l.complex, l.iota.as_ref());
        assert_eq!(s, HW);
        let again = parse_complex(&s, "again").unwrap();
        assert_eq!(again.complex, l.complex);
        assert_eq!(again.iota, l.iota);
    }

    #[test]
    fn square_nonzero_names_both_entries() {
        let text = r#"{"name":"bad","generators":[
            {"id":"a","grw":0,"grz":0},{"id":"b","grw":-1,"grz":-1},{"id":"c","grw":-2,"grz":-2}],
            "differential":[{"from":"a","to":"b","u":0,"v":0},{"from":"b","to":"c","u":0,"v":0}]}"#;
        match parse_complex(text, "bad") {
            Err(Error::Invalid(v)) => assert!(matches!(
                &v[0],
                Violation::SquareNonzero { from, to, via, .. }
                    if from == "a" && to == "c" && via == &["b".to_string()]
            )),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicate_entry_rejected() {
        let text = r#"{"name":"d","generators":[{"id":"a","grw":0,"grz":0},{"id":"b","grw":-1,"grz":-1}],
            "differential":[{"from":"a","to":"b","u":0,"v":0},{"from":"a","to":"b","u":0,"v":0}]}"#;
        let err = parse_complex(text, "d").unwrap_err().to_string();
        assert!(err.contains("differential[1]: duplicate"), "{err}");
    }

    #[test]
    fn malformed_file_has_position() {
        let err = parse_complex("{\"name\": 3}", "m").unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn odd_alexander_rejected() {
        let text = r#"{"name":"o","generators":[{"id":"a","grw":0,"grz":1}],"differential":[]}"#;
        assert!(matches!(parse_complex(text, "o"), Err(Error::Invalid(_))));
    }
}
