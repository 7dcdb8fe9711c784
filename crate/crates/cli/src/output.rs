//! Rendering of `report` results. The structured format is a JSON object
//! with sorted keys, so equal inputs give byte-identical output.

use cfk_core::bounds::{
    fmt_exact, signature_extrema, Bound, BoundsReport, ClaspInputs, PLFunction, StepFunction,
};
use cfk_core::complex::{BigradedComplex, Term};
use cfk_core::invariants::InvariantTable;
use cfk_core::involutive::IotaOrder;
use clap::ValueEnum;
use serde_json::{json, Value};
use std::fmt::Write;
use std::ops::RangeInclusive;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    JsonLike,
    Csv,
}

pub struct Report<'a> {
    pub expression: String,
    pub generators: (usize, usize),
    pub v_range: RangeInclusive<u32>,
    pub y_range: RangeInclusive<u32>,
    pub knot: &'a InvariantTable,
    pub mirror: &'a InvariantTable,
    pub knot_complex: &'a BigradedComplex,
    pub mirror_complex: &'a BigradedComplex,
    pub involutive: Option<((i64, i64), String, IotaOrder)>,
    pub upsilon: Option<&'a PLFunction>,
    pub signature: Option<&'a StepFunction>,
    pub extra: &'a ClaspInputs,
    pub bounds: &'a BoundsReport,
}

fn monomial(c: &BigradedComplex, t: &Term) -> String {
    let mut s = String::new();
    for (var, e) in [("U", t.u), ("V", t.v)] {
        match e {
            0 => {}
            1 => s.push_str(var),
            _ => write!(s, "{var}^{e}").unwrap(),
        }
    }
    if !s.is_empty() {
        s.push('*');
    }
    s + &c.gen(t.target as usize).id
}

fn element(c: &BigradedComplex, x: &[Term]) -> String {
    if x.is_empty() {
        "0".into()
    } else {
        x.iter()
            .map(|t| monomial(c, t))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn order_name(o: IotaOrder) -> &'static str {
    match o {
        IotaOrder::IotaLast => "iota-last",
        IotaOrder::IotaFirst => "iota-first",
    }
}

impl Report<'_> {
    fn v_list(&self, t: &InvariantTable) -> Vec<i64> {
        self.v_range.clone().map(|s| t.v[&(s as i64)]).collect()
    }

    fn y_list(&self, t: &InvariantTable) -> Vec<i64> {
        self.y_range.clone().map(|n| t.y[&n]).collect()
    }

    fn table_json(&self, t: &InvariantTable, gens: usize) -> Value {
        json!({
            "name": t.name,
            "generators": gens,
            "V": self.v_list(t),
            "Y": self.y_list(t),
            "nu_plus": t.nu_plus,
            "omega_plus": t.omega_plus,
            "tau": t.tau,
            "nu": t.nu_hat,
            "omega": t.omega_hat,
        })
    }

    fn table_certificates(&self, t: &InvariantTable, c: &BigradedComplex) -> Value {
        let n = t.omega_cycles.n;
        let cycles: Vec<Value> = t
            .omega_cycles
            .cycles
            .iter()
            .enumerate()
            .map(|(k, z)| {
                let i = n - 2 * k as i64;
                json!({ "i": i, "bigrading": [-n + i, -n - i], "cycle": element(c, z) })
            })
            .collect();
        json!({
            "V_computed": t.v.iter().map(|(s, x)| json!([s, x])).collect::<Vec<_>>(),
            "Y_computed": t.y.iter().map(|(n, x)| json!([n, x])).collect::<Vec<_>>(),
            "nu_plus_witness": format!("V_{} = 0", t.nu_plus),
            "omega_plus_witness": format!("Y_{} = 0", t.omega_plus),
            "omega_cycles": cycles,
        })
    }

    fn bounds_json(list: &[Bound]) -> Value {
        let best = list.iter().map(|b| b.value).max().unwrap_or(0).max(0);
        json!({
            "max": best,
            "sources": list.iter().map(|b| json!({ "source": b.source, "value": b.value })).collect::<Vec<_>>(),
        })
    }

    fn bound_certificates(&self) -> Value {
        let mut out = Vec::new();
        for (kind, list) in [
            ("g4", &self.bounds.genus),
            ("c4", &self.bounds.clasp),
            ("c4_plus", &self.bounds.clasp_plus),
            ("c4_minus", &self.bounds.clasp_minus),
        ] {
            for b in list {
                out.push(json!({
                    "bound": kind,
                    "source": b.source,
                    "value": b.value,
                    "certificate": b.certificate,
                }));
            }
        }
        Value::Array(out)
    }

    fn json(&self) -> Value {
        let involutive = match &self.involutive {
            Some(((vbar, vunder), prov, order)) => json!({
                "Vbar0": vbar,
                "Vunder0": vunder,
                "iota": prov,
                "iota_order": order_name(*order),
            }),
            None => Value::Null,
        };
        let upsilon = match self.upsilon {
            Some(f) => {
                let r = self.extra.upsilon.expect("ratio bound accompanies upsilon");
                json!({
                    "at_1": fmt_exact(f.eval(1.into())),
                    "slope_at_0": fmt_exact(f.slope_at_zero()),
                    "ratio_bound": fmt_exact(r.bound),
                    "breakpoints": f.points().iter().map(|(t, v)| json!([fmt_exact(*t), fmt_exact(*v)])).collect::<Vec<_>>(),
                })
            }
            None => Value::Null,
        };
        let signature = match self.signature {
            Some(s) => {
                let x = signature_extrema(s);
                json!({
                    "max": x.max,
                    "min": x.min,
                    "clasp_bound": x.bound,
                    "jumps": s.jumps().iter().map(|(t, j)| json!([fmt_exact(*t), j])).collect::<Vec<_>>(),
                })
            }
            None => Value::Null,
        };
        json!({
            "expression": self.expression,
            "knot": self.table_json(self.knot, self.generators.0),
            "mirror": self.table_json(self.mirror, self.generators.1),
            "V_range": [self.v_range.start(), self.v_range.end()],
            "Y_range": [self.y_range.start(), self.y_range.end()],
            "involutive": involutive,
            "upsilon": upsilon,
            "signature": signature,
            "bounds": {
                "g4": Self::bounds_json(&self.bounds.genus),
                "c4": Self::bounds_json(&self.bounds.clasp),
                "c4_plus": Self::bounds_json(&self.bounds.clasp_plus),
                "c4_minus": Self::bounds_json(&self.bounds.clasp_minus),
            },
            "certificates": {
                "knot": self.table_certificates(self.knot, self.knot_complex),
                "mirror": self.table_certificates(self.mirror, self.mirror_complex),
                "bounds": self.bound_certificates(),
            },
        })
    }

    fn human(&self) -> String {
        let mut s = String::new();
        let fmt_list = |v: &[i64]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(s, "expression: {}", self.expression).unwrap();
        for (label, t, gens) in [
            ("K", self.knot, self.generators.0),
            ("-K", self.mirror, self.generators.1),
        ] {
            writeln!(s, "\n[{label}] {} ({gens} generators)", t.name).unwrap();
            writeln!(
                s,
                "  V_{}..V_{} = ({})",
                self.v_range.start(),
                self.v_range.end(),
                fmt_list(&self.v_list(t))
            )
            .unwrap();
            writeln!(
                s,
                "  Y_{}..Y_{} = ({})",
                self.y_range.start(),
                self.y_range.end(),
                fmt_list(&self.y_list(t))
            )
            .unwrap();
            writeln!(s, "  nu+ = {}, omega+ = {}", t.nu_plus, t.omega_plus).unwrap();
            writeln!(
                s,
                "  tau = {}, nu = {}, omega = {}",
                t.tau, t.nu_hat, t.omega_hat
            )
            .unwrap();
        }
        if let Some(((vbar, vunder), prov, order)) = &self.involutive {
            writeln!(
                s,
                "\ninvolutive: Vbar_0 = {vbar}, Vunder_0 = {vunder} (iota: {prov}, {})",
                order_name(*order)
            )
            .unwrap();
        }
        if let (Some(f), Some(r)) = (self.upsilon, self.extra.upsilon) {
            writeln!(
                s,
                "\nupsilon: Upsilon(1) = {}, slope at 0+ = {}, ratio clasp bound = {}",
                fmt_exact(f.eval(1.into())),
                fmt_exact(f.slope_at_zero()),
                fmt_exact(r.bound)
            )
            .unwrap();
        }
        if let Some(x) = self.extra.signature {
            writeln!(
                s,
                "signature: max = {}, min = {}, clasp bound = {}",
                x.max, x.min, x.bound
            )
            .unwrap();
        }
        for (title, list) in [
            ("g4", &self.bounds.genus),
            ("c4", &self.bounds.clasp),
            ("c4+", &self.bounds.clasp_plus),
            ("c4-", &self.bounds.clasp_minus),
        ] {
            let best = list.iter().map(|b| b.value).max().unwrap_or(0).max(0);
            writeln!(s, "\n{title} >= {best}").unwrap();
            for b in list {
                writeln!(s, "  {:<14} {:>3}   {}", b.source, b.value, b.certificate).unwrap();
            }
        }
        s
    }

    fn csv(&self) -> String {
        let mut s = String::from("section,key,index,value\n");
        for (label, t) in [("K", self.knot), ("-K", self.mirror)] {
            for n in self.v_range.clone() {
                writeln!(s, "{label},V,{n},{}", t.v[&(n as i64)]).unwrap();
            }
            for n in self.y_range.clone() {
                writeln!(s, "{label},Y,{n},{}", t.y[&n]).unwrap();
            }
            for (k, v) in [
                ("nu_plus", t.nu_plus),
                ("omega_plus", t.omega_plus),
                ("tau", t.tau),
                ("nu", t.nu_hat),
                ("omega", t.omega_hat),
            ] {
                writeln!(s, "{label},{k},,{v}").unwrap();
            }
        }
        if let Some(((vbar, vunder), _, _)) = &self.involutive {
            writeln!(s, "involutive,Vbar0,,{vbar}").unwrap();
            writeln!(s, "involutive,Vunder0,,{vunder}").unwrap();
        }
        if let Some(r) = self.extra.upsilon {
            writeln!(s, "upsilon,ratio_bound,,{}", fmt_exact(r.bound)).unwrap();
        }
        if let Some(x) = self.extra.signature {
            writeln!(s, "signature,max,,{}", x.max).unwrap();
            writeln!(s, "signature,min,,{}", x.min).unwrap();
        }
        for (kind, list) in [
            ("g4", &self.bounds.genus),
            ("c4", &self.bounds.clasp),
            ("c4_plus", &self.bounds.clasp_plus),
            ("c4_minus", &self.bounds.clasp_minus),
        ] {
            for b in list {
                writeln!(s, "{kind},{},,{}", b.source, b.value).unwrap();
            }
        }
        s
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Human => self.human(),
            Format::JsonLike => {
                let mut s =
                    serde_json::to_string_pretty(&self.json()).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }
}
