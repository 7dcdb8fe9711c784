//! Knot expressions: connected sums of torus knots, mirrors, named
//! complexes, and complexes loaded from files.
//!
//! ```text
//! expr := term ('#' term)*
//! term := '-'? atom
//! atom := 'T(' int ',' int ')' | name | '@' path | '(' expr ')'
//! ```
//!
//! Whitespace between tokens is ignored. A path runs up to the next `#` or
//! `)` and is trimmed.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    TorusKnot(i64, i64),
    Mirror(Box<KnotExpr>),
    Sum(Vec<KnotExpr>),
    Named(String),
    File(String),
}

impl KnotExpr {
    pub fn mirror(self) -> Self {
        KnotExpr::Mirror(Box::new(self))
    }

    /// Whether only torus knots, mirrors and sums occur.
    pub fn is_torus_sum(&self) -> bool {
        match self {
            KnotExpr::TorusKnot(..) => true,
            KnotExpr::Mirror(e) => e.is_torus_sum(),
            KnotExpr::Sum(v) => v.iter().all(KnotExpr::is_torus_sum),
            KnotExpr::Named(n) => n == "unknot",
            KnotExpr::File(_) => false,
        }
    }

    /// Signed torus-knot summands `(p, q, sign)`, flattening nested sums
    /// and double mirrors. `None` if other content occurs.
    pub fn torus_summands(&self) -> Option<Vec<(i64, i64, i64)>> {
        fn go(e: &KnotExpr, sign: i64, out: &mut Vec<(i64, i64, i64)>) -> bool {
            match e {
                KnotExpr::TorusKnot(p, q) => {
                    out.push((*p, *q, sign));
                    true
                }
                KnotExpr::Mirror(c) => go(c, -sign, out),
                KnotExpr::Sum(v) => v.iter().all(|c| go(c, sign, out)),
                KnotExpr::Named(n) => n == "unknot",
                KnotExpr::File(_) => false,
            }
        }
        let mut out = Vec::new();
        go(self, 1, &mut out).then_some(out)
    }

    /// Sum of the Seifert genera of the torus summands.
    pub fn torus_genus_sum(&self) -> Option<i64> {
        self.torus_summands()
            .map(|v| v.iter().map(|(p, q, _)| (p - 1) * (q - 1) / 2).sum())
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::TorusKnot(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::Mirror(e) => match **e {
                KnotExpr::Sum(_) | KnotExpr::Mirror(_) => write!(f, "-({e})"),
                _ => write!(f, "-{e}"),
            },
            KnotExpr::Sum(v) => {
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str("#")?;
                    }
                    match e {
                        KnotExpr::Sum(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            KnotExpr::Named(n) => f.write_str(n),
            KnotExpr::File(p) => write!(f, "@{p}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.err(self.pos, format!("expected `{want}`, found `{c}`")),
            None => self.err(self.pos, format!("expected `{want}`, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('#') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            KnotExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<KnotExpr> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.atom()?.mirror());
        }
        self.atom()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        match self.src[start..end].parse::<i64>() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.err(start, "expected an integer"),
        }
    }

    fn atom(&mut self) -> Result<KnotExpr> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.pos, "expected a knot, found end of input"),
        };
        let c = self.peek_raw().unwrap();
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        if c == '@' {
            self.pos += 1;
            let rest = &self.src[self.pos..];
            let len = rest.find(['#', ')']).unwrap_or(rest.len());
            let path = rest[..len].trim();
            if path.is_empty() {
                return self.err(start, "empty file path after `@`");
            }
            self.pos += len;
            return Ok(KnotExpr::File(path.to_string()));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let rest = &self.src[self.pos..];
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            let name = &rest[..len];
            self.pos += len;
            if name == "T" && self.peek() == Some('(') {
                self.pos += 1;
                let p_pos = self.pos;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                self.expect(')')?;
                if p < 2 || q < 2 {
                    return self.err(
                        p_pos,
                        format!("torus parameters ({p},{q}) must be at least 2"),
                    );
                }
                if p.gcd(&q) != 1 {
                    return self.err(p_pos, format!("torus parameters ({p},{q}) are not coprime"));
                }
                return Ok(KnotExpr::TorusKnot(p, q));
            }
            return Ok(KnotExpr::Named(name.to_string()));
        }
        self.err(start, format!("unexpected `{c}`"))
    }
}

pub fn parse_knot_expr(s: &str) -> Result<KnotExpr> {
    let mut p = Parser { src: s, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected `{c}` after expression"));
    }
    Ok(e)
}
