use crate::complex::Violation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid complex: {}", summarize(.0))]
    Invalid(Vec<Violation>),

    #[error("{path}: {msg}")]
    File { path: String, msg: String },

    #[error("torus knot parameters ({p},{q}) are not coprime integers ≥ 2")]
    BadTorusParameters { p: i64, q: i64 },

    #[error("unknown named complex `{0}`")]
    UnknownName(String),

    #[error("complex is not knot-like: {0}")]
    NotKnotLike(String),

    #[error("localized homology has rank {rank}, expected {expected}")]
    LocalizedRank { rank: usize, expected: usize },

    #[error("involution rejected: {0}")]
    BadIota(String),

    #[error("no involution available for {0}")]
    MissingIota(String),

    #[error("expression is not a sum of torus knots and mirrors")]
    NotTorusSum,

    #[error("search for {what} exceeded the iteration cap {cap}")]
    CapExceeded { what: &'static str, cap: i64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn summarize(v: &[Violation]) -> String {
    let mut s: Vec<String> = v.iter().take(5).map(ToString::to_string).collect();
    if v.len() > 5 {
        s.push(format!("... and {} more", v.len() - 5));
    }
    s.join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
