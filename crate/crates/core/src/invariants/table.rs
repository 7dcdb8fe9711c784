use super::knot::{
    default_cap, is_knotlike, nu_hat, omega_hat_certified, tau_invariant, v_invariant, y_invariant,
    OmegaCertificate,
};
use crate::complex::BigradedComplex;
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOptions {
    pub v_range: RangeInclusive<i64>,
    pub y_range: RangeInclusive<u32>,
    /// Search cap for `ν⁺` and `ω⁺`; defaults to `4·max A + 4`.
    pub cap: Option<i64>,
}

impl Default for TableOptions {
    fn default() -> Self {
        Self {
            v_range: 0..=3,
            y_range: 0..=3,
            cap: None,
        }
    }
}

/// All knot invariants of one complex. `v` and `y` hold every value that was
/// computed, which covers the requested ranges and the searches for `ν⁺`
/// and `ω⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub name: String,
    pub v: BTreeMap<i64, i64>,
    pub y: BTreeMap<u32, i64>,
    pub nu_plus: i64,
    pub omega_plus: i64,
    pub tau: i64,
    pub nu_hat: i64,
    pub omega_hat: i64,
    pub omega_cycles: OmegaCertificate,
}

enum Job {
    V(i64),
    Y(u32),
    Tau,
    Nu,
    Omega,
}

enum Done {
    V(i64, i64),
    Y(u32, i64),
    Tau(i64),
    Nu(i64),
    Omega(OmegaCertificate),
}

fn run(c: &BigradedComplex, job: &Job) -> Result<Done> {
    Ok(match *job {
        Job::V(s) => Done::V(s, v_invariant(c, s)?),
        Job::Y(n) => Done::Y(n, y_invariant(c, n)?),
        Job::Tau => Done::Tau(tau_invariant(c)?),
        Job::Nu => Done::Nu(nu_hat(c)?),
        Job::Omega => Done::Omega(omega_hat_certified(c)?),
    })
}

impl InvariantTable {
    /// Computes the table, running independent jobs on the rayon pool.
    /// Results do not depend on scheduling.
    pub fn compute(c: &BigradedComplex, opts: &TableOptions) -> Result<Self> {
        if !is_knotlike(c) {
            return Err(Error::NotKnotLike(c.name().to_string()));
        }
        let cap = opts.cap.unwrap_or_else(|| default_cap(c));
        // V_s vanishes once s reaches the top Alexander grading, so this
        // range always contains ν⁺.
        let top = c.max_alexander().max(0).min(cap);
        let mut jobs: Vec<Job> = vec![Job::Tau, Job::Nu, Job::Omega];
        let mut v_set: Vec<i64> = opts.v_range.clone().chain(0..=top).collect();
        v_set.sort_unstable();
        v_set.dedup();
        jobs.extend(v_set.into_iter().map(Job::V));
        jobs.extend(opts.y_range.clone().map(Job::Y));

        let done: Vec<Done> = jobs.par_iter().map(|j| run(c, j)).collect::<Result<_>>()?;
        let mut v = BTreeMap::new();
        let mut y = BTreeMap::new();
        let (mut tau, mut nu, mut omega) = (None, None, None);
        for d in done {
            match d {
                Done::V(s, x) => {
                    v.insert(s, x);
                }
                Done::Y(n, x) => {
                    y.insert(n, x);
                }
                Done::Tau(x) => tau = Some(x),
                Done::Nu(x) => nu = Some(x),
                Done::Omega(x) => omega = Some(x),
            }
        }

        let nu_plus = (0..=cap)
            .find(|s| v.get(s) == Some(&0))
            .ok_or(Error::CapExceeded {
                what: "nu_plus",
                cap,
            })?;

        // ω⁺: extend Y in parallel batches until a zero appears.
        let width = rayon::current_num_threads().max(1) as i64;
        let omega_plus = loop {
            if let Some(n) = (0..=cap).find(|&n| y.get(&(n as u32)) == Some(&0)) {
                break n;
            }
            let missing: Vec<u32> = (0..=cap)
                .map(|n| n as u32)
                .filter(|n| !y.contains_key(n))
                .take(width as usize)
                .collect();
            if missing.is_empty() {
                return Err(Error::CapExceeded {
                    what: "omega_plus",
                    cap,
                });
            }
            let vals: Vec<(u32, i64)> = missing
                .par_iter()
                .map(|&n| y_invariant(c, n).map(|x| (n, x)))
                .collect::<Result<_>>()?;
            y.extend(vals);
        };

        let omega_cycles = omega.expect("omega job ran");
        Ok(Self {
            name: c.name().to_string(),
            v,
            y,
            nu_plus,
            omega_plus,
            tau: tau.expect("tau job ran"),
            nu_hat: nu.expect("nu job ran"),
            omega_hat: omega_cycles.n,
            omega_cycles,
        })
    }

    /// Relations that must hold between the entries. Each returned string
    /// describes one violation.
    pub fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (&s, &x) in &self.v {
            if s >= 0 && x < 0 {
                out.push(format!("V_{s} = {x} < 0"));
            }
            if let Some(&next) = self.v.get(&(s + 1)) {
                if !(0..=1).contains(&(x - next)) {
                    out.push(format!("V_{s} - V_{} = {} not in {{0,1}}", s + 1, x - next));
                }
            }
        }
        for (&n, &x) in &self.y {
            if x < 0 {
                out.push(format!("Y_{n} = {x} < 0"));
            }
            if let Some(&next) = self.y.get(&(n + 1)) {
                if !(0..=1).contains(&(x - next)) {
                    out.push(format!("Y_{n} - Y_{} = {} not in {{0,1}}", n + 1, x - next));
                }
            }
            if let Some(&vn) = self.v.get(&(n as i64)) {
                if vn > x {
                    out.push(format!("V_{n} = {vn} > Y_{n} = {x}"));
                }
                if n == 0 && vn != x {
                    out.push(format!("Y_0 = {x} differs from V_0 = {vn}"));
                }
            }
        }
        if self.nu_plus > self.omega_plus {
            out.push(format!(
                "nu+ = {} > omega+ = {}",
                self.nu_plus, self.omega_plus
            ));
        }
        if !(self.tau..=self.tau + 1).contains(&self.nu_hat) {
            out.push(format!(
                "nu = {} not in {{tau, tau+1}}, tau = {}",
                self.nu_hat, self.tau
            ));
        }
        if !(self.tau.max(0)..=(self.tau + 1).max(0)).contains(&self.omega_hat) {
            out.push(format!(
                "omega = {} outside [max(tau,0), max(tau+1,0)], tau = {}",
                self.omega_hat, self.tau
            ));
        }
        if self.nu_hat > self.omega_hat {
            out.push(format!("nu = {} > omega = {}", self.nu_hat, self.omega_hat));
        }
        out
    }
}
