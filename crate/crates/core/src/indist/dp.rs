use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::{FiniteMechanism, Value};

/// Ignore per-output excess mass at or below this level.
const DELTA_SLACK: f64 = 1e-12;

/// Neighboring input pairs, stored as symmetric index pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborRelation {
    pairs: Vec<(usize, usize)>,
}

impl NeighborRelation {
    /// Resolves input ids against the mechanism and adds the reverse of every pair.
    pub fn new(m: &FiniteMechanism, pairs: &[(String, String)]) -> Result<Self> {
        let mut out = Vec::with_capacity(pairs.len() * 2);
        for (a, b) in pairs {
            let ia = lookup(m, a)?;
            let ib = lookup(m, b)?;
            for p in [(ia, ib), (ib, ia)] {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        Ok(Self { pairs: out })
    }

    /// Every ordered pair of distinct inputs.
    pub fn complete(m: &FiniteMechanism) -> Self {
        let n = m.inputs().len();
        let pairs = (0..n)
            .flat_map(|i| (0..n).filter(move |j| *j != i).map(move |j| (i, j)))
            .collect();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

fn lookup(m: &FiniteMechanism, id: &str) -> Result<usize> {
    match m.input_index(id) {
        Some(i) => Ok(i),
        None => bail!(Schema, "unknown mechanism input {id:?}"),
    }
}

#[derive(Deserialize)]
struct RawRelation {
    pairs: Vec<(String, String)>,
}

/// Parses `{"pairs":[[id,id]...]}` against a mechanism's inputs.
pub fn parse_neighbors(text: &str, m: &FiniteMechanism) -> Result<NeighborRelation> {
    let raw: RawRelation = serde_json::from_str(text)?;
    NeighborRelation::new(m, &raw.pairs)
}

/// Largest `|ln p - ln q|` over aligned entries; `0/0` is skipped.
pub(crate) fn max_log_ratio(p: &[f64], q: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for (a, b) in p.iter().zip(q) {
        match (*a > 0.0, *b > 0.0) {
            (false, false) => {}
            (true, true) => worst = worst.max((a.ln() - b.ln()).abs()),
            _ => return f64::INFINITY,
        }
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DpEpsilon {
    pub eps_eff: f64,
}

impl DpEpsilon {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![("eps_eff".into(), Value::Real(self.eps_eff))])
    }
}

/// Smallest ε for which the mechanism is ε-differentially private over
/// the neighbor relation. Singleton outputs suffice for finite alphabets.
pub fn dp_epsilon(m: &FiniteMechanism, nr: &NeighborRelation) -> DpEpsilon {
    let eps_eff = nr
        .pairs()
        .iter()
        .map(|&(a, b)| max_log_ratio(m.row(a), m.row(b)))
        .fold(0.0, f64::max);
    DpEpsilon { eps_eff }
}

/// Smallest δ such that the mechanism is (ε, δ)-differentially private.
pub fn adp_delta(m: &FiniteMechanism, nr: &NeighborRelation, eps: f64) -> Result<f64> {
    if !(eps >= 0.0) {
        bail!(Param, "epsilon must be >= 0, got {eps}");
    }
    let scale = eps.exp();
    let mut delta: f64 = 0.0;
    for &(a, b) in nr.pairs() {
        let excess: f64 = m
            .row(a)
            .iter()
            .zip(m.row(b))
            .map(|(p, q)| p - scale * q)
            .filter(|d| *d > DELTA_SLACK)
            .fold(0.0, |s, d| s + d);
        delta = delta.max(excess);
    }
    Ok(delta.clamp(0.0, 1.0))
}
