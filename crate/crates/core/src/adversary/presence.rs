use std::collections::BTreeMap;

use crate::error::{bail, Result};
use crate::model::{DataTable, Value};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Presence {
    pub delta_min: f64,
    pub delta_max: f64,
}

impl Presence {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("delta_min".into(), Value::Real(self.delta_min)),
            ("delta_max".into(), Value::Real(self.delta_max)),
        ])
    }
}

fn parse_range(g: &str) -> Option<(f64, f64, bool)> {
    let g = g.trim();
    if let Some(inner) = g.strip_prefix('[') {
        let (body, closed) = match inner.strip_suffix(']') {
            Some(b) => (b, true),
            None => (inner.strip_suffix(')')?, false),
        };
        let (lo, hi) = body.split_once(',')?;
        return Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?, closed));
    }
    // "lo-hi", allowing a leading minus on lo
    let split = g.char_indices().skip(1).find(|(_, c)| *c == '-')?.0;
    let (lo, hi) = (&g[..split], &g[split + 1..]);
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?, true))
}

/// Whether a concrete value falls under a generalized one.
///
/// Understands exact values, `*`, numeric ranges `lo-hi`, `[lo,hi]` and
/// `[lo,hi)`, and masks such as `476**` where each `*` matches one character.
pub fn generalization_matches(generalized: &str, value: &str) -> bool {
    let g = generalized.trim();
    let v = value.trim();
    if g == v || g == "*" {
        return true;
    }
    if let (Some((lo, hi, closed)), Ok(x)) = (parse_range(g), v.parse::<f64>()) {
        return x >= lo && if closed { x <= hi } else { x < hi };
    }
    g.contains('*')
        && g.chars().count() == v.chars().count()
        && g.chars().zip(v.chars()).all(|(a, b)| a == '*' || a == b)
}

/// Bounds on the probability that an externally known individual appears in
/// the private table, given its generalized release.
///
/// Published rows are grouped by their quasi-identifier tuple. Each external
/// individual belongs to the group its quasi-identifiers generalize to; the
/// presence probability is the group's published row count over the number
/// of external individuals in that group. Individuals matching no group
/// have probability 0.
pub fn delta_presence(external: &DataTable, published: &DataTable) -> Result<Presence> {
    let qi = published.quasi_identifiers()?;
    let ext_cols = qi
        .iter()
        .map(|&c| {
            let name = &published.columns()[c].name;
            match external.column_index(name) {
                Some(i) => Ok(i),
                None => bail!(
                    Schema,
                    "external table lacks quasi-identifier column {name:?}"
                ),
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let mut groups: BTreeMap<Vec<String>, usize> = BTreeMap::new();
    for r in 0..published.n_rows() {
        let key = qi
            .iter()
            .map(|&c| published.cell(r, c).raw().to_string())
            .collect();
        *groups.entry(key).or_insert(0) += 1;
    }
    let groups: Vec<(Vec<String>, usize)> = groups.into_iter().collect();

    let mut membership: Vec<Option<usize>> = Vec::with_capacity(external.n_rows());
    let mut ext_count = vec![0usize; groups.len()];
    for r in 0..external.n_rows() {
        let mut hit = None;
        for (g, (key, _)) in groups.iter().enumerate() {
            let matches = key
                .iter()
                .zip(&ext_cols)
                .all(|(gen, &c)| generalization_matches(gen, external.cell(r, c).raw()));
            if matches {
                if hit.is_some() {
                    bail!(
                        Schema,
                        "external row {r} matches more than one generalized group"
                    );
                }
                hit = Some(g);
            }
        }
        if let Some(g) = hit {
            ext_count[g] += 1;
        }
        membership.push(hit);
    }
    for (g, (key, published_rows)) in groups.iter().enumerate() {
        if *published_rows > ext_count[g] {
            bail!(
                Domain,
                "group {key:?} has {published_rows} published rows but only {} matching individuals",
                ext_count[g]
            );
        }
    }
    let probs: Vec<f64> = membership
        .iter()
        .map(|m| m.map_or(0.0, |g| groups[g].1 as f64 / ext_count[g] as f64))
        .collect();
    if probs.is_empty() {
        bail!(Empty, "external table has no individuals");
    }
    Ok(Presence {
        delta_min: probs.iter().copied().fold(f64::INFINITY, f64::min),
        delta_max: probs.iter().copied().fold(0.0, f64::max),
    })
}
