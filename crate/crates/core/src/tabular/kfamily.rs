use std::collections::{BTreeMap, HashMap};

use crate::error::{bail, Result};
use crate::model::{
    entropy_bits, equivalence_classes, CellKey, ColumnKind, DataTable, EquivalenceClass, Value,
};

/// Slack for boundary comparisons on derived reals.
const SLACK: f64 = 1e-12;

/// Smallest equivalence-class size.
pub fn k_anonymity(t: &DataTable) -> Result<usize> {
    Ok(min_class_size(&equivalence_classes(t)?))
}

fn min_class_size(classes: &[EquivalenceClass]) -> usize {
    classes.iter().map(|c| c.len()).min().unwrap_or(0)
}

fn class_counts(t: &DataTable, class: &EquivalenceClass, col: usize) -> HashMap<CellKey, usize> {
    let mut counts = HashMap::new();
    for &r in &class.row_indices {
        *counts.entry(t.cell(r, col).key()).or_default() += 1;
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaK {
    pub k: usize,
    pub alpha: f64,
}

impl AlphaK {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("k".into(), Value::Count(self.k as u64)),
            ("alpha".into(), Value::Real(self.alpha)),
        ])
    }
}

/// `k` plus the largest in-class frequency of `sensitive_value`.
pub fn alpha_k_anonymity(t: &DataTable, sensitive_value: &str) -> Result<AlphaK> {
    let classes = equivalence_classes(t)?;
    let s = t.sensitive_column()?;
    let target = match t.key_for_value(s, sensitive_value) {
        Ok(k) => k,
        Err(_) => bail!(
            Param,
            "{sensitive_value:?} is not a valid value of the sensitive column"
        ),
    };
    let alpha = classes
        .iter()
        .map(|c| {
            let hits = c
                .row_indices
                .iter()
                .filter(|&&r| t.cell(r, s).key() == target)
                .count();
            hits as f64 / c.len() as f64
        })
        .fold(0.0, f64::max);
    Ok(AlphaK {
        k: min_class_size(&classes),
        alpha,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiversityMode {
    Entropy,
    Recursive { c: f64 },
}

/// Largest `l` with `r_1 < c (r_l + ... + r_m)` for descending counts `r`.
fn recursive_l(counts: &mut [usize], c: f64) -> usize {
    counts.sort_unstable_by(|a, b| b.cmp(a));
    let top = counts[0] as f64;
    let mut best = 1;
    for l in 2..=counts.len() {
        let tail: usize = counts[l - 1..].iter().sum();
        if top < c * tail as f64 {
            best = l;
        } else {
            break;
        }
    }
    best
}

/// ℓ-diversity of the table, the minimum over classes.
///
/// Entropy mode reports `2^H` of each class's sensitive values.
pub fn l_diversity(t: &DataTable, mode: DiversityMode) -> Result<f64> {
    if let DiversityMode::Recursive { c } = mode {
        if !(c > 0.0 && c.is_finite()) {
            bail!(Param, "recursive diversity factor must be > 0, got {c}");
        }
    }
    let classes = equivalence_classes(t)?;
    let s = t.sensitive_column()?;
    let mut result = f64::INFINITY;
    for class in &classes {
        let counts = class_counts(t, class, s);
        let l = match mode {
            DiversityMode::Entropy => {
                let n = class.len() as f64;
                let probs: Vec<f64> = counts.values().map(|c| *c as f64 / n).collect();
                entropy_bits(&probs).exp2()
            }
            DiversityMode::Recursive { c } => {
                let mut v: Vec<usize> = counts.into_values().collect();
                recursive_l(&mut v, c) as f64
            }
        };
        result = result.min(l);
    }
    Ok(result.max(1.0))
}

/// Ordered EMD between two distributions over the same sorted support.
pub fn ordered_emd(p: &[f64], q: &[f64]) -> f64 {
    let m = p.len();
    if m < 2 {
        return 0.0;
    }
    let mut cum = 0.0;
    let mut total = 0.0;
    for (a, b) in p.iter().zip(q) {
        cum += a - b;
        total += cum.abs();
    }
    total / (m - 1) as f64
}

/// Equal-distance EMD: half the L1 distance.
pub fn equal_distance_emd(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

/// Largest EMD between a class's sensitive distribution and the table's.
pub fn t_closeness(t: &DataTable) -> Result<f64> {
    let classes = equivalence_classes(t)?;
    let s = t.sensitive_column()?;
    let support: BTreeMap<CellKey, usize> = {
        let mut keys: Vec<CellKey> = (0..t.n_rows()).map(|r| t.cell(r, s).key()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
    };
    let histogram = |rows: &mut dyn Iterator<Item = usize>| {
        let mut h = vec![0.0; support.len()];
        let mut n = 0.0;
        for r in rows {
            h[support[&t.cell(r, s).key()]] += 1.0;
            n += 1.0;
        }
        h.iter_mut().for_each(|v| *v /= n);
        h
    };
    let overall = histogram(&mut (0..t.n_rows()));
    let numeric = t.columns()[s].kind == ColumnKind::Numeric;
    let mut worst: f64 = 0.0;
    for class in &classes {
        let h = histogram(&mut class.row_indices.iter().copied());
        let d = if numeric {
            ordered_emd(&h, &overall)
        } else {
            equal_distance_emd(&h, &overall)
        };
        worst = worst.max(d);
    }
    Ok(worst.clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KE {
    pub k: usize,
    pub e: f64,
}

impl KE {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("k".into(), Value::Count(self.k as u64)),
            ("e".into(), Value::Real(self.e)),
        ])
    }
}

fn numeric_sensitive(t: &DataTable) -> Result<Vec<f64>> {
    let s = t.sensitive_column()?;
    if t.columns()[s].kind != ColumnKind::Numeric {
        bail!(
            Schema,
            "sensitive column {:?} must be numeric",
            t.columns()[s].name
        );
    }
    t.numeric_column(s)
}

/// `k` plus the narrowest sensitive-value range over classes.
pub fn ke_anonymity(t: &DataTable) -> Result<KE> {
    let values = numeric_sensitive(t)?;
    let classes = equivalence_classes(t)?;
    let e = classes
        .iter()
        .map(|c| {
            let (lo, hi) = c
                .row_indices
                .iter()
                .map(|&r| values[r])
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                    (lo.min(v), hi.max(v))
                });
            hi - lo
        })
        .fold(f64::INFINITY, f64::min);
    Ok(KE {
        k: min_class_size(&classes),
        e,
    })
}

/// `1 / max fraction of a class within ±epsilon of one of its values`.
pub fn em_anonymity(t: &DataTable, epsilon: f64) -> Result<f64> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        bail!(Param, "epsilon must be a finite value >= 0, got {epsilon}");
    }
    let values = numeric_sensitive(t)?;
    let classes = equivalence_classes(t)?;
    let mut worst: f64 = 0.0;
    for class in &classes {
        let mut v: Vec<f64> = class.row_indices.iter().map(|&r| values[r]).collect();
        v.sort_by(f64::total_cmp);
        // two pointers over the sorted class: [lo, hi) is the window around v[i]
        let (mut lo, mut hi) = (0, 0);
        for &x in &v {
            while v[lo] < x - epsilon - SLACK {
                lo += 1;
            }
            while hi < v.len() && v[hi] <= x + epsilon + SLACK {
                hi += 1;
            }
            worst = worst.max((hi - lo) as f64 / v.len() as f64);
        }
    }
    Ok(1.0 / worst)
}
