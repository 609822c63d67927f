use crate::error::{bail, Result};
use crate::model::{DiscreteDistribution, Region, Value};

/// Tolerance when comparing accumulated mass against the confidence level.
const MASS_SLACK: f64 = 1e-12;

/// Weighted atoms sorted by value with duplicates merged.
fn atoms(points: impl IntoIterator<Item = (f64, f64)>) -> Result<Vec<(f64, f64)>> {
    let mut pts: Vec<(f64, f64)> = points.into_iter().collect();
    if pts.is_empty() {
        bail!(Empty, "no values");
    }
    if pts.iter().any(|(x, w)| !x.is_finite() || !(*w >= 0.0)) {
        bail!(Param, "values must be finite with non-negative mass");
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for (x, w) in pts {
        match merged.last_mut() {
            Some(last) if last.0 == x => last.1 += w,
            _ => merged.push((x, w)),
        }
    }
    Ok(merged)
}

/// Width of the narrowest contiguous interval holding at least `c` percent
/// of the mass; the leftmost one wins ties.
fn narrowest_width(atoms: &[(f64, f64)], c: f64) -> Result<f64> {
    if !(c > 0.0 && c <= 100.0) {
        bail!(Param, "confidence must lie in (0,100], got {c}");
    }
    let total: f64 = atoms.iter().map(|a| a.1).sum();
    let target = c / 100.0 * total - MASS_SLACK;
    let mut best = f64::INFINITY;
    let mut j = 0;
    let mut mass = 0.0;
    for i in 0..atoms.len() {
        if j < i {
            j = i;
            mass = 0.0;
        }
        while mass < target && j < atoms.len() {
            mass += atoms[j].1;
            j += 1;
        }
        if mass < target {
            break;
        }
        let width = atoms[j - 1].0 - atoms[i].0;
        if width < best {
            best = width;
        }
        mass -= atoms[i].1;
    }
    Ok(best)
}

/// Interval width over equally weighted samples.
pub fn confidence_interval_width_samples(samples: &[f64], c: f64) -> Result<f64> {
    narrowest_width(&atoms(samples.iter().map(|x| (*x, 1.0)))?, c)
}

/// Interval width over a distribution whose labels are numbers.
pub fn confidence_interval_width(d: &DiscreteDistribution, c: f64) -> Result<f64> {
    let pts = d
        .labels()
        .iter()
        .zip(d.probs())
        .map(|(l, p)| match l.trim().parse::<f64>() {
            Ok(x) => Ok((x, *p)),
            Err(_) => bail!(Schema, "label {l:?} is not numeric"),
        })
        .collect::<Result<Vec<_>>>()?;
    narrowest_width(&atoms(pts)?, c)
}

/// Whether a classifier's Bayes error undercuts the baseline by at least `p`.
pub fn tp_violation_check(bayes_error_without: f64, bayes_error_with: f64, p: f64) -> Result<bool> {
    for (v, what) in [
        (bayes_error_without, "baseline error"),
        (bayes_error_with, "classifier error"),
    ] {
        if !(0.0..=1.0).contains(&v) {
            bail!(Param, "{what} must lie in [0,1], got {v}");
        }
    }
    if !(p >= 0.0) {
        bail!(Param, "p must be >= 0, got {p}");
    }
    Ok(bayes_error_with <= bayes_error_without - p)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unobservability {
    pub holds: bool,
    pub d_area: f64,
}

impl Unobservability {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("holds".into(), Value::Bool(self.holds)),
            ("d_area".into(), Value::Real(self.d_area)),
        ])
    }
}

fn ecdf(sorted: &[f64], z: f64) -> f64 {
    sorted.partition_point(|x| *x <= z) as f64 / sorted.len() as f64
}

fn sorted_samples(s: &[f64], what: &str) -> Result<Vec<f64>> {
    if s.is_empty() {
        bail!(Empty, "{what} has no samples");
    }
    if s.iter().any(|x| !x.is_finite()) {
        bail!(Param, "{what} has non-finite samples");
    }
    let mut v = s.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// Difference in area under two empirical CDFs (trapezoid rule over the
/// merged support) plus a relative bracket on the distribution parameters.
pub fn event_unobservability(
    f1: &[f64],
    f2: &[f64],
    p1: f64,
    p2: f64,
    alpha: f64,
    eps: f64,
) -> Result<Unobservability> {
    let a = sorted_samples(f1, "first sample set")?;
    let b = sorted_samples(f2, "second sample set")?;
    if !(alpha >= 0.0) || !(eps >= 0.0) {
        bail!(Param, "alpha and eps must be >= 0");
    }
    if !p1.is_finite() || !p2.is_finite() {
        bail!(Param, "distribution parameters must be finite");
    }
    let mut z: Vec<f64> = a.iter().chain(&b).copied().collect();
    z.sort_by(f64::total_cmp);
    z.dedup();
    let diff: Vec<f64> = z.iter().map(|x| ecdf(&a, *x) - ecdf(&b, *x)).collect();
    let integral: f64 = z
        .windows(2)
        .zip(diff.windows(2))
        .map(|(x, d)| (x[1] - x[0]) * (d[0] + d[1]) / 2.0)
        .sum();
    let d_area = integral.abs();
    let (lo, hi) = ((1.0 - eps) * p1, (1.0 + eps) * p1);
    let bracket = lo.min(hi) <= p2 && p2 <= lo.max(hi);
    Ok(Unobservability {
        holds: d_area <= alpha && bracket,
        d_area,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionPrivacy {
    pub size: f64,
    pub coverage: Option<f64>,
    pub accuracy: Option<f64>,
}

impl RegionPrivacy {
    pub fn to_value(&self) -> Value {
        let mut fields = vec![("size".to_string(), Value::Real(self.size))];
        if let Some(c) = self.coverage {
            fields.push(("coverage".into(), Value::Real(c)));
        }
        if let Some(a) = self.accuracy {
            fields.push(("accuracy".into(), Value::Real(a)));
        }
        Value::Record(fields)
    }
}

/// Share of the uncertainty region that overlaps the sensitive region.
pub fn sensitive_region_coverage(r_u: &Region, r_s: &Region) -> Result<f64> {
    r_u.validate()?;
    r_s.validate()?;
    Ok((r_u.intersection_area(r_s) / r_u.area()).clamp(0.0, 1.0))
}

/// `r_opt² / r_min²`.
pub fn obfuscation_accuracy(r_opt: f64, r_min: f64) -> Result<f64> {
    if !(r_min > 0.0 && r_min.is_finite()) {
        bail!(Param, "r_min must be > 0, got {r_min}");
    }
    if !(r_opt >= 0.0 && r_opt.is_finite()) {
        bail!(Param, "r_opt must be >= 0, got {r_opt}");
    }
    Ok(r_opt * r_opt / (r_min * r_min))
}

/// Size of the uncertainty region, plus coverage and obfuscation accuracy
/// when their inputs are given.
pub fn region_privacy(
    r_u: &Region,
    r_s: Option<&Region>,
    r_opt: Option<f64>,
    r_min: Option<f64>,
) -> Result<RegionPrivacy> {
    r_u.validate()?;
    let coverage = r_s.map(|s| sensitive_region_coverage(r_u, s)).transpose()?;
    let accuracy = match (r_opt, r_min) {
        (None, None) => None,
        (Some(opt), Some(min)) => Some(obfuscation_accuracy(opt, min)?),
        _ => bail!(Param, "accuracy needs both r_opt and r_min"),
    };
    Ok(RegionPrivacy {
        size: r_u.area(),
        coverage,
        accuracy,
    })
}
