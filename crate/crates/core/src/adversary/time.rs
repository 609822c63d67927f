use crate::error::{bail, Result};
use crate::model::{Trace, Value};

/// Expected rounds until a batch-mix observer identifies all `m` partners
/// of a sender, for batch size `b`, `n_partners` possible partners and
/// security parameter `l`.
pub fn batch_mix_rounds(m: u64, l: u64, n_partners: u64, b: u64) -> Result<f64> {
    if m == 0 || l == 0 || n_partners == 0 || b == 0 {
        bail!(Param, "m, l, N and b must all be >= 1");
    }
    let (m, l, n, b) = (m as f64, l as f64, n_partners as f64, b as f64);
    let first = ((n - 1.0) / n * (b - 1.0)).sqrt();
    let second = ((n - 1.0) / (n * n) * (b - 1.0) + (m - 1.0) / m).sqrt();
    let inner = m * l * (first + second);
    Ok(inner * inner)
}

fn checked_intervals<P>(t: &Trace<P>, end: Option<f64>) -> Result<Vec<(f64, f64, &P)>> {
    let iv = t.intervals(end)?;
    if iv.is_empty() {
        bail!(Param, "need two samples, or one sample and an end time");
    }
    Ok(iv)
}

/// Total time during which the target's anonymity set has size 1.
pub fn max_tracking_time(t: &Trace<f64>, end: Option<f64>) -> Result<f64> {
    let iv = checked_intervals(t, end)?;
    if let Some((_, _, s)) = iv.iter().find(|(_, _, s)| !(**s >= 1.0 && s.is_finite())) {
        bail!(Param, "anonymity set size {s} must be finite and >= 1");
    }
    Ok(iv
        .iter()
        .filter(|(_, _, s)| **s == 1.0)
        .map(|(a, b, _)| b - a)
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Confusion {
    pub mean_run: f64,
    pub cumulative: f64,
}

impl Confusion {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("mean_run".into(), Value::Real(self.mean_run)),
            ("cumulative".into(), Value::Real(self.cumulative)),
        ])
    }
}

/// Maximal stretches during which entropy stays below `delta` bits.
pub fn time_to_confusion(t: &Trace<f64>, delta: f64, end: Option<f64>) -> Result<Confusion> {
    if delta.is_nan() {
        bail!(Param, "threshold is NaN");
    }
    let iv = checked_intervals(t, end)?;
    if let Some((_, _, h)) = iv.iter().find(|(_, _, h)| !(**h >= 0.0)) {
        bail!(Param, "entropy {h} must be >= 0");
    }
    let mut runs: Vec<f64> = Vec::new();
    let mut open = false;
    for (a, b, h) in iv {
        if *h < delta {
            if open {
                *runs.last_mut().expect("open run") += b - a;
            } else {
                runs.push(b - a);
                open = true;
            }
        } else {
            open = false;
        }
    }
    runs.retain(|r| *r > 0.0);
    let cumulative: f64 = runs.iter().sum();
    let mean_run = if runs.is_empty() {
        0.0
    } else {
        cumulative / runs.len() as f64
    };
    Ok(Confusion {
        mean_run,
        cumulative,
    })
}
