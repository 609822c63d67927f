use std::collections::HashSet;
use std::hash::Hash;

use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::{entropy_bits, normalize_mass, DiscreteDistribution, JointDistribution, Value};

/// Number of distinct leaked items.
pub fn leaked_count<T, I>(items: I) -> usize
where
    T: Hash + Eq,
    I: IntoIterator<Item = T>,
{
    items.into_iter().collect::<HashSet<_>>().len()
}

/// Relative entropy `D(p||q)` in bits.
pub fn kl_divergence(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    let mut d = 0.0;
    for (pp, qq) in p.aligned_with(q)? {
        if pp > 0.0 {
            if qq == 0.0 {
                return Ok(f64::INFINITY);
            }
            d += pp * (pp / qq).log2();
        }
    }
    Ok(d.max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MutualInformation {
    pub mi: f64,
    /// `1 - I/H(X)`; absent when `H(X) = 0`.
    pub nmi: Option<f64>,
    /// Conditional privacy loss `1 - 2^-I`.
    pub cpl: f64,
}

impl MutualInformation {
    pub fn to_value(&self) -> Value {
        let mut fields = vec![("mi".to_string(), Value::Real(self.mi))];
        if let Some(n) = self.nmi {
            fields.push(("nmi".to_string(), Value::Real(n)));
        }
        fields.push(("cpl".to_string(), Value::Real(self.cpl)));
        Value::Record(fields)
    }
}

fn mi_bits(j: &JointDistribution) -> f64 {
    let px = j.marginal_x();
    let py = j.marginal_y();
    let mut mi = 0.0;
    for (row, &pxv) in j.matrix().iter().zip(&px) {
        for (&pxy, &pyv) in row.iter().zip(&py) {
            if pxy > 0.0 {
                mi += pxy * (pxy / (pxv * pyv)).log2();
            }
        }
    }
    let cap = entropy_bits(&px).min(entropy_bits(&py));
    mi.clamp(0.0, cap)
}

/// `I(X;Y)` with its normalized and conditional-privacy-loss forms.
pub fn mutual_information(j: &JointDistribution) -> MutualInformation {
    let mi = mi_bits(j);
    let hx = entropy_bits(&j.marginal_x());
    let nmi = (hx > 0.0).then(|| (1.0 - mi / hx).clamp(0.0, 1.0));
    MutualInformation {
        mi,
        nmi,
        cpl: 1.0 - (-mi).exp2(),
    }
}

/// `1 - I(X;Y)/H(X)`.
pub fn normalized_mutual_information(j: &JointDistribution) -> Result<f64> {
    match mutual_information(j).nmi {
        Some(v) => Ok(v),
        None => bail!(Param, "normalized mutual information needs H(X) > 0"),
    }
}

/// Probability tensor `p(x, y, z)` indexed `[x][y][z]`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointTriple {
    p: Vec<Vec<Vec<f64>>>,
}

impl JointTriple {
    pub fn new(p: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        let nx = p.len();
        let ny = p.first().map_or(0, |r| r.len());
        let nz = p.first().and_then(|r| r.first()).map_or(0, |r| r.len());
        if nx == 0 || ny == 0 || nz == 0 {
            bail!(Shape, "tensor must be non-empty in every dimension");
        }
        if p.iter()
            .any(|r| r.len() != ny || r.iter().any(|c| c.len() != nz))
        {
            bail!(Shape, "tensor is ragged");
        }
        let flat: Vec<f64> = p.iter().flatten().flatten().copied().collect();
        let flat = normalize_mass(&flat, "joint tensor")?;
        let p = flat
            .chunks(ny * nz)
            .map(|xs| xs.chunks(nz).map(|c| c.to_vec()).collect())
            .collect();
        Ok(Self { p })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.p.len(), self.p[0].len(), self.p[0][0].len())
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> f64 {
        self.p[x][y][z]
    }
}

#[derive(Deserialize)]
struct RawTriple {
    tensor: Vec<Vec<Vec<f64>>>,
}

/// Parses `{"tensor":[[[p(x,y,z)...]...]...]}`.
pub fn parse_triple(text: &str) -> Result<JointTriple> {
    let raw: RawTriple = serde_json::from_str(text)?;
    JointTriple::new(raw.tensor)
}

/// `I(X;Y|Z) = Σ p(x,y,z) log2 [p(z) p(x,y,z) / (p(x,z) p(y,z))]`.
#[allow(clippy::needless_range_loop)]
pub fn conditional_mutual_information(t: &JointTriple) -> f64 {
    let (nx, ny, nz) = t.dims();
    let mut pz = vec![0.0; nz];
    let mut pxz = vec![vec![0.0; nz]; nx];
    let mut pyz = vec![vec![0.0; nz]; ny];
    for x in 0..nx {
        for y in 0..ny {
            for z in 0..nz {
                let v = t.get(x, y, z);
                pz[z] += v;
                pxz[x][z] += v;
                pyz[y][z] += v;
            }
        }
    }
    let mut total = 0.0;
    for x in 0..nx {
        for y in 0..ny {
            for z in 0..nz {
                let v = t.get(x, y, z);
                if v > 0.0 {
                    total += v * (pz[z] * v / (pxz[x][z] * pyz[y][z])).log2();
                }
            }
        }
    }
    total.max(0.0)
}

/// Largest drop `H(X) - H(X|Y=y)` over supported `y`.
pub fn max_information_leakage(j: &JointDistribution) -> f64 {
    let hx = entropy_bits(&j.marginal_x());
    (0..j.y_labels().len())
        .filter_map(|y| j.conditional_x_given_y(y))
        .map(|cond| hx - entropy_bits(&cond))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Self-information `-log2 p`.
pub fn surprisal(p: f64) -> Result<f64> {
    if p.is_nan() || p > 1.0 {
        bail!(Param, "probability {p} outside (0,1]");
    }
    if p <= 0.0 {
        bail!(Domain, "surprisal of probability {p} is unbounded");
    }
    Ok((-p.log2()).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeliefIncrease {
    pub breached: bool,
    pub gap: f64,
}

/// Flags `posterior - prior > delta`.
pub fn belief_increase_check(prior: f64, posterior: f64, delta: f64) -> Result<BeliefIncrease> {
    for (name, v) in [("prior", prior), ("posterior", posterior)] {
        if !(0.0..=1.0).contains(&v) {
            bail!(Param, "{name} probability {v} outside [0,1]");
        }
    }
    if delta.is_nan() {
        bail!(Param, "delta is NaN");
    }
    let gap = posterior - prior;
    Ok(BeliefIncrease {
        breached: gap > delta,
        gap,
    })
}

/// A sequence of load transitions and the window over which features count.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureSeries {
    transitions: Vec<f64>,
    window: usize,
}

impl FeatureSeries {
    pub fn new(transitions: Vec<f64>, window: Option<usize>) -> Result<Self> {
        let window = window.unwrap_or(transitions.len());
        if window > transitions.len() {
            bail!(
                Param,
                "window {window} exceeds series length {}",
                transitions.len()
            );
        }
        if transitions.iter().any(|v| !v.is_finite()) {
            bail!(Param, "transitions must be finite");
        }
        Ok(Self {
            transitions,
            window,
        })
    }

    /// Non-zero transitions among the first `window` entries.
    pub fn feature_mass(&self) -> usize {
        self.transitions[..self.window]
            .iter()
            .filter(|d| **d != 0.0)
            .count()
    }
}

pub fn feature_mass_reduction(protected: &FeatureSeries, original: &FeatureSeries) -> Result<f64> {
    let base = original.feature_mass();
    if base == 0 {
        bail!(Domain, "original series has no observable features");
    }
    Ok(protected.feature_mass() as f64 / base as f64)
}

/// `Σ β_i V_i`.
pub fn privacy_score(sensitivities: &[f64], visibilities: &[f64]) -> Result<f64> {
    if sensitivities.len() != visibilities.len() {
        bail!(
            Shape,
            "{} sensitivities for {} visibilities",
            sensitivities.len(),
            visibilities.len()
        );
    }
    if sensitivities
        .iter()
        .chain(visibilities)
        .any(|v| v.is_nan() || *v < 0.0)
    {
        bail!(Param, "sensitivities and visibilities must be >= 0");
    }
    Ok(sensitivities
        .iter()
        .zip(visibilities)
        .map(|(b, v)| b * v)
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pearson {
    pub abs: f64,
    pub signed: f64,
}

/// Sample correlation coefficient, reported by magnitude.
pub fn pearson_abs(x: &[f64], y: &[f64]) -> Result<Pearson> {
    if x.len() != y.len() {
        bail!(Shape, "{} x values for {} y values", x.len(), y.len());
    }
    if x.len() < 2 {
        bail!(Param, "correlation needs at least two points");
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        bail!(Degenerate, "correlation undefined for a constant series");
    }
    let r = (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0);
    Ok(Pearson {
        abs: r.abs(),
        signed: r,
    })
}
