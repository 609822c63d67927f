use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};

/// Absolute tolerance on probability mass. Inputs whose total mass is within
/// this distance of 1 are renormalized; anything further off is rejected.
pub const PROB_TOLERANCE: f64 = 1e-9;

/// Probability vector over labeled outcomes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteDistribution {
    labels: Vec<String>,
    probs: Vec<f64>,
}

#[derive(Deserialize)]
struct RawDistribution {
    labels: Vec<String>,
    probs: Vec<f64>,
}

/// Checks non-negativity and unit mass, returning the renormalized vector.
pub(crate) fn normalize_mass(probs: &[f64], what: &str) -> Result<Vec<f64>> {
    if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
        bail!(
            Distribution,
            "{what}: probability {p} is negative or not finite"
        );
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > PROB_TOLERANCE {
        bail!(Distribution, "{what}: probabilities sum to {total}, not 1");
    }
    // sums already at rounding noise are kept as-is so parse(serialize(d)) == d
    if (total - 1.0).abs() <= probs.len() as f64 * f64::EPSILON {
        return Ok(probs.to_vec());
    }
    Ok(probs.iter().map(|p| p / total).collect())
}

pub(crate) fn check_distinct(labels: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            bail!(Schema, "{what}: duplicate label {l:?}");
        }
    }
    Ok(())
}

impl DiscreteDistribution {
    pub fn new(labels: Vec<String>, probs: Vec<f64>) -> Result<Self> {
        if labels.is_empty() {
            bail!(Schema, "distribution needs at least one outcome");
        }
        if labels.len() != probs.len() {
            bail!(
                Schema,
                "{} labels but {} probabilities",
                labels.len(),
                probs.len()
            );
        }
        check_distinct(&labels, "distribution")?;
        let probs = normalize_mass(&probs, "distribution")?;
        Ok(Self { labels, probs })
    }

    /// Distribution with labels `"0"`, `"1"`, ...
    pub fn from_probs(probs: Vec<f64>) -> Result<Self> {
        let labels = (0..probs.len()).map(|i| i.to_string()).collect();
        Self::new(labels, probs)
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            bail!(Schema, "distribution needs at least one outcome");
        }
        Self::from_probs(vec![1.0 / n as f64; n])
    }

    pub fn point_mass(n: usize, at: usize) -> Result<Self> {
        if at >= n {
            bail!(Param, "point mass index {at} outside {n} outcomes");
        }
        let mut p = vec![0.0; n];
        p[at] = 1.0;
        Self::from_probs(p)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn prob_of(&self, label: &str) -> Option<f64> {
        self.index_of(label).map(|i| self.probs[i])
    }

    pub fn max_prob(&self) -> f64 {
        self.probs.iter().cloned().fold(0.0, f64::max)
    }

    /// Pairs the probabilities of `self` and `other` label by label.
    ///
    /// Both distributions must carry the same label set; order may differ.
    pub fn aligned_with(&self, other: &DiscreteDistribution) -> Result<Vec<(f64, f64)>> {
        if self.len() != other.len() {
            bail!(
                Shape,
                "label sets differ: {} vs {} outcomes",
                self.len(),
                other.len()
            );
        }
        let index: HashMap<&str, usize> = other
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        self.labels
            .iter()
            .zip(&self.probs)
            .map(|(l, &p)| match index.get(l.as_str()) {
                Some(&j) => Ok((p, other.probs[j])),
                None => Err(crate::MetricError::Shape(format!(
                    "label {l:?} missing from second distribution"
                ))),
            })
            .collect()
    }
}

impl<'de> Deserialize<'de> for DiscreteDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDistribution::deserialize(d)?;
        DiscreteDistribution::new(raw.labels, raw.probs).map_err(serde::de::Error::custom)
    }
}

/// Parses the distribution file format `{"labels":[...],"probs":[...]}`.
pub fn parse_distribution(text: &str) -> Result<DiscreteDistribution> {
    let raw: RawDistribution = serde_json::from_str(text)?;
    DiscreteDistribution::new(raw.labels, raw.probs)
}
