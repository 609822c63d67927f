use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::{normalize_mass, DiscreteDistribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroundMetric {
    ZeroOne,
    Euclidean,
}

/// An adversary's posterior over candidates together with the true outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateWithTruth {
    posterior: DiscreteDistribution,
    truth: usize,
    metric: GroundMetric,
    coords: Option<Vec<Vec<f64>>>,
}

#[derive(Deserialize)]
struct RawEstimate {
    posterior: DiscreteDistribution,
    truth: String,
    metric: GroundMetric,
    #[serde(default)]
    coords: Option<BTreeMap<String, Vec<f64>>>,
}

impl EstimateWithTruth {
    /// `coords` maps every candidate label to a point and is required for
    /// the euclidean metric.
    pub fn new(
        posterior: DiscreteDistribution,
        truth: &str,
        metric: GroundMetric,
        coords: Option<BTreeMap<String, Vec<f64>>>,
    ) -> Result<Self> {
        let Some(truth) = posterior.index_of(truth) else {
            bail!(Schema, "truth {truth:?} is not a posterior label");
        };
        let coords = match (metric, coords) {
            (GroundMetric::ZeroOne, _) => None,
            (GroundMetric::Euclidean, None) => bail!(Schema, "euclidean metric needs coordinates"),
            (GroundMetric::Euclidean, Some(mut map)) => {
                let mut pts = Vec::with_capacity(posterior.len());
                for label in posterior.labels() {
                    match map.remove(label) {
                        Some(p) => pts.push(p),
                        None => bail!(Schema, "no coordinates for {label:?}"),
                    }
                }
                let dim = pts[0].len();
                if pts
                    .iter()
                    .any(|p| p.len() != dim || p.iter().any(|v| !v.is_finite()))
                {
                    bail!(Schema, "coordinates must be finite and share one dimension");
                }
                Some(pts)
            }
        };
        Ok(Self {
            posterior,
            truth,
            metric,
            coords,
        })
    }

    pub fn posterior(&self) -> &DiscreteDistribution {
        &self.posterior
    }
}

/// Parses `{"posterior":{labels,probs},"truth":id,"metric":"zero_one"|"euclidean","coords"?:{id:[..]}}`.
pub fn parse_estimate(text: &str) -> Result<EstimateWithTruth> {
    let raw: RawEstimate = serde_json::from_str(text)?;
    EstimateWithTruth::new(raw.posterior, &raw.truth, raw.metric, raw.coords)
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Posterior-weighted distance from each candidate to the truth.
pub fn expected_estimation_error(e: &EstimateWithTruth) -> f64 {
    let probs = e.posterior.probs();
    match (&e.metric, &e.coords) {
        (GroundMetric::Euclidean, Some(pts)) => probs
            .iter()
            .zip(pts)
            .map(|(p, x)| p * euclid(x, &pts[e.truth]))
            .sum(),
        _ => 1.0 - probs[e.truth],
    }
}

/// `(1 / (|U| K)) Σ_k Σ_i p_i(k) d_i(k)` over per-step `(probability, total distance)` hypotheses.
pub fn distance_error_expectation(
    hypotheses: &[Vec<(f64, f64)>],
    n_users: usize,
    k_steps: usize,
) -> Result<f64> {
    if n_users == 0 || k_steps == 0 {
        bail!(Param, "need at least one user and one time step");
    }
    if hypotheses.len() != k_steps {
        bail!(
            Param,
            "{} steps of hypotheses for K={k_steps}",
            hypotheses.len()
        );
    }
    let mut total = 0.0;
    for (k, step) in hypotheses.iter().enumerate() {
        let probs: Vec<f64> = step.iter().map(|h| h.0).collect();
        let probs = normalize_mass(&probs, &format!("hypotheses at step {k}"))?;
        for (p, (_, d)) in probs.iter().zip(step) {
            if !(*d >= 0.0 && d.is_finite()) {
                bail!(Param, "distance {d} at step {k} must be finite and >= 0");
            }
            total += p * d;
        }
    }
    Ok(total / (n_users * k_steps) as f64)
}

/// Mean of squared euclidean distances between paired vectors.
pub fn mean_squared_error(truths: &[Vec<f64>], observations: &[Vec<f64>]) -> Result<f64> {
    if truths.len() != observations.len() {
        bail!(
            Shape,
            "{} truths vs {} observations",
            truths.len(),
            observations.len()
        );
    }
    if truths.is_empty() {
        bail!(Shape, "no observations");
    }
    let mut total = 0.0;
    for (i, (t, o)) in truths.iter().zip(observations).enumerate() {
        if t.len() != o.len() {
            bail!(Shape, "pair {i} has dimensions {} and {}", t.len(), o.len());
        }
        total += t.iter().zip(o).map(|(a, b)| (a - b) * (a - b)).sum::<f64>();
    }
    Ok(total / truths.len() as f64)
}

pub fn pct_incorrect(incorrect: u64, total: u64) -> Result<f64> {
    if total == 0 {
        bail!(Param, "total must be >= 1");
    }
    if incorrect > total {
        bail!(Param, "{incorrect} incorrect out of {total}");
    }
    Ok(incorrect as f64 / total as f64)
}

/// Weighted mean of a base privacy metric over contributing variations.
pub fn health_privacy(weights: &[f64], base_values: &[f64]) -> Result<f64> {
    if weights.len() != base_values.len() {
        bail!(
            Shape,
            "{} weights for {} base values",
            weights.len(),
            base_values.len()
        );
    }
    if weights.iter().any(|w| !(*w >= 0.0 && w.is_finite())) {
        bail!(Param, "weights must be finite and >= 0");
    }
    let total: f64 = weights.iter().sum();
    if total == 0.0 {
        bail!(Param, "weights are all zero");
    }
    Ok(weights
        .iter()
        .zip(base_values)
        .map(|(w, g)| w * g)
        .sum::<f64>()
        / total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn posterior(labels: &[&str], probs: &[f64]) -> DiscreteDistribution {
        DiscreteDistribution::new(
            labels.iter().map(|s| s.to_string()).collect(),
            probs.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn estimation_error() {
        let e = EstimateWithTruth::new(
            posterior(&["a", "b"], &[1.0, 0.0]),
            "a",
            GroundMetric::ZeroOne,
            None,
        )
        .unwrap();
        assert_eq!(expected_estimation_error(&e), 0.0);
        let coords: BTreeMap<String, Vec<f64>> =
            [("a".to_string(), vec![0.0]), ("b".to_string(), vec![1.0])]
                .into_iter()
                .collect();
        let e = EstimateWithTruth::new(
            posterior(&["a", "b"], &[0.5, 0.5]),
            "b",
            GroundMetric::Euclidean,
            Some(coords),
        )
        .unwrap();
        assert_eq!(expected_estimation_error(&e), 0.5);
        let e = EstimateWithTruth::new(
            posterior(&["a", "b", "c"], &[0.3, 0.5, 0.2]),
            "a",
            GroundMetric::ZeroOne,
            None,
        )
        .unwrap();
        assert_eq!(expected_estimation_error(&e), 0.7);
    }

    #[test]
    fn estimate_validation() {
        let p = posterior(&["a", "b"], &[0.5, 0.5]);
        let err = EstimateWithTruth::new(p.clone(), "z", GroundMetric::ZeroOne, None).unwrap_err();
        assert_eq!(err.code(), "E_SCHEMA");
        let err = EstimateWithTruth::new(p, "a", GroundMetric::Euclidean, None).unwrap_err();
        assert_eq!(err.code(), "E_SCHEMA");
        let e = parse_estimate(
            r#"{"posterior":{"labels":["a","b"],"probs":[0.25,0.75]},"truth":"a","metric":"euclidean",
                "coords":{"a":[0,0],"b":[3,4]}}"#,
        )
        .unwrap();
        assert_eq!(expected_estimation_error(&e), 3.75);
    }

    #[test]
    fn distance_error() {
        assert_eq!(
            distance_error_expectation(&[vec![(1.0, 0.0)], vec![(1.0, 0.0)]], 3, 2).unwrap(),
            0.0
        );
        let h = vec![vec![(0.5, 2.0), (0.5, 4.0)]];
        assert_eq!(distance_error_expectation(&h, 1, 1).unwrap(), 3.0);
        assert_eq!(distance_error_expectation(&h, 2, 1).unwrap(), 1.5);
        let bad = vec![vec![(0.5, 2.0), (0.2, 4.0)]];
        assert_eq!(
            distance_error_expectation(&bad, 1, 1).unwrap_err().code(),
            "E_DIST"
        );
        assert_eq!(
            distance_error_expectation(&h, 0, 1).unwrap_err().code(),
            "E_PARAM"
        );
    }

    #[test]
    fn mse() {
        let t = vec![vec![1.0, 2.0]];
        assert_eq!(mean_squared_error(&t, &t).unwrap(), 0.0);
        assert_eq!(
            mean_squared_error(&[vec![0.0], vec![0.0]], &[vec![1.0], vec![3.0]]).unwrap(),
            5.0
        );
        assert_eq!(
            mean_squared_error(&[vec![0.0, 0.0]], &[vec![0.0, 2.0]]).unwrap(),
            4.0
        );
        assert_eq!(mean_squared_error(&t, &[]).unwrap_err().code(), "E_SHAPE");
    }

    #[test]
    fn ratios() {
        assert_eq!(pct_incorrect(0, 7).unwrap(), 0.0);
        assert_eq!(pct_incorrect(7, 7).unwrap(), 1.0);
        assert_eq!(pct_incorrect(3, 12).unwrap(), 0.25);
        assert_eq!(pct_incorrect(1, 0).unwrap_err().code(), "E_PARAM");
        assert!((health_privacy(&[1.0, 1.0, 1.0], &[0.1, 0.2, 0.6]).unwrap() - 0.3).abs() < 1e-12);
        assert!((health_privacy(&[1.0, 3.0], &[0.2, 0.6]).unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(health_privacy(&[2.0], &[0.42]).unwrap(), 0.42);
        assert_eq!(
            health_privacy(&[0.0, 0.0], &[0.1, 0.2]).unwrap_err().code(),
            "E_PARAM"
        );
        assert_eq!(
            health_privacy(&[1.0], &[0.1, 0.2]).unwrap_err().code(),
            "E_SHAPE"
        );
    }
}
