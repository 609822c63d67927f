use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::{entropy_bits, normalize_mass, DiscreteDistribution};

/// Discrete hidden-state tracker: prior, row-stochastic transition matrix and
/// one likelihood vector per observation step.
#[derive(Debug, Clone, PartialEq)]
pub struct BayesTrackingModel {
    prior: DiscreteDistribution,
    transition: Vec<Vec<f64>>,
    likelihoods: Vec<Vec<f64>>,
}

impl BayesTrackingModel {
    pub fn new(
        prior: DiscreteDistribution,
        transition: Vec<Vec<f64>>,
        likelihoods: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let n = prior.len();
        if transition.len() != n {
            bail!(
                Shape,
                "transition has {} rows for {n} states",
                transition.len()
            );
        }
        let transition = transition
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != n {
                    bail!(
                        Shape,
                        "transition row {i} has {} entries for {n} states",
                        row.len()
                    );
                }
                normalize_mass(row, &format!("transition row {i}"))
            })
            .collect::<Result<Vec<_>>>()?;
        for (t, l) in likelihoods.iter().enumerate() {
            if l.len() != n {
                bail!(
                    Shape,
                    "likelihood step {t} has {} entries for {n} states",
                    l.len()
                );
            }
            if l.iter().any(|v| !v.is_finite() || *v < 0.0) {
                bail!(
                    Param,
                    "likelihood step {t} has a negative or non-finite entry"
                );
            }
            if l.iter().all(|v| *v == 0.0) {
                bail!(Param, "likelihood step {t} is zero for every state");
            }
        }
        Ok(Self {
            prior,
            transition,
            likelihoods,
        })
    }

    pub fn states(&self) -> &[String] {
        self.prior.labels()
    }
}

#[derive(Deserialize)]
struct RawModel {
    prior: DiscreteDistribution,
    transition: Vec<Vec<f64>>,
    likelihoods: Vec<Vec<f64>>,
}

/// Parses `{"prior":{labels,probs},"transition":[[..]],"likelihoods":[[..]]}`.
pub fn parse_tracking_model(text: &str) -> Result<BayesTrackingModel> {
    let raw: RawModel = serde_json::from_str(text)?;
    BayesTrackingModel::new(raw.prior, raw.transition, raw.likelihoods)
}

/// Entropy of the belief after each predict/correct step.
pub fn bayes_entropy_series(m: &BayesTrackingModel) -> Result<Vec<f64>> {
    let n = m.prior.len();
    let mut belief = m.prior.probs().to_vec();
    let mut out = Vec::with_capacity(m.likelihoods.len());
    for (t, like) in m.likelihoods.iter().enumerate() {
        let mut next = vec![0.0; n];
        for (i, b) in belief.iter().enumerate() {
            for (j, w) in m.transition[i].iter().enumerate() {
                next[j] += b * w;
            }
        }
        for (v, l) in next.iter_mut().zip(like) {
            *v *= l;
        }
        let total: f64 = next.iter().sum();
        if total <= 0.0 {
            bail!(Domain, "belief vanishes at step {t}");
        }
        next.iter_mut().for_each(|v| *v /= total);
        out.push(entropy_bits(&next));
        belief = next;
    }
    Ok(out)
}

/// Linear privacy decay after the last protection event.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct DecaySpec {
    pub h0: f64,
    pub lambda: f64,
    pub t_last: f64,
}

impl DecaySpec {
    pub fn new(h0: f64, lambda: f64, t_last: f64) -> Result<Self> {
        if !(h0 >= 0.0 && h0.is_finite()) {
            bail!(Param, "h0 must be a finite value >= 0, got {h0}");
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            bail!(Param, "lambda must be > 0, got {lambda}");
        }
        if !t_last.is_finite() {
            bail!(Param, "t_last must be finite");
        }
        Ok(Self { h0, lambda, t_last })
    }

    /// Time at which the remaining privacy reaches zero.
    pub fn t_final(&self) -> f64 {
        self.h0 / self.lambda + self.t_last
    }
}

pub fn user_centric_privacy(spec: &DecaySpec, t: f64) -> Result<f64> {
    if t.is_nan() || t < spec.t_last {
        bail!(
            Param,
            "t={t} precedes the last protection event at {}",
            spec.t_last
        );
    }
    if t >= spec.t_final() {
        return Ok(0.0);
    }
    Ok((spec.h0 - spec.lambda * (t - spec.t_last)).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    #[test]
    fn uninformative_steps_keep_prior_entropy() {
        let prior = DiscreteDistribution::from_probs(vec![0.5, 0.3, 0.2]).unwrap();
        let h = entropy_bits(prior.probs());
        let m = BayesTrackingModel::new(prior, identity(3), vec![vec![1.0; 3]; 4]).unwrap();
        for v in bayes_entropy_series(&m).unwrap() {
            assert!((v - h).abs() < 1e-12);
        }
    }

    #[test]
    fn indicator_likelihoods_give_zero() {
        let prior = DiscreteDistribution::uniform(3).unwrap();
        let mixing = vec![vec![1.0 / 3.0; 3]; 3];
        let steps = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ];
        let m = BayesTrackingModel::new(prior, mixing, steps).unwrap();
        assert_eq!(bayes_entropy_series(&m).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn single_update_by_hand() {
        let prior = DiscreteDistribution::uniform(2).unwrap();
        let m = BayesTrackingModel::new(prior, identity(2), vec![vec![0.9, 0.1]]).unwrap();
        let s = bayes_entropy_series(&m).unwrap();
        // H(0.9, 0.1)
        assert!((s[0] - 0.4689955935892812).abs() < 1e-9);
    }

    #[test]
    fn vanishing_belief_is_domain_error() {
        let prior = DiscreteDistribution::point_mass(2, 0).unwrap();
        let m = BayesTrackingModel::new(prior, identity(2), vec![vec![0.0, 1.0]]).unwrap();
        assert_eq!(bayes_entropy_series(&m).unwrap_err().code(), "E_DOMAIN");
    }

    #[test]
    fn rejects_bad_transition() {
        let prior = DiscreteDistribution::uniform(2).unwrap();
        let err = BayesTrackingModel::new(prior, vec![vec![0.5, 0.6], vec![0.5, 0.5]], vec![])
            .unwrap_err();
        assert_eq!(err.code(), "E_DIST");
    }

    #[test]
    fn decay_examples() {
        let s = DecaySpec::new(2.0, 1.0, 10.0).unwrap();
        assert_eq!(user_centric_privacy(&s, 10.0).unwrap(), 2.0);
        assert_eq!(user_centric_privacy(&s, 10.5).unwrap(), 1.5);
        assert_eq!(user_centric_privacy(&s, 12.0).unwrap(), 0.0);
        assert_eq!(user_centric_privacy(&s, 50.0).unwrap(), 0.0);
        assert_eq!(user_centric_privacy(&s, 9.0).unwrap_err().code(), "E_PARAM");
        assert_eq!(DecaySpec::new(1.0, 0.0, 0.0).unwrap_err().code(), "E_PARAM");
    }
}
