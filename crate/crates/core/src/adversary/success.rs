use crate::error::{bail, Result};
use crate::model::{DiscreteDistribution, Value};

/// Slack for equality tests on posterior probabilities.
const PROB_EQ: f64 = 1e-12;

fn unit_interval(v: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        bail!(Param, "{what} must lie in [0,1], got {v}");
    }
    Ok(())
}

/// Fraction of successful trials.
pub fn success_rate(trials: &[bool]) -> Result<f64> {
    if trials.is_empty() {
        bail!(Empty, "no trials");
    }
    Ok(trials.iter().filter(|t| **t).count() as f64 / trials.len() as f64)
}

/// Whether the share of trials with similarity at least `theta` reaches `omega`.
pub fn record_linkage_check(similarities: &[f64], theta: f64, omega: f64) -> Result<bool> {
    if similarities.is_empty() {
        bail!(Empty, "no similarity scores");
    }
    unit_interval(theta, "theta")?;
    unit_interval(omega, "omega")?;
    for s in similarities {
        unit_interval(*s, "similarity")?;
    }
    let hits = similarities.iter().filter(|s| **s >= theta).count();
    Ok(hits as f64 / similarities.len() as f64 >= omega)
}

/// Chance that every relay on a path is compromised, with relays drawn
/// uniformly and independently.
pub fn path_compromise_probability(
    compromised: u64,
    total_relays: u64,
    path_length: u32,
) -> Result<f64> {
    if total_relays == 0 {
        bail!(Param, "need at least one relay");
    }
    if compromised > total_relays {
        bail!(
            Param,
            "{compromised} compromised out of {total_relays} relays"
        );
    }
    if path_length == 0 {
        bail!(Param, "path length must be >= 1");
    }
    Ok((compromised as f64 / total_relays as f64).powi(path_length as i32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnonymityDegree {
    ProvablyExposed,
    Exposed,
    AbsolutePrivacy,
    BeyondSuspicion,
    ProbableInnocence,
    PossibleInnocence,
}

impl AnonymityDegree {
    pub fn as_str(&self) -> &'static str {
        match self {
            AnonymityDegree::ProvablyExposed => "provably-exposed",
            AnonymityDegree::Exposed => "exposed",
            AnonymityDegree::AbsolutePrivacy => "absolute-privacy",
            AnonymityDegree::BeyondSuspicion => "beyond-suspicion",
            AnonymityDegree::ProbableInnocence => "probable-innocence",
            AnonymityDegree::PossibleInnocence => "possible-innocence",
        }
    }

    pub fn to_value(&self) -> Value {
        Value::Enum(self.as_str().to_string())
    }
}

/// Classifies the target's posterior probability.
///
/// Cases are tried from the strongest exposure claim down, so overlapping
/// conditions resolve towards exposure. `alpha` defaults to 0.5.
pub fn degrees_of_anonymity(
    posterior: &DiscreteDistribution,
    target: &str,
    theta: f64,
    alpha: Option<f64>,
) -> Result<AnonymityDegree> {
    unit_interval(theta, "theta")?;
    let alpha = alpha.unwrap_or(0.5);
    unit_interval(alpha, "alpha")?;
    let Some(p) = posterior.prob_of(target) else {
        bail!(Param, "target {target:?} is not a candidate");
    };
    let probs = posterior.probs();
    let min = probs.iter().copied().fold(f64::INFINITY, f64::min);
    let max = posterior.max_prob();
    use AnonymityDegree::*;
    Ok(if (p - 1.0).abs() <= PROB_EQ {
        ProvablyExposed
    } else if p >= theta {
        Exposed
    } else if p <= PROB_EQ {
        AbsolutePrivacy
    } else if (p - min).abs() <= PROB_EQ {
        BeyondSuspicion
    } else if p <= alpha {
        ProbableInnocence
    } else if p < max - PROB_EQ {
        PossibleInnocence
    } else {
        Exposed
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrivacyBreach {
    pub breached: bool,
    pub max_post: f64,
}

impl PrivacyBreach {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("breached".into(), Value::Bool(self.breached)),
            ("max_post".into(), Value::Real(self.max_post)),
        ])
    }
}

/// A breach occurs when some posterior reaches `rho`.
pub fn privacy_breach_check(posteriors: &[f64], rho: f64) -> Result<PrivacyBreach> {
    if posteriors.is_empty() {
        bail!(Empty, "no posterior probabilities");
    }
    unit_interval(rho, "rho")?;
    for p in posteriors {
        unit_interval(*p, "posterior")?;
    }
    let max_post = posteriors.iter().copied().fold(0.0, f64::max);
    Ok(PrivacyBreach {
        breached: max_post >= rho,
        max_post,
    })
}

/// `prior <= d`, `posterior <= gamma` and `d/gamma <= posterior/prior`.
pub fn dg_privacy_check(prior: f64, posterior: f64, d: f64, gamma: f64) -> Result<bool> {
    for (v, what) in [
        (prior, "prior"),
        (posterior, "posterior"),
        (d, "d"),
        (gamma, "gamma"),
    ] {
        unit_interval(v, what)?;
    }
    if prior == 0.0 {
        bail!(Param, "prior must be > 0");
    }
    if gamma == 0.0 {
        bail!(Param, "gamma must be > 0");
    }
    Ok(prior <= d && posterior <= gamma && d / gamma <= posterior / prior)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hiding {
    pub hidden: bool,
    pub max_p: f64,
}

impl Hiding {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("hidden".into(), Value::Bool(self.hidden)),
            ("max_p".into(), Value::Real(self.max_p)),
        ])
    }
}

/// Largest message-by-user sender probability against a threshold.
pub fn hiding_property(probs: &[Vec<f64>], theta: f64) -> Result<Hiding> {
    let width = probs.first().map_or(0, |r| r.len());
    if width == 0 {
        bail!(Shape, "probability matrix is empty");
    }
    if probs.iter().any(|r| r.len() != width) {
        bail!(Shape, "probability matrix rows differ in length");
    }
    unit_interval(theta, "theta")?;
    let mut max_p: f64 = 0.0;
    for p in probs.iter().flatten() {
        unit_interval(*p, "probability")?;
        max_p = max_p.max(*p);
    }
    Ok(Hiding {
        hidden: max_p <= theta,
        max_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(p: &[f64]) -> DiscreteDistribution {
        DiscreteDistribution::from_probs(p.to_vec()).unwrap()
    }

    #[test]
    fn rates() {
        assert_eq!(success_rate(&[false; 4]).unwrap(), 0.0);
        assert_eq!(success_rate(&[true; 4]).unwrap(), 1.0);
        let t = [true, false, true, false, false, true, false, false];
        assert_eq!(success_rate(&t).unwrap(), 0.375);
        assert_eq!(success_rate(&[]).unwrap_err().code(), "E_EMPTY");
    }

    #[test]
    fn linkage() {
        assert!(record_linkage_check(&[1.0, 1.0], 0.8, 1.0).unwrap());
        assert!(!record_linkage_check(&[0.9, 0.1], 0.8, 0.6).unwrap());
        assert!(record_linkage_check(&[0.0, 0.1], 0.8, 0.0).unwrap());
        assert_eq!(
            record_linkage_check(&[0.5], 1.2, 0.5).unwrap_err().code(),
            "E_PARAM"
        );
    }

    #[test]
    fn path_compromise() {
        assert_eq!(path_compromise_probability(0, 10, 3).unwrap(), 0.0);
        assert_eq!(path_compromise_probability(10, 10, 3).unwrap(), 1.0);
        assert_eq!(path_compromise_probability(5, 10, 2).unwrap(), 0.25);
        assert_eq!(
            path_compromise_probability(11, 10, 2).unwrap_err().code(),
            "E_PARAM"
        );
    }

    #[test]
    fn degrees() {
        use AnonymityDegree::*;
        let d = dist(&[1.0, 0.0, 0.0]);
        assert_eq!(
            degrees_of_anonymity(&d, "0", 0.9, None).unwrap(),
            ProvablyExposed
        );
        assert_eq!(
            degrees_of_anonymity(&d, "1", 0.9, None).unwrap(),
            AbsolutePrivacy
        );
        let u = dist(&[0.25; 4]);
        assert_eq!(
            degrees_of_anonymity(&u, "2", 0.9, None).unwrap(),
            BeyondSuspicion
        );
        let d = dist(&[0.4, 0.1, 0.5]);
        assert_eq!(
            degrees_of_anonymity(&d, "0", 0.9, Some(0.5)).unwrap(),
            ProbableInnocence
        );
        assert_eq!(
            degrees_of_anonymity(&d, "0", 0.9, Some(0.3)).unwrap(),
            PossibleInnocence
        );
        assert_eq!(
            degrees_of_anonymity(&d, "2", 0.9, Some(0.3)).unwrap(),
            Exposed
        );
        assert_eq!(degrees_of_anonymity(&d, "2", 0.45, None).unwrap(), Exposed);
        assert_eq!(
            degrees_of_anonymity(&d, "nobody", 0.9, None)
                .unwrap_err()
                .code(),
            "E_PARAM"
        );
    }

    #[test]
    fn breaches() {
        assert!(!privacy_breach_check(&[0.0, 0.0], 0.5).unwrap().breached);
        assert!(privacy_breach_check(&[0.2, 0.8], 0.8).unwrap().breached);
        assert!(!privacy_breach_check(&[0.2, 0.79], 0.8).unwrap().breached);
        assert_eq!(
            privacy_breach_check(&[], 0.8).unwrap_err().code(),
            "E_EMPTY"
        );
    }

    #[test]
    fn dg() {
        assert!(dg_privacy_check(0.3, 0.3, 0.3, 0.3).unwrap());
        assert!(!dg_privacy_check(0.1, 0.9, 0.2, 0.5).unwrap());
        assert!(!dg_privacy_check(0.4, 0.4, 0.2, 0.5).unwrap());
        assert_eq!(
            dg_privacy_check(0.0, 0.4, 0.2, 0.5).unwrap_err().code(),
            "E_PARAM"
        );
    }

    #[test]
    fn hiding() {
        let m = vec![vec![0.25; 4]; 3];
        assert!(hiding_property(&m, 0.5).unwrap().hidden);
        let m = vec![vec![0.9, 0.1], vec![0.5, 0.5]];
        let h = hiding_property(&m, 0.5).unwrap();
        assert!(!h.hidden);
        assert_eq!(h.max_p, 0.9);
        assert!(hiding_property(&m, 1.0).unwrap().hidden);
        assert_eq!(
            hiding_property(&[vec![0.5], vec![]], 0.5)
                .unwrap_err()
                .code(),
            "E_SHAPE"
        );
    }
}
