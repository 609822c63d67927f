use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::{JointDistribution, Value};

/// Slack on log-space comparisons so exact boundary cases hold.
const LOG_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InformationPrivacy {
    pub holds: bool,
    pub eps_min: f64,
}

impl InformationPrivacy {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("holds".into(), Value::Bool(self.holds)),
            ("eps_min".into(), Value::Real(self.eps_min)),
        ])
    }
}

/// Largest `|ln p(s|u) - ln p(s)|` over a joint with `s` as rows and `u` as
/// columns; outcomes with `p(s)=0` or `p(u)=0` are skipped.
pub fn information_privacy(j: &JointDistribution, eps: f64) -> Result<InformationPrivacy> {
    if !(eps >= 0.0) {
        bail!(Param, "epsilon must be >= 0, got {eps}");
    }
    let ps = j.marginal_x();
    let mut eps_min: f64 = 0.0;
    for u in 0..j.y_labels().len() {
        let Some(cond) = j.conditional_x_given_y(u) else {
            continue;
        };
        for (&c, &p) in cond.iter().zip(&ps) {
            if p <= 0.0 {
                continue;
            }
            let d = if c == 0.0 {
                f64::INFINITY
            } else {
                (c.ln() - p.ln()).abs()
            };
            eps_min = eps_min.max(d);
        }
    }
    Ok(InformationPrivacy {
        holds: eps_min <= eps + LOG_SLACK,
        eps_min,
    })
}

/// Posterior ratio `prior_ratio * L(θ1) / L(θ2)` bounded by `e^eps`.
pub fn distributional_privacy(l1: f64, l2: f64, prior_ratio: f64, eps: f64) -> Result<bool> {
    if !(l1 >= 0.0 && l2 >= 0.0) || !l1.is_finite() || !l2.is_finite() {
        bail!(Param, "likelihoods must be finite and >= 0");
    }
    if l1 == 0.0 && l2 == 0.0 {
        bail!(Param, "both likelihoods are zero");
    }
    if !(prior_ratio > 0.0 && prior_ratio.is_finite()) {
        bail!(Param, "prior ratio must be > 0, got {prior_ratio}");
    }
    if !(eps >= 0.0) {
        bail!(Param, "epsilon must be >= 0, got {eps}");
    }
    if l1 == 0.0 {
        return Ok(true);
    }
    if l2 == 0.0 {
        bail!(
            Domain,
            "observation rules out θ2 entirely; no finite epsilon bounds the ratio"
        );
    }
    let log_ratio = prior_ratio.ln() + l1.ln() - l2.ln();
    Ok(log_ratio <= eps + LOG_SLACK)
}

/// Challenge-response outcomes `(guess, truth)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GameTranscript {
    trials: Vec<(bool, bool)>,
}

#[derive(Deserialize)]
struct RawTrial {
    guess: u8,
    truth: u8,
}

impl GameTranscript {
    pub fn new(trials: Vec<(bool, bool)>) -> Result<Self> {
        if trials.is_empty() {
            bail!(Empty, "transcript has no trials");
        }
        Ok(Self { trials })
    }

    pub fn trials(&self) -> &[(bool, bool)] {
        &self.trials
    }

    pub fn correct(&self) -> usize {
        self.trials.iter().filter(|(g, t)| g == t).count()
    }
}

/// Parses `[{"guess":0|1,"truth":0|1}...]`.
pub fn parse_transcript(text: &str) -> Result<GameTranscript> {
    let raw: Vec<RawTrial> = serde_json::from_str(text)?;
    let trials = raw
        .into_iter()
        .map(|t| {
            if t.guess > 1 || t.truth > 1 {
                bail!(Schema, "guess and truth must be 0 or 1");
            }
            Ok((t.guess == 1, t.truth == 1))
        })
        .collect::<Result<Vec<_>>>()?;
    GameTranscript::new(trials)
}

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959963984540054;

/// Wilson score interval for `successes` out of `n`.
pub fn wilson_interval(successes: usize, n: usize, z: f64) -> (f64, f64) {
    let n = n as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameAdvantage {
    pub advantage: f64,
    pub ci95: (f64, f64),
    pub holds: bool,
}

impl GameAdvantage {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("advantage".into(), Value::Real(self.advantage)),
            ("ci95".into(), Value::Series(vec![self.ci95.0, self.ci95.1])),
            ("holds".into(), Value::Bool(self.holds)),
        ])
    }
}

/// Advantage over guessing, with the bound checked against the upper
/// Wilson limit on the success rate.
pub fn game_advantage(g: &GameTranscript, eps_threshold: f64) -> Result<GameAdvantage> {
    if eps_threshold.is_nan() {
        bail!(Param, "threshold is NaN");
    }
    let n = g.trials.len();
    let correct = g.correct();
    let rate = correct as f64 / n as f64;
    let ci95 = wilson_interval(correct, n, Z95);
    Ok(GameAdvantage {
        advantage: (rate - 0.5).max(0.0),
        ci95,
        holds: ci95.1 <= 0.5 + eps_threshold,
    })
}

/// The game with zero tolerated advantage.
pub fn unconditional_privacy(g: &GameTranscript) -> Result<GameAdvantage> {
    game_advantage(g, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn joint(m: &[&[f64]]) -> JointDistribution {
        JointDistribution::from_matrix(m.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn information_privacy_examples() {
        let indep = joint(&[&[0.12, 0.28], &[0.18, 0.42]]);
        let r = information_privacy(&indep, 0.0).unwrap();
        assert!(r.eps_min < 1e-12 && r.holds);
        let same = joint(&[&[0.5, 0.0], &[0.0, 0.5]]);
        assert!(information_privacy(&same, 10.0)
            .unwrap()
            .eps_min
            .is_infinite());
        // p(s|u) is 0.6 or 0.4 against p(s)=0.5; the lower side dominates: ln(0.5/0.4)
        let r = information_privacy(&joint(&[&[0.3, 0.2], &[0.2, 0.3]]), 0.23).unwrap();
        assert!((r.eps_min - 0.22314355131420976).abs() < 1e-12);
        assert!(r.holds);
        assert!(
            !information_privacy(&joint(&[&[0.3, 0.2], &[0.2, 0.3]]), 0.2)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn distributional_examples() {
        assert!(distributional_privacy(0.3, 0.3, 1.0, 0.0).unwrap());
        let e2 = (2.0f64).exp();
        assert!(!distributional_privacy(e2 * 0.1, 0.1, 1.0, 1.0).unwrap());
        assert!(distributional_privacy(e2 * 0.1, 0.1, 1.0, 2.0).unwrap());
        assert!(distributional_privacy(0.1, 0.1, e2, 2.0).unwrap());
        assert_eq!(
            distributional_privacy(0.1, 0.0, 1.0, 2.0)
                .unwrap_err()
                .code(),
            "E_DOMAIN"
        );
        assert_eq!(
            distributional_privacy(0.0, 0.0, 1.0, 2.0)
                .unwrap_err()
                .code(),
            "E_PARAM"
        );
    }

    #[test]
    fn game_examples() {
        let all = GameTranscript::new(vec![(true, true); 100]).unwrap();
        let r = game_advantage(&all, 0.01).unwrap();
        assert_eq!(r.advantage, 0.5);
        assert!(!r.holds);
        let half = GameTranscript::new(vec![(true, true), (true, false)]).unwrap();
        assert_eq!(game_advantage(&half, 0.0).unwrap().advantage, 0.0);
        assert_eq!(GameTranscript::new(vec![]).unwrap_err().code(), "E_EMPTY");
        let coin: Vec<(bool, bool)> = (0..400).map(|i| (i % 2 == 0, i % 4 < 2)).collect();
        let g = GameTranscript::new(coin).unwrap();
        assert!(game_advantage(&g, 0.1).unwrap().holds);
        assert!(!unconditional_privacy(&g).unwrap().holds);
    }

    #[test]
    fn wilson_reference_values() {
        // 8/10, reference values from statsmodels proportion_confint(method="wilson")
        let (lo, hi) = wilson_interval(8, 10, Z95);
        assert!((lo - 0.4901624).abs() < 1e-6, "{lo}");
        assert!((hi - 0.9433178).abs() < 1e-6, "{hi}");
        assert_eq!(wilson_interval(0, 5, Z95).0, 0.0);
    }

    #[test]
    fn parses_transcript() {
        let t = parse_transcript(r#"[{"guess":1,"truth":1},{"guess":0,"truth":1}]"#).unwrap();
        assert_eq!(t.correct(), 1);
        assert_eq!(
            parse_transcript(r#"[{"guess":2,"truth":1}]"#)
                .unwrap_err()
                .code(),
            "E_SCHEMA"
        );
        assert_eq!(parse_transcript("[]").unwrap_err().code(), "E_EMPTY");
    }
}
