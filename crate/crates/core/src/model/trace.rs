use serde::{Deserialize, Serialize};

use super::distribution::DiscreteDistribution;
use crate::error::{bail, Result};

/// Time-ordered samples. A sample's value holds until the next timestamp.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace<P> {
    samples: Vec<(f64, P)>,
}

impl<P> Trace<P> {
    pub fn new(samples: Vec<(f64, P)>) -> Result<Self> {
        if samples.is_empty() {
            bail!(Param, "trace needs at least one sample");
        }
        if let Some((t, _)) = samples.iter().find(|(t, _)| !t.is_finite()) {
            bail!(Param, "trace timestamp {t} is not finite");
        }
        if let Some(w) = samples.windows(2).find(|w| w[1].0 <= w[0].0) {
            bail!(
                Param,
                "trace timestamps must be strictly increasing ({} then {})",
                w[0].0,
                w[1].0
            );
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[(f64, P)] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn map<Q>(&self, f: impl Fn(&P) -> Q) -> Trace<Q> {
        Trace {
            samples: self.samples.iter().map(|(t, p)| (*t, f(p))).collect(),
        }
    }

    /// Left-closed intervals `[t_i, t_{i+1})` paired with the sample value.
    ///
    /// The last sample spans `[t_last, end)` when `end` is given and is
    /// dropped otherwise.
    pub fn intervals(&self, end: Option<f64>) -> Result<Vec<(f64, f64, &P)>> {
        let mut out: Vec<(f64, f64, &P)> = self
            .samples
            .windows(2)
            .map(|w| (w[0].0, w[1].0, &w[0].1))
            .collect();
        let (t_last, p_last) = self.samples.last().expect("non-empty trace");
        if let Some(end) = end {
            if !(end >= *t_last) {
                bail!(
                    Param,
                    "trace end {end} precedes the last sample at {t_last}"
                );
            }
            out.push((*t_last, end, p_last));
        }
        Ok(out)
    }

    /// Covered time span: from the first sample to `end` (or the last sample).
    pub fn span(&self, end: Option<f64>) -> f64 {
        let first = self.samples[0].0;
        end.unwrap_or(self.samples.last().expect("non-empty trace").0) - first
    }
}

impl Trace<f64> {
    pub fn from_values(times: &[f64], values: &[f64]) -> Result<Self> {
        if times.len() != values.len() {
            bail!(
                Shape,
                "{} timestamps for {} values",
                times.len(),
                values.len()
            );
        }
        Self::new(times.iter().copied().zip(values.iter().copied()).collect())
    }
}

/// Payload of a trace file sample: a number or a distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TracePayload {
    Number(f64),
    Distribution(DiscreteDistribution),
}

#[derive(Deserialize)]
struct RawSample {
    t: f64,
    v: TracePayload,
}

#[derive(Deserialize)]
struct RawTrace {
    samples: Vec<RawSample>,
}

/// Parses `{"samples":[{"t":number,"v":...}...]}`.
pub fn parse_trace(text: &str) -> Result<Trace<TracePayload>> {
    let raw: RawTrace = serde_json::from_str(text)?;
    Trace::new(raw.samples.into_iter().map(|s| (s.t, s.v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_increasing_times() {
        assert_eq!(
            Trace::from_values(&[0.0, 0.0], &[1.0, 2.0])
                .unwrap_err()
                .code(),
            "E_PARAM"
        );
        assert_eq!(Trace::<f64>::new(vec![]).unwrap_err().code(), "E_PARAM");
    }

    #[test]
    fn intervals_with_and_without_end() {
        let t = Trace::from_values(&[0.0, 1.0, 3.0], &[5.0, 6.0, 7.0]).unwrap();
        assert_eq!(t.intervals(None).unwrap().len(), 2);
        let iv = t.intervals(Some(4.0)).unwrap();
        assert_eq!(iv.last().unwrap().0, 3.0);
        assert_eq!(iv.last().unwrap().1, 4.0);
        assert_eq!(t.intervals(Some(2.0)).unwrap_err().code(), "E_PARAM");
        assert_eq!(t.span(Some(4.0)), 4.0);
    }

    #[test]
    fn parses_mixed_payloads() {
        let tr = parse_trace(
            r#"{"samples":[{"t":0,"v":3},{"t":1.5,"v":{"labels":["a","b"],"probs":[0.5,0.5]}}]}"#,
        )
        .unwrap();
        assert_eq!(tr.samples()[0].1, TracePayload::Number(3.0));
        assert!(matches!(tr.samples()[1].1, TracePayload::Distribution(_)));
    }
}
