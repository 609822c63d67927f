use std::collections::BTreeSet;

use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::Value;

const TIME_TOLERANCE: f64 = 1e-9;

/// An area: a single id, or a set of cell ids.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Area {
    Id(String),
    Cells(BTreeSet<String>),
}

impl Area {
    pub fn contains(&self, cell: &str) -> bool {
        match self {
            Area::Id(id) => id == cell,
            Area::Cells(cells) => cells.contains(cell),
        }
    }
}

/// A user's timestamped location history.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct LocationHistory {
    pub user: String,
    pub entries: Vec<(f64, Area)>,
}

impl LocationHistory {
    pub fn new(user: impl Into<String>, entries: Vec<(f64, Area)>) -> Result<Self> {
        if entries.windows(2).any(|w| w[1].0 < w[0].0) {
            bail!(Param, "history times must be non-decreasing");
        }
        Ok(Self {
            user: user.into(),
            entries,
        })
    }

    /// Every request matches an entry at the same time whose area contains it.
    pub fn consistent_with(&self, requests: &[(f64, String)]) -> bool {
        requests.iter().all(|(t, cell)| {
            self.entries
                .iter()
                .any(|(te, area)| (te - t).abs() <= TIME_TOLERANCE && area.contains(cell))
        })
    }
}

/// Number of histories consistent with every request.
pub fn historical_k(histories: &[LocationHistory], requests: &[(f64, String)]) -> Result<usize> {
    if requests.is_empty() {
        bail!(Empty, "no requests");
    }
    Ok(histories
        .iter()
        .filter(|h| h.consistent_with(requests))
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isolation {
    pub ball_count: usize,
    pub delta: f64,
    /// `ball_count < t` when a threshold was given.
    pub isolated: Option<bool>,
}

impl Isolation {
    pub fn to_value(&self) -> Value {
        let mut fields = vec![
            (
                "ball_count".to_string(),
                Value::Count(self.ball_count as u64),
            ),
            ("delta".to_string(), Value::Real(self.delta)),
        ];
        if let Some(i) = self.isolated {
            fields.push(("isolated".to_string(), Value::Bool(i)));
        }
        Value::Record(fields)
    }
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Points inside the ball of radius `c * |guess - target|` around the guess.
pub fn ct_isolation(
    points: &[Vec<f64>],
    guess: &[f64],
    target_index: usize,
    c: f64,
    t: Option<usize>,
) -> Result<Isolation> {
    if points.is_empty() {
        bail!(Empty, "no points");
    }
    if target_index >= points.len() {
        bail!(
            Param,
            "target index {target_index} out of range for {} points",
            points.len()
        );
    }
    if !(c > 0.0 && c.is_finite()) {
        bail!(Param, "isolation factor must be > 0, got {c}");
    }
    let dim = guess.len();
    if points.iter().any(|p| p.len() != dim) {
        bail!(Shape, "points and guess must share one dimension ({dim})");
    }
    let delta = euclid(guess, &points[target_index]);
    let radius = c * delta;
    let ball_count = points
        .iter()
        .filter(|p| euclid(p, guess) <= radius + 1e-12)
        .count();
    Ok(Isolation {
        ball_count,
        delta,
        isolated: t.map(|t| ball_count < t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hist(user: &str, entries: &[(f64, &str)]) -> LocationHistory {
        LocationHistory::new(
            user,
            entries
                .iter()
                .map(|(t, a)| (*t, Area::Id(a.to_string())))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn historical_examples() {
        let hs = vec![
            hist("u", &[(1.0, "A"), (2.0, "B")]),
            hist("v", &[(1.0, "C"), (2.0, "D")]),
            hist("w", &[(1.0, "E"), (2.0, "F")]),
        ];
        let req = vec![(1.0, "A".to_string()), (2.0, "B".to_string())];
        assert_eq!(historical_k(&hs, &req).unwrap(), 1);
        let same = vec![hist("u", &[(1.0, "A")]), hist("v", &[(1.0, "A")])];
        assert_eq!(historical_k(&same, &req[..1]).unwrap(), 2);
        assert_eq!(historical_k(&hs, &[(5.0, "A".to_string())]).unwrap(), 0);
        assert_eq!(historical_k(&hs, &[]).unwrap_err().code(), "E_EMPTY");
    }

    #[test]
    fn cell_sets_contain_requests() {
        let h = LocationHistory::new(
            "u",
            vec![(
                0.0,
                Area::Cells(["c1".to_string(), "c2".to_string()].into_iter().collect()),
            )],
        )
        .unwrap();
        assert!(h.consistent_with(&[(0.0, "c2".to_string())]));
        assert!(!h.consistent_with(&[(0.0, "c3".to_string())]));
    }

    #[test]
    fn isolation_examples() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![10.0, 10.0],
        ];
        let i = ct_isolation(&pts, &[0.0, 0.0], 0, 2.0, None).unwrap();
        assert_eq!((i.ball_count, i.delta), (2, 0.0));
        let i = ct_isolation(&pts, &[10.0, 9.0], 3, 1.0, Some(2)).unwrap();
        assert_eq!(i.ball_count, 1);
        assert_eq!(i.isolated, Some(true));
        assert_eq!(
            ct_isolation(&pts, &[10.0, 9.0], 3, 100.0, None)
                .unwrap()
                .ball_count,
            4
        );
        assert_eq!(
            ct_isolation(&pts, &[1.0], 0, 1.0, None).unwrap_err().code(),
            "E_SHAPE"
        );
        assert_eq!(
            ct_isolation(&pts, &[1.0, 1.0], 0, 0.0, None)
                .unwrap_err()
                .code(),
            "E_PARAM"
        );
    }
}
