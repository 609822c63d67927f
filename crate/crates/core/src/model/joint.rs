use serde::{Deserialize, Serialize};

use super::distribution::{check_distinct, normalize_mass, DiscreteDistribution};
use crate::error::{bail, Result};

/// Joint probability table `p(x, y)`, stored row-major over `x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointDistribution {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    matrix: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct RawJoint {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    matrix: Vec<Vec<f64>>,
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl JointDistribution {
    pub fn new(
        x_labels: Vec<String>,
        y_labels: Vec<String>,
        matrix: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if x_labels.is_empty() || y_labels.is_empty() {
            bail!(
                Schema,
                "joint distribution needs at least one x and one y outcome"
            );
        }
        if matrix.len() != x_labels.len() {
            bail!(
                Shape,
                "joint matrix has {} rows for {} x labels",
                matrix.len(),
                x_labels.len()
            );
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != y_labels.len()) {
            bail!(
                Shape,
                "joint matrix row has {} entries for {} y labels",
                row.len(),
                y_labels.len()
            );
        }
        check_distinct(&x_labels, "joint x labels")?;
        check_distinct(&y_labels, "joint y labels")?;
        let cols = y_labels.len();
        let flat: Vec<f64> = matrix.iter().flatten().copied().collect();
        let flat = normalize_mass(&flat, "joint distribution")?;
        let matrix = flat.chunks(cols).map(|c| c.to_vec()).collect();
        Ok(Self {
            x_labels,
            y_labels,
            matrix,
        })
    }

    pub fn from_matrix(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, |r| r.len());
        Self::new(default_labels(rows), default_labels(cols), matrix)
    }

    /// Joint of an input distribution pushed through a channel `p(y|x)`.
    pub fn from_input_and_channel(input: &[f64], channel: &[Vec<f64>]) -> Result<Self> {
        if input.len() != channel.len() {
            bail!(
                Shape,
                "input has {} entries for {} channel rows",
                input.len(),
                channel.len()
            );
        }
        let matrix = input
            .iter()
            .zip(channel)
            .map(|(px, row)| row.iter().map(|w| px * w).collect())
            .collect();
        Self::from_matrix(matrix)
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.matrix[x][y]
    }

    pub fn marginal_x(&self) -> Vec<f64> {
        self.matrix.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn marginal_y(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.y_labels.len()];
        for row in &self.matrix {
            for (acc, v) in m.iter_mut().zip(row) {
                *acc += v;
            }
        }
        m
    }

    pub fn marginal_x_distribution(&self) -> DiscreteDistribution {
        DiscreteDistribution::new(self.x_labels.clone(), self.marginal_x())
            .expect("marginal of a valid joint is a valid distribution")
    }

    pub fn marginal_y_distribution(&self) -> DiscreteDistribution {
        DiscreteDistribution::new(self.y_labels.clone(), self.marginal_y())
            .expect("marginal of a valid joint is a valid distribution")
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        let rows = self.x_labels.len();
        let cols = self.y_labels.len();
        let matrix = (0..cols)
            .map(|y| (0..rows).map(|x| self.matrix[x][y]).collect())
            .collect();
        Self {
            x_labels: self.y_labels.clone(),
            y_labels: self.x_labels.clone(),
            matrix,
        }
    }

    /// `p(x | y)` for a column with positive mass.
    pub fn conditional_x_given_y(&self, y: usize) -> Option<Vec<f64>> {
        let col: Vec<f64> = self.matrix.iter().map(|r| r[y]).collect();
        let total: f64 = col.iter().sum();
        (total > 0.0).then(|| col.iter().map(|v| v / total).collect())
    }
}

impl<'de> Deserialize<'de> for JointDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawJoint::deserialize(d)?;
        JointDistribution::new(raw.x_labels, raw.y_labels, raw.matrix)
            .map_err(serde::de::Error::custom)
    }
}

/// Parses `{"x_labels":[...],"y_labels":[...],"matrix":[[...]...]}`.
pub fn parse_joint(text: &str) -> Result<JointDistribution> {
    let raw: RawJoint = serde_json::from_str(text)?;
    JointDistribution::new(raw.x_labels, raw.y_labels, raw.matrix)
}
