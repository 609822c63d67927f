use serde::{Deserialize, Serialize};

use super::distribution::{check_distinct, normalize_mass};
use crate::error::{bail, Result};

/// Randomized function over finite alphabets, given as `P(output | input)`.
///
/// Each row is a distribution over `outputs`; there is one row per input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiniteMechanism {
    inputs: Vec<String>,
    outputs: Vec<String>,
    matrix: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct RawMechanism {
    inputs: Vec<String>,
    outputs: Vec<String>,
    matrix: Vec<Vec<f64>>,
}

impl FiniteMechanism {
    pub fn new(inputs: Vec<String>, outputs: Vec<String>, matrix: Vec<Vec<f64>>) -> Result<Self> {
        if inputs.is_empty() || outputs.is_empty() {
            bail!(Schema, "mechanism needs at least one input and one output");
        }
        if matrix.len() != inputs.len() {
            bail!(
                Shape,
                "mechanism has {} rows for {} inputs",
                matrix.len(),
                inputs.len()
            );
        }
        check_distinct(&inputs, "mechanism inputs")?;
        check_distinct(&outputs, "mechanism outputs")?;
        let matrix = matrix
            .iter()
            .zip(&inputs)
            .map(|(row, id)| {
                if row.len() != outputs.len() {
                    bail!(
                        Shape,
                        "row for input {id:?} has {} entries for {} outputs",
                        row.len(),
                        outputs.len()
                    );
                }
                normalize_mass(row, &format!("mechanism row {id:?}"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            inputs,
            outputs,
            matrix,
        })
    }

    /// Mechanism with labels `x0, x1, ...` and `y0, y1, ...`.
    pub fn from_matrix(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let inputs = (0..matrix.len()).map(|i| format!("x{i}")).collect();
        let outputs = (0..matrix.first().map_or(0, |r| r.len()))
            .map(|i| format!("y{i}"))
            .collect();
        Self::new(inputs, outputs, matrix)
    }

    /// Binary randomized response: report the true bit with probability `keep`.
    pub fn randomized_response(keep: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&keep) {
            bail!(Param, "keep probability {keep} outside [0,1]");
        }
        Self::new(
            vec!["0".into(), "1".into()],
            vec!["0".into(), "1".into()],
            vec![vec![keep, 1.0 - keep], vec![1.0 - keep, keep]],
        )
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn row(&self, input: usize) -> &[f64] {
        &self.matrix[input]
    }

    pub fn input_index(&self, id: &str) -> Option<usize> {
        self.inputs.iter().position(|i| i == id)
    }

    /// Post-processes outputs through a deterministic map `output -> group`.
    ///
    /// `merge[j]` names the new output that old output `j` is folded into.
    pub fn merge_outputs(&self, merge: &[usize]) -> Result<Self> {
        if merge.len() != self.outputs.len() {
            bail!(
                Shape,
                "merge map has {} entries for {} outputs",
                merge.len(),
                self.outputs.len()
            );
        }
        let groups = merge.iter().max().map_or(0, |m| m + 1);
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                let mut out = vec![0.0; groups];
                for (p, &g) in row.iter().zip(merge) {
                    out[g] += p;
                }
                out
            })
            .collect();
        let outputs = (0..groups).map(|g| format!("g{g}")).collect();
        Self::new(self.inputs.clone(), outputs, matrix)
    }
}

impl<'de> Deserialize<'de> for FiniteMechanism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMechanism::deserialize(d)?;
        FiniteMechanism::new(raw.inputs, raw.outputs, raw.matrix).map_err(serde::de::Error::custom)
    }
}

/// Parses `{"inputs":[...],"outputs":[...],"matrix":[[...]...]}`.
pub fn parse_mechanism(text: &str) -> Result<FiniteMechanism> {
    let raw: RawMechanism = serde_json::from_str(text)?;
    FiniteMechanism::new(raw.inputs, raw.outputs, raw.matrix)
}
