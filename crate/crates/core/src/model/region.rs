use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};

/// Planar region: an axis-aligned rectangle or a set of unit grid cells.
///
/// Grid cell `(i, j)` covers `[i, i+1) x [j, j+1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Region {
    Rect {
        x_min: f64,
        y_min: f64,
        x_max: f64,
        y_max: f64,
    },
    Cells {
        cells: BTreeSet<(i64, i64)>,
    },
}

fn overlap(a0: f64, a1: f64, b0: f64, b1: f64) -> f64 {
    (a1.min(b1) - a0.max(b0)).max(0.0)
}

impl Region {
    pub fn rect(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Result<Self> {
        let r = Region::Rect {
            x_min,
            y_min,
            x_max,
            y_max,
        };
        r.validate()?;
        Ok(r)
    }

    pub fn cells(cells: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let r = Region::Cells {
            cells: cells.into_iter().collect(),
        };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Region::Rect {
                x_min,
                y_min,
                x_max,
                y_max,
            } => {
                if ![x_min, y_min, x_max, y_max].iter().all(|v| v.is_finite()) {
                    bail!(Param, "rectangle corners must be finite");
                }
                if !(x_max > x_min && y_max > y_min) {
                    bail!(Param, "rectangle must have positive extent");
                }
            }
            Region::Cells { cells } => {
                if cells.is_empty() {
                    bail!(Param, "grid-cell region must contain at least one cell");
                }
            }
        }
        Ok(())
    }

    pub fn area(&self) -> f64 {
        match self {
            Region::Rect {
                x_min,
                y_min,
                x_max,
                y_max,
            } => (x_max - x_min) * (y_max - y_min),
            Region::Cells { cells } => cells.len() as f64,
        }
    }

    pub fn intersection_area(&self, other: &Region) -> f64 {
        match (self, other) {
            (
                Region::Rect {
                    x_min: ax0,
                    y_min: ay0,
                    x_max: ax1,
                    y_max: ay1,
                },
                Region::Rect {
                    x_min: bx0,
                    y_min: by0,
                    x_max: bx1,
                    y_max: by1,
                },
            ) => overlap(*ax0, *ax1, *bx0, *bx1) * overlap(*ay0, *ay1, *by0, *by1),
            (Region::Cells { cells: a }, Region::Cells { cells: b }) => {
                a.intersection(b).count() as f64
            }
            (rect @ Region::Rect { .. }, Region::Cells { cells })
            | (Region::Cells { cells }, rect @ Region::Rect { .. }) => cells
                .iter()
                .map(|&(i, j)| {
                    let unit = Region::Rect {
                        x_min: i as f64,
                        y_min: j as f64,
                        x_max: i as f64 + 1.0,
                        y_max: j as f64 + 1.0,
                    };
                    rect.intersection_area(&unit)
                })
                .sum(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn areas_and_overlaps() {
        let a = Region::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        let b = Region::rect(0.5, 0.0, 1.5, 1.0).unwrap();
        assert_eq!(a.intersection_area(&b), 0.5);
        let c = Region::cells([(0, 0), (1, 0)]).unwrap();
        assert_eq!(c.area(), 2.0);
        assert_eq!(c.intersection_area(&b), 1.0);
        assert_eq!(b.intersection_area(&c), 1.0);
        let d = Region::cells([(1, 0), (5, 5)]).unwrap();
        assert_eq!(c.intersection_area(&d), 1.0);
    }

    #[test]
    fn invalid_regions() {
        assert_eq!(
            Region::rect(0.0, 0.0, 0.0, 1.0).unwrap_err().code(),
            "E_PARAM"
        );
        assert_eq!(Region::cells([]).unwrap_err().code(), "E_PARAM");
    }

    #[test]
    fn deserializes_both_shapes() {
        let r: Region =
            serde_json::from_str(r#"{"x_min":0,"y_min":0,"x_max":2,"y_max":1}"#).unwrap();
        assert_eq!(r.area(), 2.0);
        let c: Region = serde_json::from_str(r#"{"cells":[[0,0],[0,1]]}"#).unwrap();
        assert_eq!(c.area(), 2.0);
    }
}
