use serde::Deserialize;

use super::dp::{max_log_ratio, DpEpsilon};
use crate::error::{bail, Result};
use crate::model::{check_distinct, FiniteMechanism};

/// A location-obfuscation mechanism with planar coordinates for its inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct GeoMechanism {
    coords: Vec<(f64, f64)>,
    mechanism: FiniteMechanism,
}

#[derive(Deserialize)]
struct RawLocation {
    id: String,
    x: f64,
    y: f64,
}

#[derive(Deserialize)]
struct RawGeo {
    locations: Vec<RawLocation>,
    mechanism: FiniteMechanism,
}

impl GeoMechanism {
    /// `locations` are `(id, x, y)`; every id must be a mechanism input.
    pub fn new(locations: Vec<(String, f64, f64)>, mechanism: FiniteMechanism) -> Result<Self> {
        if locations.len() < 2 {
            bail!(Param, "need at least two locations");
        }
        check_distinct(
            &locations.iter().map(|l| l.0.clone()).collect::<Vec<_>>(),
            "locations",
        )?;
        if locations.len() != mechanism.inputs().len() {
            bail!(
                Shape,
                "{} locations for {} mechanism inputs",
                locations.len(),
                mechanism.inputs().len()
            );
        }
        let mut coords = vec![(0.0, 0.0); locations.len()];
        for (id, x, y) in locations {
            if !x.is_finite() || !y.is_finite() {
                bail!(Param, "coordinates of {id:?} are not finite");
            }
            match mechanism.input_index(&id) {
                Some(i) => coords[i] = (x, y),
                None => bail!(Schema, "location {id:?} is not a mechanism input"),
            }
        }
        Ok(Self { coords, mechanism })
    }

    pub fn mechanism(&self) -> &FiniteMechanism {
        &self.mechanism
    }

    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }
}

/// Parses `{"locations":[{"id","x","y"}...],"mechanism":{inputs,outputs,matrix}}`.
pub fn parse_geo(text: &str) -> Result<GeoMechanism> {
    let raw: RawGeo = serde_json::from_str(text)?;
    GeoMechanism::new(
        raw.locations
            .into_iter()
            .map(|l| (l.id, l.x, l.y))
            .collect(),
        raw.mechanism,
    )
}

/// Largest log-ratio of output probabilities per unit of input distance.
///
/// Coincident locations with differing rows give an infinite value.
pub fn geo_indistinguishability(g: &GeoMechanism) -> DpEpsilon {
    let n = g.coords.len();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            let ratio = max_log_ratio(g.mechanism.row(a), g.mechanism.row(b));
            if ratio == 0.0 {
                continue;
            }
            let (xa, ya) = g.coords[a];
            let (xb, yb) = g.coords[b];
            let d = (xa - xb).hypot(ya - yb);
            worst = worst.max(if d == 0.0 { f64::INFINITY } else { ratio / d });
        }
    }
    DpEpsilon { eps_eff: worst }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geo(coords: &[(f64, f64)], rows: Vec<Vec<f64>>) -> GeoMechanism {
        let locs = coords
            .iter()
            .enumerate()
            .map(|(i, (x, y))| (format!("x{i}"), *x, *y))
            .collect();
        GeoMechanism::new(locs, FiniteMechanism::from_matrix(rows).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let g = geo(&[(0.0, 0.0), (1.0, 1.0)], vec![vec![0.5, 0.5]; 2]);
        assert_eq!(geo_indistinguishability(&g).eps_eff, 0.0);
        let g = geo(
            &[(0.0, 0.0), (2.0, 0.0)],
            vec![vec![0.75, 0.25], vec![0.25, 0.75]],
        );
        assert!((geo_indistinguishability(&g).eps_eff - 0.5493061443340549).abs() < 1e-12);
        let g = geo(
            &[(0.0, 0.0), (2.0, 0.0)],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        );
        assert!(geo_indistinguishability(&g).eps_eff.is_infinite());
        let g = geo(
            &[(1.0, 1.0), (1.0, 1.0)],
            vec![vec![0.75, 0.25], vec![0.25, 0.75]],
        );
        assert!(geo_indistinguishability(&g).eps_eff.is_infinite());
    }

    #[test]
    fn scaling_halves_epsilon() {
        let rows = vec![
            vec![0.6, 0.3, 0.1],
            vec![0.2, 0.5, 0.3],
            vec![0.1, 0.2, 0.7],
        ];
        let pts = [(0.0, 0.0), (1.0, 2.0), (3.0, -1.0)];
        let doubled: Vec<(f64, f64)> = pts.iter().map(|(x, y)| (2.0 * x, 2.0 * y)).collect();
        let a = geo_indistinguishability(&geo(&pts, rows.clone())).eps_eff;
        let b = geo_indistinguishability(&geo(&doubled, rows)).eps_eff;
        assert!((a - 2.0 * b).abs() < 1e-12);
    }

    #[test]
    fn parses_file_shape() {
        let g = parse_geo(
            r#"{"locations":[{"id":"a","x":0,"y":0},{"id":"b","x":0,"y":3}],
                "mechanism":{"inputs":["a","b"],"outputs":["u","v"],"matrix":[[0.5,0.5],[0.5,0.5]]}}"#,
        )
        .unwrap();
        assert_eq!(g.coords()[1], (0.0, 3.0));
        let err = parse_geo(
            r#"{"locations":[{"id":"a","x":0,"y":0},{"id":"c","x":0,"y":3}],
                "mechanism":{"inputs":["a","b"],"outputs":["u"],"matrix":[[1],[1]]}}"#,
        )
        .unwrap_err();
        assert_eq!(err.code(), "E_SCHEMA");
    }
}
