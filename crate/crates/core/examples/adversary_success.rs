//! How often, and how badly, does the adversary get it right?

use std::collections::BTreeMap;

use privacy_metrics::adversary::{
    degrees_of_anonymity, expected_estimation_error, path_compromise_probability,
    privacy_breach_check, success_rate, EstimateWithTruth, GroundMetric,
};
use privacy_metrics::model::DiscreteDistribution;

fn main() -> privacy_metrics::Result<()> {
    let posterior = DiscreteDistribution::new(
        vec!["ann".into(), "ben".into(), "cat".into(), "dan".into()],
        vec![0.55, 0.25, 0.15, 0.05],
    )?;
    for who in ["ann", "ben", "dan"] {
        println!(
            "{who}: {}",
            degrees_of_anonymity(&posterior, who, 0.9, None)?.as_str()
        );
    }

    let coords = BTreeMap::from([
        ("ann".to_string(), vec![0.0, 0.0]),
        ("ben".to_string(), vec![3.0, 4.0]),
        ("cat".to_string(), vec![3.0, 0.0]),
        ("dan".to_string(), vec![0.0, 1.0]),
    ]);
    let miss = EstimateWithTruth::new(posterior.clone(), "ben", GroundMetric::ZeroOne, None)?;
    let dist = EstimateWithTruth::new(posterior, "ben", GroundMetric::Euclidean, Some(coords))?;
    println!(
        "probability of error {:.3}, expected distance error {:.3}",
        expected_estimation_error(&miss),
        expected_estimation_error(&dist)
    );

    println!(
        "success rate over 8 attacks: {}",
        success_rate(&[true, false, true, false, false, true, false, false])?
    );
    let breach = privacy_breach_check(&[0.1, 0.45, 0.3], 0.5)?;
    println!(
        "rho=0.5 breach: {} (largest posterior {})",
        breach.breached, breach.max_post
    );
    for len in 1..=4 {
        println!(
            "path of {len} relays, 20 of 100 hostile: {:.5}",
            path_compromise_probability(20, 100, len)?
        );
    }
    Ok(())
}
