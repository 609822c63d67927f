//! Checking finite mechanisms for (approximate) differential privacy and
//! geo-indistinguishability.

use privacy_metrics::indist::{
    adp_delta, dp_epsilon, geo_indistinguishability, GeoMechanism, NeighborRelation,
};
use privacy_metrics::model::FiniteMechanism;

fn main() -> privacy_metrics::Result<()> {
    for keep in [0.6, 0.75, 0.9] {
        let rr = FiniteMechanism::randomized_response(keep)?;
        let nr = NeighborRelation::complete(&rr);
        let eps = dp_epsilon(&rr, &nr).eps_eff;
        println!(
            "randomized response keep={keep}: eps = {eps:.4}, ln(p/(1-p)) = {:.4}",
            (keep / (1.0 - keep)).ln()
        );
        for e in [0.0, eps / 2.0, eps] {
            println!("  delta at eps={e:.3}: {:.4}", adp_delta(&rr, &nr, e)?);
        }
    }

    // Merging outputs never hurts.
    let m = FiniteMechanism::from_matrix(vec![
        vec![0.5, 0.3, 0.2],
        vec![0.2, 0.3, 0.5],
        vec![0.1, 0.6, 0.3],
    ])?;
    let merged = m.merge_outputs(&[0, 1, 0])?;
    println!(
        "eps before merging {:.4}, after {:.4}",
        dp_epsilon(&m, &NeighborRelation::complete(&m)).eps_eff,
        dp_epsilon(&merged, &NeighborRelation::complete(&merged)).eps_eff
    );

    let locations = vec![
        ("home".to_string(), 0.0, 0.0),
        ("cafe".to_string(), 1.0, 0.0),
        ("park".to_string(), 0.0, 2.0),
    ];
    let reports = FiniteMechanism::new(
        locations.iter().map(|l| l.0.clone()).collect(),
        vec!["r1".into(), "r2".into(), "r3".into()],
        vec![
            vec![0.6, 0.3, 0.1],
            vec![0.3, 0.5, 0.2],
            vec![0.1, 0.2, 0.7],
        ],
    )?;
    let geo = GeoMechanism::new(locations, reports)?;
    println!(
        "geo-indistinguishability: eps per unit distance = {:.4}",
        geo_indistinguishability(&geo).eps_eff
    );
    Ok(())
}
