//! Mutual information, channel capacity and permanent-based anonymity.

use privacy_metrics::infogain::{
    channel_capacity, matrix_permanent, max_information_leakage, mutual_information,
    system_anonymity_level, AdjacencyMatrix,
};
use privacy_metrics::model::{FiniteMechanism, JointDistribution};

fn main() -> privacy_metrics::Result<()> {
    let joint = JointDistribution::from_matrix(vec![
        vec![0.20, 0.05, 0.05],
        vec![0.05, 0.25, 0.05],
        vec![0.05, 0.05, 0.25],
    ])?;
    let mi = mutual_information(&joint);
    println!(
        "I(X;Y) = {:.4} bits, conditional privacy loss = {:.4}",
        mi.mi, mi.cpl
    );
    println!(
        "worst single observation leaks {:.4} bits",
        max_information_leakage(&joint)
    );

    for q in [0.05, 0.11, 0.25, 0.5] {
        let bsc = FiniteMechanism::from_matrix(vec![vec![1.0 - q, q], vec![q, 1.0 - q]])?;
        let c = channel_capacity(&bsc)?;
        println!(
            "flip probability {q}: capacity {:.6} bits after {} iterations",
            c.bits, c.iterations
        );
    }

    // Who could have sent which message: row = sender, column = message.
    let possible = AdjacencyMatrix::new(
        vec![
            vec![1, 1, 0, 0],
            vec![1, 1, 1, 0],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 1],
        ],
        None,
    )?;
    println!(
        "{} consistent sender assignments, anonymity level {:.4}",
        matrix_permanent(&possible)?,
        system_anonymity_level(&possible)?
    );
    Ok(())
}
