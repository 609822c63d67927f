//! Time until the adversary loses track, and how precise their estimates are.

use privacy_metrics::adversary::{
    batch_mix_rounds, confidence_interval_width, max_tracking_time, sensitive_region_coverage,
    time_to_confusion,
};
use privacy_metrics::model::{DiscreteDistribution, Region, Trace};

fn main() -> privacy_metrics::Result<()> {
    let set_sizes = Trace::from_values(&[0.0, 2.0, 5.0, 7.0], &[3.0, 1.0, 1.0, 2.0])?;
    println!(
        "tracked for {} of 10 time units",
        max_tracking_time(&set_sizes, Some(10.0))?
    );

    let entropy = Trace::from_values(&[0.0, 1.0, 3.0, 4.0, 6.0], &[0.5, 2.0, 0.2, 0.1, 1.5])?;
    let c = time_to_confusion(&entropy, 1.0, Some(8.0))?;
    println!(
        "mean time to confusion {}, total time below 1 bit {}",
        c.mean_run, c.cumulative
    );

    for b in [2, 10, 50] {
        println!(
            "batch of {b}: {:.1} rounds to identify all partners",
            batch_mix_rounds(3, 2, 20, b)?
        );
    }

    let guess = DiscreteDistribution::new(
        ["0", "1", "2.5", "4", "9"].map(String::from).to_vec(),
        vec![0.1, 0.3, 0.05, 0.4, 0.15],
    )?;
    for c in [50.0, 85.0, 95.0] {
        println!(
            "{c}% interval width {}",
            confidence_interval_width(&guess, c)?
        );
    }

    let uncertainty = Region::rect(0.0, 0.0, 2.0, 1.0)?;
    let hospital = Region::rect(1.5, -1.0, 4.0, 4.0)?;
    println!(
        "sensitive coverage {}",
        sensitive_region_coverage(&uncertainty, &hospital)?
    );
    Ok(())
}
