//! Entropy family on a few posteriors, plus a tracked user's entropy over time.

use privacy_metrics::model::DiscreteDistribution;
use privacy_metrics::uncertainty::{
    bayes_entropy_series, inherent_privacy, min_entropy, normalized_entropy, renyi_entropy,
    shannon_entropy, BayesTrackingModel,
};

fn main() -> privacy_metrics::Result<()> {
    // Twenty equally likely senders against one prime suspect hidden in a crowd of 100.
    let uniform = DiscreteDistribution::uniform(20)?;
    let mut skewed = vec![0.5];
    skewed.extend(std::iter::repeat_n(0.005, 100));
    let skewed = DiscreteDistribution::from_probs(skewed)?;

    for (name, d) in [("uniform-20", &uniform), ("suspect+100", &skewed)] {
        let h = shannon_entropy(d);
        println!("{name:12} H = {h:.6} bits  normalized = {:.4}  min-entropy = {:.4}  effective set = {:.2}",
            normalized_entropy(d)?, min_entropy(d), inherent_privacy(h)?);
    }
    println!("same Shannon entropy, very different worst case");

    print!("Renyi spectrum of suspect+100:");
    for alpha in [0.0, 0.5, 1.0, 2.0, f64::INFINITY] {
        print!(" H_{alpha} = {:.3}", renyi_entropy(&skewed, alpha)?);
    }
    println!();

    let prior = DiscreteDistribution::new(
        vec!["home".into(), "office".into(), "gym".into()],
        vec![0.5, 0.3, 0.2],
    )?;
    let stay = vec![
        vec![0.8, 0.1, 0.1],
        vec![0.1, 0.8, 0.1],
        vec![0.2, 0.2, 0.6],
    ];
    let observations = vec![
        vec![0.9, 0.2, 0.1],
        vec![0.3, 0.6, 0.4],
        vec![0.1, 0.1, 0.8],
    ];
    let model = BayesTrackingModel::new(prior, stay, observations)?;
    for (t, h) in bayes_entropy_series(&model)?.iter().enumerate() {
        println!("t={t}: adversary's uncertainty {h:.4} bits");
    }
    Ok(())
}
