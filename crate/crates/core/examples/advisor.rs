//! Narrowing the catalog down from answers to the selection questions.

use std::collections::BTreeSet;

use privacy_metrics::registry::{
    self, filter_metrics, AdvisorAnswers, Category, DataSource, InputKind, QUESTIONS,
};

fn main() -> privacy_metrics::Result<()> {
    let reg = registry::registry();
    let answers = AdvisorAnswers {
        q1_categories: BTreeSet::from([Category::Uncertainty, Category::Error, Category::Time]),
        q2_adversary_required: true,
        q3_sources: Some(BTreeSet::from([DataSource::Observable])),
        q4_inputs_available: Some(BTreeSet::from([InputKind::Estimate, InputKind::Truth])),
        q5_audience: "city transport board".into(),
        ..Default::default()
    };
    println!("{}\n", QUESTIONS[0]);
    let rec = filter_metrics(reg, &answers)?;
    println!("recommended: {}", rec.metrics.join(", "));
    for w in &rec.warnings {
        println!("warning: {w}");
    }
    for n in &rec.notes {
        println!("note: {n}");
    }

    let guarantee = AdvisorAnswers {
        q1_guarantee: true,
        ..Default::default()
    };
    println!(
        "\nwith a formal guarantee: {}",
        filter_metrics(reg, &guarantee)?.metrics.join(", ")
    );
    Ok(())
}
