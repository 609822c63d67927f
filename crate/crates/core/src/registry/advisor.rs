use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::catalog::NO_ADVERSARY;
use super::descriptor::{Category, DataSource, InputKind, MetricDescriptor};
use super::Registry;
use crate::error::{bail, Result};

/// The eight selection questions, in order.
pub const QUESTIONS: [&str; 8] = [
    "Which aspects of privacy do we want to quantify? Do we want to give privacy guarantees, or is some loss of privacy acceptable?",
    "What are the characteristics of the adversary we consider? How do we incorporate the adversary and their knowledge?",
    "Which data sources do we aim to protect?",
    "Which types of input data do we want to consider, and which are available in our scenario?",
    "What is the intended audience for our study? What are their expectations regarding the presentation of results, and do they understand the interpretations of our metrics?",
    "Which metrics are used by work that is related to ours, and would those metrics be suitable in our work as well?",
    "Does any of the candidate metrics have known flaws? Is it feasible to conduct a study that verifies that candidate metrics indeed behave as we intend?",
    "Are there implementations of the candidate metrics that we can use, or compare our implementation with?",
];

/// Answers to the selection questions. Unanswered source and input
/// questions (`None`) do not filter.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AdvisorAnswers {
    pub q1_categories: BTreeSet<Category>,
    pub q1_guarantee: bool,
    pub q2_adversary_required: bool,
    pub q3_sources: Option<BTreeSet<DataSource>>,
    pub q4_inputs_available: Option<BTreeSet<InputKind>>,
    pub q5_audience: String,
    pub q6_related: String,
    pub q7_quality: String,
    pub q8_impl: String,
}

impl AdvisorAnswers {
    /// Categories after the guarantee override.
    pub fn effective_categories(&self) -> BTreeSet<Category> {
        if self.q1_guarantee {
            BTreeSet::from([Category::Indistinguishability])
        } else {
            self.q1_categories.clone()
        }
    }

    /// Whether a descriptor passes every active filter.
    pub fn admits(&self, d: &MetricDescriptor) -> bool {
        self.effective_categories().contains(&d.category)
            && self
                .q3_sources
                .as_ref()
                .is_none_or(|s| !s.is_disjoint(&d.data_sources))
            && self
                .q4_inputs_available
                .as_ref()
                .is_none_or(|a| d.inputs.is_subset(a))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Recommendation {
    pub metrics: Vec<String>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

/// Descriptors passing the category, source and input filters, ordered by
/// category then id, with warnings and the free-text answers as notes.
pub fn filter_metrics(reg: &Registry, a: &AdvisorAnswers) -> Result<Recommendation> {
    let cats = a.effective_categories();
    if cats.is_empty() {
        bail!(
            Param,
            "no output category selected and no guarantee requested"
        );
    }
    let mut picked: Vec<&MetricDescriptor> = reg.all().filter(|d| a.admits(d)).collect();
    picked.sort_by(|x, y| (x.category, &x.id).cmp(&(y.category, &y.id)));

    let mut warnings = Vec::new();
    if cats.len() < 2 {
        warnings.push(
            "fewer than two output categories selected; measuring several different outputs gives a fuller picture"
                .to_string(),
        );
    }
    if picked.is_empty() {
        warnings.push("no metric satisfies all filters".to_string());
    }
    if a.q2_adversary_required {
        let blind: Vec<&str> = picked
            .iter()
            .filter(|d| d.caveats.iter().any(|c| c == NO_ADVERSARY))
            .map(|d| d.id.as_str())
            .collect();
        if !blind.is_empty() {
            warnings.push(format!(
                "an adversary model is required but these metrics have none: {}",
                blind.join(", ")
            ));
        }
    }
    let unimplemented: Vec<&str> = picked
        .iter()
        .filter(|d| !d.implemented)
        .map(|d| d.id.as_str())
        .collect();
    if !unimplemented.is_empty() {
        warnings.push(format!(
            "not computable by this library: {}",
            unimplemented.join(", ")
        ));
    }

    let notes = [
        ("audience", &a.q5_audience),
        ("related work", &a.q6_related),
        ("quality", &a.q7_quality),
        ("implementations", &a.q8_impl),
    ]
    .into_iter()
    .filter(|(_, text)| !text.trim().is_empty())
    .map(|(what, text)| format!("{what}: {}", text.trim()))
    .collect();

    Ok(Recommendation {
        metrics: picked.iter().map(|d| d.id.clone()).collect(),
        warnings,
        notes,
    })
}
