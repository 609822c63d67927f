//! Catalog of metric descriptors and the metric-selection advisor.

mod advisor;
mod catalog;
mod descriptor;

use std::collections::BTreeMap;
use std::sync::OnceLock;

pub use advisor::{filter_metrics, AdvisorAnswers, Recommendation, QUESTIONS};
pub use catalog::{tabulated_ids, NO_ADVERSARY};
pub use descriptor::{
    Category, DataSource, Direction, Endpoint, InputKind, Interval, MetricDescriptor, ParamRange,
    Polarity, ValueRange,
};

use crate::error::{bail, Result};

/// Immutable set of descriptors keyed by id.
#[derive(Debug, Clone, PartialEq)]
pub struct Registry {
    by_id: BTreeMap<String, MetricDescriptor>,
}

impl Registry {
    pub fn from_descriptors(descriptors: Vec<MetricDescriptor>) -> Result<Self> {
        let mut by_id = BTreeMap::new();
        for d in descriptors {
            if d.implemented && d.op_ref.is_none() {
                bail!(
                    Schema,
                    "descriptor {:?} is implemented but has no op_ref",
                    d.id
                );
            }
            let id = d.id.clone();
            if by_id.insert(id.clone(), d).is_some() {
                bail!(Schema, "duplicate descriptor id {id:?}");
            }
        }
        Ok(Registry { by_id })
    }

    pub fn lookup(&self, id: &str) -> Result<&MetricDescriptor> {
        match self.by_id.get(id) {
            Some(d) => Ok(d),
            None => bail!(Unknown, "no metric with id {id:?}"),
        }
    }

    /// Descriptors sorted by id.
    pub fn all(&self) -> impl Iterator<Item = &MetricDescriptor> {
        self.by_id.values()
    }

    pub fn len(&self) -> usize {
        self.by_id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_id.is_empty()
    }

    /// Pretty JSON array of all descriptors sorted by id.
    pub fn export_json(&self) -> String {
        let list: Vec<&MetricDescriptor> = self.all().collect();
        serde_json::to_string_pretty(&list).expect("descriptors serialize")
    }

    pub fn import_json(text: &str) -> Result<Self> {
        let list: Vec<MetricDescriptor> = serde_json::from_str(text)
            .map_err(|e| crate::MetricError::Schema(format!("registry JSON: {e}")))?;
        Registry::from_descriptors(list)
    }
}

/// The built-in catalog.
pub fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| {
        Registry::from_descriptors(catalog::descriptors()).expect("built-in catalog is valid")
    })
}

pub fn lookup(id: &str) -> Result<&'static MetricDescriptor> {
    registry().lookup(id)
}

pub fn export_registry() -> String {
    registry().export_json()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let k = lookup("k_anonymity").unwrap();
        assert_eq!(k.category, Category::Similarity);
        assert_eq!(k.value_range.to_string(), "[1,|D|]");
        assert_eq!(k.direction.to_string(), "H");
        assert_eq!(lookup("min_entropy").unwrap().direction.to_string(), "L");
        assert_eq!(lookup("nosuch").unwrap_err().code(), "E_UNKNOWN");
    }

    #[test]
    fn counts_and_unimplemented() {
        let reg = registry();
        assert!(reg.all().filter(|d| d.implemented).count() >= 60);
        let off: Vec<&str> = reg
            .all()
            .filter(|d| !d.implemented)
            .map(|d| d.id.as_str())
            .collect();
        assert_eq!(
            off,
            [
                "computational_dp",
                "distributed_dp",
                "observational_equivalence"
            ]
        );
    }

    #[test]
    fn export_round_trips() {
        let text = export_registry();
        assert_eq!(&Registry::import_json(&text).unwrap(), registry());
        let ids: Vec<&str> = registry().all().map(|d| d.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn t_closeness_mentions_emd() {
        assert!(lookup("t_closeness")
            .unwrap()
            .caveats
            .iter()
            .any(|c| c.contains("Earth Mover")));
    }

    #[test]
    fn similarity_carries_no_adversary_note() {
        for d in registry()
            .all()
            .filter(|d| d.category == Category::Similarity)
        {
            assert!(d.caveats.iter().any(|c| c == NO_ADVERSARY), "{}", d.id);
        }
    }
}
