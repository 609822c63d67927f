//! Shared data model: distributions, joints, mechanisms, tables, traces,
//! regions and metric values, plus their file formats.

mod distribution;
mod joint;
mod mechanism;
mod region;
mod table;
mod trace;
mod value;

pub use distribution::{parse_distribution, DiscreteDistribution, PROB_TOLERANCE};
pub use joint::{parse_joint, JointDistribution};
pub use mechanism::{parse_mechanism, FiniteMechanism};
pub use region::Region;
pub use table::{
    equivalence_classes, parse_table, Cell, CellKey, Column, ColumnKind, ColumnRole, DataTable,
    EquivalenceClass, TableSchema,
};
pub use trace::{parse_trace, Trace, TracePayload};
pub use value::{MetricValue, Unit, Value};

pub(crate) use distribution::{check_distinct, normalize_mass};

/// `-p log2 p` with the `0 log 0 = 0` convention.
pub(crate) fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.log2()
    } else {
        0.0
    }
}

/// Shannon entropy in bits of a raw probability slice.
pub(crate) fn entropy_bits(probs: &[f64]) -> f64 {
    probs.iter().map(|&p| plogp(p)).sum::<f64>().max(0.0)
}
