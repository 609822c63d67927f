//! Entropy family: anonymity sets, Shannon/Rényi variants, partition
//! unlinkability and entropy over time.

mod entropy;
mod linkage;
mod tracking;

pub use entropy::*;
pub use linkage::{
    parse_partitions, unlinkability_degree, Partition, PartitionDistribution, Unlinkability,
};
pub use tracking::{
    bayes_entropy_series, parse_tracking_model, user_centric_privacy, BayesTrackingModel, DecaySpec,
};
