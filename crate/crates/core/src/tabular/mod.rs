//! Similarity and diversity metrics over tables, releases, location
//! histories and smart-meter series.

mod kfamily;
mod location;
mod relational;
mod series;

pub use kfamily::{
    alpha_k_anonymity, em_anonymity, equal_distance_emd, k_anonymity, ke_anonymity, l_diversity,
    ordered_emd, t_closeness, AlphaK, DiversityMode, KE,
};
pub use location::{ct_isolation, historical_k, Area, Isolation, LocationHistory};
pub use relational::{
    m_invariance, multirelational_k, xy_privacy, MInvariance, Multirelational, Release,
};
pub use series::{
    cluster_similarity, haplotype_safety, normalized_variance, r_squared_transitions, HaplotypeMode,
};
