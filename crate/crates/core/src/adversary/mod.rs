//! Adversary-centred metrics: success probability, estimation error, time
//! until success or confusion, and accuracy of the adversary's estimate.

mod accuracy;
mod estimation;
mod presence;
mod success;
mod time;

pub use accuracy::{
    confidence_interval_width, confidence_interval_width_samples, event_unobservability,
    obfuscation_accuracy, region_privacy, sensitive_region_coverage, tp_violation_check,
    RegionPrivacy, Unobservability,
};
pub use estimation::{
    distance_error_expectation, expected_estimation_error, health_privacy, mean_squared_error,
    parse_estimate, pct_incorrect, EstimateWithTruth, GroundMetric,
};
pub use presence::{delta_presence, generalization_matches, Presence};
pub use success::{
    degrees_of_anonymity, dg_privacy_check, hiding_property, path_compromise_probability,
    privacy_breach_check, record_linkage_check, success_rate, AnonymityDegree, Hiding,
    PrivacyBreach,
};
pub use time::{batch_mix_rounds, max_tracking_time, time_to_confusion, Confusion};
