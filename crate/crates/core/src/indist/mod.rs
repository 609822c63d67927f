//! Indistinguishability checks over finite mechanisms, joints and game
//! transcripts.

mod dp;
mod geo;
mod info;

pub use dp::{adp_delta, dp_epsilon, parse_neighbors, DpEpsilon, NeighborRelation};
pub use geo::{geo_indistinguishability, parse_geo, GeoMechanism};
pub use info::{
    distributional_privacy, game_advantage, information_privacy, parse_transcript,
    unconditional_privacy, wilson_interval, GameAdvantage, GameTranscript, InformationPrivacy, Z95,
};
