//! Information gain and loss: divergences, mutual information, channel
//! capacity and permanent-based anonymity.

mod capacity;
mod divergence;
mod permanent;

pub use capacity::{
    blahut_arimoto, channel_capacity, mutual_information_at, relative_channel_capacity, Capacity,
    ConditionedChannels, CAPACITY_MAX_ITERATIONS, CAPACITY_TOLERANCE,
};
pub use divergence::*;
pub use permanent::{
    matrix_permanent, parse_adjacency, perfect_matchings, system_anonymity_level, AdjacencyMatrix,
    MAX_ENUMERATION_N, MAX_PERMANENT_N,
};
