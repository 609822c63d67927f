//! Privacy metrics over distributions, mechanisms, tables and traces, with a
//! catalog describing each metric and a selection advisor.

// `!(x > 0.0)` is used deliberately so NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod adversary;
pub mod cli;
pub mod error;
pub mod indist;
pub mod infogain;
pub mod model;
pub mod registry;
pub mod tabular;
pub mod uncertainty;

pub use error::{MetricError, Result};
