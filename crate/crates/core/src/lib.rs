//! Target set reconfiguration on threshold graphs.
//!
//! Vertex ids are 0-based inside the library and 1-based in every text
//! format and CLI argument.

pub mod activation;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod reconfig;
pub mod reductions;
pub mod solvers;

pub use activation::{activate, is_target_set, ActivationTrace, SeedSet};
pub use error::{Result, TsrError};
pub use graph::{SimpleGraph, ThresholdGraph, Vertex};
pub use reconfig::{validate_sequence, Model, ReconfigSequence, Step};
