//! Minimum vertex cover on random power-law graphs in the (alpha, beta) model.
//!
//! The pipeline is: build a degree sequence ([`degree`]), sample a multigraph
//! by random matching of vertex copies ([`generator`]), collapse it to a simple
//! graph ([`graph`]), solve the vertex-cover LP to a half-integral optimum
//! ([`lp`]), and round that optimum with the low-degree rounding procedure
//! ([`rounding`]). [`bounds`] evaluates the closed-form expected-ratio bounds,
//! [`exact`] provides ground truth on small instances, and [`harness`] ties it
//! all together into reproducible experiments.

pub mod bounds;
pub mod degree;
pub mod error;
pub mod exact;
pub mod generator;
pub mod graph;
pub mod harness;
pub mod lp;
pub mod matching;
pub mod rounding;

pub use error::{Error, Result};
pub use graph::{CoverAssignment, MultiGraph, SimpleGraph};
pub use lp::{HalfAssignment, NtPartition};
