//! Exact induced-subgraph counting for sink and scorpion graph properties.
//!
//! The crate is organised around a few layers:
//!
//! * [`graph`], [`io`] and [`generate`] hold the graph types, the edge-list
//!   format and the structured/random generators.
//! * [`recognition`] decides scorpion, skeleton, fossil and sink membership.
//! * [`count`] holds the polynomial-time counters.
//! * [`oracle`] holds brute-force ground truth used to check everything else.
//! * [`basis`] analyses properties in the subgraph basis (alternating
//!   enumerators, vertex covers, weight spectra).
//! * [`bench`] measures empirical scaling of the scorpion counter.
//!
//! Counting code is generic over the integer type it accumulates into (see
//! [`num::Count`]); the plain entry points use [`BigCount`].

pub mod basis;
pub mod bench;
pub mod count;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod num;
pub mod oracle;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{DirectedGraph, GraphRef, UndirectedGraph, VertexSubset};
pub use recognition::{PropertySpec, ScorpionAnatomy};

/// Exact signed integer used for every count the crate reports.
pub type BigCount = num_bigint::BigInt;

/// Fixed-width alternative for callers that know their counts fit.
pub type Count128 = u128;

/// Fixed-width alternative for small instances.
pub type Count64 = u64;
