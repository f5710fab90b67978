//! Nonrepetitive graph colouring toolkit.
//!
//! A walk `v1..v2t` in a graph is *repetitively coloured* when the second
//! half repeats the colour sequence of the first: `colour(vi) = colour(v(t+i))`
//! for every `i`. A walk is *boring* when it repeats vertices, not just
//! colours (`vi = v(t+i)` for all `i`). Two thresholds follow:
//!
//! * the path threshold: the fewest colours such that no simple path is
//!   repetitively coloured, and
//! * the walk threshold: the fewest colours such that every repetitively
//!   coloured walk is boring.
//!
//! The crate provides square-free word machinery ([`words`]), graph types,
//! generators and serialization ([`graph`]), exact oracles for both
//! thresholds plus structural validators ([`verify`]), constructive
//! colourings for paths, cycles, trees, subdivisions and bounded-treewidth
//! graphs ([`construct`]), tree partitions and decompositions ([`decompose`]),
//! and small-instance exact solvers with an empirical explorer ([`exact`]).

pub mod construct;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod graph;
pub mod verify;
pub mod words;

pub use error::Error;
pub use graph::{Colouring, Graph, Levelling, SubdivisionOrigin, SubdivisionResult};
pub use verify::{PathWitness, Verdict, VerdictStatus, WalkWitness};

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
