//! Executable extremal graph theory around (k+1)-connected subgraphs:
//! the extremal construction, exact rational edge thresholds, a sound and
//! complete decision procedure for (k+1)-connected subgraph existence,
//! exhaustive small-scale verification of the forcing bounds, and an
//! exact-arithmetic ledger for the algebra behind them.

pub mod bitset;
pub mod bounds;
pub mod connectivity;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod ledger;
pub mod poly;
pub mod search;

pub use bitset::VertexSet;
pub use bounds::{BoundKind, Rational};
pub use connectivity::{CutCertificate, KSubgraphWitness};
pub use graph::Graph;
