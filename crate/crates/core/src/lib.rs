//! Exact verification toolkit for spectral extremal problems on minimally
//! (k,k)-edge-connected graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs, graph6 I/O, blocks, bridges, internal paths.
//! * [`connectivity`]: exact `l`-edge-connectivity by set-partition scan,
//!   minimality predicates and cut witnesses.
//! * [`spectral`]: spectral radius, equitable partitions, exact
//!   characteristic polynomials, root isolation, spectral bounds and edge
//!   switching.
//! * [`constructions`]: the extremal families with their quotient matrices
//!   and closed forms.
//! * [`enumeration`]: canonical labelling, exhaustive generation and
//!   extremal search.
//! * [`verify`]: check suites and the JSON report consumed by the CLI.

pub mod error;
pub mod connectivity;
pub mod constructions;
pub mod enumeration;
pub mod graph;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Graph6};
