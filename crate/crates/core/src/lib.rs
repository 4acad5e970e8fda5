//! Spectral and combinatorial tooling for regular graphs with a bounded
//! second largest eigenvalue.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: dense simple graphs, the named constructions (line graphs,
//!   complements, coclique extensions, `K̃₂ₘ`, …), BFS layers, induced
//!   subgraph search and regularity parameters.
//! * [`io`]: edge-list, JSON and graph6 serialization.
//! * [`spectra`]: a self-contained symmetric eigensolver (Householder
//!   tridiagonalization + implicit QL), grouped spectra, quotient matrices
//!   and interlacing checks.
//! * [`hoffman`]: Hoffman graphs, special matrices, fattening `G(𝔥, p)`.
//! * [`association`]: large maximal cliques, the `≡ₙᵐ` relation,
//!   quasi-cliques and the associated Hoffman graph.
//! * [`bounds`]: thresholds, closed-form bounds and instance verifiers that
//!   emit [`bounds::BoundCertificate`]s.
//! * [`search`]: canonical labeling and the isomorph-free exhaustive search
//!   for `v(k, λ)`.
//! * [`verify`]: grouped verification suites used by the CLI.

// Matrix kernels index several arrays in lockstep.
#![allow(clippy::needless_range_loop)]

pub mod association;
pub mod bounds;
mod error;
pub mod graph;
pub mod hoffman;
pub mod io;
pub mod search;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hoffman::HoffmanGraph;
pub use spectra::{Spectrum, SymMatrix};
pub use bounds::Lambda;
