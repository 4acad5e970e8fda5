//! Thresholds, closed-form bounds, the lower-bound construction and
//! instance verifiers. Each verifier returns a [`BoundCertificate`].
//!
//! Eigenvalue comparisons allow [`EIGEN_TOL`]; strict claims `θ < −λ` are
//! tested as `θ < −λ − EIGEN_TOL`, or exactly when the matrix is small.

mod certificate;
mod constants;
mod known;
mod lambda;
mod ramsey;
mod thresholds;
mod verifiers;

pub use certificate::BoundCertificate;
pub use constants::{c1_constant, c2_constant, c3_constant, m_constant};
pub use known::{known_v, KnownV};
pub use lambda::Lambda;
pub use ramsey::{
    ramsey_brute_force, ramsey_lookup, standard_bounds, IntInterval, RamseyValue, KNOWN_RAMSEY,
};
pub use thresholds::{thresholds, Thresholds};
pub use verifiers::{
    amply_regular_check, co_edge_bound_check, isolated_vertex_bound_check, lower_bound_graph,
    mu_bound, prop13_verifier, srg_mu_check, SrgParams,
};

/// Tolerance on eigenvalue comparisons.
pub const EIGEN_TOL: f64 = 1e-9;
/// Tolerance on spectra compared against closed forms.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Largest matrix order decided in exact arithmetic.
pub const EXACT_MAX_ORDER: usize = 16;
