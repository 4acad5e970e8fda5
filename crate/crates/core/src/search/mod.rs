//! Isomorph-free generation of connected regular graphs and the exhaustive
//! search for `v(k, λ)`.

pub mod canon;
mod generate;
mod vsearch;

pub use canon::{canonical_form, certificate, CanonicalForm, MAX_CANON_ORDER};
pub use generate::{
    enum_connected_regular, spectral_prune, PruneDecision, RegularEnumeration, MAX_SEARCH_DEGREE,
    MAX_SEARCH_ORDER,
};
pub use vsearch::{
    v_search, v_search_with, ExtremalGraph, OrderCount, SearchOptions, SearchReport,
    BOUNDARY_WINDOW, EXACT_RECHECK_MAX_ORDER,
};

/// Slack granted to a graph when comparing `λ₂` against `λ`.
pub const LAMBDA_TOL: f64 = 1e-9;
