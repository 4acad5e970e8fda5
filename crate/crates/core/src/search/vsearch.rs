//! Exhaustive computation of `v(k, λ)` up to a given order.

use rayon::prelude::*;
use serde::Serialize;

use super::generate::{check_caps, generate, spectral_prune, trivial_reason};
use super::{MAX_SEARCH_DEGREE, MAX_SEARCH_ORDER, LAMBDA_TOL};
use crate::bounds::Lambda;
use crate::io::from_graph6;
use crate::spectra::exact::eigenvalues_above;
use crate::spectra::{spectrum, Spectrum};
use crate::{Error, Graph, Result};

/// Graphs with `|λ₂ − λ|` below this are re-decided in exact arithmetic.
pub const BOUNDARY_WINDOW: f64 = 1e-6;
/// Largest order for the exact characteristic-polynomial re-check.
pub const EXACT_RECHECK_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub prune: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: true,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCount {
    pub order: usize,
    /// Connected `k`-regular graphs reached (fewer when pruning).
    pub generated: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalGraph {
    pub order: usize,
    /// graph6 of the canonical form, doubling as the certificate.
    pub graph6: String,
    pub lambda2: f64,
    pub spectrum: Spectrum,
    pub boundary: bool,
    /// Exact decision of `λ₂ ≤ λ` for boundary graphs of small order.
    pub exact_check: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub k: usize,
    pub lambda: Lambda,
    pub n_max: usize,
    /// Largest order actually searched.
    pub searched_up_to: usize,
    pub exact_v: Option<usize>,
    pub extremal_graphs: Vec<ExtremalGraph>,
    pub unique: bool,
    pub counts: Vec<OrderCount>,
    /// Every order up to `n_max` was covered exhaustively.
    pub complete: bool,
    pub pruned: bool,
    pub notes: Vec<String>,
}

impl SearchReport {
    /// Equality of everything the search claims, ignoring how much work it
    /// took (`generated` counts, pruning flag).
    pub fn same_outcome(&self, other: &SearchReport) -> bool {
        let certs = |r: &SearchReport| -> Vec<String> {
            r.extremal_graphs.iter().map(|e| e.graph6.clone()).collect()
        };
        let passed = |r: &SearchReport| -> Vec<(usize, usize)> {
            r.counts.iter().map(|c| (c.order, c.passed)).collect()
        };
        self.k == other.k
            && self.lambda == other.lambda
            && self.n_max == other.n_max
            && self.exact_v == other.exact_v
            && self.unique == other.unique
            && self.complete == other.complete
            && certs(self) == certs(other)
            && passed(self) == passed(other)
    }

    /// Independently re-checks every extremal graph from its graph6 string.
    pub fn revalidate(&self) -> Result<()> {
        let lambda = self.lambda.to_f64();
        for e in &self.extremal_graphs {
            let g = from_graph6(&e.graph6)?;
            let l2 = crate::spectra::second_largest(&g).unwrap_or(f64::NEG_INFINITY);
            if !g.is_connected()
                || g.regular_degree() != Some(self.k)
                || l2 > lambda + LAMBDA_TOL
                || Some(g.order()) != self.exact_v
            {
                return Err(Error::Consistency(format!(
                    "extremal graph {} fails re-validation",
                    e.graph6
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

pub fn v_search(k: usize, lambda: &Lambda, n_max: usize) -> Result<SearchReport> {
    v_search_with(k, lambda, n_max, SearchOptions::default())
}

/// For each order `n ≤ n_max` with `kn` even, generates the connected
/// `k`-regular graphs and keeps those with `λ₂ ≤ λ + 1e-9` (decided exactly
/// near the boundary when the order allows).
pub fn v_search_with(k: usize, lambda: &Lambda, n_max: usize, opts: SearchOptions) -> Result<SearchReport> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    match opts.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            pool.install(|| run(k, lambda, n_max, opts.prune))
        }
        None => run(k, lambda, n_max, opts.prune),
    }
}

fn run(k: usize, lambda: &Lambda, n_max: usize, prune: bool) -> Result<SearchReport> {
    let mut notes = Vec::new();
    let mut complete = true;
    let mut upper = n_max;
    if k > MAX_SEARCH_DEGREE {
        notes.push(format!("k = {k} exceeds the degree cap {MAX_SEARCH_DEGREE}; nothing searched"));
        complete = false;
        upper = 0;
    } else if n_max > MAX_SEARCH_ORDER {
        notes.push(format!(
            "n_max = {n_max} exceeds the order cap {MAX_SEARCH_ORDER}; searched up to the cap"
        ));
        complete = false;
        upper = MAX_SEARCH_ORDER;
    }
    let lam = lambda.to_f64();
    let pruner = move |g: &Graph| spectral_prune(g, k, lam);
    let mut counts = Vec::new();
    let mut best: Option<(usize, Vec<ExtremalGraph>)> = None;
    for n in (k + 1)..=upper {
        if trivial_reason(k, n).is_some() {
            continue;
        }
        check_caps(k, n)?;
        let graphs = if prune {
            generate(k, n, Some(&pruner))?
        } else {
            generate(k, n, None)?
        };
        let judged: Vec<Option<ExtremalGraph>> = graphs
            .par_iter()
            .map(|(cert, g)| judge(cert, g, lambda))
            .collect();
        let passing: Vec<ExtremalGraph> = judged.into_iter().flatten().collect();
        log::debug!("k={k} n={n}: {} generated, {} pass", graphs.len(), passing.len());
        counts.push(OrderCount {
            order: n,
            generated: graphs.len(),
            passed: passing.len(),
        });
        if !passing.is_empty() {
            best = Some((n, passing));
        }
    }
    let (exact_v, extremal_graphs) = match best {
        Some((n, graphs)) => (Some(n), graphs),
        None => (None, Vec::new()),
    };
    if exact_v.is_none() {
        notes.push("no connected k-regular graph with λ₂ ≤ λ in the searched range".into());
    }
    Ok(SearchReport {
        k,
        lambda: lambda.clone(),
        n_max,
        searched_up_to: upper,
        exact_v,
        unique: extremal_graphs.len() == 1,
        extremal_graphs,
        counts,
        complete,
        pruned: prune,
        notes,
    })
}

fn judge(cert: &str, g: &Graph, lambda: &Lambda) -> Option<ExtremalGraph> {
    let spec = spectrum(g);
    let lambda2 = spec.second_largest().unwrap_or(f64::NEG_INFINITY);
    let lam = lambda.to_f64();
    let boundary = (lambda2 - lam).abs() < BOUNDARY_WINDOW;
    let exact_check = (boundary && g.order() <= EXACT_RECHECK_MAX_ORDER)
        .then(|| eigenvalues_above(g, lambda.as_rational()) <= 1);
    let pass = exact_check.unwrap_or(lambda2 <= lam + LAMBDA_TOL);
    pass.then(|| ExtremalGraph {
        order: g.order(),
        graph6: cert.to_string(),
        lambda2,
        spectrum: spec,
        boundary,
        exact_check,
    })
}
