//! Generation of connected `k`-regular graphs, one per isomorphism class.
//!
//! States are partial graphs on the final `n` vertices with maximum degree
//! at most `k`; a vertex of degree `k` is saturated and keeps its
//! neighbourhood for good. Each step picks an unsaturated vertex (largest
//! degree among those already touched) and adds every admissible set of
//! missing edges at it. Every connected `k`-regular graph containing a state
//! contains one of its children, so deduplicating each level by canonical
//! form loses nothing. Isolated vertices are interchangeable, so only the
//! first few of them are ever chosen.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, canonical_key};
use crate::{Error, Graph, Result};

/// Default cap on the degree for exhaustive generation.
pub const MAX_SEARCH_DEGREE: usize = 5;
/// Default cap on the order for exhaustive generation.
pub const MAX_SEARCH_ORDER: usize = 16;

#[derive(Debug, Clone)]
pub struct RegularEnumeration {
    pub k: usize,
    pub n: usize,
    /// Canonical representatives sorted by certificate.
    pub graphs: Vec<Graph>,
    /// Why the list is empty without any search, if it is.
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneDecision {
    Keep,
    Cut,
}

/// Interlacing cut: the saturated vertices of a partial graph induce the same
/// subgraph in every completion, so its `λ₂` bounds the completion's `λ₂`
/// from below.
pub fn spectral_prune(partial: &Graph, k: usize, lambda: f64) -> PruneDecision {
    let saturated: Vec<usize> = (0..partial.order()).filter(|&v| partial.degree(v) == k).collect();
    if saturated.len() < 2 {
        return PruneDecision::Keep;
    }
    let sub = partial.induced_subgraph(&saturated);
    match crate::spectra::second_largest(&sub) {
        Some(l2) if l2 > lambda + super::LAMBDA_TOL => PruneDecision::Cut,
        _ => PruneDecision::Keep,
    }
}

pub fn enum_connected_regular(k: usize, n: usize) -> Result<RegularEnumeration> {
    check_caps(k, n)?;
    let mut out = RegularEnumeration {
        k,
        n,
        graphs: Vec::new(),
        reason: trivial_reason(k, n),
    };
    if out.reason.is_none() {
        out.graphs = generate(k, n, None)?.into_values().collect();
    }
    Ok(out)
}

pub(crate) fn check_caps(k: usize, n: usize) -> Result<()> {
    if k > MAX_SEARCH_DEGREE {
        return Err(Error::UnsupportedSize {
            what: "search degree",
            actual: k,
            cap: MAX_SEARCH_DEGREE,
        });
    }
    if n > MAX_SEARCH_ORDER {
        return Err(Error::UnsupportedSize {
            what: "search order",
            actual: n,
            cap: MAX_SEARCH_ORDER,
        });
    }
    Ok(())
}

pub(crate) fn trivial_reason(k: usize, n: usize) -> Option<String> {
    if n == 0 {
        Some("order must be positive".into())
    } else if k >= n {
        Some(format!("k = {k} is not below n = {n}"))
    } else if k * n % 2 == 1 {
        Some(format!("k·n = {} is odd", k * n))
    } else if k == 0 && n > 1 {
        Some("a 0-regular graph on more than one vertex is disconnected".into())
    } else {
        None
    }
}

pub(crate) type Pruner<'a> = &'a (dyn Fn(&Graph) -> PruneDecision + Sync);

/// All connected `k`-regular graphs on `n` vertices that survive `pruner`
/// at every intermediate state, keyed by canonical certificate.
pub(crate) fn generate(k: usize, n: usize, pruner: Option<Pruner>) -> Result<BTreeMap<String, Graph>> {
    let mut results = BTreeMap::new();
    if trivial_reason(k, n).is_some() {
        return Ok(results);
    }
    if k == 0 {
        results.insert(super::certificate(&Graph::empty(1))?, Graph::empty(1));
        return Ok(results);
    }
    let mut start = Graph::empty(n);
    for v in 1..=k {
        start.add_edge(0, v);
    }
    if start.regular_degree() == Some(k) {
        let cf = canonical_form(&start)?;
        results.insert(cf.certificate, cf.graph);
        return Ok(results);
    }
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let children: Vec<(Vec<u64>, Graph)> = frontier
            .par_iter()
            .flat_map_iter(|s| children(s, k, pruner))
            .map(|c| canonical_key(&c).map(|key| (key, c)))
            .collect::<Result<_>>()?;
        let mut level: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        for (key, c) in children {
            level.entry(key).or_insert(c);
        }
        frontier = Vec::new();
        for g in level.into_values() {
            if g.regular_degree() == Some(k) {
                let cf = canonical_form(&g)?;
                results.insert(cf.certificate, cf.graph);
            } else {
                frontier.push(g);
            }
        }
    }
    Ok(results)
}

fn children(s: &Graph, k: usize, pruner: Option<Pruner>) -> Vec<Graph> {
    let n = s.order();
    let deg = s.degrees();
    let v = (0..n)
        .filter(|&v| deg[v] < k && deg[v] > 0)
        .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
        .expect("a live state has a touched unsaturated vertex");
    let need = k - deg[v];
    let (touched, isolated): (Vec<usize>, Vec<usize>) = (0..n)
        .filter(|&w| w != v && deg[w] < k && !s.has_edge(v, w))
        .partition(|&w| deg[w] > 0);
    let mut out = Vec::new();
    for j in 0..=need.min(isolated.len()) {
        let from_touched = need - j;
        if from_touched > touched.len() {
            continue;
        }
        for combo in combinations(touched.len(), from_touched) {
            let mut c = s.clone();
            for &i in &combo {
                c.add_edge(v, touched[i]);
            }
            for &w in &isolated[..j] {
                c.add_edge(v, w);
            }
            if has_closed_component(&c, k) {
                continue;
            }
            if let Some(p) = pruner {
                if p(&c) == PruneDecision::Cut {
                    continue;
                }
            }
            out.push(c);
        }
    }
    out
}

/// A component made only of saturated vertices can never grow, so a state
/// with one that is not the whole graph has no connected completion.
fn has_closed_component(g: &Graph, k: usize) -> bool {
    let comps = g.components();
    comps.len() > 1
        && comps
            .iter()
            .any(|c| c.iter().all(|&v| g.degree(v) == k))
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, star};
    use crate::search::certificate;
    use std::collections::BTreeSet;

    /// All labelled `k`-regular graphs on `n` vertices by plain backtracking
    /// over the lowest unsaturated vertex.
    fn labelled_regular(k: usize, n: usize) -> Vec<Graph> {
        fn rec(g: &mut Graph, k: usize, out: &mut Vec<Graph>) {
            let n = g.order();
            let Some(v) = (0..n).find(|&v| g.degree(v) < k) else {
                out.push(g.clone());
                return;
            };
            let start = (0..n).filter(|&w| g.has_edge(v, w)).max().map_or(v + 1, |m| m.max(v) + 1);
            for w in start..n {
                if !g.has_edge(v, w) && g.degree(w) < k {
                    g.add_edge(v, w);
                    rec(g, k, out);
                    g.remove_edge(v, w);
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Graph::empty(n), k, &mut out);
        out
    }

    fn oracle_count(k: usize, n: usize) -> usize {
        labelled_regular(k, n)
            .into_iter()
            .filter(|g| g.is_connected())
            .map(|g| certificate(&g).unwrap())
            .collect::<BTreeSet<_>>()
            .len()
    }

    #[test]
    fn two_regular_is_a_cycle() {
        let e = enum_connected_regular(2, 5).unwrap();
        assert_eq!(e.graphs.len(), 1);
        assert_eq!(certificate(&e.graphs[0]).unwrap(), certificate(&cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn cubic_on_four_is_k4() {
        let e = enum_connected_regular(3, 4).unwrap();
        assert_eq!(e.graphs.len(), 1);
        assert!(e.graphs[0].is_complete());
    }

    #[test]
    fn cubic_on_six_is_k33_and_prism() {
        let e = enum_connected_regular(3, 6).unwrap();
        let got: BTreeSet<String> = e.graphs.iter().map(|g| certificate(g).unwrap()).collect();
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        let want: BTreeSet<String> = [complete_bipartite(3, 3).unwrap(), prism]
            .iter()
            .map(|g| certificate(g).unwrap())
            .collect();
        assert_eq!(got, want);
        // independent route: labelled enumeration deduplicated by permutations
        let labelled: Vec<Graph> = labelled_regular(3, 6).into_iter().filter(|g| g.is_connected()).collect();
        let mut classes: Vec<Graph> = Vec::new();
        let perms = permutations(6);
        for g in labelled {
            let iso = |h: &Graph| perms.iter().any(|p| g.relabel(p).edges() == h.edges());
            if !classes.iter().any(iso) {
                classes.push(g);
            }
        }
        assert_eq!(classes.len(), 2);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn counts_match_labelled_enumeration() {
        for (k, n) in [(3, 8), (4, 8), (2, 9), (5, 8), (4, 7)] {
            let e = enum_connected_regular(k, n).unwrap();
            assert_eq!(e.graphs.len(), oracle_count(k, n), "k={k} n={n}");
            for g in &e.graphs {
                assert!(g.is_connected() && g.regular_degree() == Some(k));
            }
        }
    }

    #[test]
    fn trivial_cases() {
        assert!(enum_connected_regular(3, 7).unwrap().reason.unwrap().contains("odd"));
        assert!(enum_connected_regular(4, 4).unwrap().graphs.is_empty());
        assert_eq!(enum_connected_regular(0, 1).unwrap().graphs.len(), 1);
        assert_eq!(enum_connected_regular(1, 2).unwrap().graphs.len(), 1);
        assert!(matches!(enum_connected_regular(6, 10), Err(Error::UnsupportedSize { .. })));
        assert!(matches!(enum_connected_regular(3, 18), Err(Error::UnsupportedSize { .. })));
        let e = enum_connected_regular(4, 5).unwrap();
        assert_eq!(e.graphs.len(), 1);
        assert_eq!(e.graphs[0].edges(), complete(5).edges());
    }

    #[test]
    fn prune_examples() {
        // saturated K_{1,2} inside a 2-regular partial graph
        let mut g = Graph::empty(6);
        for (u, v) in [(0, 1), (1, 2), (0, 3), (2, 4)] {
            g.add_edge(u, v);
        }
        assert_eq!(g.induced_subgraph(&[0, 1, 2]).edges(), path(3).edges());
        assert_eq!(spectral_prune(&g, 2, -0.5), PruneDecision::Cut);
        assert_eq!(spectral_prune(&g, 2, 0.0), PruneDecision::Keep);
        assert_eq!(spectral_prune(&Graph::empty(5), 2, -0.5), PruneDecision::Keep);
        assert_eq!(spectral_prune(&star(2), 3, -0.5), PruneDecision::Keep);
    }
}
