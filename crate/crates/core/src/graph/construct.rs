//! Named graph constructions.
//!
//! Vertex-order conventions are part of each construction's contract and are
//! relied on by quotient-matrix partitions and tests.

use super::Graph;
use crate::{Error, Result};

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g.with_name(format!("K{n}"))
}

/// `n` isolated vertices.
pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n).with_name(format!("E{n}"))
}

/// `C_n`, vertex `i` adjacent to `i ± 1 mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g.with_name(format!("C{n}")))
}

/// `P_n` on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g.with_name(format!("P{n}"))
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g.with_name(format!("K1,{leaves}"))
}

/// Complete multipartite graph; parts occupy consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::invalid("complete_multipartite needs at least one part"));
    }
    if parts.contains(&0) {
        return Err(Error::invalid("complete_multipartite parts must be positive"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    let label = parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(g.with_name(format!("K{label}")))
}

/// `K_{s,t}`; the `s`-side is `0..s`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    complete_multipartite(&[s, t])
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`,
/// spokes `i`-`i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g.with_name("Petersen")
}

/// Line graph; vertex `i` is the `i`-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::invalid("line graph of an edgeless graph"));
    }
    let mut lg = Graph::empty(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j);
            }
        }
    }
    let name = g.name().map_or_else(|| "L(G)".to_string(), |n| format!("L({n})"));
    Ok(lg.with_name(name))
}

/// `K̃₂ₘ`: the clique `K₂ₘ` on `0..2m` plus an apex `2m` adjacent to
/// exactly the clique vertices `0..m`.
pub fn k_tilde(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::invalid("k_tilde needs m >= 1"));
    }
    let mut g = Graph::empty(2 * m + 1);
    for u in 0..2 * m {
        for v in (u + 1)..2 * m {
            g.add_edge(u, v);
        }
    }
    for u in 0..m {
        g.add_edge(u, 2 * m);
    }
    Ok(g.with_name(format!("Ktilde{}", 2 * m)))
}

/// `q`-coclique extension: adjacency `A ⊗ J_q`. Copies of vertex `x` are the
/// contiguous block `x*q .. x*q + q`. `q = 1` returns a copy of `g`.
pub fn coclique_extension(g: &Graph, q: usize) -> Result<Graph> {
    if q == 0 {
        return Err(Error::invalid("coclique extension needs q >= 1"));
    }
    let mut ext = Graph::empty(g.order() * q);
    for (x, y) in g.edges() {
        for i in 0..q {
            for j in 0..q {
                ext.add_edge(x * q + i, y * q + j);
            }
        }
    }
    let base = g.name().unwrap_or("G");
    Ok(ext.with_name(format!("{base}~{q}")))
}

/// Disjoint union; `b`'s vertices follow `a`'s.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    let mut g = Graph::empty(shift + b.order());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(u + shift, v + shift);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_singletons_is_complete() {
        let g = complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete());
    }

    #[test]
    fn biclique_k23() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!(g.edge_count(), 6);
        let mut deg = g.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn kkk_is_k_regular_on_2k() {
        for k in 1..6 {
            let g = complete_bipartite(k, k).unwrap();
            assert_eq!(g.order(), 2 * k);
            assert_eq!(g.regular_degree(), Some(k));
        }
    }

    #[test]
    fn multipartite_rejects_bad_parts() {
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn line_graph_small_cases() {
        let l3 = line_graph(&complete(3)).unwrap();
        assert!(l3.is_complete() && l3.order() == 3);
        let lstar = line_graph(&star(3)).unwrap();
        assert!(lstar.is_complete() && lstar.order() == 3);
        // each edge of K_{2,3} meets two edges at its degree-3 end and one at its
        // degree-2 end
        let l23 = line_graph(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!(l23.order(), 6);
        assert_eq!(l23.regular_degree(), Some(3));
        assert!(line_graph(&edgeless(4)).is_err());
    }

    #[test]
    fn line_graph_degree_handshake() {
        let g = petersen();
        let lg = line_graph(&g).unwrap();
        for (i, (u, v)) in g.edges().into_iter().enumerate() {
            assert_eq!(lg.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn k_tilde_shapes() {
        let p3 = k_tilde(1).unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.edge_count(), 2);
        let mut deg = k_tilde(2).unwrap().degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![4, 4, 3, 3, 2]);
        assert!(k_tilde(0).is_err());
    }

    #[test]
    fn coclique_extension_of_k2_is_c4() {
        let c4 = coclique_extension(&complete(2), 2).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.regular_degree(), Some(2));
        assert!(c4.is_connected());
        assert_eq!(c4.multipartite_parts(), Some(vec![2, 2]));
        assert!(coclique_extension(&complete(2), 0).is_err());
    }

    #[test]
    fn coclique_extension_identity_and_kronecker() {
        let p = petersen();
        let same = coclique_extension(&p, 1).unwrap();
        assert_eq!(same.edges(), p.edges());
        let q = 3;
        let ext = coclique_extension(&p, q).unwrap();
        for a in 0..ext.order() {
            for b in 0..ext.order() {
                assert_eq!(ext.has_edge(a, b), p.has_edge(a / q, b / q));
            }
        }
    }

    #[test]
    fn lower_bound_family_is_qa_regular() {
        for a in 2..6 {
            let base = line_graph(&complete_bipartite(2, a + 1).unwrap())
                .unwrap()
                .complement();
            for q in 1..4 {
                let ext = coclique_extension(&base, q).unwrap();
                assert_eq!(ext.regular_degree(), Some(q * a));
                assert_eq!(ext.order(), 2 * q * a + 2 * q);
            }
        }
    }
}
