//! Dense simple graphs backed by a symmetric bit matrix.

mod construct;
mod induced;
mod structure;

pub use construct::{
    complete, complete_bipartite, complete_multipartite, coclique_extension, cycle,
    disjoint_union, edgeless, k_tilde, line_graph, path, petersen, star,
};
pub use induced::{
    contains_induced, contains_induced_with_cap, find_labeled_induced, DEFAULT_INDUCED_CAP,
};
pub use structure::{distance_layers, DistanceLayers, RegularityParams};

use std::fmt;

/// An undirected simple graph on vertices `0..order`.
///
/// Each row of the adjacency matrix is stored as `words` little-endian `u64`
/// blocks, so neighbourhood intersections are word-wise `&`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    name: Option<String>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterates the set bits of a bit row.
#[doc(hidden)]
pub fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let tz = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + tz)
        })
    })
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    ///
    /// # Panics
    /// If `order == 0`; graphs always have at least one vertex.
    pub fn empty(order: usize) -> Self {
        assert!(order >= 1, "a graph needs at least one vertex");
        let words = words_for(order);
        Graph {
            order,
            words,
            rows: vec![0; order * words],
            name: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range ends.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> crate::Result<Self> {
        if order == 0 {
            return Err(crate::Error::invalid("graph order must be at least 1"));
        }
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(crate::Error::invalid(format!(
                    "edge ({u}, {v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(crate::Error::invalid(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Adjacency row of `v` as bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.order * (self.order - 1) / 2
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in (u + 1)..self.order {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Maximum eccentricity, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for x in 0..self.order {
            let layers = distance_layers(self, x);
            if !layers.unreached.is_empty() {
                return None;
            }
            diam = diam.max(layers.eccentricity());
        }
        Some(diam)
    }

    /// True iff non-adjacency is an equivalence relation, i.e. the complement
    /// is a disjoint union of cliques.
    pub fn is_complete_multipartite(&self) -> bool {
        let comp = self.complement();
        comp.components().iter().all(|c| {
            c.iter()
                .all(|&u| c.iter().all(|&v| u == v || comp.has_edge(u, v)))
        })
    }

    /// Sizes of the parts when the graph is complete multipartite.
    pub fn multipartite_parts(&self) -> Option<Vec<usize>> {
        if !self.is_complete_multipartite() {
            return None;
        }
        Some(self.complement().components().iter().map(Vec::len).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        d.field("order", &self.order);
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("edges", &self.edges()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_edgeless() {
        let g = complete(6).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5).unwrap();
        let comp = c5.complement();
        assert_eq!(comp.regular_degree(), Some(2));
        assert!(comp.is_connected());
    }

    #[test]
    fn complement_of_regular_has_degree_v_minus_k_minus_one() {
        let p = petersen();
        assert_eq!(p.complement().regular_degree(), Some(10 - 3 - 1));
    }

    #[test]
    fn wide_graph_rows_span_words() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
        assert_eq!(g.complement().edge_count(), 130 * 129 / 2 - 2);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(0, &[]).is_err());
    }

    #[test]
    fn multipartite_detection() {
        let g = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(g.multipartite_parts(), Some(vec![3, 3, 3]));
        assert!(!petersen().is_complete_multipartite());
        assert!(complete(4).is_complete_multipartite());
    }

    #[test]
    fn diameter_of_disconnected_is_none() {
        let g = disjoint_union(&complete(2), &complete(2));
        assert_eq!(g.diameter(), None);
        assert_eq!(petersen().diameter(), Some(2));
    }
}
