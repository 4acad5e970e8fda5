//! Hoffman graphs: graphs whose vertices are labeled fat or slim, with fat
//! vertices pairwise non-adjacent and each fat vertex having a slim neighbour.

use serde::{Deserialize, Serialize};

use crate::graph::find_labeled_induced;
use crate::spectra::SymMatrix;
use crate::{Error, Graph, Result};

/// Default cap on the pattern order for [`contains_hoffman_subgraph`].
pub const DEFAULT_PATTERN_CAP: usize = 10;

/// Slack allowed when checking `λ_min(pattern) ≥ λ_min(host)` on witnesses.
const MONOTONE_TOL: f64 = 1e-9;

#[derive(Clone, PartialEq, Eq)]
pub struct HoffmanGraph {
    graph: Graph,
    fat: Vec<bool>,
}

/// A broken Hoffman-graph condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// Two fat vertices are adjacent.
    AdjacentFat(usize, usize),
    /// A fat vertex has no slim neighbour.
    FatWithoutSlimNeighbor(usize),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::AdjacentFat(u, v) => write!(f, "fat vertices {u} and {v} are adjacent"),
            Violation::FatWithoutSlimNeighbor(v) => {
                write!(f, "fat vertex {v} has no slim neighbour")
            }
        }
    }
}

impl HoffmanGraph {
    /// Labels `graph` with `fat[v]` and validates the result.
    pub fn new(graph: Graph, fat: Vec<bool>) -> Result<Self> {
        let h = Self::new_unchecked(graph, fat);
        h.validate().map_err(|v| {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            Error::invalid(format!("not a Hoffman graph: {}", msgs.join("; ")))
        })?;
        Ok(h)
    }

    /// Labels without validation; use [`HoffmanGraph::validate`] to inspect.
    pub fn new_unchecked(graph: Graph, fat: Vec<bool>) -> Self {
        assert_eq!(graph.order(), fat.len(), "one label per vertex");
        HoffmanGraph { graph, fat }
    }

    pub fn from_fat_list(graph: Graph, fat_vertices: &[usize]) -> Result<Self> {
        let mut fat = vec![false; graph.order()];
        for &f in fat_vertices {
            if f >= graph.order() {
                return Err(Error::invalid(format!("fat vertex {f} out of range")));
            }
            fat[f] = true;
        }
        Self::new(graph, fat)
    }

    /// Slim vertices `0..slim.order()` carry the graph `slim`; fat vertex
    /// `slim.order() + i` is adjacent to `fat_neighborhoods[i]`.
    pub fn from_parts(slim: &Graph, fat_neighborhoods: &[Vec<usize>]) -> Result<Self> {
        let s = slim.order();
        let mut g = Graph::empty(s + fat_neighborhoods.len());
        for (u, v) in slim.edges() {
            g.add_edge(u, v);
        }
        for (i, nb) in fat_neighborhoods.iter().enumerate() {
            for &x in nb {
                if x >= s {
                    return Err(Error::invalid(format!("fat neighbour {x} is not a slim vertex")));
                }
                g.add_edge(x, s + i);
            }
        }
        let fat = (0..g.order()).map(|v| v >= s).collect();
        Self::new(g, fat)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn is_fat(&self, v: usize) -> bool {
        self.fat[v]
    }

    pub fn labels(&self) -> &[bool] {
        &self.fat
    }

    pub fn fat_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.fat[v]).collect()
    }

    pub fn slim_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| !self.fat[v]).collect()
    }

    /// The ordinary graph induced on the slim vertices.
    pub fn slim_graph(&self) -> Graph {
        self.graph.induced_subgraph(&self.slim_vertices())
    }

    /// Every violated Hoffman-graph condition.
    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let fat = self.fat_vertices();
        let mut violations = Vec::new();
        for (i, &u) in fat.iter().enumerate() {
            for &v in &fat[i + 1..] {
                if self.graph.has_edge(u, v) {
                    violations.push(Violation::AdjacentFat(u, v));
                }
            }
            if !self.graph.neighbors(u).any(|x| !self.fat[x]) {
                violations.push(Violation::FatWithoutSlimNeighbor(u));
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Slim–fat incidence `C`: rows follow `slim_vertices()`, columns follow
    /// `fat_vertices()`.
    pub fn incidence(&self) -> Vec<Vec<u8>> {
        let fat = self.fat_vertices();
        self.slim_vertices()
            .iter()
            .map(|&x| fat.iter().map(|&f| self.graph.has_edge(x, f) as u8).collect())
            .collect()
    }

    /// `S = A_slim − C Cᵀ`: diagonal `−(fat degree)`, off-diagonal adjacency
    /// minus the number of common fat neighbours.
    pub fn special_matrix(&self) -> Result<SymMatrix> {
        if let Err(v) = self.validate() {
            return Err(Error::invalid(format!(
                "special matrix of an invalid Hoffman graph ({} violations)",
                v.len()
            )));
        }
        let slim = self.slim_vertices();
        let c = self.incidence();
        Ok(SymMatrix::from_fn(slim.len(), |i, j| {
            let shared: u32 = c[i].iter().zip(&c[j]).map(|(a, b)| (a & b) as u32).sum();
            let adj = if i != j && self.graph.has_edge(slim[i], slim[j]) {
                1.0
            } else {
                0.0
            };
            adj - shared as f64
        }))
    }

    /// Eigenvalues of the special matrix, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(self.special_matrix()?.eigenvalues())
    }

    pub fn lambda_min(&self) -> Result<f64> {
        Ok(*self.eigenvalues()?.last().ok_or_else(|| {
            Error::invalid("Hoffman graph without slim vertices has no eigenvalues")
        })?)
    }

    /// `G(𝔥, p)`: each fat vertex becomes a `K_p` joined to its neighbours.
    ///
    /// Slim vertices keep their relative order and come first; fat vertex `i`
    /// (in `fat_vertices()` order) becomes the block
    /// `s + i·p .. s + (i+1)·p`.
    pub fn fatten(&self, p: usize) -> Result<Graph> {
        if p == 0 {
            return Err(Error::invalid("fattening needs p >= 1"));
        }
        let slim = self.slim_vertices();
        let fat = self.fat_vertices();
        let s = slim.len();
        let mut pos = vec![0; self.order()];
        for (i, &x) in slim.iter().enumerate() {
            pos[x] = i;
        }
        let mut g = Graph::empty(s + p * fat.len());
        for (i, &x) in slim.iter().enumerate() {
            for &y in &slim[i + 1..] {
                if self.graph.has_edge(x, y) {
                    g.add_edge(pos[x], pos[y]);
                }
            }
        }
        for (i, &f) in fat.iter().enumerate() {
            let block = s + i * p;
            for a in 0..p {
                for b in (a + 1)..p {
                    g.add_edge(block + a, block + b);
                }
                for x in self.graph.neighbors(f) {
                    g.add_edge(block + a, pos[x]);
                }
            }
        }
        Ok(g.with_name(format!("G(h,{p})")))
    }
}

impl std::fmt::Debug for HoffmanGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HoffmanGraph")
            .field("order", &self.order())
            .field("edges", &self.graph.edges())
            .field("fat", &self.fat_vertices())
            .finish()
    }
}

/// `𝔮(H)`: one fat vertex (the last vertex) adjacent to every vertex of `H`.
///
/// Its special matrix is `A(H) − J = −(A(H̄) + I)`, hence
/// `λ_min(𝔮(H)) = −1 − λ_max(H̄)`.
pub fn attach_universal_fat(h: &Graph) -> HoffmanGraph {
    let all: Vec<usize> = (0..h.order()).collect();
    HoffmanGraph::from_parts(h, &[all]).expect("a universal fat vertex is always valid")
}

/// `𝔥⁽ˢ⁾`: one slim vertex (vertex 0) with `s` fat neighbours.
pub fn fat_star(s: usize) -> HoffmanGraph {
    HoffmanGraph::from_parts(&Graph::empty(1), &vec![vec![0]; s]).expect("fat star is valid")
}

/// Label-respecting induced containment of `pattern` in `host`.
///
/// Returns the witness (pattern vertex → host vertex). On success the
/// monotonicity of the smallest eigenvalue under induced Hoffman subgraphs is
/// checked on the witness; a failure is reported as a consistency error.
pub fn contains_hoffman_subgraph(
    host: &HoffmanGraph,
    pattern: &HoffmanGraph,
) -> Result<Option<Vec<usize>>> {
    contains_hoffman_subgraph_with_cap(host, pattern, DEFAULT_PATTERN_CAP)
}

pub fn contains_hoffman_subgraph_with_cap(
    host: &HoffmanGraph,
    pattern: &HoffmanGraph,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    if pattern.order() > cap {
        return Err(Error::UnsupportedSize {
            what: "Hoffman pattern order",
            actual: pattern.order(),
            cap,
        });
    }
    let host_labels: Vec<u8> = host.fat.iter().map(|&f| f as u8).collect();
    let pat_labels: Vec<u8> = pattern.fat.iter().map(|&f| f as u8).collect();
    let Some(witness) =
        find_labeled_induced(&host.graph, Some(&host_labels), &pattern.graph, Some(&pat_labels))
    else {
        return Ok(None);
    };
    if !pattern.slim_vertices().is_empty() {
        let lp = pattern.lambda_min()?;
        let lh = host.lambda_min()?;
        if lp < lh - MONOTONE_TOL {
            return Err(Error::Consistency(format!(
                "induced Hoffman subgraph has λ_min {lp} below host λ_min {lh}"
            )));
        }
    }
    Ok(Some(witness))
}

#[derive(Serialize, Deserialize)]
struct HoffmanJson {
    order: usize,
    edges: Vec<[usize; 2]>,
    fat: Vec<usize>,
}

impl Serialize for HoffmanGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HoffmanJson {
            order: self.order(),
            edges: self.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            fat: self.fat_vertices(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HoffmanGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = HoffmanJson::deserialize(d)?;
        let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edges(raw.order, &edges).map_err(D::Error::custom)?;
        HoffmanGraph::from_fat_list(g, &raw.fat).map_err(D::Error::custom)
    }
}

impl HoffmanGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("Hoffman graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))
    }
}
