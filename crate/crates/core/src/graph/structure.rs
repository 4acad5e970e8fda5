use serde::Serialize;

use super::Graph;

/// Breadth-first distance layers `Γ₀(x), Γ₁(x), …` around a source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceLayers {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
    /// Vertices outside the component of `source`.
    pub unreached: Vec<usize>,
}

impl DistanceLayers {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    /// `Γᵢ(x)`, empty past the eccentricity.
    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }
}

pub fn distance_layers(g: &Graph, x: usize) -> DistanceLayers {
    assert!(x < g.order(), "vertex {x} out of range");
    let mut dist = vec![usize::MAX; g.order()];
    dist[x] = 0;
    let mut layers = vec![vec![x]];
    loop {
        let mut next = Vec::new();
        for &u in layers.last().unwrap() {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = layers.len();
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        layers.push(next);
    }
    let unreached = (0..g.order()).filter(|&v| dist[v] == usize::MAX).collect();
    DistanceLayers {
        source: x,
        layers,
        unreached,
    }
}

/// Regularity parameters of a graph.
///
/// A constant is `Some` only when it is uniform over its pair class *and* that
/// class is nonempty; the corresponding flag is then true. An empty pair class
/// (e.g. non-adjacent pairs of `K_n`) leaves the constant `None` and the flag
/// vacuously true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityParams {
    pub order: usize,
    pub degree: Option<usize>,
    /// Common neighbours of adjacent pairs, when constant.
    pub a1: Option<usize>,
    /// Common neighbours of non-adjacent pairs, when constant.
    pub c2_nonadjacent: Option<usize>,
    /// Common neighbours of pairs at distance 2, when constant.
    pub c2: Option<usize>,
    /// Minimum and maximum common-neighbour counts over distance-2 pairs.
    pub distance2_common: Option<(usize, usize)>,
    pub edge_regular: bool,
    pub co_edge_regular: bool,
    pub amply_regular: bool,
    /// Amply regular of diameter 2.
    pub strongly_regular: bool,
}

fn uniform(values: &[usize]) -> (bool, Option<usize>) {
    match values.first() {
        None => (true, None),
        Some(&first) => {
            let all = values.iter().all(|&v| v == first);
            (all, all.then_some(first))
        }
    }
}

impl RegularityParams {
    pub fn compute(g: &Graph) -> Self {
        let n = g.order();
        let degree = g.regular_degree();
        let mut adjacent = Vec::new();
        let mut nonadjacent = Vec::new();
        let mut at_distance2 = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let c = g.common_neighbors(u, v);
                if g.has_edge(u, v) {
                    adjacent.push(c);
                } else {
                    nonadjacent.push(c);
                    if c > 0 {
                        at_distance2.push(c);
                    }
                }
            }
        }
        let (a1_uniform, a1) = uniform(&adjacent);
        let (c2n_uniform, c2_nonadjacent) = uniform(&nonadjacent);
        let (c2_uniform, c2) = uniform(&at_distance2);
        let distance2_common = at_distance2
            .iter()
            .min()
            .zip(at_distance2.iter().max())
            .map(|(&a, &b)| (a, b));
        let regular = degree.is_some();
        let amply_regular = regular && a1_uniform && c2_uniform;
        RegularityParams {
            order: n,
            degree,
            a1,
            c2_nonadjacent,
            c2,
            distance2_common,
            edge_regular: regular && a1_uniform,
            co_edge_regular: regular && c2n_uniform,
            amply_regular,
            strongly_regular: amply_regular && g.diameter() == Some(2),
        }
    }
}

impl Graph {
    pub fn regularity_params(&self) -> RegularityParams {
        RegularityParams::compute(self)
    }
}
