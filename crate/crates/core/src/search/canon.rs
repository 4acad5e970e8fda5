//! Canonical labeling for graphs with at most 64 vertices.
//!
//! Equitable refinement of an ordered partition, individualization of the
//! first smallest non-singleton cell, and a depth-first search for the leaf
//! whose relabeled adjacency rows are lexicographically largest. Subtrees are
//! skipped using automorphisms found along the way (orbit pruning, plus a
//! jump back to the divergence point when a leaf repeats the first or best
//! one). Twin vertices seed the automorphism list.

use crate::io::to_graph6;
use crate::{Error, Graph, Result};

pub const MAX_CANON_ORDER: usize = 64;

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// Vertex `v` of the input becomes `labeling[v]` in `graph`.
    pub labeling: Vec<usize>,
    pub graph: Graph,
    /// graph6 of the canonically relabeled graph.
    pub certificate: String,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (labeling, _) = canonical_labeling(g)?;
    let graph = g.relabel(&labeling);
    let certificate = to_graph6(&graph);
    Ok(CanonicalForm {
        labeling,
        graph,
        certificate,
    })
}

pub fn certificate(g: &Graph) -> Result<String> {
    Ok(canonical_form(g)?.certificate)
}

/// Compact canonical key: the order followed by the canonical rows.
pub(crate) fn canonical_key(g: &Graph) -> Result<Vec<u64>> {
    let (_, rows) = canonical_labeling(g)?;
    let mut key = Vec::with_capacity(rows.len() + 1);
    key.push(g.order() as u64);
    key.extend(rows);
    Ok(key)
}

fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, Vec<u64>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize {
            what: "canonical labeling order",
            actual: n,
            cap: MAX_CANON_ORDER,
        });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut search = Search {
        n,
        autos: twin_transpositions(&adj),
        adj,
        first: None,
        best: None,
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    search.descend(&mut cells, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    Ok((best.labeling, best.rows))
}

fn twin_transpositions(adj: &[u64]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut autos = Vec::new();
    let mut done = vec![false; n];
    for u in 0..n {
        if done[u] {
            continue;
        }
        for v in (u + 1)..n {
            let (bu, bv) = (1u64 << u, 1u64 << v);
            if adj[u] & !bv == adj[v] & !bu {
                done[v] = true;
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(u, v);
                autos.push(perm);
            }
        }
    }
    autos
}

struct Leaf {
    rows: Vec<u64>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    autos: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
}

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search {
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'restart: loop {
            for w in 0..cells.len() {
                let mask = mask_of(&cells[w]);
                for x in 0..cells.len() {
                    if cells[x].len() == 1 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[x]
                        .iter()
                        .map(|&v| ((self.adj[v] & mask).count_ones(), v))
                        .collect();
                    if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (c, v) in keyed {
                        if last != Some(c) {
                            parts.push(Vec::new());
                            last = Some(c);
                        }
                        parts.last_mut().unwrap().push(v);
                    }
                    cells.splice(x..=x, parts);
                    continue 'restart;
                }
            }
            return;
        }
    }

    /// Returns the depth to jump back to, if a subtree was found redundant.
    fn descend(&mut self, cells: &mut Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        self.refine(cells);
        if cells.len() == self.n {
            return self.leaf(cells, path);
        }
        let depth = path.len();
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| cells[i].len())
            .expect("partition is not discrete");
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if !tried.is_empty() && self.in_tried_orbit(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            path.push(v);
            let jump = self.descend(&mut child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Whether `v` lies in the orbit of an already tried vertex under the
    /// known automorphisms that fix `path` pointwise.
    fn in_tried_orbit(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for a in &self.autos {
            if path.iter().any(|&u| a[u] != u) {
                continue;
            }
            for x in 0..self.n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let mut labeling = vec![0; self.n];
        for (i, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = i;
        }
        let rows: Vec<u64> = cells
            .iter()
            .map(|cell| {
                let mut r = 0u64;
                let mut bits = self.adj[cell[0]];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    r |= 1 << labeling[w];
                }
                r
            })
            .collect();
        let leaf = Leaf {
            rows,
            labeling,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: leaf.rows.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if first.rows == leaf.rows {
            let d = common_prefix(&first.path, path);
            self.record_automorphism(&first.labeling.clone(), &leaf.labeling);
            return Some(d);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let d = common_prefix(&best.path, path);
                let best_labeling = best.labeling.clone();
                self.record_automorphism(&best_labeling, &leaf.labeling);
                Some(d)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    /// Two labelings giving the same relabeled graph differ by an
    /// automorphism `v ↦ a⁻¹(b(v))`.
    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        let mut a_inv = vec![0; self.n];
        for (v, &l) in a.iter().enumerate() {
            a_inv[l] = v;
        }
        let gamma: Vec<usize> = b.iter().map(|&l| a_inv[l]).collect();
        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
            self.autos.push(gamma);
        }
    }
}
