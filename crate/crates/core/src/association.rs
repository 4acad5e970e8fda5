//! Large maximal cliques, the clique relation `≡ₙᵐ`, quasi-cliques and the
//! associated Hoffman graph `𝔤(G, m, n)`.
//!
//! Two maximal cliques `C₁, C₂` with at least `n` vertices are related when
//! every vertex of either has at most `m − 1` non-neighbours in the other.
//! The relation is an equivalence once `n ≥ (m+1)²` and `G` has no induced
//! `K̃₂ₘ`; outside those hypotheses the classes are the transitive closure
//! and a warning is attached.

use serde::Serialize;

use crate::graph::iter_bits;
use crate::hoffman::HoffmanGraph;
use crate::{Error, Graph, Result};

/// Default cap on the host order for clique enumeration.
pub const MAX_CLIQUE_GRAPH_ORDER: usize = 200;
/// Default cap on the number of reported maximal cliques.
pub const MAX_CLIQUES: usize = 1_000_000;

/// Maximal cliques of a graph with at least `threshold` vertices, sorted
/// lexicographically, each sorted ascending.
#[derive(Debug, Clone, Serialize)]
pub struct CliqueFamily {
    #[serde(skip)]
    pub graph: Graph,
    pub threshold: usize,
    pub cliques: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy)]
pub struct CliqueLimits {
    pub max_order: usize,
    pub max_cliques: usize,
}

impl Default for CliqueLimits {
    fn default() -> Self {
        CliqueLimits {
            max_order: MAX_CLIQUE_GRAPH_ORDER,
            max_cliques: MAX_CLIQUES,
        }
    }
}

pub fn maximal_cliques(g: &Graph, threshold: usize) -> Result<CliqueFamily> {
    maximal_cliques_with_limits(g, threshold, CliqueLimits::default())
}

/// Bron–Kerbosch with Tomita pivoting; branches that cannot reach
/// `threshold` vertices are cut.
pub fn maximal_cliques_with_limits(
    g: &Graph,
    threshold: usize,
    limits: CliqueLimits,
) -> Result<CliqueFamily> {
    if threshold == 0 {
        return Err(Error::invalid("clique threshold must be at least 1"));
    }
    if g.order() > limits.max_order {
        return Err(Error::UnsupportedSize {
            what: "clique enumeration graph order",
            actual: g.order(),
            cap: limits.max_order,
        });
    }
    let words = g.row(0).len();
    let mut p = vec![0u64; words];
    for v in 0..g.order() {
        p[v / 64] |= 1 << (v % 64);
    }
    let mut search = CliqueSearch {
        g,
        threshold,
        max: limits.max_cliques,
        out: Vec::new(),
    };
    search.expand(&mut Vec::new(), p, vec![0u64; words])?;
    let mut cliques = search.out;
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    Ok(CliqueFamily {
        graph: g.clone(),
        threshold,
        cliques,
    })
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    threshold: usize,
    max: usize,
    out: Vec<Vec<usize>>,
}

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

impl CliqueSearch<'_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: Vec<u64>, mut x: Vec<u64>) -> Result<()> {
        let p_size = popcount(&p);
        if r.len() + p_size < self.threshold {
            return Ok(());
        }
        if p_size == 0 {
            if popcount(&x) == 0 {
                if self.out.len() == self.max {
                    return Err(Error::Overflow(format!(
                        "more than {} maximal cliques",
                        self.max
                    )));
                }
                self.out.push(r.clone());
            }
            return Ok(());
        }
        let px: Vec<u64> = p.iter().zip(&x).map(|(a, b)| a | b).collect();
        let pivot = iter_bits(&px)
            .max_by_key(|&u| popcount(&and(&p, self.g.row(u))))
            .expect("P ∪ X is nonempty");
        let candidates: Vec<usize> = iter_bits(
            &p.iter()
                .zip(self.g.row(pivot))
                .map(|(a, b)| a & !b)
                .collect::<Vec<_>>(),
        )
        .collect();
        for v in candidates {
            let row = self.g.row(v);
            r.push(v);
            self.expand(r, and(&p, row), and(&x, row))?;
            r.pop();
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
        Ok(())
    }
}

/// Whether `g` has an induced `K̃₂ₘ`.
///
/// An induced `K̃₂ₘ` with apex `x` sits in a maximal clique `C ∌ x` holding
/// at least `m` neighbours and `m` non-neighbours of `x`; conversely any such
/// pair yields one. So only maximal cliques of size at least `2m` are
/// inspected.
pub fn contains_k_tilde(g: &Graph, m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let family = maximal_cliques(g, 2 * m)?;
    Ok(family.cliques.iter().any(|c| {
        (0..g.order()).filter(|x| !c.contains(x)).any(|x| {
            let adjacent = c.iter().filter(|&&y| g.has_edge(x, y)).count();
            adjacent >= m && c.len() - adjacent >= m
        })
    }))
}

/// Number of vertices of `clique` that are neither `v` nor adjacent to `v`.
fn non_neighbors_in(g: &Graph, v: usize, clique: &[usize]) -> usize {
    clique.iter().filter(|&&u| u != v && !g.has_edge(u, v)).count()
}

/// The `≡ₙᵐ` predicate between two cliques of `g`.
pub fn equiv_nm(g: &Graph, c1: &[usize], c2: &[usize], m: usize) -> bool {
    let ok = |a: &[usize], b: &[usize]| a.iter().all(|&x| non_neighbors_in(g, x, b) < m);
    ok(c1, c2) && ok(c2, c1)
}

/// Vertices with at most `m − 1` non-neighbours in `clique`.
pub fn quasi_clique(g: &Graph, clique: &[usize], m: usize) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| non_neighbors_in(g, v, clique) < m)
        .collect()
}

/// One `≡ₙᵐ` class.
#[derive(Debug, Clone, Serialize)]
pub struct CliqueClass {
    /// Indices into the family's clique list, ascending.
    pub members: Vec<usize>,
    /// Quasi-clique computed from the first (lexicographically least) member.
    pub quasi_clique: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CliquePartition {
    pub family: CliqueFamily,
    pub m: usize,
    pub classes: Vec<CliqueClass>,
    /// `n ≥ (m+1)²` and no induced `K̃₂ₘ`.
    pub hypotheses_hold: bool,
    /// Whether the pairwise predicate is transitive on the family.
    pub transitive: bool,
    pub warnings: Vec<String>,
}

/// Groups the family into `≡ₙᵐ` classes (transitive closure of the pairwise
/// predicate) and records hypothesis and transitivity diagnostics.
pub fn partition_classes(family: CliqueFamily, m: usize) -> Result<CliquePartition> {
    if m == 0 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let g = &family.graph;
    let k = family.cliques.len();
    let mut warnings = Vec::new();
    let n = family.threshold;
    let size_ok = n >= (m + 1) * (m + 1);
    if !size_ok {
        warnings.push(format!("threshold n = {n} is below (m+1)² = {}", (m + 1) * (m + 1)));
    }
    let free = !contains_k_tilde(g, m)?;
    if !free {
        warnings.push(format!("graph contains an induced K̃{}", 2 * m));
    }

    let mut related = vec![vec![false; k]; k];
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for i in 0..k {
        related[i][i] = true;
        for j in (i + 1)..k {
            if equiv_nm(g, &family.cliques[i], &family.cliques[j], m) {
                related[i][j] = true;
                related[j][i] = true;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..k {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(i);
    }
    let transitive = by_root
        .values()
        .all(|members| members.iter().all(|&a| members.iter().all(|&b| related[a][b])));
    if !transitive {
        let msg = if size_ok && free {
            "predicate not transitive although the hypotheses hold"
        } else {
            "predicate not transitive; classes are its transitive closure"
        };
        warnings.push(msg.to_string());
    }
    let classes = by_root
        .into_values()
        .map(|members| CliqueClass {
            quasi_clique: quasi_clique(g, &family.cliques[members[0]], m),
            members,
        })
        .collect();
    Ok(CliquePartition {
        family,
        m,
        classes,
        hypotheses_hold: size_ok && free,
        transitive,
        warnings,
    })
}

impl CliquePartition {
    /// Checks that every member of every class yields the same quasi-clique.
    pub fn verify_representatives(&self) -> Result<()> {
        let g = &self.family.graph;
        for (ci, class) in self.classes.iter().enumerate() {
            for &member in &class.members[1..] {
                let q = quasi_clique(g, &self.family.cliques[member], self.m);
                if q != class.quasi_clique {
                    return Err(Error::Consistency(format!(
                        "class {ci}: quasi-clique depends on the representative (clique {member})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ClassJson<'a> {
            cliques: Vec<&'a Vec<usize>>,
            quasi_clique: &'a [usize],
        }
        #[derive(Serialize)]
        struct Out<'a> {
            threshold: usize,
            m: usize,
            classes: Vec<ClassJson<'a>>,
            hypotheses_hold: bool,
            transitive: bool,
            warnings: &'a [String],
        }
        let out = Out {
            threshold: self.family.threshold,
            m: self.m,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    cliques: c.members.iter().map(|&i| &self.family.cliques[i]).collect(),
                    quasi_clique: &c.quasi_clique,
                })
                .collect(),
            hypotheses_hold: self.hypotheses_hold,
            transitive: self.transitive,
            warnings: &self.warnings,
        };
        serde_json::to_string(&out).expect("partition serialization cannot fail")
    }
}

/// The associated Hoffman graph together with the partition it came from.
#[derive(Debug, Clone)]
pub struct Association {
    pub partition: CliquePartition,
    /// Slim vertices `0..|V(G)|` are the vertices of `G`; fat vertex
    /// `|V(G)| + i` belongs to class `i` and is adjacent to its quasi-clique.
    pub hoffman: HoffmanGraph,
}

pub fn associate(g: &Graph, m: usize, n: usize) -> Result<HoffmanGraph> {
    Ok(associate_detailed(g, m, n)?.hoffman)
}

pub fn associate_detailed(g: &Graph, m: usize, n: usize) -> Result<Association> {
    if m < 1 || n < (m + 1) * (m + 1) {
        return Err(Error::invalid(format!(
            "associated Hoffman graph needs n >= (m+1)^2, got m = {m}, n = {n}"
        )));
    }
    let partition = partition_classes(maximal_cliques(g, n)?, m)?;
    let fats: Vec<Vec<usize>> = partition
        .classes
        .iter()
        .map(|c| c.quasi_clique.clone())
        .collect();
    let hoffman = HoffmanGraph::from_parts(g, &fats)?;
    Ok(Association { partition, hoffman })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen};
    use crate::hoffman::attach_universal_fat;

    fn brute_force_maximal_cliques(g: &Graph, threshold: usize) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs.len() < threshold {
                continue;
            }
            let clique = vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)));
            let maximal = (0..n)
                .filter(|v| mask >> v & 1 == 0)
                .all(|v| !vs.iter().all(|&a| g.has_edge(a, v)));
            if clique && maximal {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn k_tilde_test_matches_induced_search() {
        use crate::graph::{contains_induced, k_tilde, line_graph};
        let graphs = [
            petersen(),
            k_tilde(2).unwrap(),
            k_tilde(3).unwrap(),
            line_graph(&complete(5)).unwrap(),
            attach_universal_fat(&cycle(5).unwrap()).fatten(3).unwrap(),
            HoffmanGraph::from_parts(&complete(2), &[vec![0], vec![1]]).unwrap().fatten(4).unwrap(),
            complete(7),
        ];
        for g in &graphs {
            for m in 1..=3 {
                let direct = contains_induced(g, &k_tilde(m).unwrap()).unwrap().is_some();
                assert_eq!(contains_k_tilde(g, m).unwrap(), direct, "{g:?} m={m}");
            }
        }
    }

    #[test]
    fn k5_has_one_clique() {
        let fam = maximal_cliques(&complete(5), 3).unwrap();
        assert_eq!(fam.cliques, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn c5_has_no_triangle() {
        assert!(maximal_cliques(&cycle(5).unwrap(), 3).unwrap().cliques.is_empty());
        assert_eq!(maximal_cliques(&cycle(5).unwrap(), 1).unwrap().cliques.len(), 5);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            petersen(),
            crate::graph::k_tilde(3).unwrap(),
            crate::graph::line_graph(&petersen()).unwrap(),
            attach_universal_fat(&cycle(6).unwrap()).fatten(3).unwrap(),
        ];
        for g in graphs.iter().filter(|g| g.order() <= 16) {
            for t in 1..5 {
                assert_eq!(maximal_cliques(g, t).unwrap().cliques, brute_force_maximal_cliques(g, t));
            }
        }
    }

    #[test]
    fn fattened_q_k2_single_clique() {
        let g = attach_universal_fat(&complete(2)).fatten(10).unwrap();
        let fam = maximal_cliques(&g, 5).unwrap();
        assert_eq!(fam.cliques, vec![(0..12).collect::<Vec<_>>()]);
        let part = partition_classes(fam, 2).unwrap();
        assert_eq!(part.classes.len(), 1);
        assert_eq!(part.classes[0].quasi_clique, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn caps_are_enforced() {
        let big = Graph::empty(201);
        assert!(matches!(maximal_cliques(&big, 1), Err(Error::UnsupportedSize { .. })));
        let limits = CliqueLimits {
            max_order: 200,
            max_cliques: 3,
        };
        assert!(matches!(
            maximal_cliques_with_limits(&cycle(5).unwrap(), 1, limits),
            Err(Error::Overflow(_))
        ));
        assert!(maximal_cliques(&cycle(5).unwrap(), 0).is_err());
    }

    #[test]
    fn predicate_cases() {
        let g = complete(6);
        let c: Vec<usize> = (0..6).collect();
        assert!(equiv_nm(&g, &c, &c, 1));
        let two = crate::graph::disjoint_union(&complete(4), &complete(4));
        assert!(!equiv_nm(&two, &[0, 1, 2, 3], &[4, 5, 6, 7], 4));
        assert!(equiv_nm(&two, &[0, 1, 2, 3], &[4, 5, 6, 7], 5));
    }

    #[test]
    fn near_identical_cliques_are_related() {
        // K_{n+1} minus one edge {a, b}: cliques share all but a / b
        let n = 9;
        let mut g = complete(n + 1);
        g.remove_edge(0, 1);
        let fam = maximal_cliques(&g, n).unwrap();
        assert_eq!(fam.cliques.len(), 2);
        assert!(equiv_nm(&g, &fam.cliques[0], &fam.cliques[1], 2));
        assert!(!equiv_nm(&g, &fam.cliques[0], &fam.cliques[1], 1));
        let part = partition_classes(fam, 2).unwrap();
        assert_eq!(part.classes.len(), 1);
        assert!(part.hypotheses_hold && part.transitive);
        part.verify_representatives().unwrap();
    }

    #[test]
    fn two_far_apart_classes() {
        let two_q = crate::graph::disjoint_union(&complete(2), &complete(2));
        let h = HoffmanGraph::from_parts(&two_q, &[vec![0, 1], vec![2, 3]]).unwrap();
        let g = h.fatten(9).unwrap();
        let part = partition_classes(maximal_cliques(&g, 9).unwrap(), 2).unwrap();
        assert_eq!(part.classes.len(), 2);
        assert!(part.hypotheses_hold);
    }

    #[test]
    fn warnings_for_broken_hypotheses() {
        let g = crate::graph::k_tilde(2).unwrap();
        let part = partition_classes(maximal_cliques(&g, 2).unwrap(), 2).unwrap();
        assert!(!part.hypotheses_hold);
        assert_eq!(part.warnings.len(), 2, "{:?}", part.warnings);
        let json: serde_json::Value = serde_json::from_str(&part.to_json()).unwrap();
        assert_eq!(json["warnings"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn associate_without_large_cliques_has_no_fat() {
        let p = petersen();
        let h = associate(&p, 2, 9).unwrap();
        assert!(h.fat_vertices().is_empty());
        assert_eq!(h.graph().edges(), p.edges());
        assert!(associate(&p, 2, 8).is_err());
    }

    #[test]
    fn associate_complete_graph() {
        let h = associate(&complete(10), 2, 9).unwrap();
        assert_eq!(h.fat_vertices(), vec![10]);
        assert_eq!(h.graph().degree(10), 10);
        assert!(h.validate().is_ok());
    }

    #[test]
    fn association_recovers_q_k2() {
        let q2 = attach_universal_fat(&complete(2));
        let g = q2.fatten(12).unwrap();
        let assoc = associate(&g, 2, 9).unwrap();
        assert!(crate::hoffman::contains_hoffman_subgraph(&assoc, &q2)
            .unwrap()
            .is_some());
    }
}
