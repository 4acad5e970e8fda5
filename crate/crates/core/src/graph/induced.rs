//! Induced-subgraph containment by backtracking over bitset candidate sets.

use super::{iter_bits, Graph};
use crate::{Error, Result};

/// Default cap on the pattern order for [`contains_induced`].
pub const DEFAULT_INDUCED_CAP: usize = 12;

/// Looks for a vertex subset of `g` inducing a copy of `h`.
///
/// Returns the witness embedding `h`-vertex → `g`-vertex when one exists.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    contains_induced_with_cap(g, h, DEFAULT_INDUCED_CAP)
}

pub fn contains_induced_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    if h.order() > cap {
        return Err(Error::UnsupportedSize {
            what: "pattern order",
            actual: h.order(),
            cap,
        });
    }
    Ok(find_labeled_induced(g, None, h, None))
}

/// Label-respecting induced embedding of `h` into `g`.
///
/// When labels are given, pattern vertex `i` may only map to target vertices
/// carrying the same label. No size cap is applied here.
pub fn find_labeled_induced(
    g: &Graph,
    g_labels: Option<&[u8]>,
    h: &Graph,
    h_labels: Option<&[u8]>,
) -> Option<Vec<usize>> {
    let (n, k) = (g.order(), h.order());
    if k > n {
        return None;
    }
    let words = g.row(0).len();
    let label_g = |v: usize| g_labels.map_or(0, |l| l[v]);
    let label_h = |v: usize| h_labels.map_or(0, |l| l[v]);

    let g_deg = g.degrees();
    let h_deg = h.degrees();

    // Pattern vertex order: each next vertex has the most already-placed
    // neighbours, ties broken by degree.
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                (back, h_deg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut base = vec![vec![0u64; words]; k];
    for (i, b) in base.iter_mut().enumerate() {
        let non_deg_h = k - 1 - h_deg[i];
        let mut any = false;
        for v in 0..n {
            if label_g(v) == label_h(i) && g_deg[v] >= h_deg[i] && n - 1 - g_deg[v] >= non_deg_h {
                b[v / 64] |= 1 << (v % 64);
                any = true;
            }
        }
        if !any {
            return None;
        }
    }

    let mut full = vec![u64::MAX; words];
    if n % 64 != 0 {
        full[words - 1] = (1u64 << (n % 64)) - 1;
    }

    let mut map = vec![usize::MAX; k];
    let mut used = vec![0u64; words];
    if extend(g, h, &order, 0, &base, &full, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    base: &[Vec<u64>],
    full: &[u64],
    map: &mut [usize],
    used: &mut [u64],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let i = order[depth];
    let mut cand: Vec<u64> = base[i]
        .iter()
        .zip(used.iter())
        .map(|(b, u)| b & !u)
        .collect();
    for &j in &order[..depth] {
        let row = g.row(map[j]);
        if h.has_edge(i, j) {
            cand.iter_mut().zip(row).for_each(|(c, r)| *c &= r);
        } else {
            cand.iter_mut()
                .zip(row.iter().zip(full))
                .for_each(|(c, (r, f))| *c &= !r & f);
        }
    }
    let choices: Vec<usize> = iter_bits(&cand).collect();
    for v in choices {
        map[i] = v;
        used[v / 64] |= 1 << (v % 64);
        if extend(g, h, order, depth + 1, base, full, map, used) {
            return true;
        }
        used[v / 64] &= !(1 << (v % 64));
    }
    map[i] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, k_tilde, path, petersen};

    fn check_witness(g: &Graph, h: &Graph, w: &[usize]) {
        for a in 0..h.order() {
            for b in 0..h.order() {
                if a != b {
                    assert_eq!(h.has_edge(a, b), g.has_edge(w[a], w[b]));
                }
            }
        }
    }

    #[test]
    fn single_vertex_always_embeds() {
        assert!(contains_induced(&petersen(), &complete(1)).unwrap().is_some());
    }

    #[test]
    fn p3_in_c5() {
        let g = cycle(5).unwrap();
        let h = path(3);
        let w = contains_induced(&g, &h).unwrap().unwrap();
        check_witness(&g, &h, &w);
    }

    #[test]
    fn bipartite_has_no_triangle() {
        let g = complete_bipartite(3, 3).unwrap();
        assert!(contains_induced(&g, &complete(3)).unwrap().is_none());
    }

    #[test]
    fn petersen_has_induced_c5_c6_but_no_c4() {
        let p = petersen();
        assert!(contains_induced(&p, &cycle(5).unwrap()).unwrap().is_some());
        assert!(contains_induced(&p, &cycle(6).unwrap()).unwrap().is_some());
        assert!(contains_induced(&p, &cycle(4).unwrap()).unwrap().is_none());
    }

    #[test]
    fn k_tilde_found_in_itself_only_when_present() {
        let kt = k_tilde(2).unwrap();
        assert!(contains_induced(&kt, &kt).unwrap().is_some());
        assert!(contains_induced(&complete(8), &kt).unwrap().is_none());
    }

    #[test]
    fn oversized_pattern_is_rejected() {
        let err = contains_induced(&complete(20), &complete(13)).unwrap_err();
        assert!(matches!(err, Error::UnsupportedSize { .. }));
        assert!(contains_induced_with_cap(&complete(20), &complete(13), 13)
            .unwrap()
            .is_some());
    }

    #[test]
    fn labels_restrict_images() {
        let g = path(3);
        let h = complete(2);
        // only the middle vertex carries label 1
        let gl = [0u8, 1, 0];
        let w = find_labeled_induced(&g, Some(&gl), &h, Some(&[1, 0])).unwrap();
        assert_eq!(w[0], 1);
        assert!(find_labeled_induced(&g, Some(&gl), &h, Some(&[1, 1])).is_none());
    }
}
