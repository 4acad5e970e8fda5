//! End-to-end flows across modules through the public API.

use proptest::prelude::*;

use regbound::association::associate;
use regbound::bounds::{known_v, lower_bound_graph, Lambda};
use regbound::graph::{coclique_extension, complete_multipartite, cycle, line_graph, petersen};
use regbound::hoffman::{attach_universal_fat, contains_hoffman_subgraph};
use regbound::io::{read_graph, read_graph_auto, write_graph, Format};
use regbound::search::{certificate, v_search};
use regbound::spectra::{second_largest, spectrum};
use regbound::Graph;

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn every_format_round_trips(g in arb_graph(12)) {
        for f in [Format::EdgeList, Format::Json, Format::Graph6] {
            let text = write_graph(&g, f);
            prop_assert_eq!(read_graph(&text, f).unwrap().edges(), g.edges());
            prop_assert_eq!(read_graph_auto(&text).unwrap().edges(), g.edges());
        }
    }

    #[test]
    fn relabelling_keeps_certificate_and_spectrum(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(certificate(&g).unwrap(), certificate(&h).unwrap());
        prop_assert!(spectrum(&g).approx_eq(&spectrum(&h), 1e-8));
    }
}

#[test]
fn fatten_then_associate_finds_the_pattern() {
    let pattern = attach_universal_fat(&cycle(4).unwrap());
    let g = pattern.fatten(12).unwrap();
    let assoc = associate(&g, 2, 9).unwrap();
    assert!(assoc.validate().is_ok());
    assert!(contains_hoffman_subgraph(&assoc, &pattern).unwrap().is_some());
}

#[test]
fn lower_bound_graphs_are_consistent_with_known_values() {
    for lambda in 1..=3u64 {
        for a in 2..=4u64 {
            let (g, cert) = lower_bound_graph(lambda, a).unwrap();
            assert!(cert.verified);
            let k = lambda * a;
            let kv = known_v(k, &Lambda::from_integer(lambda as i64)).unwrap();
            assert!(kv.admits(g.order() as u64), "k={k} λ={lambda}: {kv}");
        }
    }
}

#[test]
fn coclique_extension_of_a_complete_graph_is_multipartite() {
    let g = coclique_extension(&regbound::graph::complete(4), 3).unwrap();
    let want = complete_multipartite(&[3, 3, 3, 3]).unwrap();
    assert_eq!(certificate(&g).unwrap(), certificate(&want).unwrap());
}

#[test]
fn search_agrees_with_known_small_values() {
    // v(3, 1) ≥ 10 is witnessed by the Petersen graph (λ₂ = 1)
    assert!((second_largest(&petersen()).unwrap() - 1.0).abs() < 1e-9);
    let r = v_search(3, &Lambda::from_integer(1), 12).unwrap();
    assert_eq!(r.exact_v, Some(10));
    let kv = known_v(3, &Lambda::from_integer(1)).unwrap();
    assert!(kv.admits(10));
    // line graph of K_{3,3} is the 3×3 rook graph: 4-regular, λ₂ = 1
    let rook = line_graph(&regbound::graph::complete_bipartite(3, 3).unwrap()).unwrap();
    assert_eq!(rook.regular_degree(), Some(4));
    assert!((second_largest(&rook).unwrap() - 1.0).abs() < 1e-9);
}
