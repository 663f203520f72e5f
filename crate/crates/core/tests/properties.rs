mod common;

use common::*;
use proptest::prelude::*;
use vgr_core::bounds;
use vgr_core::canon::{are_isomorphic, canonical_form, canonical_graph};
use vgr_core::cycles::{count_girth_cycles_edge, count_girth_cycles_vertex, total_girth_cycles, vertex_signature};
use vgr_core::graph6::{decode, encode};
use vgr_core::{girth, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut idx = 0;
            for u in 0..n {
                for w in u + 1..n {
                    if bits[idx] {
                        g.add_edge(u, w).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(14)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g, None), canonical_form(&h, None));
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }

    #[test]
    fn isomorphism_matches_permutation_search(a in graph_strategy(7), b in graph_strategy(7)) {
        prop_assert_eq!(are_isomorphic(&a, &b), isomorphic_by_permutation(&a, &b));
    }

    #[test]
    fn counting_identities(g in graph_strategy(11)) {
        if let Some(gi) = girth(&g) {
            let total = total_girth_cycles(&g);
            let by_vertex: u64 = (0..g.order()).map(|u| count_girth_cycles_vertex(&g, u, gi)).sum();
            let by_edge: u64 = g.edges().map(|e| count_girth_cycles_edge(&g, e, gi)).sum();
            prop_assert_eq!(by_vertex, gi as u64 * total);
            prop_assert_eq!(by_edge, gi as u64 * total);
            for u in 0..g.order() {
                let sig = vertex_signature(&g, u, gi);
                prop_assert_eq!(sig.sum(), 2 * count_girth_cycles_vertex(&g, u, gi));
                prop_assert!(sig.entries().windows(2).all(|w| w[0] >= w[1]));
            }
        } else {
            prop_assert_eq!(total_girth_cycles(&g), 0);
        }
    }

    #[test]
    fn girth_matches_enumeration(g in graph_strategy(9)) {
        prop_assert_eq!(girth(&g), oracle_girth(&g));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(70)) {
        let text = encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode(&text, 1).unwrap(), g);
    }

    #[test]
    fn even_bound_does_not_grow_with_lambda(k in 3u32..7, h in 2u32..5, bipartite in any::<bool>()) {
        let g = 2 * h;
        let cap = bounds::lambda_max(k, g).unwrap() as u64;
        let values: Vec<i128> = (1..=cap).map(|l| bounds::lb_even(k, g, l, bipartite).unwrap()).collect();
        prop_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        let moore = bounds::moore_bound(k, g).unwrap();
        prop_assert!(values.iter().all(|&v| v >= moore));
    }

    #[test]
    fn odd_bound_does_not_grow_with_lambda(k in 3u32..7, h in 1u32..4) {
        let g = 2 * h + 1;
        let cap = bounds::lambda_max(k, g).unwrap() as u64;
        let values: Vec<i128> = (1..=cap).map(|l| bounds::lb_odd(k, g, l).unwrap()).collect();
        prop_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(values[cap as usize - 1], bounds::moore_bound(k, g).unwrap());
    }
}

#[test]
fn bounds_hold_for_known_graphs() {
    let mut graphs = vec![
        Graph::petersen(),
        Graph::heawood(),
        Graph::cube(),
        Graph::octahedron(),
        Graph::generalized_petersen(13, 5).unwrap(),
        Graph::complete_bipartite(4, 4).unwrap(),
    ];
    for k in 3..=4 {
        graphs.extend(vgr_core::report::known_graphs(k).into_iter().map(|(g, _)| g));
    }
    for v in [6, 8, 10, 12] {
        graphs.extend(connected_regular_graphs(v, 3));
    }
    let mut checked = 0;
    for g in graphs {
        let Some((v, k, gi, l)) = oracle_profile(&g) else { continue };
        let report = bounds::best_lower_bound(k as u32, gi as u32, l).unwrap();
        let lb = report.best_lb.unwrap_or_else(|| panic!("vgr({v},{k},{gi},{l}) exists but was ruled out"));
        assert!(v as i128 >= lb, "vgr({v},{k},{gi},{l}) below bound {lb}");
        checked += 1;
    }
    assert!(checked > 20);
}

#[test]
fn quartic_girth_four_bound_below_extremal_order() {
    let lb = bounds::lb_even(4, 4, 1, false).unwrap();
    assert!(lb <= 20);
    assert!(bounds::best_lower_bound(4, 4, 1).unwrap().best_lb.unwrap() <= 20);
}
