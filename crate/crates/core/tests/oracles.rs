mod common;

use common::*;
use vgr_core::canon::are_isomorphic;
use vgr_core::Graph;

#[test]
fn cycle_enumeration_on_known_graphs() {
    let k4 = Graph::complete(4).unwrap();
    assert_eq!(cycles_of_length(&k4, 3).len(), 4);
    assert_eq!(cycles_of_length(&k4, 4).len(), 3);
    let p = Graph::petersen();
    assert_eq!(oracle_girth(&p), Some(5));
    assert_eq!(cycles_of_length(&p, 5).len(), 12);
    assert_eq!(oracle_vertex_counts(&p, 5), vec![6; 10]);
    assert_eq!(oracle_edge_count(&p, (0, 1), 5), 4);
    assert_eq!(oracle_girth(&Graph::path(5).unwrap()), None);
    assert_eq!(oracle_profile(&Graph::heawood()), Some((14, 3, 6, 12)));
}

#[test]
fn permutation_isomorphism() {
    let p = Graph::petersen();
    let gp = Graph::generalized_petersen(5, 2).unwrap();
    assert!(isomorphic_by_permutation(&p, &gp));
    let prism = Graph::generalized_petersen(5, 1).unwrap();
    assert!(!isomorphic_by_permutation(&p, &prism));
    let perm = [3, 7, 1, 0, 9, 2, 5, 8, 4, 6];
    assert!(isomorphic_by_permutation(&p, &p.relabel(&perm)));
    assert!(are_isomorphic(&p, &p.relabel(&perm)));
}

#[test]
fn regular_graph_counts() {
    // connected cubic graphs on 4..=12 vertices and quartic graphs on 5..=9
    let cubic = [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)];
    for (v, count) in cubic {
        assert_eq!(connected_regular_graphs(v, 3).len(), count, "cubic order {v}");
    }
    let quartic = [(5, 1), (6, 1), (7, 2), (8, 6), (9, 16)];
    for (v, count) in quartic {
        assert_eq!(connected_regular_graphs(v, 4).len(), count, "quartic order {v}");
    }
}
