//! Graphs drawn in the literature on vertex-girth-regular graphs.

use vgr_core::cycles::vertex_signature;
use vgr_core::{classify, Graph, VgrProfile};

fn profile(graph: &Graph) -> VgrProfile {
    *classify(graph).unwrap().profile().expect("vertex-girth-regular")
}

fn tuple(p: &VgrProfile) -> (usize, usize, usize, u64) {
    (p.v, p.k, p.g, p.lambda)
}

#[test]
fn asymmetric_edge_girth_regular_quartic() {
    let edges = [
        (0, 3),
        (0, 5),
        (0, 6),
        (0, 13),
        (1, 2),
        (1, 4),
        (1, 5),
        (1, 16),
        (2, 6),
        (2, 7),
        (2, 19),
        (3, 7),
        (3, 8),
        (3, 17),
        (4, 10),
        (4, 15),
        (4, 18),
        (5, 9),
        (5, 10),
        (6, 9),
        (6, 11),
        (7, 11),
        (7, 12),
        (8, 10),
        (8, 12),
        (8, 14),
        (9, 15),
        (9, 18),
        (10, 11),
        (11, 14),
        (12, 15),
        (12, 16),
        (13, 14),
        (13, 17),
        (13, 18),
        (14, 19),
        (15, 17),
        (16, 17),
        (16, 19),
        (18, 19),
    ];
    let g = Graph::from_edges(20, edges).unwrap();
    let p = profile(&g);
    assert_eq!(tuple(&p), (20, 4, 4, 2));
    assert!(p.is_egr && !p.is_bipartite);
}

#[test]
fn mixed_signatures_on_25_vertices() {
    // vertex i (mod 25) is joined to i + d for the offsets of its residue class
    let offsets: [&[usize]; 5] = [&[1, 4, 8, 24], &[1, 17, 21, 24], &[1, 4, 12, 24], &[1, 8, 17, 24], &[1, 13, 21, 24]];
    let mut g = Graph::new(25).unwrap();
    for i in 1..=25 {
        for &d in offsets[i % 5] {
            let (a, b) = (i % 25, (i + d) % 25);
            if !g.has_edge(a, b) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    let p = profile(&g);
    assert_eq!(tuple(&p), (25, 4, 5, 8));
    let mut uneven = 0;
    for u in 0..25 {
        let sig = vertex_signature(&g, u, 5);
        match sig.entries() {
            [5, 4, 4, 3] => uneven += 1,
            [4, 4, 4, 4] => {}
            other => panic!("unexpected signature {other:?}"),
        }
    }
    assert_eq!(uneven, 20);
}

#[test]
fn girth_eight_pair() {
    let a = Graph::from_lcf(&[8, 21, -8], 14).unwrap();
    let p = profile(&a);
    assert_eq!(tuple(&p), (42, 3, 8, 8));
    assert!(!p.is_bipartite);
    let b = Graph::from_lcf(&[-19, 19, -7, 7], 12).unwrap();
    assert_eq!(tuple(&profile(&b)), (48, 3, 8, 9));
}

#[test]
fn generalized_petersen_13_5() {
    let g = Graph::generalized_petersen(13, 5).unwrap();
    assert_eq!(tuple(&profile(&g)), (26, 3, 7, 7));
}
