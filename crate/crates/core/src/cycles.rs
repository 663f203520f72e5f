//! Girth and girth-cycle counting.
//!
//! All counting routines assume the graph has no cycle shorter than the `g`
//! they are given. Under that assumption every `g`-cycle is geodesic, so a
//! cycle through a root splits at its midpoint into two shortest paths and can
//! be counted from the BFS layers around the root alone:
//!
//! * odd `g = 2h + 1`: one horizontal edge between two vertices at depth `h`;
//! * even `g = 2h`: two distinct parents at depth `h - 1` of a depth-`h` vertex.
//!
//! The generator relies on this to count on partial graphs whose girth is at
//! least the target `g`.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};

/// Length of a shortest cycle, `None` for forests.
pub fn girth(graph: &Graph) -> Option<usize> {
    let n = graph.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in graph.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// BFS layers `L[0] = {root}`, `L[d]` = vertices at distance exactly `d`,
/// for `d <= depth`.
pub(crate) fn layers(graph: &Graph, root: usize, depth: usize) -> Vec<VertexSet> {
    let mut out = Vec::with_capacity(depth + 1);
    let mut seen = VertexSet::singleton(root);
    out.push(seen);
    for _ in 0..depth {
        let mut next = VertexSet::new();
        for u in out.last().unwrap() {
            next.union_with(graph.neighbors(u));
        }
        let next = next.difference(&seen);
        seen.union_with(&next);
        out.push(next);
    }
    out
}

fn check_g(g: usize) {
    assert!(g >= 3, "girth parameter must be at least 3, got {g}");
}

/// Number of `g`-cycles through `u`, for a graph with girth at least `g`.
pub fn count_girth_cycles_vertex(graph: &Graph, u: usize, g: usize) -> u64 {
    check_g(g);
    let h = g / 2;
    let ls = layers(graph, u, h);
    let top = &ls[h];
    if g % 2 == 1 {
        let twice: usize = top.iter().map(|x| graph.neighbors(x).intersection_len(top)).sum();
        (twice / 2) as u64
    } else {
        let below = &ls[h - 1];
        top.iter()
            .map(|w| {
                let p = graph.neighbors(w).intersection_len(below) as u64;
                p * p.saturating_sub(1) / 2
            })
            .sum()
    }
}

/// Number of `g`-cycles through the edge `{a, b}`, for a graph with girth at
/// least `g`. Returns 0 when `{a, b}` is not an edge.
pub fn count_girth_cycles_edge(graph: &Graph, (a, b): (usize, usize), g: usize) -> u64 {
    check_g(g);
    if !graph.has_edge(a, b) {
        return 0;
    }
    let h = g / 2;
    let la = layers(graph, a, h);
    let lb = layers(graph, b, h);
    if g % 2 == 1 {
        // the vertex opposite the edge sits at distance h from both ends
        la[h].intersection_len(&lb[h]) as u64
    } else {
        let side_a = la[h - 1].intersection(&lb[h]);
        let side_b = lb[h - 1].intersection(&la[h]);
        side_a.iter().map(|x| graph.neighbors(x).intersection_len(&side_b) as u64).sum()
    }
}

/// Per-edge girth-cycle counts at one vertex, sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature(pub Vec<u64>);

impl Signature {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn vertex_signature(graph: &Graph, u: usize, g: usize) -> Signature {
    let mut entries: Vec<u64> = graph.neighbors(u).iter().map(|w| count_girth_cycles_edge(graph, (u, w), g)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Signature(entries)
}

/// Total number of shortest cycles in the graph.
pub fn total_girth_cycles(graph: &Graph) -> u64 {
    match girth(graph) {
        None => 0,
        Some(g) => {
            let through: u64 = (0..graph.order()).map(|u| count_girth_cycles_vertex(graph, u, g)).sum();
            through / g as u64
        }
    }
}

/// Parameters certifying that a graph is vertex-girth-regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VgrProfile {
    pub v: usize,
    pub k: usize,
    pub g: usize,
    pub lambda: u64,
    pub is_egr: bool,
    pub is_bipartite: bool,
}

impl std::fmt::Display for VgrProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "vgr({},{},{},{})", self.v, self.k, self.g, self.lambda)?;
        if self.is_egr {
            write!(f, " egr")?;
        }
        if self.is_bipartite {
            write!(f, " bipartite")?;
        }
        Ok(())
    }
}

/// Why a connected graph is not vertex-girth-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotVgr {
    Irregular { vertex: usize, degree: usize, expected: usize },
    Acyclic,
    UnequalCounts { first: usize, first_count: u64, other: usize, other_count: u64 },
}

impl std::fmt::Display for NotVgr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotVgr::Irregular { vertex, degree, expected } => {
                write!(f, "vertex {vertex} has degree {degree}, expected {expected}")
            }
            NotVgr::Acyclic => write!(f, "graph has no cycles"),
            NotVgr::UnequalCounts { first, first_count, other, other_count } => {
                write!(f, "vertex {first} lies on {first_count} girth-cycles but vertex {other} on {other_count}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Vgr(VgrProfile),
    NotVgr(NotVgr),
}

impl Classification {
    pub fn profile(&self) -> Option<&VgrProfile> {
        match self {
            Classification::Vgr(p) => Some(p),
            Classification::NotVgr(_) => None,
        }
    }
}

/// Decides vertex-girth-regularity of a connected graph.
pub fn classify(graph: &Graph) -> Result<Classification, GraphError> {
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let k = graph.degree(0);
    if let Some(vertex) = (1..graph.order()).find(|&u| graph.degree(u) != k) {
        return Ok(Classification::NotVgr(NotVgr::Irregular { vertex, degree: graph.degree(vertex), expected: k }));
    }
    let Some(g) = girth(graph) else {
        return Ok(Classification::NotVgr(NotVgr::Acyclic));
    };
    let lambda = count_girth_cycles_vertex(graph, 0, g);
    for u in 1..graph.order() {
        let c = count_girth_cycles_vertex(graph, u, g);
        if c != lambda {
            return Ok(Classification::NotVgr(NotVgr::UnequalCounts {
                first: 0,
                first_count: lambda,
                other: u,
                other_count: c,
            }));
        }
    }
    let mut edge_counts = graph.edges().map(|e| count_girth_cycles_edge(graph, e, g));
    let first = edge_counts.next();
    let is_egr = edge_counts.all(|c| Some(c) == first);
    Ok(Classification::Vgr(VgrProfile { v: graph.order(), k, g, lambda, is_egr, is_bipartite: graph.is_bipartite() }))
}
