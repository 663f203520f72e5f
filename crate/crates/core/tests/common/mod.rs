//! Slow reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::HashSet;
use vgr_core::canon::canonical_form;
use vgr_core::Graph;

/// Every simple cycle of exactly `len` vertices, each listed once, starting at
/// its smallest vertex.
pub fn cycles_of_length(graph: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn extend(graph: &Graph, len: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            // each cycle is found in both directions; keep one
            if graph.has_edge(last, start) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for w in graph.neighbors(last).iter() {
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(graph, len, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    let mut on_path = vec![false; graph.order()];
    for s in 0..graph.order() {
        on_path[s] = true;
        extend(graph, len, &mut vec![s], &mut on_path, &mut out);
        on_path[s] = false;
    }
    out
}

/// Shortest cycle length by trying lengths in increasing order.
pub fn oracle_girth(graph: &Graph) -> Option<usize> {
    (3..=graph.order()).find(|&len| !cycles_of_length(graph, len).is_empty())
}

pub fn oracle_vertex_counts(graph: &Graph, g: usize) -> Vec<u64> {
    let mut counts = vec![0; graph.order()];
    for c in cycles_of_length(graph, g) {
        for v in c {
            counts[v] += 1;
        }
    }
    counts
}

pub fn oracle_edge_count(graph: &Graph, (a, b): (usize, usize), g: usize) -> u64 {
    cycles_of_length(graph, g)
        .iter()
        .filter(|c| {
            (0..c.len()).any(|i| {
                let (x, y) = (c[i], c[(i + 1) % c.len()]);
                (x, y) == (a, b) || (x, y) == (b, a)
            })
        })
        .count() as u64
}

/// `(v, k, g, λ)` when the graph is connected, regular, has a cycle and all
/// vertices lie on equally many girth-cycles.
pub fn oracle_profile(graph: &Graph) -> Option<(usize, usize, usize, u64)> {
    let n = graph.order();
    if n == 0 || !connected(graph) {
        return None;
    }
    let k = graph.degree(0);
    if (0..n).any(|u| graph.degree(u) != k) {
        return None;
    }
    let g = oracle_girth(graph)?;
    let counts = oracle_vertex_counts(graph, g);
    counts.iter().all(|&c| c == counts[0]).then_some((n, k, g, counts[0]))
}

fn connected(graph: &Graph) -> bool {
    let n = graph.order();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in graph.neighbors(u).iter() {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Isomorphism test by trying vertex bijections, extending a partial map one
/// vertex at a time and backing out as soon as an adjacency disagrees.
pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    fn assign(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.order() {
            return true;
        }
        for j in 0..b.order() {
            if used[j] || a.degree(i) != b.degree(j) {
                continue;
            }
            if (0..i).all(|p| a.has_edge(p, i) == b.has_edge(map[p], j)) {
                used[j] = true;
                map.push(j);
                if assign(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.order()).map(|u| a.degree(u)).collect();
    let mut db: Vec<usize> = (0..b.order()).map(|u| b.degree(u)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && assign(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}

fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        for mut rest in combinations(&items[i + 1..], r - 1) {
            rest.insert(0, items[i]);
            out.push(rest);
        }
    }
    out
}

/// All connected `k`-regular graphs of order `v` up to isomorphism.
///
/// Each step saturates one vertex in every possible way; isomorphic partial
/// graphs are expanded once.
pub fn connected_regular_graphs(v: usize, k: usize) -> Vec<Graph> {
    fn expand(graph: Graph, k: usize, seen: &mut HashSet<(usize, Vec<u8>)>, out: &mut Vec<Graph>) {
        let n = graph.order();
        let open: Vec<usize> = (0..n).filter(|&u| graph.degree(u) < k).collect();
        if open.is_empty() {
            if connected(&graph) {
                out.push(graph);
            }
            return;
        }
        if closed_component(&graph, k) {
            return;
        }
        let u = *open.iter().max_by_key(|&&u| (graph.degree(u), std::cmp::Reverse(u))).unwrap();
        let need = k - graph.degree(u);
        let touched: Vec<usize> =
            open.iter().copied().filter(|&w| w != u && !graph.has_edge(u, w) && graph.degree(w) > 0).collect();
        let fresh: Vec<usize> = open.iter().copied().filter(|&w| w != u && graph.degree(w) == 0).collect();
        for from_fresh in 0..=need.min(fresh.len()) {
            if need - from_fresh > touched.len() {
                continue;
            }
            for mut chosen in combinations(&touched, need - from_fresh) {
                chosen.extend_from_slice(&fresh[..from_fresh]);
                let mut child = graph.clone();
                for &w in &chosen {
                    child.add_edge(u, w).unwrap();
                }
                let key = (child.edge_count(), canonical_form(&child, None).as_bytes().to_vec());
                if seen.insert(key) {
                    expand(child, k, seen, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    if v <= k || (v * k) % 2 == 1 {
        return out;
    }
    expand(Graph::new(v).unwrap(), k, &mut HashSet::new(), &mut out);
    let mut unique = HashSet::new();
    out.retain(|g| unique.insert(canonical_form(g, None)));
    out
}

/// True when some component smaller than the whole graph has no open vertex.
fn closed_component(graph: &Graph, k: usize) -> bool {
    let n = graph.order();
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] || graph.degree(s) == 0 {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let (mut size, mut open) = (0, false);
        while let Some(u) = stack.pop() {
            size += 1;
            open |= graph.degree(u) < k;
            for w in graph.neighbors(u).iter() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !open && size < n {
            return true;
        }
    }
    false
}
