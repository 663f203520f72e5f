//! Canonical labeling by partition refinement and individualization.
//!
//! The search follows the usual scheme: refine an ordered partition to an
//! equitable one, individualize a vertex of the first smallest non-singleton
//! cell, recurse. Every node carries a trace of its refinement; the canonical
//! leaf is the least `(trace sequence, relabeled adjacency)` over all leaves.
//! Subtrees with a worse trace are cut, and automorphisms discovered at equal
//! leaves (plus transpositions of twin vertices) cut sibling branches lying in
//! the same orbit.
//!
//! Graphs may carry several edge layers (for instance present edges and
//! declined edges in the generator) and an initial vertex coloring; both are
//! respected by the resulting form.

use crate::bitset::VertexSet;
use crate::cycles::girth;
use crate::graph::Graph;

/// Byte string that is equal for two inputs exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

struct Colored<'a> {
    n: usize,
    layers: Vec<&'a [VertexSet]>,
    colors: Option<&'a [u32]>,
}

/// Ordered partition stored as a permutation `lab` cut into cells; a cell
/// starting at position `s` ends before `end[s]`.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..self.end[start]]
    }

    fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.lab.len()).then(|| {
                let cur = s;
                s = self.end[s];
                cur
            })
        })
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// Moves `v` in front of its cell and makes it a singleton; returns the
    /// position of the new singleton.
    fn individualize(&mut self, start: usize, v: usize) -> usize {
        let end = self.end[start];
        let pos = (start..end).find(|&i| self.lab[i] == v).expect("vertex in cell");
        self.lab.swap(start, pos);
        self.end[start] = start + 1;
        self.end[start + 1] = end;
        self.cells += 1;
        start
    }
}

#[derive(Clone, Copy)]
struct Mix(u64);

impl Mix {
    fn add(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(29);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Trace {
    cells: usize,
    hash: u64,
}

struct Best {
    traces: Vec<Trace>,
    leaf: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    graph: &'a Colored<'a>,
    best: Option<Best>,
    autos: Vec<Vec<usize>>,
}

impl Colored<'_> {
    fn initial_partition(&self) -> Partition {
        let mut lab: Vec<usize> = (0..self.n).collect();
        let mut end = vec![0; self.n];
        match self.colors {
            None => {
                end[0] = self.n;
                Partition { lab, end, cells: 1 }
            }
            Some(colors) => {
                lab.sort_by_key(|&v| (colors[v], v));
                let mut cells = 0;
                let mut start = 0;
                for i in 1..=self.n {
                    if i == self.n || colors[lab[i]] != colors[lab[start]] {
                        end[start] = i;
                        cells += 1;
                        start = i;
                    }
                }
                Partition { lab, end, cells }
            }
        }
    }

    /// Refines to the coarsest equitable partition below `part`, using the
    /// cells starting at `splitters` (and every fragment created on the way)
    /// as splitters. Returns an isomorphism-invariant hash of the process.
    fn refine(&self, part: &mut Partition, splitters: &[usize]) -> u64 {
        let n = self.n;
        let mut mix = Mix(0x51_7c_c1_b7_27_22_0a_95);
        let mut queued = vec![false; n];
        let mut queue = std::collections::VecDeque::with_capacity(n);
        for &s in splitters {
            queued[s] = true;
            queue.push_back(s);
        }
        let mut count = vec![0u32; n];
        while let Some(s) = queue.pop_front() {
            queued[s] = false;
            if part.is_discrete() {
                break;
            }
            let mask: VertexSet = part.cell(s).iter().copied().collect();
            for (li, layer) in self.layers.iter().enumerate() {
                for v in 0..n {
                    count[v] = layer[v].intersection_len(&mask) as u32;
                }
                let mut start = 0;
                while start < n {
                    let end = part.end[start];
                    let next = end;
                    if end - start > 1 {
                        let cell = &mut part.lab[start..end];
                        let c0 = count[cell[0]];
                        if cell.iter().any(|&v| count[v] != c0) {
                            cell.sort_unstable_by_key(|&v| count[v]);
                            mix.add(((s as u64) << 40) ^ ((li as u64) << 32) ^ start as u64);
                            let mut a = start;
                            for i in start + 1..=end {
                                if i == end || count[part.lab[i]] != count[part.lab[a]] {
                                    mix.add(((count[part.lab[a]] as u64) << 32) ^ (i - a) as u64);
                                    part.end[a] = i;
                                    if a != start {
                                        part.cells += 1;
                                    }
                                    if !queued[a] {
                                        queued[a] = true;
                                        queue.push_back(a);
                                    }
                                    a = i;
                                }
                            }
                        }
                    }
                    start = next;
                }
            }
        }
        mix.add(part.cells as u64);
        mix.0
    }

    fn leaf(&self, part: &Partition) -> Vec<u64> {
        let lab = &part.lab;
        let mut pos = vec![0usize; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let words = self.n.div_ceil(64);
        let mut out = Vec::with_capacity(self.layers.len() * self.n * words + self.n);
        if let Some(colors) = self.colors {
            out.extend(lab.iter().map(|&v| colors[v] as u64));
        }
        for layer in &self.layers {
            for &v in lab {
                let base = out.len();
                out.resize(base + words, 0);
                for w in &layer[v] {
                    let p = pos[w];
                    out[base + p / 64] |= 1 << (p % 64);
                }
            }
        }
        out
    }

    /// Transpositions of vertices with identical neighborhoods in every layer.
    fn twin_transpositions(&self) -> Vec<Vec<usize>> {
        let mut autos = Vec::new();
        let mut claimed = vec![false; self.n];
        for x in 0..self.n {
            if claimed[x] {
                continue;
            }
            // chain (x y1), (y1 y2), ... so the class stays symmetric below x
            let mut last = x;
            for y in x + 1..self.n {
                if claimed[y] || self.colors.is_some_and(|c| c[x] != c[y]) {
                    continue;
                }
                let twins = self.layers.iter().all(|layer| {
                    let mut rx = layer[x];
                    let mut ry = layer[y];
                    rx.remove(y);
                    ry.remove(x);
                    rx == ry
                });
                if twins {
                    claimed[y] = true;
                    let mut perm: Vec<usize> = (0..self.n).collect();
                    perm.swap(last, y);
                    autos.push(perm);
                    last = y;
                }
            }
        }
        autos
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn orbit_roots(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.graph.n;
        let mut parent: Vec<usize> = (0..n).collect();
        for perm in &self.autos {
            if fixed.iter().all(|&v| perm[v] == v) {
                for (v, &image) in perm.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn compare_prefix(&self, traces: &[Trace]) -> std::cmp::Ordering {
        match &self.best {
            None => std::cmp::Ordering::Less,
            Some(best) => {
                let len = traces.len().min(best.traces.len());
                traces[..len].cmp(&best.traces[..len])
            }
        }
    }

    fn visit(&mut self, part: Partition, prefix: &mut Vec<usize>, traces: &mut Vec<Trace>) {
        if part.is_discrete() {
            self.visit_leaf(&part, traces);
            return;
        }
        let target = part
            .starts()
            .filter(|&s| part.end[s] - s > 1)
            .min_by_key(|&s| part.end[s] - s)
            .expect("non-discrete partition");
        let mut candidates = part.cell(target).to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        let mut autos_seen = usize::MAX;
        for w in candidates {
            if !explored.is_empty() {
                if autos_seen != self.autos.len() {
                    roots = self.orbit_roots(prefix);
                    autos_seen = self.autos.len();
                }
                if explored.iter().any(|&e| roots[e] == roots[w]) {
                    continue;
                }
            }
            let mut child = part.clone();
            let single = child.individualize(target, w);
            let hash = self.graph.refine(&mut child, &[single]);
            traces.push(Trace { cells: child.cells, hash });
            if self.compare_prefix(traces) != std::cmp::Ordering::Greater {
                prefix.push(w);
                self.visit(child, prefix, traces);
                prefix.pop();
                explored.push(w);
            }
            traces.pop();
        }
    }

    fn visit_leaf(&mut self, part: &Partition, traces: &[Trace]) {
        let leaf = self.graph.leaf(part);
        let lab = &part.lab;
        let replace = match &self.best {
            None => true,
            Some(best) => match traces.cmp(&best.traces[..]).then_with(|| leaf.cmp(&best.leaf)) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    let mut perm = vec![0usize; self.graph.n];
                    for (i, &v) in best.lab.iter().enumerate() {
                        perm[v] = lab[i];
                    }
                    self.autos.push(perm);
                    false
                }
            },
        };
        if replace {
            self.best = Some(Best { traces: traces.to_vec(), leaf, lab: lab.clone() });
        }
    }
}

/// Returns `lab` with `lab[i]` the vertex placed at canonical position `i`.
fn canonical_lab(graph: &Colored) -> Vec<usize> {
    let mut part = graph.initial_partition();
    let starts: Vec<usize> = part.starts().collect();
    let hash = graph.refine(&mut part, &starts);
    let root = Trace { cells: part.cells, hash };
    let mut search = Search { graph, best: None, autos: graph.twin_transpositions() };
    search.visit(part, &mut Vec::new(), &mut vec![root]);
    search.best.expect("at least one leaf").lab
}

fn form_from_lab(graph: &Colored, lab: &[usize]) -> CanonicalForm {
    let n = graph.n;
    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(n as u16).to_le_bytes());
    bytes.push(graph.layers.len() as u8);
    if let Some(colors) = graph.colors {
        bytes.push(1);
        for &v in lab {
            bytes.extend_from_slice(&colors[v].to_le_bytes());
        }
    } else {
        bytes.push(0);
    }
    for layer in &graph.layers {
        let mut acc = 0u8;
        let mut nbits = 0;
        for i in 0..n {
            for j in i + 1..n {
                acc = acc << 1 | layer[lab[i]].contains(lab[j]) as u8;
                nbits += 1;
                if nbits == 8 {
                    bytes.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push(acc << (8 - nbits));
        }
    }
    CanonicalForm(bytes)
}

/// Canonical form of `graph`, optionally respecting a vertex coloring
/// (isomorphisms must map each vertex to one of the same color).
pub fn canonical_form(graph: &Graph, vertex_colors: Option<&[u32]>) -> CanonicalForm {
    if let Some(c) = vertex_colors {
        assert_eq!(c.len(), graph.order(), "one color per vertex");
    }
    let colored = Colored { n: graph.order(), layers: vec![graph.rows()], colors: vertex_colors };
    let lab = canonical_lab(&colored);
    form_from_lab(&colored, &lab)
}

/// Canonical form of a graph whose vertex pairs are split into several
/// disjoint edge layers. Isomorphisms must preserve every layer.
pub fn canonical_form_layers(order: usize, layers: &[&[VertexSet]]) -> CanonicalForm {
    assert!(layers.iter().all(|l| l.len() == order));
    let colored = Colored { n: order, layers: layers.to_vec(), colors: None };
    let lab = canonical_lab(&colored);
    form_from_lab(&colored, &lab)
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(graph: &Graph) -> Graph {
    let colored = Colored { n: graph.order(), layers: vec![graph.rows()], colors: None };
    let lab = canonical_lab(&colored);
    let mut perm = vec![0usize; graph.order()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    graph.relabel(&perm)
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|u| g.degree(u)).collect();
    d.sort_unstable();
    d
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order()
        || a.edge_count() != b.edge_count()
        || degree_sequence(a) != degree_sequence(b)
        || girth(a) != girth(b)
    {
        return false;
    }
    canonical_form(a, None) == canonical_form(b, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_vs_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert_ne!(canonical_form(&c6, None), canonical_form(&tt, None));
        assert!(!are_isomorphic(&c6, &Graph::complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn relabeling_invariance_on_symmetric_graphs() {
        for g in [Graph::petersen(), Graph::heawood(), Graph::cube(), Graph::complete(7).unwrap()] {
            let n = g.order();
            let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            let perm = if sorted == (0..n).collect::<Vec<_>>() { perm } else { (0..n).rev().collect() };
            assert_eq!(canonical_form(&g, None), canonical_form(&g.relabel(&perm), None));
        }
    }

    #[test]
    fn colors_are_respected() {
        let p = Graph::path(3).unwrap();
        let a = canonical_form(&p, Some(&[1, 0, 0]));
        let b = canonical_form(&p, Some(&[0, 0, 1]));
        let c = canonical_form(&p, Some(&[0, 1, 0]));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn isolated_vertices_are_cheap() {
        let mut g = Graph::new(200).unwrap();
        g.add_edge(0, 1).unwrap();
        let f = canonical_form(&g, None);
        let mut h = Graph::new(200).unwrap();
        h.add_edge(150, 7).unwrap();
        assert_eq!(f, canonical_form(&h, None));
    }
}
