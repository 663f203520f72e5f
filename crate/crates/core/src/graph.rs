//! Simple undirected graphs stored as adjacency bit rows.

use crate::bitset::{VertexSet, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} outside 1..={MAX_ORDER}")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// An undirected simple graph on vertices `0..order`.
///
/// Rows are symmetric with an empty diagonal; loops and parallel edges are
/// rejected when edges are inserted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::InvalidOrder(order));
        }
        Ok(Graph { adj: vec![VertexSet::new(); order] })
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::new(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from rows that are already known to be symmetric and
    /// loop-free. Used by internal code that maintains those invariants itself.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        debug_assert!(
            (0..adj.len()).all(|u| !adj[u].contains(u) && adj[u].iter().all(|v| v < adj.len() && adj[v].contains(u)))
        );
        Graph { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Removes the edge if present; returns whether it was.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.order() || v >= self.order() || !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        true
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.order()).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in &frontier {
                next.union_with(&self.adj[u]);
            }
            frontier = next.difference(&seen);
            seen.union_with(&frontier);
        }
        seen.len() == self.order()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The graph with vertex `u` renamed to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![VertexSet::new(); self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// Disjoint union placing `other` after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut g = Graph::new(n + other.order())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v)?;
        }
        Ok(g)
    }

    // ---- named families -------------------------------------------------

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidOrder(n));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// Generalized Petersen graph `GP(n, s)`: outer cycle `0..n`, spokes to
    /// `n..2n`, inner vertex `i` adjacent to `i ± s`.
    pub fn generalized_petersen(n: usize, s: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(2 * n)?;
        for i in 0..n {
            g.add_edge(i, (i + 1) % n)?;
            g.add_edge(i, n + i)?;
            let j = (i + s) % n;
            if !g.has_edge(n + i, n + j) {
                g.add_edge(n + i, n + j)?;
            }
        }
        Ok(g)
    }

    pub fn petersen() -> Graph {
        Graph::generalized_petersen(5, 2).expect("fixed parameters")
    }

    /// Hamiltonian graph given in LCF notation `pattern^repeats`.
    pub fn from_lcf(pattern: &[isize], repeats: usize) -> Result<Graph, GraphError> {
        let n = pattern.len() * repeats;
        let mut g = Graph::cycle(n)?;
        for i in 0..n {
            let j = (i as isize + pattern[i % pattern.len()]).rem_euclid(n as isize) as usize;
            if i != j && !g.has_edge(i, j) {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    pub fn heawood() -> Graph {
        Graph::from_lcf(&[5, -5], 7).expect("fixed parameters")
    }

    /// Octahedron `K_{2,2,2}`.
    pub fn octahedron() -> Graph {
        let mut g = Graph::complete(6).expect("fixed parameters");
        for i in 0..3 {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        g
    }

    pub fn cube() -> Graph {
        Graph::from_edges(8, (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v))
            .expect("fixed parameters")
    }
}
