//! Exhaustive isomorph-free generation of vertex-girth-regular graphs.
//!
//! The search starts from the Moore tree of the requested `(k, g)` padded with
//! isolated vertices and repeatedly picks one candidate edge, branching into
//! "add it" and "decline it". Candidates are pairs whose insertion keeps the
//! girth at least `g`, every degree at most `k` and every vertex on at most
//! `λ` girth-cycles.

use crate::bitset::VertexSet;
use crate::bounds::{self, BoundsError, Rule, Verdict};
use crate::canon::{canonical_form, canonical_form_layers, canonical_graph, CanonicalForm};
use crate::cycles::{classify, count_girth_cycles_vertex, Classification};
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no such graph exists ({})", .0.name())]
    ParameterImpossible(Rule),
    #[error("time budget exceeded{}", verified_lb.map(|v| format!(" (no graph below order {v})")).unwrap_or_default())]
    BudgetExceeded { verified_lb: Option<usize> },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerateOptions {
    pub degree_deficit: bool,
    pub cycle_balance: bool,
    pub isomorphism: bool,
    /// In the decline branch of an edge to an untouched isolated vertex,
    /// decline the same edge to every other untouched isolated vertex.
    pub fresh_vertex_symmetry: bool,
    /// Isomorphism pruning is applied while the graph has at most this many
    /// edges.
    pub iso_max_edges: usize,
    /// Worker threads; 0 uses the rayon default, 1 runs on the calling thread.
    pub threads: usize,
    /// Branching depth at which the tree is split into parallel subtasks;
    /// `None` means `2k`.
    pub split_depth: Option<usize>,
    pub deadline: Option<Instant>,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            degree_deficit: true,
            cycle_balance: true,
            isomorphism: true,
            fresh_vertex_symmetry: true,
            iso_max_edges: usize::MAX,
            threads: 0,
            split_depth: None,
            deadline: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub nodes: u64,
    pub completed: u64,
    pub accepted: u64,
    pub pruned_degree_deficit: u64,
    pub pruned_no_candidate: u64,
    pub pruned_cycle_balance: u64,
    pub pruned_isomorphic: u64,
    pub fresh_declines: u64,
    pub subtasks: u64,
}

impl Stats {
    fn merge(&mut self, other: &Stats) {
        self.nodes += other.nodes;
        self.completed += other.completed;
        self.accepted += other.accepted;
        self.pruned_degree_deficit += other.pruned_degree_deficit;
        self.pruned_no_candidate += other.pruned_no_candidate;
        self.pruned_cycle_balance += other.pruned_cycle_balance;
        self.pruned_isomorphic += other.pruned_isomorphic;
        self.fresh_declines += other.fresh_declines;
        self.subtasks += other.subtasks;
    }
}

/// Moore tree of `(k, g)`: vertex-rooted for odd `g`, rooted at the edge
/// `{0, 1}` for even `g`. Vertices are numbered breadth-first.
pub fn moore_tree(k: usize, g: usize) -> Result<Graph, GenerateError> {
    if k < 2 || g < 3 {
        return Err(GenerateError::InvalidParameters(format!("moore_tree needs k >= 2, g >= 3 (k={k}, g={g})")));
    }
    let order = bounds::moore_bound(k as u32, g as u32)?;
    if order > crate::bitset::MAX_ORDER as i128 {
        return Err(GenerateError::InvalidParameters(format!("Moore tree of order {order} is too large")));
    }
    let mut edges = Vec::new();
    let mut level: Vec<usize>;
    let mut next_id;
    let depth;
    if g % 2 == 1 {
        level = Vec::new();
        next_id = 1;
        for _ in 0..k {
            edges.push((0, next_id));
            level.push(next_id);
            next_id += 1;
        }
        depth = (g - 1) / 2;
    } else {
        edges.push((0, 1));
        level = vec![0, 1];
        next_id = 2;
        let mut first = Vec::new();
        for &r in &level {
            for _ in 0..k - 1 {
                edges.push((r, next_id));
                first.push(next_id);
                next_id += 1;
            }
        }
        level = first;
        depth = g / 2 - 1;
    }
    for _ in 1..depth {
        let mut next = Vec::new();
        for &p in &level {
            for _ in 0..k - 1 {
                edges.push((p, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        level = next;
    }
    debug_assert_eq!(next_id as i128, order);
    Ok(Graph::from_edges(next_id, edges).expect("tree edges are simple"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Params {
    v: usize,
    k: usize,
    g: usize,
    lambda: u64,
}

const FAR: u8 = u8::MAX;

/// Distances and shortest-path counts from every vertex, up to depth `g - 1`.
#[derive(Default)]
struct Balls {
    n: usize,
    dist: Vec<u8>,
    sigma: Vec<u64>,
}

impl Balls {
    fn resize(&mut self, n: usize) {
        self.n = n;
        self.dist.resize(n * n, FAR);
        self.sigma.resize(n * n, 0);
    }

    fn compute(&mut self, adj: &[VertexSet], depth: usize) {
        let n = adj.len();
        self.resize(n);
        for x in 0..n {
            self.compute_row(adj, x, depth);
        }
    }

    fn compute_row(&mut self, adj: &[VertexSet], x: usize, depth: usize) {
        let n = self.n;
        let row = x * n;
        self.dist[row..row + n].fill(FAR);
        self.sigma[row..row + n].fill(0);
        self.dist[row + x] = 0;
        self.sigma[row + x] = 1;
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        for d in 1..=depth {
            let mut next = VertexSet::new();
            for u in &frontier {
                next.union_with(&adj[u]);
            }
            let next = next.difference(&seen);
            if next.is_empty() {
                break;
            }
            for w in &next {
                self.dist[row + w] = d as u8;
                self.sigma[row + w] = adj[w].intersection(&frontier).iter().map(|p| self.sigma[row + p]).sum();
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    #[inline]
    fn dist(&self, x: usize, y: usize) -> u8 {
        self.dist[x * self.n + y]
    }

    #[inline]
    fn sigma(&self, x: usize, y: usize) -> u64 {
        self.sigma[x * self.n + y]
    }
}

/// Partial graph together with its candidate and declined edges.
#[derive(Clone)]
pub struct SearchState {
    params: Params,
    adj: Vec<VertexSet>,
    valid: Vec<VertexSet>,
    declined: Vec<VertexSet>,
    cyc: Vec<u64>,
    edge_count: usize,
}

impl std::fmt::Debug for SearchState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchState")
            .field("graph", &self.graph())
            .field("edge_count", &self.edge_count)
            .field("cyc", &self.cyc)
            .finish()
    }
}

impl SearchState {
    /// Moore tree of `(k, g)` plus isolated vertices up to order `v`.
    pub fn initial(v: usize, k: usize, g: usize, lambda: u64) -> Result<Self, GenerateError> {
        let tree = moore_tree(k, g)?;
        if v < tree.order() || v > crate::bitset::MAX_ORDER {
            return Err(GenerateError::InvalidParameters(format!(
                "order {v} outside {}..={}",
                tree.order(),
                crate::bitset::MAX_ORDER
            )));
        }
        let mut adj = vec![VertexSet::new(); v];
        adj[..tree.order()].copy_from_slice(tree.rows());
        SearchState::from_partial(v, k, g, lambda, adj)
    }

    /// A state for an arbitrary partial graph of girth at least `g`.
    pub fn from_graph(graph: &Graph, k: usize, g: usize, lambda: u64) -> Result<Self, GenerateError> {
        SearchState::from_partial(graph.order(), k, g, lambda, graph.rows().to_vec())
    }

    fn from_partial(v: usize, k: usize, g: usize, lambda: u64, adj: Vec<VertexSet>) -> Result<Self, GenerateError> {
        if k < 2 || g < 3 {
            return Err(GenerateError::InvalidParameters(format!("need k >= 2, g >= 3 (k={k}, g={g})")));
        }
        let graph = Graph::from_rows_unchecked(adj.clone());
        if (0..v).any(|u| graph.degree(u) > k) || crate::cycles::girth(&graph).is_some_and(|gg| gg < g) {
            return Err(GenerateError::InvalidParameters("partial graph violates degree or girth".into()));
        }
        let cyc: Vec<u64> = (0..v).map(|u| count_girth_cycles_vertex(&graph, u, g)).collect();
        let mut valid = vec![VertexSet::new(); v];
        for (x, row) in valid.iter_mut().enumerate() {
            *row = VertexSet::full(v).difference(&adj[x]);
            row.remove(x);
        }
        let mut state = SearchState {
            params: Params { v, k, g, lambda },
            edge_count: graph.edge_count(),
            adj,
            valid,
            declined: vec![VertexSet::new(); v],
            cyc,
        };
        let mut balls = Balls::default();
        state.refresh(&mut balls);
        Ok(state)
    }

    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.adj.clone())
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn cycle_count(&self, u: usize) -> u64 {
        self.cyc[u]
    }

    pub fn candidates(&self, u: usize) -> &VertexSet {
        &self.valid[u]
    }

    pub fn declined(&self, u: usize) -> &VertexSet {
        &self.declined[u]
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count * 2 == self.params.v * self.params.k
    }

    fn admissible(&self, balls: &Balls, x: usize, y: usize) -> bool {
        let Params { k, g, lambda, .. } = self.params;
        if self.adj[x].len() >= k || self.adj[y].len() >= k {
            return false;
        }
        let d = balls.dist(x, y);
        if d == FAR {
            return true;
        }
        let target = (g - 1) as u8;
        if d < target {
            return false;
        }
        if d == target {
            for w in 0..self.params.v {
                let (dx, dy) = (balls.dist(x, w), balls.dist(y, w));
                if dx != FAR && dy != FAR && dx + dy == target {
                    let extra = balls.sigma(x, w) * balls.sigma(y, w);
                    if self.cyc[w] + extra > lambda {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Drops every candidate and declined pair that can no longer be added.
    fn refresh(&mut self, balls: &mut Balls) {
        balls.compute(&self.adj, self.params.g - 1);
        for x in 0..self.params.v {
            let open = self.valid[x].union(&self.declined[x]);
            for y in &open {
                if y > x && !self.admissible(balls, x, y) {
                    self.valid[x].remove(y);
                    self.valid[y].remove(x);
                    self.declined[x].remove(y);
                    self.declined[y].remove(x);
                }
            }
        }
    }

    /// Adds a candidate edge, updating cycle counts and candidates.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        let mut balls = Balls::default();
        self.add_edge_with(a, b, &mut balls);
    }

    fn add_edge_with(&mut self, a: usize, b: usize, balls: &mut Balls) {
        assert!(self.valid[a].contains(b), "edge {a}-{b} is not a candidate");
        let g = self.params.g;
        let target = (g - 1) as u8;
        balls.resize(self.params.v);
        balls.compute_row(&self.adj, a, g - 1);
        balls.compute_row(&self.adj, b, g - 1);
        if balls.dist(a, b) == target {
            for w in 0..self.params.v {
                let (da, db) = (balls.dist(a, w), balls.dist(b, w));
                if da != FAR && db != FAR && da + db == target {
                    self.cyc[w] += balls.sigma(a, w) * balls.sigma(b, w);
                }
            }
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.valid[a].remove(b);
        self.valid[b].remove(a);
        self.edge_count += 1;
        self.refresh(balls);
        #[cfg(debug_assertions)]
        {
            let graph = self.graph();
            for u in 0..self.params.v {
                debug_assert_eq!(self.cyc[u], count_girth_cycles_vertex(&graph, u, g), "cycle cache at {u}");
            }
        }
    }

    /// Moves a candidate edge to the declined set.
    pub fn decline_edge(&mut self, a: usize, b: usize) {
        assert!(self.valid[a].contains(b), "edge {a}-{b} is not a candidate");
        self.valid[a].remove(b);
        self.valid[b].remove(a);
        self.declined[a].insert(b);
        self.declined[b].insert(a);
    }

    fn is_fresh(&self, u: usize) -> bool {
        self.adj[u].is_empty() && self.declined[u].is_empty()
    }

    fn key(&self) -> CanonicalForm {
        canonical_form_layers(self.params.v, &[&self.adj, &self.declined])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SelectError {
    #[error("every vertex already has full degree")]
    AllFull,
    #[error("vertex {0} needs more edges but has no candidates")]
    NoCandidate(usize),
}

/// The vertex minimizing (candidates − missing degree), ties to the lowest
/// index, paired with its lowest-index candidate neighbor.
pub fn select_branch(state: &SearchState) -> Result<(usize, usize), SelectError> {
    let k = state.params.k;
    let best = (0..state.params.v)
        .filter(|&u| state.degree(u) < k)
        .min_by_key(|&u| state.valid[u].len() as isize - (k - state.degree(u)) as isize)
        .ok_or(SelectError::AllFull)?;
    match state.valid[best].first() {
        Some(w) => Ok((best, w)),
        None => Err(SelectError::NoCandidate(best)),
    }
}

/// True when some vertex has fewer candidates than missing edges.
pub fn prune_degree_deficit(state: &SearchState) -> bool {
    let k = state.params.k;
    (0..state.params.v).any(|u| {
        let d = state.degree(u);
        d < k && state.valid[u].len() < k - d
    })
}

/// Necessary condition at full-degree vertices: the girth-cycles still
/// missing at `u` must be shared with its neighbors.
pub fn prune_cycle_balance(state: &SearchState) -> bool {
    let Params { k, lambda, .. } = state.params;
    let (k, lambda) = (k as i64, lambda as i64);
    (0..state.params.v).filter(|&u| state.degree(u) as i64 == k).any(|u| {
        let cu = state.cyc[u] as i64;
        let (sum, max) =
            state.adj[u].iter().map(|w| state.cyc[w] as i64).fold((0i64, 0i64), |(s, m), c| (s + c, m.max(c)));
        let first = (k - 2) * lambda + 2 * cu - sum;
        let second = (2 - k) * lambda + sum - 2 * max;
        let third = (k - 2) * lambda + cu - sum + max;
        first < 0 || (second >= 0 && third < 0)
    })
}

/// Seen store for isomorphism pruning, keyed by edge count.
#[derive(Default)]
pub struct SeenStore {
    seen: HashSet<(usize, CanonicalForm)>,
}

impl SeenStore {
    pub fn len(&self) -> usize {
        self.seen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seen.is_empty()
    }
}

/// True when an isomorphic `(graph, declined)` pair was recorded before;
/// otherwise records this one.
pub fn prune_isomorphic(state: &SearchState, store: &mut SeenStore) -> bool {
    !store.seen.insert((state.edge_count, state.key()))
}

struct Cancelled;

struct Worker<'a> {
    opts: &'a GenerateOptions,
    stats: Stats,
    store: SeenStore,
    balls: Balls,
    found: Vec<Graph>,
    cancel: &'a AtomicBool,
    /// States reached at this branching depth are collected, not explored.
    split_at: Option<usize>,
    frontier: Vec<SearchState>,
}

impl<'a> Worker<'a> {
    fn new(opts: &'a GenerateOptions, cancel: &'a AtomicBool) -> Self {
        Worker {
            opts,
            stats: Stats::default(),
            store: SeenStore::default(),
            balls: Balls::default(),
            found: Vec::new(),
            cancel,
            split_at: None,
            frontier: Vec::new(),
        }
    }

    fn tick(&mut self) -> Result<(), Cancelled> {
        self.stats.nodes += 1;
        if self.stats.nodes.is_multiple_of(1024) {
            if self.cancel.load(Ordering::Relaxed) {
                return Err(Cancelled);
            }
            if self.opts.deadline.is_some_and(|d| Instant::now() >= d) {
                self.cancel.store(true, Ordering::Relaxed);
                return Err(Cancelled);
            }
        }
        Ok(())
    }

    fn dead(&mut self, state: &SearchState) -> bool {
        if self.opts.cycle_balance && prune_cycle_balance(state) {
            self.stats.pruned_cycle_balance += 1;
            return true;
        }
        if self.opts.degree_deficit && prune_degree_deficit(state) {
            self.stats.pruned_degree_deficit += 1;
            return true;
        }
        false
    }

    fn search(&mut self, state: SearchState, depth: usize) -> Result<(), Cancelled> {
        self.tick()?;
        if state.is_complete() {
            self.stats.completed += 1;
            let graph = state.graph();
            let p = state.params;
            if let Ok(Classification::Vgr(prof)) = classify(&graph) {
                if prof.k == p.k && prof.g == p.g && prof.lambda == p.lambda {
                    self.stats.accepted += 1;
                    self.found.push(graph);
                }
            }
            return Ok(());
        }
        if self.dead(&state) {
            return Ok(());
        }
        let (u, w) = match select_branch(&state) {
            Ok(e) => e,
            Err(_) => {
                self.stats.pruned_no_candidate += 1;
                return Ok(());
            }
        };
        if self.split_at.is_some_and(|at| depth >= at) {
            self.frontier.push(state);
            return Ok(());
        }

        let mut added = state.clone();
        added.add_edge_with(u, w, &mut self.balls);
        if added.is_complete() || !self.dead(&added) {
            if self.opts.isomorphism
                && added.edge_count <= self.opts.iso_max_edges
                && prune_isomorphic(&added, &mut self.store)
            {
                self.stats.pruned_isomorphic += 1;
            } else {
                self.search(added, depth + 1)?;
            }
        }

        let mut declined = state;
        let fresh_target = self.opts.fresh_vertex_symmetry && declined.is_fresh(w);
        declined.decline_edge(u, w);
        if fresh_target {
            let others: Vec<usize> = declined.valid[u].iter().filter(|&x| declined.is_fresh(x)).collect();
            for x in others {
                declined.decline_edge(u, x);
                self.stats.fresh_declines += 1;
            }
        }
        self.search(declined, depth + 1)
    }
}

fn check_params(v: usize, k: usize, g: usize, lambda: u64) -> Result<(), GenerateError> {
    if k < 3 || g < 3 || lambda < 1 {
        return Err(GenerateError::InvalidParameters(format!(
            "need k >= 3, g >= 3, lambda >= 1 (k={k}, g={g}, lambda={lambda})"
        )));
    }
    if v > crate::bitset::MAX_ORDER {
        return Err(GenerateError::InvalidParameters(format!("order {v} exceeds {}", crate::bitset::MAX_ORDER)));
    }
    Ok(())
}

/// Every `vgr(v, k, g, λ)`-graph up to isomorphism, canonically labeled and
/// sorted by canonical form, together with search statistics.
pub fn generate_with_stats(
    v: usize,
    k: usize,
    g: usize,
    lambda: u64,
    opts: &GenerateOptions,
) -> Result<(Vec<Graph>, Stats), GenerateError> {
    check_params(v, k, g, lambda)?;
    if let Verdict::Impossible(rule) = bounds::nonexistence_verdict(k as u32, g as u32, lambda)? {
        return Err(GenerateError::ParameterImpossible(rule));
    }
    let moore = bounds::moore_bound(k as u32, g as u32)?;
    let mut stats = Stats::default();
    if (v as i128) < moore || !(v * k).is_multiple_of(2) || !(v as u64 * lambda).is_multiple_of(g as u64) {
        return Ok((Vec::new(), stats));
    }
    let root = SearchState::initial(v, k, g, lambda)?;
    let cancel = AtomicBool::new(false);
    let split_at = opts.split_depth.unwrap_or(2 * k);

    let mut head = Worker::new(opts, &cancel);
    head.split_at = Some(split_at);
    let outcome = head.search(root, 0);
    stats.merge(&head.stats);
    let mut found = std::mem::take(&mut head.found);
    let frontier = std::mem::take(&mut head.frontier);
    drop(head);
    if outcome.is_err() {
        return Err(GenerateError::BudgetExceeded { verified_lb: None });
    }
    stats.subtasks = frontier.len() as u64;

    let run = |state: SearchState| {
        let mut worker = Worker::new(opts, &cancel);
        let ok = worker.search(state, 0).is_ok();
        (ok, worker.found, worker.stats)
    };
    let results: Vec<(bool, Vec<Graph>, Stats)> = match opts.threads {
        1 => frontier.into_iter().map(run).collect(),
        0 => frontier.into_par_iter().map(run).collect(),
        t => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| GenerateError::InvalidParameters(format!("thread pool: {e}")))?
            .install(|| frontier.into_par_iter().map(run).collect()),
    };
    let mut complete = true;
    for (ok, graphs, s) in results {
        complete &= ok;
        found.extend(graphs);
        stats.merge(&s);
    }
    if !complete {
        return Err(GenerateError::BudgetExceeded { verified_lb: None });
    }

    let mut unique = BTreeMap::new();
    for graph in found {
        let canon = canonical_graph(&graph);
        unique.entry(canonical_form(&canon, None)).or_insert(canon);
    }
    Ok((unique.into_values().collect(), stats))
}

pub fn generate_all(
    v: usize,
    k: usize,
    g: usize,
    lambda: u64,
    opts: &GenerateOptions,
) -> Result<Vec<Graph>, GenerateError> {
    generate_with_stats(v, k, g, lambda, opts).map(|(graphs, _)| graphs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extremal {
    Found { n: usize, graphs: Vec<Graph> },
    NoneUpTo(usize),
    Impossible,
}

/// Smallest order of a `vgr(·, k, g, λ)`-graph, searching orders from the
/// best lower bound up to `v_max`.
pub fn find_extremal(
    k: usize,
    g: usize,
    lambda: u64,
    v_max: usize,
    time_budget: Option<Duration>,
    opts: &GenerateOptions,
) -> Result<Extremal, GenerateError> {
    check_params(0, k, g, lambda)?;
    let report = bounds::best_lower_bound(k as u32, g as u32, lambda)?;
    let Some(lb) = report.best_lb else {
        return Ok(Extremal::Impossible);
    };
    let lb = lb as usize;
    let mut opts = opts.clone();
    if let Some(budget) = time_budget {
        let deadline = Instant::now() + budget;
        opts.deadline = Some(opts.deadline.map_or(deadline, |d| d.min(deadline)));
    }
    let orders: Vec<usize> = if report.requires_moore { vec![report.moore as usize] } else { (lb..=v_max).collect() };
    for v in orders {
        if v > v_max {
            return Ok(Extremal::NoneUpTo(v_max));
        }
        if bounds::divisibility_refine(k as u32, g as u32, lambda, v as i128) != v as i128 {
            continue;
        }
        match generate_all(v, k, g, lambda, &opts) {
            Ok(graphs) if !graphs.is_empty() => return Ok(Extremal::Found { n: v, graphs }),
            Ok(_) => {}
            Err(GenerateError::BudgetExceeded { .. }) => {
                return Err(GenerateError::BudgetExceeded { verified_lb: Some(v) });
            }
            Err(e) => return Err(e),
        }
    }
    if report.requires_moore {
        Ok(Extremal::Impossible)
    } else {
        Ok(Extremal::NoneUpTo(v_max))
    }
}
