//! Serializable bound reports, filtering of graph streams, and the table of
//! lower and upper bounds on `n(k, g, λ)`.

use crate::bounds::{self, BoundReport, BoundsError, Verdict};
use crate::constructions::{double_complete, generalized_truncation, Attachment};
use crate::cycles::{classify, Classification, VgrProfile};
use crate::generator::{find_extremal, Extremal, GenerateError, GenerateOptions};
use crate::graph::Graph;
use crate::graph6::Graph6Error;
use serde::{Deserialize, Serialize};
use std::time::Duration;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RuleValue {
    Bound(u64),
    Verdict(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleRecord {
    pub name: String,
    pub value: RuleValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Bounded,
    Impossible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReportRecord {
    pub k: u32,
    pub g: u32,
    pub lambda: u64,
    pub rules: Vec<RuleRecord>,
    /// `None` when no graph exists.
    pub best_lb: Option<u64>,
    pub status: BoundStatus,
    pub requires_moore: bool,
}

fn to_u64(v: i128) -> Result<u64, BoundsError> {
    u64::try_from(v).map_err(|_| BoundsError::Overflow)
}

impl BoundReportRecord {
    pub fn from_report(report: &BoundReport) -> Result<Self, BoundsError> {
        let mut rules = Vec::new();
        for (rule, verdict) in &report.verdicts {
            let text = match verdict {
                Verdict::Impossible(_) => "impossible",
                Verdict::NoInfo => "no_info",
            };
            rules.push(RuleRecord { name: rule.name().to_string(), value: RuleValue::Verdict(text.to_string()) });
        }
        for (rule, value) in &report.lbs {
            rules.push(RuleRecord { name: rule.name().to_string(), value: RuleValue::Bound(to_u64(*value)?) });
        }
        Ok(BoundReportRecord {
            k: report.k,
            g: report.g,
            lambda: report.lambda,
            rules,
            best_lb: report.best_lb.map(to_u64).transpose()?,
            status: if report.impossible { BoundStatus::Impossible } else { BoundStatus::Bounded },
            requires_moore: report.requires_moore,
        })
    }
}

/// Keeps the vertex-girth-regular graphs of a stream, optionally only those
/// with the given `(k, g, λ)`. Disconnected graphs are dropped.
pub fn filter_vgr<I>(
    graphs: I,
    constraint: Option<(usize, usize, u64)>,
) -> impl Iterator<Item = Result<(Graph, VgrProfile), Graph6Error>>
where
    I: IntoIterator<Item = Result<Graph, Graph6Error>>,
{
    graphs.into_iter().filter_map(move |item| match item {
        Err(e) => Some(Err(e)),
        Ok(graph) => match classify(&graph) {
            Ok(Classification::Vgr(p)) if constraint.is_none_or(|c| c == (p.k, p.g, p.lambda)) => Some(Ok((graph, p))),
            _ => None,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableStatus {
    Exact,
    Impossible,
    Open,
}

impl TableStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TableStatus::Exact => "exact",
            TableStatus::Impossible => "impossible",
            TableStatus::Open => "open",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub k: usize,
    pub g: usize,
    pub lambda: u64,
    /// `None` is infinite.
    pub lb: Option<usize>,
    pub ub: Option<usize>,
    pub status: TableStatus,
}

impl TableRow {
    pub fn csv(&self) -> String {
        let show = |x: Option<usize>| x.map_or("inf".to_string(), |v| v.to_string());
        format!("{},{},{},{},{},{}", self.k, self.g, self.lambda, show(self.lb), show(self.ub), self.status.as_str())
    }
}

pub const TABLE_HEADER: &str = "k,g,lambda,lb,ub,status";

/// Small graphs with known profiles: complete graphs, complete bipartite
/// graphs, two joined cliques, and truncations built from them.
pub fn known_graphs(k: usize) -> Vec<(Graph, VgrProfile)> {
    let mut out = Vec::new();
    let mut push = |g: Graph| {
        if let Ok(Classification::Vgr(p)) = classify(&g) {
            if p.k == k {
                out.push((g, p));
            }
        }
    };
    push(Graph::complete(k + 1).expect("small order"));
    push(Graph::complete_bipartite(k, k).expect("small order"));
    if let Ok((g, _)) = double_complete(k) {
        push(g);
    }
    // inner graphs of degree k - 1 with outer complete or complete bipartite
    let mut inner: Vec<Graph> = Vec::new();
    if k == 3 {
        inner.extend((3..=7).map(|g| Graph::cycle(g).expect("cycle")));
    } else if k > 3 {
        inner.push(Graph::complete(k).expect("small order"));
        inner.push(Graph::complete_bipartite(k - 1, k - 1).expect("small order"));
        if let Ok((g, _)) = double_complete(k - 1) {
            inner.push(g);
        }
        if k == 4 {
            inner.push(Graph::petersen());
            inner.push(Graph::heawood());
        }
    }
    for g in inner {
        let v = g.order();
        for outer in [Graph::complete(v + 1), Graph::complete_bipartite(v, v)].into_iter().flatten() {
            if let Ok((t, _)) = generalized_truncation(&g, &outer, Attachment::Ascending) {
                push(t);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct TableOptions {
    /// Time budget for the exhaustive search of each row; `None` skips search.
    pub budget: Option<Duration>,
    /// Largest order searched exhaustively.
    pub max_order: usize,
    pub generate: GenerateOptions,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions { budget: Some(Duration::from_secs(5)), max_order: 24, generate: GenerateOptions::default() }
    }
}

/// Rows for every `λ` in `1..=lambda_max(k, g)` and `g` in the range.
pub fn cmd_table(k: usize, g_min: usize, g_max: usize, opts: &TableOptions) -> Result<Vec<TableRow>, GenerateError> {
    let known = known_graphs(k);
    let mut rows = Vec::new();
    for g in g_min..=g_max {
        let cap = bounds::lambda_max(k as u32, g as u32)? as u64;
        for lambda in 1..=cap {
            rows.push(table_row(k, g, lambda, &known, opts)?);
        }
    }
    Ok(rows)
}

fn table_row(
    k: usize,
    g: usize,
    lambda: u64,
    known: &[(Graph, VgrProfile)],
    opts: &TableOptions,
) -> Result<TableRow, GenerateError> {
    let report = bounds::best_lower_bound(k as u32, g as u32, lambda)?;
    let impossible = TableRow { k, g, lambda, lb: None, ub: None, status: TableStatus::Impossible };
    let Some(lb) = report.best_lb else {
        return Ok(impossible);
    };
    let mut lb = lb as usize;
    let mut ub = known.iter().filter(|(_, p)| p.g == g && p.lambda == lambda).map(|(_, p)| p.v).min();
    if let Some(budget) = opts.budget {
        let v_max = ub.map_or(opts.max_order, |u| u.min(opts.max_order));
        match find_extremal(k, g, lambda, v_max, Some(budget), &opts.generate) {
            Ok(Extremal::Found { n, .. }) => {
                lb = n;
                ub = Some(n);
            }
            Ok(Extremal::Impossible) => return Ok(impossible),
            Ok(Extremal::NoneUpTo(v)) => lb = lb.max(v + 1),
            Err(GenerateError::BudgetExceeded { verified_lb: Some(v) }) => lb = lb.max(v),
            Err(GenerateError::BudgetExceeded { verified_lb: None }) => {}
            Err(e) => return Err(e),
        }
    }
    let status = if ub == Some(lb) { TableStatus::Exact } else { TableStatus::Open };
    Ok(TableRow { k, g, lambda, lb: Some(lb), ub, status })
}
