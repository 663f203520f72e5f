//! Closed-form lower bounds and non-existence criteria for the smallest order
//! `n(k, g, λ)` of a vertex-girth-regular graph.
//!
//! Arithmetic is carried out in `i128` with overflow checks; every ceiling is
//! taken on an exact rational, never on a float.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("non-positive denominator for edge multiplicity {0}")]
    NonPositiveDenominator(i128),
}

type Result<T> = std::result::Result<T, BoundsError>;

fn pow(base: i128, exp: u32) -> Result<i128> {
    base.checked_pow(exp).ok_or(BoundsError::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(BoundsError::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(BoundsError::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(BoundsError::Overflow)
}

/// `⌈a / b⌉` for `b > 0`.
fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(BoundsError::InvalidParameters(msg()))
    }
}

/// Moore bound `M(k, g)`.
pub fn moore_bound(k: u32, g: u32) -> Result<i128> {
    require(k >= 2 && g >= 3, || format!("moore_bound needs k >= 2, g >= 3 (k={k}, g={g})"))?;
    let (k, q) = (k as i128, k as i128 - 1);
    let mut total: i128 = 0;
    if g % 2 == 1 {
        for i in 0..=(g - 3) / 2 {
            total = add(total, mul(k, pow(q, i)?)?)?;
        }
        add(total, 1)
    } else {
        for i in 0..=(g - 2) / 2 {
            total = add(total, pow(q, i)?)?;
        }
        mul(total, 2)
    }
}

/// Largest possible number of girth-cycles through a vertex of a
/// `(k, g)`-graph, `k (k-1)^⌊g/2⌋ / 2`.
pub fn lambda_max(k: u32, g: u32) -> Result<i128> {
    require(k >= 3 && g >= 3, || format!("lambda_max needs k >= 3, g >= 3 (k={k}, g={g})"))?;
    let twice = mul(k as i128, pow(k as i128 - 1, g / 2)?)?;
    assert!(twice % 2 == 0, "k or k-1 is even");
    Ok(twice / 2)
}

/// Named rules feeding a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Moore,
    LambdaCap,
    TriangleNearCap,
    OddNearCap,
    EvenNearCap,
    LbEven,
    LbOdd,
    LbSignatureAvg,
    LbSpectral,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Moore => "moore",
            Rule::LambdaCap => "lambda_cap",
            Rule::TriangleNearCap => "triangle_near_cap",
            Rule::OddNearCap => "odd_near_cap",
            Rule::EvenNearCap => "even_near_cap",
            Rule::LbEven => "lb_even",
            Rule::LbOdd => "lb_odd",
            Rule::LbSignatureAvg => "lb_signature_avg",
            Rule::LbSpectral => "lb_spectral",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Impossible(Rule),
    NoInfo,
}

/// Decides the parameter triples that admit no vertex-girth-regular graph at
/// all. `λ = lambda_max` is left undecided: it is realized exactly by Moore
/// graphs.
pub fn nonexistence_verdict(k: u32, g: u32, lambda: u64) -> Result<Verdict> {
    require(k >= 3 && g >= 3 && lambda >= 1, || {
        format!("need k >= 3, g >= 3, lambda >= 1 (k={k}, g={g}, lambda={lambda})")
    })?;
    let cap = lambda_max(k, g)?;
    let lambda = lambda as i128;
    if lambda > cap {
        return Ok(Verdict::Impossible(Rule::LambdaCap));
    }
    let kk = k as i128;
    if g == 3 && lambda == kk * (kk - 1) / 2 - 1 {
        return Ok(Verdict::Impossible(Rule::TriangleNearCap));
    }
    let eps = cap - lambda;
    if g % 2 == 1 && g >= 7 && eps > 0 && 2 * eps < kk {
        return Ok(Verdict::Impossible(Rule::OddNearCap));
    }
    if g.is_multiple_of(2) && eps > 0 && eps < kk - 1 {
        return Ok(Verdict::Impossible(Rule::EvenNearCap));
    }
    Ok(Verdict::NoInfo)
}

fn require_even(k: u32, g: u32) -> Result<()> {
    require(k >= 3 && g >= 4 && g.is_multiple_of(2), || format!("needs k >= 3 and even g >= 4 (k={k}, g={g})"))
}

/// Counting bound for even girth from an edge on at most `⌊2λ/k⌋`
/// girth-cycles; `bipartite` selects the variant for bipartite graphs.
pub fn lb_even(k: u32, g: u32, lambda: u64, bipartite: bool) -> Result<i128> {
    require_even(k, g)?;
    let (kk, h) = (k as i128, g / 2);
    let qh = pow(kk - 1, h)?;
    let tree = mul(2, qh - 1)? / (kk - 2);
    let low = mul(2, lambda as i128)? / kk;
    let outside =
        if bipartite { mul(2, ceil_div(sub(qh, low)?, kk))? } else { ceil_div(sub(mul(2, qh)?, mul(2, low)?)?, kk) };
    add(tree, outside)
}

/// Counting bound for odd girth.
pub fn lb_odd(k: u32, g: u32, lambda: u64) -> Result<i128> {
    require(k >= 3 && g >= 3 && g % 2 == 1, || format!("needs k >= 3 and odd g >= 3 (k={k}, g={g})"))?;
    let (kk, h) = (k as i128, (g - 1) / 2);
    let leaves_out = mul(kk, pow(kk - 1, h)?)?;
    let tree = (leaves_out - 2) / (kk - 2);
    let outside = ceil_div(sub(leaves_out, mul(2, lambda as i128)?)?, kk);
    add(tree, outside)
}

/// Bound for even girth given an edge lying on exactly `edge_cycles`
/// girth-cycles.
///
/// Returns `NonPositiveDenominator` when the denominator vanishes while the
/// numerator does not: no edge with that multiplicity can exist next to a
/// vertex on `lambda` girth-cycles.
pub fn lb_lambda_refined(k: u32, g: u32, lambda: u64, edge_cycles: u64) -> Result<i128> {
    require_even(k, g)?;
    let (kk, h) = (k as i128, g / 2);
    let qh = pow(kk - 1, h)?;
    let qh1 = pow(kk - 1, h - 1)?;
    let big = edge_cycles as i128;
    require(big <= qh, || format!("edge multiplicity {big} exceeds (k-1)^h = {qh}"))?;
    let tree = mul(2, qh - 1)? / (kk - 2);
    // ⌈Λ²/(2q) − Λ/2⌉ = ⌈(Λ² − Λq) / (2q)⌉
    let pair_floor = ceil_div(sub(mul(big, big)?, mul(big, qh1)?)?, mul(2, qh1)?).max(0);
    let numerator = pow(qh - big, 2)?;
    let denominator = sub(add(sub(mul(2, lambda as i128)?, mul(3, big)?)?, qh)?, mul(2, pair_floor)?)?;
    if numerator == 0 {
        return Ok(tree);
    }
    if denominator <= 0 {
        return Err(BoundsError::NonPositiveDenominator(big));
    }
    add(tree, ceil_div(numerator, denominator))
}

/// Best of [`lb_lambda_refined`] over the two integers nearest the average
/// signature entry `2λ/k`; `None` when both are infeasible.
pub fn lb_signature_avg(k: u32, g: u32, lambda: u64) -> Result<Option<i128>> {
    require_even(k, g)?;
    let low = 2 * lambda / k as u64;
    let high = (2 * lambda).div_ceil(k as u64);
    let mut best = None;
    for big in [low, high] {
        match lb_lambda_refined(k, g, lambda, big) {
            Ok(v) => best = Some(best.map_or(v, |b: i128| b.max(v))),
            Err(BoundsError::NonPositiveDenominator(_)) | Err(BoundsError::InvalidParameters(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

/// Number of closed walks of length `len` from the root of the infinite
/// `k`-regular tree.
pub fn cyclefree_closed_walks(len: u32, k: u32) -> Result<i128> {
    require(k >= 2, || format!("needs k >= 2 (k={k})"))?;
    let len = len as usize;
    let kk = k as i128;
    // ways[d] = walks currently at distance d from the root
    let mut ways = vec![0i128; len + 2];
    ways[0] = 1;
    for _ in 0..len {
        let mut next = vec![0i128; len + 2];
        for d in 0..=len {
            if ways[d] == 0 {
                continue;
            }
            if d == 0 {
                next[1] = add(next[1], mul(ways[0], kk)?)?;
            } else {
                next[d - 1] = add(next[d - 1], ways[d])?;
                next[d + 1] = add(next[d + 1], mul(ways[d], kk - 1)?)?;
            }
        }
        ways = next;
    }
    Ok(ways[0])
}

/// Spectral bound for even girth (non-bipartite or bipartite form).
pub fn lb_spectral(k: u32, g: u32, lambda: u64, bipartite: bool) -> Result<i128> {
    require_even(k, g)?;
    let kk = k as i128;
    let two_l = mul(2, lambda as i128)?;
    let c_full = cyclefree_closed_walks(g, k)?;
    let kg = pow(kk, g)?;
    if g.is_multiple_of(4) {
        let c_half = cyclefree_closed_walks(g / 2, k)?;
        let num = sub(add(add(c_full, two_l)?, kg)?, mul(mul(2, c_half)?, pow(kk, g / 2)?)?)?;
        let den = add(sub(c_full, mul(c_half, c_half)?)?, two_l)?;
        require(den > 0, || "spectral denominator must be positive".into())?;
        let num = if bipartite { mul(2, num)? } else { num };
        Ok(ceil_div(num, den))
    } else {
        let den = add(c_full, two_l)?;
        let num = if bipartite { mul(2, kg)? } else { add(den, kg)? };
        Ok(ceil_div(num, den))
    }
}

/// Smallest `n >= n0` with `n·k` even and `n·λ ≡ 0 (mod g)`.
pub fn divisibility_refine(k: u32, g: u32, lambda: u64, n0: i128) -> i128 {
    let mut n = n0.max(1);
    while (n * k as i128) % 2 != 0 || (n * lambda as i128) % g as i128 != 0 {
        n += 1;
    }
    n
}

/// Every bound and verdict for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub k: u32,
    pub g: u32,
    pub lambda: u64,
    pub moore: i128,
    pub lambda_cap: i128,
    pub verdicts: Vec<(Rule, Verdict)>,
    pub lbs: Vec<(Rule, i128)>,
    /// `None` when the triple is impossible.
    pub best_lb: Option<i128>,
    pub impossible: bool,
    /// `λ` equals the cap, so any such graph is a Moore graph of order `moore`.
    pub requires_moore: bool,
}

pub fn best_lower_bound(k: u32, g: u32, lambda: u64) -> Result<BoundReport> {
    let moore = moore_bound(k, g)?;
    let cap = lambda_max(k, g)?;
    let verdict = nonexistence_verdict(k, g, lambda)?;
    let mut report = BoundReport {
        k,
        g,
        lambda,
        moore,
        lambda_cap: cap,
        verdicts: Vec::new(),
        lbs: Vec::new(),
        best_lb: None,
        impossible: false,
        requires_moore: lambda as i128 == cap,
    };
    let applicable: &[Rule] = if g == 3 {
        &[Rule::LambdaCap, Rule::TriangleNearCap]
    } else if g % 2 == 1 {
        &[Rule::LambdaCap, Rule::OddNearCap]
    } else {
        &[Rule::LambdaCap, Rule::EvenNearCap]
    };
    for &rule in applicable {
        let v = match verdict {
            Verdict::Impossible(r) if r == rule => verdict,
            _ => Verdict::NoInfo,
        };
        report.verdicts.push((rule, v));
    }
    if let Verdict::Impossible(_) = verdict {
        report.impossible = true;
        return Ok(report);
    }
    report.lbs.push((Rule::Moore, moore));
    if g % 2 == 1 {
        report.lbs.push((Rule::LbOdd, lb_odd(k, g, lambda)?));
    } else {
        report.lbs.push((Rule::LbEven, lb_even(k, g, lambda, false)?));
        if let Some(v) = lb_signature_avg(k, g, lambda)? {
            report.lbs.push((Rule::LbSignatureAvg, v));
        }
        report.lbs.push((Rule::LbSpectral, lb_spectral(k, g, lambda, false)?));
    }
    let raw = report.lbs.iter().map(|&(_, v)| v).max().expect("moore bound present");
    report.best_lb = Some(divisibility_refine(k, g, lambda, raw));
    Ok(report)
}
