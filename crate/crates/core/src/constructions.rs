//! Explicit constructions of vertex-girth-regular graphs. Every constructor
//! classifies its output and fails if the advertised profile does not hold.

use crate::cycles::{classify, count_girth_cycles_edge, girth, Classification, VgrProfile};
use crate::graph::{Graph, GraphError};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction produced {got} instead of the expected {expected}")]
    ProfileMismatch { expected: String, got: String },
    #[error("k * lambda = {0} is odd")]
    NonInteger(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn profile_of(graph: &Graph) -> Result<Option<VgrProfile>> {
    Ok(match classify(graph)? {
        Classification::Vgr(p) => Some(p),
        Classification::NotVgr(_) => None,
    })
}

fn expect_profile(graph: Graph, v: usize, k: usize, g: usize, lambda: u64) -> Result<(Graph, VgrProfile)> {
    let expected = format!("vgr({v},{k},{g},{lambda})");
    match profile_of(&graph)? {
        Some(p) if (p.v, p.k, p.g, p.lambda) == (v, k, g, lambda) => Ok((graph, p)),
        Some(p) => Err(ConstructionError::ProfileMismatch { expected, got: p.to_string() }),
        None => Err(ConstructionError::ProfileMismatch { expected, got: "a graph that is not vgr".into() }),
    }
}

/// The cycle `C_g`, a `vgr(g, 2, g, 1)`-graph.
pub fn cycle_graph(g: usize) -> Result<(Graph, VgrProfile)> {
    if g < 3 {
        return Err(ConstructionError::PreconditionViolated(format!("cycle length {g} < 3")));
    }
    expect_profile(Graph::cycle(g)?, g, 2, g, 1)
}

/// Two copies of `K_k` joined by a perfect matching, a
/// `vgr(2k, k, 3, C(k,2) - (k-1))`-graph.
pub fn double_complete(k: usize) -> Result<(Graph, VgrProfile)> {
    if k < 3 {
        return Err(ConstructionError::PreconditionViolated(format!("double_complete needs k >= 3, got {k}")));
    }
    let mut graph = Graph::new(2 * k)?;
    for side in [0, k] {
        for u in 0..k {
            for w in u + 1..k {
                graph.add_edge(side + u, side + w)?;
            }
        }
    }
    for u in 0..k {
        graph.add_edge(u, k + u)?;
    }
    let lambda = (k * (k - 1) / 2 - (k - 1)) as u64;
    expect_profile(graph, 2 * k, k, 3, lambda)
}

/// Order in which the edges at each outer vertex are dealt to the vertices of
/// its copy of the inner graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attachment {
    Ascending,
    Shuffled(u64),
}

/// Replaces every vertex of the `v`-regular graph `outer` by a copy of the
/// `v`-vertex graph `inner`: the `i`-th edge at an outer vertex is attached
/// to vertex `i` of its copy.
///
/// For `inner` a `vgr(v, k, g, λ)`-graph and `girth(outer) > g/2` the result
/// is a `vgr(|outer|·v, k+1, g, λ)`-graph.
pub fn generalized_truncation(inner: &Graph, outer: &Graph, attachment: Attachment) -> Result<(Graph, VgrProfile)> {
    let v = inner.order();
    let prof = profile_of(inner)?
        .ok_or_else(|| ConstructionError::PreconditionViolated("inner graph is not vertex-girth-regular".into()))?;
    if outer.regular_degree() != Some(v) {
        return Err(ConstructionError::PreconditionViolated(format!("outer graph must be {v}-regular")));
    }
    if girth(outer).is_some_and(|og| 2 * og <= prof.g) {
        return Err(ConstructionError::PreconditionViolated(format!("outer girth must exceed {}/2", prof.g)));
    }
    let mut rng = match attachment {
        Attachment::Ascending => None,
        Attachment::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    // slot[x][i] = the outer neighbor whose edge lands on vertex i of copy x
    let slots: Vec<Vec<usize>> = (0..outer.order())
        .map(|x| {
            let mut order: Vec<usize> = outer.neighbors(x).iter().collect();
            if let Some(rng) = rng.as_mut() {
                order.shuffle(rng);
            }
            order
        })
        .collect();
    let n = outer.order() * v;
    let mut graph = Graph::new(n)?;
    for x in 0..outer.order() {
        for (a, b) in inner.edges() {
            graph.add_edge(x * v + a, x * v + b)?;
        }
    }
    for (x, y) in outer.edges() {
        let i = slots[x].iter().position(|&w| w == y).expect("neighbor listed");
        let j = slots[y].iter().position(|&w| w == x).expect("neighbor listed");
        graph.add_edge(x * v + i, y * v + j)?;
    }
    expect_profile(graph, n, prof.k + 1, prof.g, prof.lambda)
}

/// Cartesian product; vertex `(u, w)` is numbered `u·|G2| + w`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    let mut graph = Graph::new(n1 * n2)?;
    for u in 0..n1 {
        for (a, b) in g2.edges() {
            graph.add_edge(u * n2 + a, u * n2 + b)?;
        }
    }
    for (a, b) in g1.edges() {
        for w in 0..n2 {
            graph.add_edge(a * n2 + w, b * n2 + w)?;
        }
    }
    Ok(graph)
}

/// `λ` for which an edge-girth-regular graph with edge parameter `lambda_e`
/// is vertex-girth-regular.
pub fn egr_to_vgr_lambda(k: u64, lambda_e: u64) -> Result<u64> {
    let twice = k * lambda_e;
    if !twice.is_multiple_of(2) {
        return Err(ConstructionError::NonInteger(twice));
    }
    Ok(twice / 2)
}

/// Edge parameter of an edge-girth-regular graph of girth 3.
fn egr_triangle_lambda(graph: &Graph) -> Option<u64> {
    let prof = profile_of(graph).ok().flatten()?;
    if !prof.is_egr || prof.g != 3 {
        return None;
    }
    let e = graph.edges().next()?;
    Some(count_girth_cycles_edge(graph, e, 3))
}

/// Cartesian product of two edge-girth-regular graphs of girth 3 with the
/// same edge parameter, checked to be edge-girth-regular again.
pub fn egr_product(g1: &Graph, g2: &Graph) -> Result<(Graph, VgrProfile)> {
    let (Some(l1), Some(l2)) = (egr_triangle_lambda(g1), egr_triangle_lambda(g2)) else {
        return Err(ConstructionError::PreconditionViolated("factors must be egr graphs of girth 3".into()));
    };
    if l1 != l2 {
        return Err(ConstructionError::PreconditionViolated(format!("edge parameters differ ({l1} vs {l2})")));
    }
    let k = g1.degree(0) + g2.degree(0);
    let lambda = egr_to_vgr_lambda(k as u64, l1)?;
    let product = cartesian_product(g1, g2)?;
    let (graph, prof) = expect_profile(product, g1.order() * g2.order(), k, 3, lambda)?;
    if !prof.is_egr {
        return Err(ConstructionError::ProfileMismatch {
            expected: format!("egr({},{k},3,{l1})", prof.v),
            got: prof.to_string(),
        });
    }
    Ok((graph, prof))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn cycles() {
        for g in [3, 5, 8] {
            let (c, p) = cycle_graph(g).unwrap();
            assert_eq!((p.v, p.k, p.g, p.lambda), (g, 2, g, 1));
            assert_eq!(c.is_bipartite(), g % 2 == 0);
        }
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn double_complete_profiles() {
        let (g, _) = double_complete(3).unwrap();
        assert!(are_isomorphic(&g, &Graph::generalized_petersen(3, 1).unwrap()));
        let (_, p) = double_complete(4).unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (8, 4, 3, 3));
        let (_, p) = double_complete(5).unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (10, 5, 3, 6));
    }

    #[test]
    fn truncations() {
        let c5 = Graph::cycle(5).unwrap();
        let k6 = Graph::complete(6).unwrap();
        let (_, p) = generalized_truncation(&c5, &k6, Attachment::Ascending).unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (30, 3, 5, 1));
        let (_, p) =
            generalized_truncation(&Graph::cycle(3).unwrap(), &Graph::complete(4).unwrap(), Attachment::Ascending)
                .unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (12, 3, 3, 1));
        let (prism, _) = double_complete(3).unwrap();
        let (_, p) = generalized_truncation(&prism, &Graph::complete(7).unwrap(), Attachment::Shuffled(7)).unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (42, 4, 3, 1));
        // K_6 has girth 3, too small for inner girth 6
        let c6 = Graph::cycle(6).unwrap();
        assert!(matches!(
            generalized_truncation(&c6, &Graph::complete(6).unwrap(), Attachment::Ascending),
            Err(ConstructionError::PreconditionViolated(_))
        ));
        assert!(generalized_truncation(&c5, &Graph::petersen(), Attachment::Ascending).is_err());
    }

    #[test]
    fn products() {
        let k4 = Graph::complete(4).unwrap();
        let (_, p) = egr_product(&k4, &k4).unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (16, 6, 3, 6));
        let k2 = Graph::complete(2).unwrap();
        assert!(are_isomorphic(&cartesian_product(&k2, &k2).unwrap(), &Graph::cycle(4).unwrap()));
        let (_, p) = egr_product(&k4, &Graph::octahedron()).unwrap();
        assert_eq!((p.v, p.k, p.g, p.lambda), (24, 7, 3, 7));
        assert!(egr_product(&k4, &Graph::complete(5).unwrap()).is_err());
    }

    #[test]
    fn egr_parameter() {
        assert_eq!(egr_to_vgr_lambda(4, 1).unwrap(), 2);
        assert_eq!(egr_to_vgr_lambda(3, 2).unwrap(), 3);
        assert_eq!(egr_to_vgr_lambda(3, 1), Err(ConstructionError::NonInteger(3)));
    }
}
