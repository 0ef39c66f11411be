//! The extremal construction: an independent k-set completely joined to a
//! disjoint union of cliques, containing no (k+1)-connected subgraph.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("construction requires k >= 2, got k = {0}")]
    KTooSmall(usize),
    #[error("construction requires n >= k+1, got n = {n}, k = {k}")]
    NTooSmall { n: usize, k: usize },
}

/// Parameters n = k*q + r with 1 <= r <= k. When k divides n this forces
/// r = k and q = n/k - 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaderParams {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    pub r: usize,
}

impl MaderParams {
    pub fn new(n: usize, k: usize) -> Result<MaderParams, ConstructionError> {
        if k < 2 {
            return Err(ConstructionError::KTooSmall(k));
        }
        if n < k + 1 {
            return Err(ConstructionError::NTooSmall { n, k });
        }
        let r = (n - 1) % k + 1;
        let q = (n - r) / k;
        debug_assert_eq!(n, k * q + r);
        debug_assert!((1..=k).contains(&r));
        Ok(MaderParams { n, k, q, r })
    }
}

/// The generated graph with its part labels: `parts[0]` is the independent
/// set, `parts[1..=q]` the cliques (the last of size r).
#[derive(Clone, Debug)]
pub struct MaderGraph {
    pub graph: Graph,
    pub params: MaderParams,
    pub parts: Vec<VertexSet>,
}

/// Build the graph: parts V0..Vq of sizes k,...,k,r labeled consecutively
/// with V0 first; V0 independent, each later part a clique, and every V0
/// vertex adjacent to every vertex outside V0.
pub fn mader_graph(n: usize, k: usize) -> Result<MaderGraph, ConstructionError> {
    let params = MaderParams::new(n, k)?;
    let mut parts = Vec::with_capacity(params.q + 1);
    let mut start = 0usize;
    for i in 0..=params.q {
        let size = if i < params.q { k } else { params.r };
        parts.push(VertexSet::from_iter_with_capacity(n, start..start + size));
        start += size;
    }
    debug_assert_eq!(start, n);

    let mut edges = Vec::new();
    for part in &parts[1..] {
        let vs = part.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    for u in parts[0].iter() {
        for v in k..n {
            edges.push((u, v));
        }
    }
    let graph = Graph::from_edge_list(n, &edges).expect("construction edges in range");
    Ok(MaderGraph { graph, params, parts })
}

/// Closed-form edge count: k(n-k) join edges, q-1 full k-cliques, one
/// r-clique.
pub fn mader_edge_count(n: usize, k: usize) -> Result<usize, ConstructionError> {
    let p = MaderParams::new(n, k)?;
    Ok(k * (n - k) + (p.q - 1) * k * (k - 1) / 2 + p.r * (p.r - 1) / 2)
}
