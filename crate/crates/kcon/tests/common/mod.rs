//! Brute-force oracles, independent of the flow/decomposition code paths
//! they are used to check.
#![allow(dead_code)] // each test binary uses its own subset

use kcon::bitset::VertexSet;
use kcon::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All vertex subsets of {0..n-1} as bitmasks.
fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..1u32 << n
}

fn mask_to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Vertex connectivity by exhaustive removal: the smallest vertex set whose
/// removal disconnects the graph, with the complete-graph convention n-1
/// and 0 for disconnected graphs.
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 1 && n <= 20);
    if g.is_complete() {
        return n - 1;
    }
    for size in 0..n {
        for mask in subsets(n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let keep = mask_to_set(n, mask).complement();
            let (h, _) = g.induced(&keep);
            if h.n() >= 2 && !h.is_connected() {
                return size;
            }
        }
    }
    unreachable!("non-complete graph has a disconnecting set")
}

/// Minimum s-t vertex cut by exhaustive removal over subsets disjoint from
/// {s, t}.
pub fn brute_local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    assert!(!g.has_edge(s, t) && s != t);
    let mut best = usize::MAX;
    for mask in subsets(n) {
        if mask >> s & 1 == 1 || mask >> t & 1 == 1 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let keep = mask_to_set(n, mask).complement();
        let (h, map) = g.induced(&keep);
        let hs = map.iter().position(|&v| v == s).unwrap();
        let ht = map.iter().position(|&v| v == t).unwrap();
        let comps = h.components();
        let sep = comps
            .iter()
            .find(|c| c.contains(hs))
            .map(|c| !c.contains(ht))
            .unwrap_or(false);
        if sep {
            best = size;
        }
    }
    best
}

/// Existence of a (k+1)-connected induced subgraph by testing the vertex
/// connectivity of every induced subgraph.
pub fn brute_has_k_plus_1_connected_subgraph(g: &Graph, k: usize) -> bool {
    let n = g.n();
    subsets(n).any(|mask| {
        if (mask.count_ones() as usize) < k + 2 {
            return false;
        }
        let (h, _) = g.induced(&mask_to_set(n, mask));
        brute_kappa(&h) >= k + 1
    })
}

/// Every labeled graph on n vertices, in edge-mask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let e = edges.len();
    assert!(e <= 31);
    (0..1u32 << e).map(move |mask| {
        let chosen: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edge_list(n, &chosen).unwrap()
    })
}

pub fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
