//! Vertex connectivity, minimum vertex separators, and the decision
//! procedure for "contains a (k+1)-connected subgraph".

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("vertex connectivity undefined for the empty graph")]
    EmptyGraph,
    #[error("local connectivity requires distinct non-adjacent endpoints, got {s} and {t}")]
    InvalidPair { s: usize, t: usize },
}

/// A vertex separator together with the two sides it separates.
/// `separator`, `side_a`, `side_b` partition the host vertex set; no edge
/// joins `side_a` to `side_b`. A disconnected graph has an empty separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub separator: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl CutCertificate {
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.separator.capacity() != n
            || self.side_a.capacity() != n
            || self.side_b.capacity() != n
        {
            return false;
        }
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return false;
        }
        // pairwise disjoint and covering
        if self.separator.intersects(&self.side_a)
            || self.separator.intersects(&self.side_b)
            || self.side_a.intersects(&self.side_b)
        {
            return false;
        }
        if self.separator.union(&self.side_a).union(&self.side_b) != VertexSet::full(n) {
            return false;
        }
        // no edge across the cut
        self.side_a
            .iter()
            .all(|u| !g.neighbors(u).intersects(&self.side_b))
    }
}

/// A vertex set claimed to induce a (k+1)-connected subgraph of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSubgraphWitness {
    pub vertices: VertexSet,
    pub k: usize,
}

impl KSubgraphWitness {
    pub fn validate(&self, g: &Graph) -> bool {
        if self.vertices.capacity() != g.n() || self.vertices.len() < self.k + 2 {
            return false;
        }
        let (h, _) = g.induced(&self.vertices);
        is_k_plus_1_connected(&h, self.k)
    }
}

// ---------------------------------------------------------------------------
// Unit-capacity flow on the vertex-split digraph
// ---------------------------------------------------------------------------

/// Vertex v splits into nodes 2v (in) and 2v+1 (out) with a capacity-1 arc;
/// each undirected edge uv becomes u_out->v_in and v_out->u_in, effectively
/// uncapacitated. Max flow between s_out and t_in equals the minimum s-t
/// vertex cut by Menger.
struct SplitFlow {
    to: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl SplitFlow {
    fn build(g: &Graph, s: usize, t: usize) -> SplitFlow {
        let n = g.n();
        let inf = n as u32 + 1;
        let mut net = SplitFlow { to: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); 2 * n] };
        for v in 0..n {
            if v != s && v != t {
                net.add_arc(2 * v, 2 * v + 1, 1);
            }
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, inf);
            net.add_arc(2 * v + 1, 2 * u, inf);
        }
        net
    }

    fn add_arc(&mut self, a: usize, b: usize, c: u32) {
        let idx = self.to.len();
        self.to.push(b);
        self.cap.push(c);
        self.adj[a].push(idx);
        self.to.push(a);
        self.cap.push(0);
        self.adj[b].push(idx + 1);
    }

    /// BFS in the residual network; returns the parent-arc array if the sink
    /// is reachable, otherwise the reachable-set marker array.
    fn bfs(&self, source: usize, sink: usize) -> (Vec<usize>, bool) {
        let mut parent = vec![usize::MAX; self.adj.len()];
        let mut queue = std::collections::VecDeque::new();
        parent[source] = usize::MAX - 1;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &a in &self.adj[v] {
                let w = self.to[a];
                if self.cap[a] > 0 && parent[w] == usize::MAX {
                    parent[w] = a;
                    if w == sink {
                        return (parent, true);
                    }
                    queue.push_back(w);
                }
            }
        }
        (parent, false)
    }
}

/// Minimum s-t vertex cut and its size. Augments one unit per round;
/// aborts returning `None` once the flow value would exceed `limit`.
fn min_vertex_cut(
    g: &Graph,
    s: usize,
    t: usize,
    limit: usize,
) -> Result<Option<(usize, VertexSet)>, ConnectivityError> {
    if s == t || g.has_edge(s, t) {
        return Err(ConnectivityError::InvalidPair { s, t });
    }
    let mut net = SplitFlow::build(g, s, t);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0usize;
    loop {
        let (parent, reached) = net.bfs(source, sink);
        if !reached {
            // residual reachability yields the cut: v with v_in reachable
            // but v_out not
            let mut cut = VertexSet::empty(g.n());
            for v in 0..g.n() {
                if v == s || v == t {
                    continue;
                }
                if parent[2 * v] != usize::MAX && parent[2 * v + 1] == usize::MAX {
                    cut.insert(v);
                }
            }
            debug_assert_eq!(cut.len(), flow);
            return Ok(Some((flow, cut)));
        }
        flow += 1;
        if flow > limit {
            return Ok(None);
        }
        let mut node = sink;
        while node != source {
            let a = parent[node];
            net.cap[a] -= 1;
            net.cap[a ^ 1] += 1;
            node = net.to[a ^ 1];
        }
    }
}

/// Maximum number of internally vertex-disjoint s-t paths, equal to the
/// minimum s-t vertex cut size. Requires s != t and s, t non-adjacent.
pub fn local_vertex_connectivity(
    g: &Graph,
    s: usize,
    t: usize,
) -> Result<usize, ConnectivityError> {
    Ok(min_vertex_cut(g, s, t, usize::MAX)?
        .expect("no limit")
        .0)
}

// ---------------------------------------------------------------------------
// Global connectivity
// ---------------------------------------------------------------------------

/// The fixed pair-scan order: a minimum-degree vertex v against each of its
/// non-neighbors, then each non-adjacent pair of neighbors of v. Every
/// minimum vertex cut is discovered by at least one of these pairs.
fn scan_pairs(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let v = (0..g.n())
        .min_by_key(|&u| (g.degree(u), u))
        .expect("nonempty graph");
    let mut pairs = Vec::new();
    for u in 0..g.n() {
        if u != v && !g.has_edge(v, u) {
            pairs.push((v, u));
        }
    }
    let nbrs = g.neighbors(v).to_vec();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                pairs.push((a, b));
            }
        }
    }
    (v, pairs)
}

fn certificate_from_separator(g: &Graph, separator: VertexSet) -> CutCertificate {
    let rest = VertexSet::full(g.n()).difference(&separator);
    let comps = g.components_within(&rest);
    debug_assert!(comps.len() >= 2, "separator does not disconnect");
    let side_a = comps[0].clone();
    let mut side_b = VertexSet::empty(g.n());
    for c in &comps[1..] {
        side_b = side_b.union(c);
    }
    CutCertificate { separator, side_a, side_b }
}

/// Vertex connectivity with a realizing minimum cut. Complete graphs give
/// `(n-1, None)`; disconnected graphs give `(0, Some(empty-separator cert))`;
/// a single vertex gives `(0, None)`.
pub fn vertex_connectivity(
    g: &Graph,
) -> Result<(usize, Option<CutCertificate>), ConnectivityError> {
    if g.n() == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if g.is_complete() {
        return Ok((g.n() - 1, None));
    }
    if !g.is_connected() {
        return Ok((0, Some(certificate_from_separator(g, VertexSet::empty(g.n())))));
    }
    let (_, pairs) = scan_pairs(g);
    let mut best: Option<(usize, VertexSet)> = None;
    for (s, t) in pairs {
        let limit = best.as_ref().map_or(usize::MAX, |(k, _)| *k);
        if let Some((val, cut)) = min_vertex_cut(g, s, t, limit)? {
            let better = match &best {
                None => true,
                Some((bv, bc)) => val < *bv || (val == *bv && cut < *bc),
            };
            if better {
                best = Some((val, cut));
            }
        }
    }
    let (kappa, cut) = best.expect("non-complete graph has a non-adjacent pair");
    Ok((kappa, Some(certificate_from_separator(g, cut))))
}

/// A minimum-size separator of size at most `k`, if one exists, with the
/// deterministic tie-break (lexicographically smallest among minimum cuts
/// found by the pair scan). Complete graphs and graphs with connectivity
/// above `k` yield `None`.
pub fn find_separator_at_most(g: &Graph, k: usize) -> Option<CutCertificate> {
    if g.n() == 0 {
        return None;
    }
    match vertex_connectivity(g).expect("nonempty") {
        (kappa, Some(cert)) if kappa <= k => Some(cert),
        _ => None,
    }
}

/// Early-exit variant: any separator of size <= k, first found in the fixed
/// pair-scan order. Used by the decomposition, which only needs soundness.
fn find_any_separator_at_most(g: &Graph, k: usize) -> Option<CutCertificate> {
    if g.n() == 0 || g.is_complete() {
        return None;
    }
    if !g.is_connected() {
        return Some(certificate_from_separator(g, VertexSet::empty(g.n())));
    }
    let (_, pairs) = scan_pairs(g);
    for (s, t) in pairs {
        if let Some((val, cut)) = min_vertex_cut(g, s, t, k).expect("valid pair") {
            debug_assert!(val <= k);
            return Some(certificate_from_separator(g, cut));
        }
    }
    None
}

/// True iff `g` has at least k+2 vertices and no separator of size <= k.
pub fn is_k_plus_1_connected(g: &Graph, k: usize) -> bool {
    g.n() >= k + 2 && find_any_separator_at_most(g, k).is_none()
}

fn lift(set: &VertexSet, map: &[usize], host_n: usize) -> VertexSet {
    VertexSet::from_iter_with_capacity(host_n, set.iter().map(|v| map[v]))
}

fn decompose(
    g: &Graph,
    subset: &VertexSet,
    k: usize,
    memo: &mut HashSet<VertexSet>,
    leaves: &mut Option<&mut Vec<VertexSet>>,
) -> Option<VertexSet> {
    if subset.len() <= k + 1 || memo.contains(subset) {
        return None;
    }
    let (h, map) = g.induced(subset);
    match find_any_separator_at_most(&h, k) {
        None => {
            // h has >= k+2 vertices and connectivity >= k+1
            if let Some(acc) = leaves {
                acc.push(subset.clone());
                memo.insert(subset.clone());
                None
            } else {
                Some(subset.clone())
            }
        }
        Some(cert) => {
            // Any (k+1)-connected subgraph lies within one side plus the
            // separator: its intersection with the separator would otherwise
            // be a cut of size <= k.
            let sep = lift(&cert.separator, &map, g.n());
            let mut first = lift(&cert.side_a, &map, g.n()).union(&sep);
            let mut second = lift(&cert.side_b, &map, g.n()).union(&sep);
            if first.len() > second.len() {
                std::mem::swap(&mut first, &mut second);
            }
            for part in [first, second] {
                if let Some(w) = decompose(g, &part, k, memo, leaves) {
                    return Some(w);
                }
            }
            memo.insert(subset.clone());
            None
        }
    }
}

/// Sound and complete decision procedure for the existence of a
/// (k+1)-connected subgraph, by recursive separator decomposition with
/// memoization on visited vertex subsets. Requires k >= 1.
pub fn has_k_plus_1_connected_subgraph(
    g: &Graph,
    k: usize,
) -> (bool, Option<KSubgraphWitness>) {
    assert!(k >= 1, "decision procedure requires k >= 1");
    let mut memo = HashSet::new();
    match decompose(g, &g.full_vertex_set(), k, &mut memo, &mut None) {
        Some(vertices) => (true, Some(KSubgraphWitness { vertices, k })),
        None => (false, None),
    }
}

/// All inclusion-maximal vertex sets inducing (k+1)-connected subgraphs,
/// sorted by size descending then lexicographically.
pub fn max_k_connected_pieces(g: &Graph, k: usize) -> Vec<KSubgraphWitness> {
    assert!(k >= 1);
    let mut memo = HashSet::new();
    let mut raw = Vec::new();
    decompose(g, &g.full_vertex_set(), k, &mut memo, &mut Some(&mut raw));
    raw.sort();
    raw.dedup();
    let maximal: Vec<VertexSet> = raw
        .iter()
        .filter(|s| !raw.iter().any(|t| *s != t && s.is_subset(t)))
        .cloned()
        .collect();
    let mut out: Vec<KSubgraphWitness> = maximal
        .into_iter()
        .map(|vertices| KSubgraphWitness { vertices, k })
        .collect();
    out.sort_by(|a, b| {
        b.vertices
            .len()
            .cmp(&a.vertices.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;

    #[test]
    fn local_connectivity_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(local_vertex_connectivity(&c5, 0, 2).unwrap(), 2);

        // star K_{1,3}: center 0
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(local_vertex_connectivity(&star, 1, 2).unwrap(), 1);

        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        let k5_minus = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(local_vertex_connectivity(&k5_minus, 0, 1).unwrap(), 3);
    }

    #[test]
    fn local_connectivity_rejects_bad_pairs() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(local_vertex_connectivity(&c5, 1, 1).is_err());
        assert!(local_vertex_connectivity(&c5, 0, 1).is_err());
    }

    fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, (i + 2) % 5 + 5)); // pentagram
        }
        Graph::from_edge_list(10, &edges).unwrap()
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap(), (4, None));
        assert_eq!(vertex_connectivity(&Graph::cycle(6).unwrap()).unwrap().0, 2);
        assert_eq!(vertex_connectivity(&petersen()).unwrap().0, 3);
        assert!(vertex_connectivity(&Graph::empty(0)).is_err());
        assert_eq!(vertex_connectivity(&Graph::empty(1)).unwrap(), (0, None));
    }

    #[test]
    fn kappa_certificates_validate() {
        for g in [
            Graph::cycle(6).unwrap(),
            petersen(),
            Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap(),
        ] {
            let (kappa, cert) = vertex_connectivity(&g).unwrap();
            let cert = cert.expect("non-complete");
            assert_eq!(cert.separator.len(), kappa);
            assert!(cert.validate(&g));
        }
    }

    #[test]
    fn k_plus_1_connected_examples() {
        assert!(is_k_plus_1_connected(&Graph::complete(4), 2));
        assert!(is_k_plus_1_connected(&Graph::cycle(6).unwrap(), 1));
        assert!(!is_k_plus_1_connected(&Graph::complete(3), 2)); // n < k+2
        assert!(!is_k_plus_1_connected(&Graph::cycle(6).unwrap(), 2));
    }

    #[test]
    fn separator_search() {
        assert!(find_separator_at_most(&Graph::complete(5), 3).is_none());
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let cert = find_separator_at_most(&two_edges, 0).unwrap();
        assert!(cert.separator.is_empty());
        assert!(cert.validate(&two_edges));
    }

    #[test]
    fn decision_procedure_basics() {
        let (yes, w) = has_k_plus_1_connected_subgraph(&Graph::complete(5), 2);
        assert!(yes);
        let w = w.unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.validate(&Graph::complete(5)));

        let (no, w) = has_k_plus_1_connected_subgraph(&Graph::cycle(6).unwrap(), 2);
        assert!(!no);
        assert!(w.is_none());
    }

    #[test]
    fn maximal_pieces() {
        // two disjoint K4s
        let mut edges = vec![];
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let pieces = max_k_connected_pieces(&g, 2);
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(pieces[1].vertices.to_vec(), vec![4, 5, 6, 7]);
        assert!(pieces.iter().all(|w| w.validate(&g)));

        let k6 = Graph::complete(6);
        let pieces = max_k_connected_pieces(&k6, 2);
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].vertices, VertexSet::full(6));
    }
}
