//! Immutable simple undirected graphs over vertices `0..n-1`.

use crate::bitset::{VertexSet, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {index} out of range for n = {n} (edge {u}-{v})")]
    VertexOutOfRange { index: usize, n: usize, u: usize, v: usize },
    #[error("self-loop {0}-{0} rejected")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds the {MAX_VERTICES}-vertex cap")]
    TooLarge(usize),
    #[error("cycle graph requires n >= 3, got {0}")]
    CycleTooSmall(usize),
}

/// An immutable simple undirected graph. Adjacency is one bitset row per
/// vertex; the edge count is cached at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { index: u, n, u, v });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { index: v, n, u, v });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, adj, m })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edge_list(n, &[]).expect("empty graph")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// New graph with one extra edge. Adding an existing edge is a no-op copy.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n {
            let index = if u >= self.n { u } else { v };
            return Err(GraphError::VertexOutOfRange { index, n: self.n, u, v });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = self.clone();
        if !g.adj[u].contains(v) {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
            g.m += 1;
        }
        Ok(g)
    }

    /// Induced subgraph on `s`, relabeled by ascending original index.
    /// The returned map sends new labels to original ones.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(s.capacity(), self.n, "vertex set capacity mismatch");
        let map = s.to_vec();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let nn = map.len();
        let mut adj = vec![VertexSet::empty(nn); nn];
        let mut m = 0;
        for (new, &old) in map.iter().enumerate() {
            for w in self.adj[old].intersection(s).iter() {
                adj[new].insert(inv[w]);
            }
            m += adj[new].len();
        }
        (Graph { n: nn, adj, m: m / 2 }, map)
    }

    /// Connected components, ordered by ascending size then ascending
    /// minimum vertex, so the first entry is always a smallest component.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_vertex_set())
    }

    /// Connected components of the subgraph induced on `within`, as subsets
    /// of the host vertex range, same ordering as [`Graph::components`].
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].intersection(within).iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.min().cmp(&b.min()))
        });
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn edgeless_and_dedup() {
        assert_eq!(Graph::from_edge_list(4, &[]).unwrap().m(), 0);
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { index: 3, n: 3, u: 0, v: 3 }
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn fixture_sizes() {
        assert_eq!(Graph::complete(5).m(), 10);
        assert_eq!(Graph::complete(0).m(), 0);
        assert_eq!(Graph::cycle(6).unwrap().m(), 6);
    }

    #[test]
    fn induced_on_k4_and_c5() {
        let k4 = Graph::complete(4);
        let s = VertexSet::from_iter_with_capacity(4, [0, 1, 2]);
        let (h, map) = k4.induced(&s);
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);

        let c5 = Graph::cycle(5).unwrap();
        let s = VertexSet::from_iter_with_capacity(5, [0, 1, 2]);
        let (h, _) = c5.induced(&s);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 2);

        let (e, map) = c5.induced(&VertexSet::empty(5));
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn components_ordering() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.components().len(), 1);

        let e3 = Graph::empty(3);
        let comps = e3.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }
}
