//! Desk-scale empirical verification: exhaustive enumeration at a fixed
//! edge count (sufficient by monotonicity), and maximum-edge search over
//! graphs with no (k+1)-connected subgraph.

use crate::bounds::{min_forcing_edge_count, render_rational, threshold, BoundKind, BoundsError};
use crate::connectivity::has_k_plus_1_connected_subgraph;
use crate::constructions::mader_graph;
use crate::graph::Graph;
use crate::io::to_graph6;
use num::bigint::BigUint;
use num::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("estimated work {estimated} exceeds budget {budget}")]
    BudgetExceeded { estimated: BigUint, budget: u64 },
    #[error("(n, k) = ({n}, {k}) is outside the validity domain of {kind:?}; pass the domain override for an exploratory run")]
    OutsideDomain { kind: BoundKind, n: usize, k: usize },
    #[error("search requires k >= 1 and n >= 1, got n = {n}, k = {k}")]
    BadParams { n: usize, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Greedy,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub jobs: usize,
    pub budget: u64,
    pub seed: u64,
    pub override_domain: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { jobs: 1, budget: DEFAULT_BUDGET, seed: 0, override_domain: false }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BestGraph {
    pub edges: usize,
    pub graph6: String,
}

/// Outcome of one search run. Serializes to a schema-stable JSON document;
/// wall time is kept out of the serialized form so identical runs produce
/// byte-identical reports.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<BoundKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_count: Option<usize>,
    pub graphs_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    /// graph6 encodings of subgraph-free graphs at the forcing edge count.
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best: Option<BestGraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_edges: Option<usize>,
    pub exhaustive: bool,
    pub exploratory: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

// ---------------------------------------------------------------------------
// Combination ranking
// ---------------------------------------------------------------------------

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The lexicographically `rank`-th m-combination of {0..e-1}.
fn unrank_combination(e: usize, m: usize, mut rank: u64) -> Vec<usize> {
    let mut comb = Vec::with_capacity(m);
    let mut x = 0usize;
    for slot in 0..m {
        let remaining = m - slot - 1;
        loop {
            let with_x = binomial((e - x - 1) as u64, remaining as u64)
                .to_u64()
                .expect("within budgeted range");
            if rank < with_x {
                comb.push(x);
                x += 1;
                break;
            }
            rank -= with_x;
            x += 1;
        }
    }
    comb
}

/// Advance to the lexicographic successor in place; false at the last one.
fn next_combination(comb: &mut [usize], e: usize) -> bool {
    let m = comb.len();
    for i in (0..m).rev() {
        if comb[i] < e - (m - i) {
            comb[i] += 1;
            for j in i + 1..m {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn edge_positions(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    edges
}

/// Exact count of graphs to examine: C(C(n,2), m) for a forcing run, the
/// full subset count for exhaustive maximization, the iteration budget for
/// greedy.
pub fn estimate_work(n: usize, k: usize, target: WorkTarget) -> Result<BigUint, SearchError> {
    let e = (n * n.saturating_sub(1) / 2) as u64;
    match target {
        WorkTarget::Forcing(kind) => {
            let m = min_forcing_edge_count(kind, n, k)? as u64;
            Ok(binomial(e, m))
        }
        WorkTarget::Exhaustive => Ok(BigUint::from(2u32).pow(e as u32)),
        WorkTarget::Greedy { budget } => Ok(BigUint::from(budget)),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum WorkTarget {
    Forcing(BoundKind),
    Exhaustive,
    Greedy { budget: u64 },
}

// ---------------------------------------------------------------------------
// Forcing verification
// ---------------------------------------------------------------------------

/// Enumerate every labeled n-vertex graph with exactly the minimum forcing
/// edge count and assert each contains a (k+1)-connected subgraph. By
/// monotonicity this covers all larger edge counts too.
pub fn verify_forcing(
    kind: BoundKind,
    n: usize,
    k: usize,
    config: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    let m = min_forcing_edge_count(kind, n, k)?;
    let thr = threshold(kind, n, k)?;
    let exploratory = !thr.in_domain;
    if exploratory && !config.override_domain {
        return Err(SearchError::OutsideDomain { kind, n, k });
    }
    let edges = edge_positions(n);
    let e = edges.len();
    let total_big = binomial(e as u64, m as u64);
    if total_big > BigUint::from(config.budget) {
        return Err(SearchError::BudgetExceeded { estimated: total_big, budget: config.budget });
    }
    let total = total_big.to_u64().expect("under budget");

    let jobs = config.jobs.max(1);
    let chunk = total.div_ceil(jobs as u64).max(1);
    let ranges: Vec<(u64, u64)> = (0..jobs as u64)
        .map(|j| (j * chunk, ((j + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let run_range = |(lo, hi): (u64, u64)| -> (u64, Vec<String>) {
        let mut found = Vec::new();
        let mut examined = 0u64;
        if m == 0 {
            // single graph: the edgeless one
            let g = Graph::empty(n);
            if !has_k_plus_1_connected_subgraph(&g, k).0 {
                found.push(to_graph6(&g));
            }
            return (1, found);
        }
        let mut comb = unrank_combination(e, m, lo);
        for _ in lo..hi {
            let chosen: Vec<(usize, usize)> = comb.iter().map(|&i| edges[i]).collect();
            let g = Graph::from_edge_list(n, &chosen).expect("valid positions");
            if !has_k_plus_1_connected_subgraph(&g, k).0 {
                found.push(to_graph6(&g));
            }
            examined += 1;
            next_combination(&mut comb, e);
        }
        (examined, found)
    };

    let results: Vec<(u64, Vec<String>)> = if jobs == 1 || total == 0 {
        ranges.into_iter().map(run_range).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| ranges.into_par_iter().map(run_range).collect())
    };

    let examined: u64 = if m == 0 { 1 } else { results.iter().map(|(c, _)| c).sum() };
    let mut counterexamples: Vec<String> =
        results.into_iter().flat_map(|(_, f)| f).collect();
    counterexamples.sort();
    counterexamples.dedup();
    if m > 0 {
        debug_assert_eq!(examined, total);
    }

    Ok(SearchReport {
        n,
        k,
        mode: "verify-forcing".to_string(),
        kind: Some(kind),
        threshold: Some(render_rational(&thr.value)),
        edge_count: Some(m),
        graphs_examined: examined,
        verified: Some(counterexamples.is_empty()),
        counterexamples,
        best: None,
        max_edges: None,
        exhaustive: true,
        exploratory,
        wall_time: start.elapsed(),
    })
}

// ---------------------------------------------------------------------------
// Maximum edges without a (k+1)-connected subgraph
// ---------------------------------------------------------------------------

struct Dfs<'a> {
    edges: &'a [(usize, usize)],
    k: usize,
    budget: u64,
    calls: u64,
    best_m: usize,
    best: Option<Graph>,
    truncated: bool,
}

impl Dfs<'_> {
    fn admissible(&mut self, g: &Graph) -> Option<bool> {
        if self.calls >= self.budget {
            self.truncated = true;
            return None;
        }
        self.calls += 1;
        Some(!has_k_plus_1_connected_subgraph(g, self.k).0)
    }

    /// Lexicographic DFS over edge additions; prune any branch whose graph
    /// already contains the forbidden subgraph (valid by monotonicity).
    fn run(&mut self, g: &Graph, idx: usize) {
        if self.truncated {
            return;
        }
        if g.m() + (self.edges.len() - idx) <= self.best_m && self.best.is_some() {
            return;
        }
        if idx == self.edges.len() {
            if self.best.is_none() || g.m() > self.best_m {
                self.best_m = g.m();
                self.best = Some(g.clone());
            }
            return;
        }
        let (u, v) = self.edges[idx];
        let with = g.with_edge(u, v).expect("valid edge");
        match self.admissible(&with) {
            Some(true) => self.run(&with, idx + 1),
            Some(false) => {}
            None => return,
        }
        self.run(g, idx + 1);
    }
}

pub fn max_edges_without(
    n: usize,
    k: usize,
    mode: SearchMode,
    config: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    if n == 0 || k == 0 {
        return Err(SearchError::BadParams { n, k });
    }
    let start = Instant::now();
    match mode {
        SearchMode::Exhaustive => {
            let edges = edge_positions(n);
            let mut dfs = Dfs {
                edges: &edges,
                k,
                budget: config.budget,
                calls: 0,
                best_m: 0,
                best: None,
                truncated: false,
            };
            let empty = Graph::empty(n);
            dfs.best = Some(empty.clone());
            dfs.run(&empty, 0);
            let best = dfs.best.expect("empty graph is admissible");
            Ok(SearchReport {
                n,
                k,
                mode: "max-edges-exhaustive".to_string(),
                kind: None,
                threshold: None,
                edge_count: None,
                graphs_examined: dfs.calls,
                verified: None,
                counterexamples: Vec::new(),
                best: Some(BestGraph { edges: best.m(), graph6: to_graph6(&best) }),
                max_edges: Some(best.m()),
                exhaustive: !dfs.truncated,
                exploratory: false,
                wall_time: start.elapsed(),
            })
        }
        SearchMode::Greedy => greedy_search(n, k, config, start),
    }
}

/// Randomized local search seeded from the extremal construction (or a
/// spanning path for k = 1): random edge additions plus swap moves, keeping
/// the graph subgraph-free throughout. Yields a lower-bound witness.
fn greedy_search(
    n: usize,
    k: usize,
    config: &SearchConfig,
    start: Instant,
) -> Result<SearchReport, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut current = if k >= 2 && n >= k + 1 {
        mader_graph(n, k).expect("params checked").graph
    } else {
        let path: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &path).expect("path")
    };
    debug_assert!(!has_k_plus_1_connected_subgraph(&current, k).0);
    let mut best = current.clone();
    let mut calls = 0u64;
    let all = edge_positions(n);
    // cheap iteration cap so greedy runs scale with the budget without
    // spending it all on tiny instances
    let iters = config.budget.min(2_000 + 200 * n as u64);
    for _ in 0..iters {
        let non_edges: Vec<(usize, usize)> =
            all.iter().copied().filter(|&(u, v)| !current.has_edge(u, v)).collect();
        if non_edges.is_empty() {
            break;
        }
        let &(u, v) = non_edges.choose(&mut rng).expect("nonempty");
        let candidate = current.with_edge(u, v).expect("valid");
        calls += 1;
        if !has_k_plus_1_connected_subgraph(&candidate, k).0 {
            current = candidate;
        } else if current.m() > 0 && rng.gen_bool(0.3) {
            // swap: drop a random edge, keep the addition if still admissible
            let cur_edges = current.edges();
            let &(a, b) = cur_edges.choose(&mut rng).expect("nonempty");
            if (a, b) != (u, v) {
                let mut kept: Vec<(usize, usize)> =
                    cur_edges.iter().copied().filter(|&e| e != (a, b)).collect();
                kept.push((u, v));
                let swapped = Graph::from_edge_list(n, &kept).expect("valid");
                calls += 1;
                if !has_k_plus_1_connected_subgraph(&swapped, k).0 {
                    current = swapped;
                }
            }
        }
        if current.m() > best.m() {
            best = current.clone();
        }
    }
    Ok(SearchReport {
        n,
        k,
        mode: "max-edges-greedy".to_string(),
        kind: None,
        threshold: None,
        edge_count: None,
        graphs_examined: calls,
        verified: None,
        counterexamples: Vec::new(),
        best: Some(BestGraph { edges: best.m(), graph6: to_graph6(&best) }),
        max_edges: Some(best.m()),
        exhaustive: false,
        exploratory: false,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::from_graph6;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(15, 13), BigUint::from(105u32));
        assert_eq!(binomial(21, 16), BigUint::from(20349u32));
        assert_eq!(binomial(28, 24), BigUint::from(20475u32));
        assert_eq!(binomial(4, 7), BigUint::zero());
    }

    #[test]
    fn estimate_work_examples() {
        let est = |n, k| estimate_work(n, k, WorkTarget::Forcing(BoundKind::NewThm)).unwrap();
        assert_eq!(est(6, 2), BigUint::from(105u32));
        assert_eq!(est(7, 2), BigUint::from(20349u32));
        assert_eq!(est(8, 3), BigUint::from(20475u32));
    }

    #[test]
    fn combination_enumeration_is_complete() {
        let mut seen = std::collections::HashSet::new();
        let mut comb = unrank_combination(6, 3, 0);
        loop {
            seen.insert(comb.clone());
            if !next_combination(&mut comb, 6) {
                break;
            }
        }
        assert_eq!(seen.len(), 20);
        // unranking agrees with sequential order
        let mut comb = unrank_combination(6, 3, 0);
        for rank in 0..20u64 {
            assert_eq!(comb, unrank_combination(6, 3, rank));
            next_combination(&mut comb, 6);
        }
    }

    #[test]
    fn verify_forcing_k5() {
        let report =
            verify_forcing(BoundKind::NewThm, 5, 2, &SearchConfig::default()).unwrap();
        assert_eq!(report.graphs_examined, 1);
        assert_eq!(report.verified, Some(true));
        assert_eq!(report.edge_count, Some(10));
    }

    #[test]
    fn verify_forcing_matula_small() {
        let report =
            verify_forcing(BoundKind::MatulaLemma, 5, 2, &SearchConfig::default()).unwrap();
        assert_eq!(report.graphs_examined, 45);
        assert_eq!(report.verified, Some(true));
    }

    #[test]
    fn budget_refusal() {
        let config = SearchConfig { budget: 10, ..Default::default() };
        match verify_forcing(BoundKind::MatulaLemma, 5, 2, &config) {
            Err(SearchError::BudgetExceeded { estimated, budget }) => {
                assert_eq!(estimated, BigUint::from(45u32));
                assert_eq!(budget, 10);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn domain_refusal_and_override() {
        assert!(matches!(
            verify_forcing(BoundKind::NewThm, 4, 2, &SearchConfig::default()),
            Err(SearchError::OutsideDomain { .. })
        ));
        let config = SearchConfig { override_domain: true, ..Default::default() };
        let report = verify_forcing(BoundKind::NewThm, 4, 2, &config).unwrap();
        assert!(report.exploratory);
    }

    #[test]
    fn parallel_run_matches_serial() {
        let serial = verify_forcing(BoundKind::NewThm, 6, 2, &SearchConfig::default()).unwrap();
        let config = SearchConfig { jobs: 4, ..Default::default() };
        let parallel = verify_forcing(BoundKind::NewThm, 6, 2, &config).unwrap();
        assert_eq!(serial.graphs_examined, parallel.graphs_examined);
        assert_eq!(serial.counterexamples, parallel.counterexamples);
        assert_eq!(serial.verified, parallel.verified);
    }

    #[test]
    fn max_edges_exhaustive_small() {
        let report =
            max_edges_without(5, 2, SearchMode::Exhaustive, &SearchConfig::default()).unwrap();
        assert!(report.exhaustive);
        assert_eq!(report.max_edges, Some(7));
        let witness = from_graph6(&report.best.as_ref().unwrap().graph6).unwrap();
        assert_eq!(witness.m(), 7);
        assert!(!has_k_plus_1_connected_subgraph(&witness, 2).0);
    }

    #[test]
    fn greedy_witness_revalidates() {
        let config = SearchConfig { seed: 42, ..Default::default() };
        let report = max_edges_without(8, 2, SearchMode::Greedy, &config).unwrap();
        let best = report.best.unwrap();
        assert!(best.edges >= crate::constructions::mader_edge_count(8, 2).unwrap());
        let witness = from_graph6(&best.graph6).unwrap();
        assert_eq!(witness.m(), best.edges);
        assert!(!has_k_plus_1_connected_subgraph(&witness, 2).0);
    }

    #[test]
    fn greedy_is_deterministic_per_seed() {
        let config = SearchConfig { seed: 7, ..Default::default() };
        let a = max_edges_without(7, 2, SearchMode::Greedy, &config).unwrap();
        let b = max_edges_without(7, 2, SearchMode::Greedy, &config).unwrap();
        assert_eq!(a.best, b.best);
    }
}
