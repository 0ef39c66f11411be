//! Cross-checks of the flow-based connectivity code against independent
//! exhaustive oracles.

mod common;

use common::*;
use kcon::connectivity::{
    has_k_plus_1_connected_subgraph, local_vertex_connectivity, vertex_connectivity,
};
use kcon::graph::Graph;

#[test]
fn k5_minus_edge_matches_brute_force() {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(5, &edges).unwrap();
    assert_eq!(brute_local_connectivity(&g, 0, 1), 3);
    assert_eq!(local_vertex_connectivity(&g, 0, 1).unwrap(), 3);
}

#[test]
fn petersen_matches_brute_force() {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let g = Graph::from_edge_list(10, &edges).unwrap();
    assert_eq!(brute_kappa(&g), 3);
    assert_eq!(vertex_connectivity(&g).unwrap().0, 3);
}

#[test]
fn menger_duality_small_and_random() {
    // all labeled graphs up to 5 vertices, every non-adjacent pair
    for n in 2..=5 {
        for g in all_labeled_graphs(n) {
            for s in 0..n {
                for t in s + 1..n {
                    if g.has_edge(s, t) {
                        continue;
                    }
                    assert_eq!(
                        local_vertex_connectivity(&g, s, t).unwrap(),
                        brute_local_connectivity(&g, s, t),
                        "{g:?} s={s} t={t}"
                    );
                }
            }
        }
    }
    let mut rng = seeded_rng(11);
    for _ in 0..60 {
        let g = random_graph(8, &mut rng);
        for s in 0..8 {
            for t in s + 1..8 {
                if !g.has_edge(s, t) {
                    assert_eq!(
                        local_vertex_connectivity(&g, s, t).unwrap(),
                        brute_local_connectivity(&g, s, t),
                        "{g:?} s={s} t={t}"
                    );
                }
            }
        }
    }
}

#[test]
fn kappa_matches_brute_force_exhaustively() {
    for n in 1..=5 {
        for g in all_labeled_graphs(n) {
            assert_eq!(vertex_connectivity(&g).unwrap().0, brute_kappa(&g), "{g:?}");
        }
    }
}

#[test]
fn kappa_matches_brute_force_random() {
    let mut rng = seeded_rng(23);
    for n in [6, 7, 8] {
        for _ in 0..80 {
            let g = random_graph(n, &mut rng);
            assert_eq!(vertex_connectivity(&g).unwrap().0, brute_kappa(&g), "{g:?}");
        }
    }
}

#[test]
fn decision_procedure_matches_oracle_exhaustively() {
    for n in 1..=6 {
        for g in all_labeled_graphs(n) {
            for k in 1..=3 {
                assert_eq!(
                    has_k_plus_1_connected_subgraph(&g, k).0,
                    brute_has_k_plus_1_connected_subgraph(&g, k),
                    "{g:?} k={k}"
                );
            }
        }
    }
}

#[test]
fn decision_procedure_matches_oracle_random() {
    let mut rng = seeded_rng(37);
    for _ in 0..200 {
        let g = random_graph(8, &mut rng);
        for k in 1..=3 {
            assert_eq!(
                has_k_plus_1_connected_subgraph(&g, k).0,
                brute_has_k_plus_1_connected_subgraph(&g, k),
                "{g:?} k={k}"
            );
        }
    }
}

#[test]
fn witnesses_and_certificates_revalidate() {
    let mut rng = seeded_rng(41);
    for _ in 0..100 {
        let g = random_graph(7, &mut rng);
        let (kappa, cert) = vertex_connectivity(&g).unwrap();
        if let Some(cert) = cert {
            assert_eq!(cert.separator.len(), kappa);
            assert!(cert.validate(&g), "{g:?}");
        }
        for k in 1..=3 {
            if let (true, Some(w)) = has_k_plus_1_connected_subgraph(&g, k) {
                assert!(w.validate(&g), "{g:?} k={k}");
            }
        }
    }
}
