mod common;

use common::*;
use graphsiege::centrality::{edge_betweenness, vertex_betweenness, Element};
use graphsiege::paths::{aipl, all_pairs_distances, Hops};
use graphsiege::Exec;

#[test]
fn distances_match_floyd_warshall() {
    let mut r = rng(1);
    for n in 0..=10 {
        for _ in 0..30 {
            let g = random_graph(n, 0.3, &mut r);
            let fw = floyd_warshall(&g);
            let dm = all_pairs_distances(&g);
            for u in 0..n {
                for v in 0..n {
                    let want = if fw[u][v] == INF {
                        Hops::Infinite
                    } else {
                        Hops::Finite(fw[u][v])
                    };
                    assert_eq!(dm.get(u, v), want);
                }
            }
        }
    }
}

#[test]
fn aipl_matches_oracle_with_removed_vertices() {
    let mut r = rng(2);
    for _ in 0..100 {
        let mut g = random_graph(12, 0.25, &mut r);
        for v in [3, 7] {
            g.remove_vertex(v).unwrap();
        }
        assert!((aipl(&g) - aipl_oracle(&g)).abs() < 1e-12);
    }
}

#[test]
fn betweenness_matches_path_enumeration() {
    let mut r = rng(3);
    for n in 1..=9 {
        for _ in 0..20 {
            let g = random_graph(n, 0.4, &mut r);
            let (vb, eb) = brute_betweenness(&g);
            for e in vertex_betweenness(&g).entries {
                let Element::Vertex(v) = e.id else {
                    unreachable!()
                };
                assert!((e.raw - vb[&v]).abs() < 1e-9, "vertex {v}");
            }
            for e in edge_betweenness(&g).entries {
                let Element::Edge(id) = e.id else {
                    unreachable!()
                };
                assert!((e.raw - eb[&id]).abs() < 1e-9, "edge {id}");
            }
        }
    }
}

#[test]
fn parallel_and_sequential_agree_bitwise() {
    let mut r = rng(4);
    let g = random_graph(150, 0.04, &mut r);
    assert_eq!(
        graphsiege::paths::aipl_with(&g, Exec::Sequential).to_bits(),
        graphsiege::paths::aipl_with(&g, Exec::Parallel).to_bits()
    );
    assert_eq!(
        graphsiege::centrality::edge_betweenness_with(&g, Exec::Sequential),
        graphsiege::centrality::edge_betweenness_with(&g, Exec::Parallel)
    );
    assert_eq!(
        graphsiege::damage::damage_with(&g, Exec::Sequential),
        graphsiege::damage::damage_with(&g, Exec::Parallel)
    );
}
