#![allow(dead_code)]
//! Independent reference implementations and graph samplers for tests.

use std::collections::HashMap;

use graphsiege::{EdgeId, Graph, VertexId};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: usize = usize::MAX;

/// Floyd–Warshall over vertex ids `0..capacity`; dead vertices stay at INF.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_capacity();
    let mut d = vec![vec![INF; n]; n];
    for v in g.alive_vertices() {
        d[v][v] = 0;
    }
    for e in g.edges() {
        d[e.low()][e.high()] = 1;
        d[e.high()][e.low()] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn aipl_oracle(g: &Graph) -> f64 {
    let d = floyd_warshall(g);
    let alive: Vec<VertexId> = g.alive_vertices().collect();
    let n = alive.len();
    if n < 2 {
        return 0.0;
    }
    let mut sum = 0.0;
    for &u in &alive {
        for &v in &alive {
            if u != v && d[u][v] != INF {
                sum += 1.0 / d[u][v] as f64;
            }
        }
    }
    sum / (n * (n - 1)) as f64
}

/// Raw betweenness by listing every shortest path of every unordered pair.
/// Each path contributes `1 / (number of shortest paths)` to its interior
/// vertices and to each of its edges.
pub fn brute_betweenness(g: &Graph) -> (HashMap<VertexId, f64>, HashMap<EdgeId, f64>) {
    let d = floyd_warshall(g);
    let alive: Vec<VertexId> = g.alive_vertices().collect();
    let mut vb: HashMap<VertexId, f64> = alive.iter().map(|&v| (v, 0.0)).collect();
    let mut eb: HashMap<EdgeId, f64> = g.edges().map(|e| (e, 0.0)).collect();
    for (i, &s) in alive.iter().enumerate() {
        for &t in &alive[i + 1..] {
            if d[s][t] == INF {
                continue;
            }
            let mut paths = Vec::new();
            let mut path = vec![s];
            walk(g, &d, t, &mut path, &mut paths);
            let w = 1.0 / paths.len() as f64;
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    *vb.get_mut(&v).unwrap() += w;
                }
                for pair in p.windows(2) {
                    *eb.get_mut(&EdgeId::new(pair[0], pair[1]).unwrap()).unwrap() += w;
                }
            }
        }
    }
    (vb, eb)
}

fn walk(
    g: &Graph,
    d: &[Vec<usize>],
    t: VertexId,
    path: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    let u = *path.last().unwrap();
    if u == t {
        out.push(path.clone());
        return;
    }
    for &w in g.neighbors(u) {
        if d[w][t] != INF && d[w][t] + 1 == d[u][t] {
            path.push(w);
            walk(g, d, t, path, out);
            path.pop();
        }
    }
}

/// Each pair present independently with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
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

pub fn random_connected(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `g` with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &Graph, perm: &[VertexId]) -> Graph {
    let edges: Vec<(VertexId, VertexId)> =
        g.edges().map(|e| (perm[e.low()], perm[e.high()])).collect();
    Graph::from_edge_list(g.vertex_capacity(), &edges).unwrap()
}

/// Arbitrary simple graph on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edge_list(n, &edges).unwrap()
            },
        )
    })
}

/// Graph with a permutation of its vertex ids.
pub fn arb_graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<VertexId>)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let n = g.vertex_capacity();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
