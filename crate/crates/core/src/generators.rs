//! Seeded random graph families: Erdős–Rényi `G(n, p)` and `G(n, m)`,
//! Watts–Strogatz rewired ring lattices and Barabási–Albert preferential
//! attachment. All outputs are simple graphs.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Each pair independently with probability `p`.
    ErGnp { p: f64 },
    /// Exactly `edges` pairs, uniformly.
    ErGnm { edges: usize },
    /// Ring lattice of even degree `k`, each edge rewired with probability `rewire_p`.
    WattsStrogatz { k: usize, rewire_p: f64 },
    /// Each new vertex attaches to `m_attach` existing vertices by degree.
    BarabasiAlbert { m_attach: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    /// Random graph matching the demo scale of 100 vertices and 120 edges.
    pub fn demo(seed: u64) -> Self {
        GenSpec {
            family: Family::ErGnm { edges: 120 },
            n: 100,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let n = self.n;
        let bad = |msg: String| Err(GenError::BadSpec(msg));
        match self.family {
            Family::ErGnp { p } if !(0.0..=1.0).contains(&p) => {
                bad(format!("p = {p} not in [0, 1]"))
            }
            Family::ErGnm { edges } if edges > max_edges(n) => bad(format!(
                "{edges} edges exceed the {} possible",
                max_edges(n)
            )),
            Family::WattsStrogatz { k, .. } if k % 2 != 0 => bad(format!("k = {k} must be even")),
            Family::WattsStrogatz { k, .. } if k > 0 && k >= n => {
                bad(format!("k = {k} must be below n = {n}"))
            }
            Family::WattsStrogatz { rewire_p, .. } if !(0.0..=1.0).contains(&rewire_p) => {
                bad(format!("rewire probability {rewire_p} not in [0, 1]"))
            }
            Family::BarabasiAlbert { m_attach } if m_attach < 1 || m_attach >= n => bad(format!(
                "m_attach = {m_attach} must satisfy 1 <= m_attach < n = {n}"
            )),
            _ => Ok(()),
        }
    }
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let edges = match spec.family {
        Family::ErGnp { p } => gnp_edges(n, p, &mut rng),
        Family::ErGnm { edges } => gnm_edges(n, edges, &mut rng),
        Family::WattsStrogatz { k, rewire_p } => {
            return Ok(watts_strogatz(n, k, rewire_p, &mut rng))
        }
        Family::BarabasiAlbert { m_attach } => barabasi_albert_edges(n, m_attach, &mut rng),
    };
    Ok(Graph::from_edge_list(n, &edges).expect("generators emit simple edges"))
}

fn gnp_edges<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn gnm_edges<R: Rng>(n: usize, m: usize, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    let mut picks = sample(rng, max_edges(n), m).into_vec();
    picks.sort_unstable();
    // decode row-major pair indices: row u holds pairs (u, u+1..n)
    let mut edges = Vec::with_capacity(m);
    let (mut u, mut row_start) = (0, 0);
    for k in picks {
        while k >= row_start + (n - 1 - u) {
            row_start += n - 1 - u;
            u += 1;
        }
        edges.push((u, u + 1 + (k - row_start)));
    }
    edges
}

fn watts_strogatz<R: Rng>(n: usize, k: usize, rewire_p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for j in 1..=k / 2 {
            g.add_edge(u, (u + j) % n).expect("ring lattice is simple");
        }
    }
    if rewire_p == 0.0 {
        return g;
    }
    for j in 1..=k / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if !rng.gen_bool(rewire_p) || g.degree(u) >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.gen_range(0..n);
                if w != u && !g.has_edge(u, w) {
                    break w;
                }
            };
            let e = crate::graph::EdgeId::new(u, v).expect("distinct");
            g.remove_edge(e).expect("lattice edge still present");
            g.add_edge(u, w).expect("checked fresh");
        }
    }
    g
}

fn barabasi_albert_edges<R: Rng>(n: usize, m: usize, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    // seed with a star on m + 1 vertices so the result is connected
    let mut edges: Vec<(VertexId, VertexId)> = (1..=m).map(|v| (0, v)).collect();
    let mut repeated: Vec<VertexId> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut targets = Vec::with_capacity(m);
    for v in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = repeated[rng.gen_range(0..repeated.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            repeated.push(t);
            repeated.push(v);
        }
    }
    edges
}

/// Connected `G(n, p)` sample with expected mean degree `mean_degree`,
/// redrawn until connected. `p` creeps up by 10% after every 100 failed
/// draws so sparse requests still terminate.
pub fn connected_fragment(size: usize, mean_degree: f64, seed: u64) -> Graph {
    match size {
        0 => return Graph::empty(0),
        1 => return Graph::empty(1),
        2 => return Graph::from_edge_list(2, &[(0, 1)]).expect("K2"),
        _ => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = (mean_degree / (size - 1) as f64).clamp(0.0, 1.0);
    let mut failures = 0;
    loop {
        let edges = gnp_edges(size, p, &mut rng);
        let g = Graph::from_edge_list(size, &edges).expect("simple");
        if g.is_connected() {
            return g;
        }
        failures += 1;
        if failures % 100 == 0 {
            p = (p * 1.1).min(1.0);
        }
    }
}

/// Disjoint union of connected fragments with the given sizes, vertices
/// numbered fragment by fragment.
pub fn fragmented(sizes: &[usize], mean_degree: f64, seed: u64) -> Graph {
    let n = sizes.iter().sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for (i, &size) in sizes.iter().enumerate() {
        let frag = connected_fragment(size, mean_degree, seed.wrapping_add(i as u64));
        edges.extend(frag.edges().map(|e| (e.low() + offset, e.high() + offset)));
        offset += size;
    }
    Graph::from_edge_list(n, &edges).expect("fragments are disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: usize, seed: u64) -> GenSpec {
        GenSpec { family, n, seed }
    }

    #[test]
    fn full_gnp_is_complete() {
        let g = generate(&spec(Family::ErGnp { p: 1.0 }, 5, 0)).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn gnm_edge_count() {
        let g = generate(&spec(Family::ErGnm { edges: 0 }, 10, 0)).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.alive_count(), 10);
        for m in [1, 17, 44, 45] {
            let g = generate(&spec(Family::ErGnm { edges: m }, 10, 3)).unwrap();
            assert_eq!(g.edge_count(), m);
        }
    }

    #[test]
    fn ring_lattice() {
        let g = generate(&spec(
            Family::WattsStrogatz {
                k: 4,
                rewire_p: 0.0,
            },
            8,
            0,
        ))
        .unwrap();
        assert!((0..8).all(|v| g.degree(v) == 4));
        assert!(g.has_edge(0, 7) && g.has_edge(0, 6) && !g.has_edge(0, 4));
    }

    #[test]
    fn rewiring_keeps_edge_count() {
        let g = generate(&spec(
            Family::WattsStrogatz {
                k: 6,
                rewire_p: 0.3,
            },
            60,
            9,
        ))
        .unwrap();
        assert_eq!(g.edge_count(), 180);
    }

    #[test]
    fn preferential_attachment() {
        let g = generate(&spec(Family::BarabasiAlbert { m_attach: 2 }, 200, 4)).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 2 + 2 * (200 - 3));
    }

    #[test]
    fn seeds_are_deterministic() {
        let s = spec(Family::ErGnp { p: 0.1 }, 50, 11);
        assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
    }

    #[test]
    fn bad_specs() {
        let bad = [
            spec(Family::ErGnp { p: 1.5 }, 5, 0),
            spec(Family::ErGnm { edges: 11 }, 5, 0),
            spec(
                Family::WattsStrogatz {
                    k: 3,
                    rewire_p: 0.0,
                },
                8,
                0,
            ),
            spec(
                Family::WattsStrogatz {
                    k: 8,
                    rewire_p: 0.0,
                },
                8,
                0,
            ),
            spec(Family::BarabasiAlbert { m_attach: 0 }, 8, 0),
            spec(Family::BarabasiAlbert { m_attach: 8 }, 8, 0),
        ];
        for s in bad {
            assert!(matches!(generate(&s), Err(GenError::BadSpec(_))), "{s:?}");
        }
    }

    #[test]
    fn fragments() {
        assert_eq!(connected_fragment(1, 4.0, 0).alive_count(), 1);
        assert_eq!(connected_fragment(2, 4.0, 0).edge_count(), 1);
        let g = connected_fragment(30, 4.0, 5);
        assert_eq!(g.alive_count(), 30);
        assert!(g.is_connected());

        let g = fragmented(&[5, 3, 1, 1], 4.0, 2);
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![5, 3, 1, 1]);
    }
}
