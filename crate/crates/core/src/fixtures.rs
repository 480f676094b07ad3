//! Shipped test graphs and the fragment ladder.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generators::fragmented;
use crate::graph::{Graph, VertexId};
use crate::io::parse_edge_list;

/// Edge list of the 21-vertex, 27-edge sample graph: communities on 0..10
/// and 10..21 joined by two bridges.
pub const SAMPLE21_EDGE_LIST: &str = include_str!("../../../fixtures/sample21.txt");

/// Seed used by [`sample21_rebuild`].
pub const SAMPLE21_SEED: u64 = 21;

/// Default discovery center and radius for experiments on sample21.
pub const SAMPLE21_CENTER: VertexId = 5;
pub const SAMPLE21_RADIUS: usize = 3;

pub fn sample21() -> Graph {
    parse_edge_list(SAMPLE21_EDGE_LIST).expect("shipped fixture parses")
}

/// Regenerates the sample21 edge list: two connected `G(n, m)` communities
/// (10 vertices / 12 edges and 11 vertices / 13 edges) and two distinct
/// random bridges between them.
pub fn sample21_rebuild() -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE21_SEED);
    let mut edges = community(10, 12, 0, &mut rng);
    edges.extend(community(11, 13, 10, &mut rng));
    let mut bridges: Vec<(VertexId, VertexId)> = Vec::new();
    while bridges.len() < 2 {
        let b = (rng.gen_range(0..10), rng.gen_range(10..21));
        if !bridges.contains(&b) {
            bridges.push(b);
        }
    }
    edges.extend(bridges);
    Graph::from_edge_list(21, &edges).expect("simple by construction")
}

fn community(
    size: usize,
    m: usize,
    offset: VertexId,
    rng: &mut ChaCha8Rng,
) -> Vec<(VertexId, VertexId)> {
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|u| (u + 1..size).map(move |v| (u, v)))
        .collect();
    loop {
        let picked: Vec<(usize, usize)> = sample(rng, pairs.len(), m)
            .into_iter()
            .map(|i| pairs[i])
            .collect();
        if Graph::from_edge_list(size, &picked).unwrap().is_connected() {
            return picked
                .into_iter()
                .map(|(u, v)| (u + offset, v + offset))
                .collect();
        }
    }
}

/// Fragment-size profiles on 20 vertices, from connected to totally
/// disconnected.
pub const LADDER: [&[usize]; 8] = [
    &[20],
    &[16, 4],
    &[10, 10],
    &[10, 5, 5],
    &[5, 5, 5, 5],
    &[4, 4, 4, 4, 4],
    &[2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    &[1; 20],
];

/// Mean degree of ladder fragments (capped by the fragment size).
pub const LADDER_MEAN_DEGREE: f64 = 4.0;

/// Rung sizes at `scale`: fragments larger than one vertex grow by the
/// factor, singletons are replicated so the rung stays totally disconnected.
pub fn scaled_rung(rung: &[usize], scale: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    for &s in rung {
        if s == 1 {
            sizes.extend(std::iter::repeat_n(1, scale));
        } else {
            sizes.push(s * scale);
        }
    }
    sizes
}

/// Graph of rung `index` at `scale`. Seeds do not depend on the scale.
pub fn ladder_graph(index: usize, scale: usize, seed: u64) -> Graph {
    let sizes = scaled_rung(LADDER[index], scale);
    fragmented(
        &sizes,
        LADDER_MEAN_DEGREE,
        seed.wrapping_add(1000 * index as u64),
    )
}
