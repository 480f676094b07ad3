//! Unweighted shortest paths and the scalar metrics derived from them.
//!
//! Everything here is defined over the alive vertices of a possibly
//! disconnected graph. Unreachable pairs have infinite distance; in the
//! average inverse path length they contribute `1/inf = 0`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::MetricError;
use crate::exec::{Exec, DEFAULT_CHUNK};
use crate::format::{g6, g6_opt};
use crate::graph::{Graph, VertexId};

/// Hop count, or infinity for unreachable pairs. Orders finite values below
/// infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hops {
    Finite(usize),
    Infinite,
}

impl Hops {
    pub fn finite(self) -> Option<usize> {
        match self {
            Hops::Finite(d) => Some(d),
            Hops::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Hops::Finite(_))
    }

    /// `1/d` with `1/inf = 0`. Zero distance is undefined and also yields 0.
    pub fn inverse(self) -> f64 {
        match self {
            Hops::Finite(d) if d > 0 => 1.0 / d as f64,
            _ => 0.0,
        }
    }
}

impl From<Option<usize>> for Hops {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Hops::Infinite, Hops::Finite)
    }
}

impl PartialOrd for Hops {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hops {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Hops::Finite(a), Hops::Finite(b)) => a.cmp(b),
            (Hops::Finite(_), Hops::Infinite) => Ordering::Less,
            (Hops::Infinite, Hops::Finite(_)) => Ordering::Greater,
            (Hops::Infinite, Hops::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Hops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hops::Finite(d) => write!(f, "{d}"),
            Hops::Infinite => f.write_str("inf"),
        }
    }
}

/// Dense all-pairs hop counts over the alive vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    vertices: Vec<VertexId>,
    index: Vec<usize>,
    // usize::MAX marks an unreachable pair
    hops: Vec<usize>,
}

impl DistanceMatrix {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distance between two alive vertices, by global id.
    pub fn get(&self, u: VertexId, v: VertexId) -> Hops {
        let n = self.vertices.len();
        let (i, j) = (self.index[u], self.index[v]);
        assert!(i < n && j < n, "vertex not in distance matrix");
        self.at(i, j)
    }

    /// Distance by dense row/column position.
    pub fn at(&self, i: usize, j: usize) -> Hops {
        match self.hops[i * self.vertices.len() + j] {
            usize::MAX => Hops::Infinite,
            d => Hops::Finite(d),
        }
    }
}

/// BFS from `source`, writing hop counts into `dist` (`usize::MAX` unreached)
/// and returning the visit order.
pub(crate) fn bfs_into(
    g: &Graph,
    source: VertexId,
    dist: &mut [usize],
    queue: &mut VecDeque<VertexId>,
    order: &mut Vec<VertexId>,
) {
    order.clear();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    all_pairs_distances_with(g, Exec::default())
}

pub fn all_pairs_distances_with(g: &Graph, exec: Exec) -> DistanceMatrix {
    let vertices: Vec<VertexId> = g.alive_vertices().collect();
    let cap = g.vertex_capacity();
    let n = vertices.len();
    let mut index = vec![usize::MAX; cap];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let rows = exec.map_chunks(n, DEFAULT_CHUNK, |range| {
        let mut dist = vec![usize::MAX; cap];
        let mut queue = VecDeque::new();
        let mut order = Vec::new();
        let mut block = Vec::with_capacity(range.len() * n);
        for i in range {
            bfs_into(g, vertices[i], &mut dist, &mut queue, &mut order);
            block.extend(vertices.iter().map(|&v| dist[v]));
            for &v in &order {
                dist[v] = usize::MAX;
            }
        }
        block
    });
    DistanceMatrix {
        vertices,
        index,
        hops: rows.concat(),
    }
}

/// Per-source sums over reachable targets: (sum of 1/d, sum of d, finite pairs).
fn path_sums(g: &Graph, exec: Exec) -> Vec<(f64, u64, u64)> {
    let vertices: Vec<VertexId> = g.alive_vertices().collect();
    let cap = g.vertex_capacity();
    exec.map_chunks(vertices.len(), DEFAULT_CHUNK, |range| {
        let mut dist = vec![usize::MAX; cap];
        let mut queue = VecDeque::new();
        let mut order = Vec::new();
        let mut counts: Vec<u64> = Vec::new();
        let mut acc = (0.0, 0u64, 0u64);
        for i in range {
            bfs_into(g, vertices[i], &mut dist, &mut queue, &mut order);
            counts.clear();
            for &v in &order {
                let d = dist[v];
                if counts.len() <= d {
                    counts.resize(d + 1, 0);
                }
                counts[d] += 1;
                dist[v] = usize::MAX;
            }
            for (d, &c) in counts.iter().enumerate().skip(1) {
                acc.0 += c as f64 / d as f64;
                acc.1 += c * d as u64;
                acc.2 += c;
            }
        }
        acc
    })
}

/// Mean hop distance over unordered pairs whose distance is finite.
pub fn apl_constrained(g: &Graph) -> Result<f64, MetricError> {
    apl_constrained_with(g, Exec::default())
}

pub fn apl_constrained_with(g: &Graph, exec: Exec) -> Result<f64, MetricError> {
    let (total, pairs) = path_sums(g, exec)
        .into_iter()
        .fold((0u64, 0u64), |(t, p), (_, s, c)| (t + s, p + c));
    if pairs == 0 {
        return Err(MetricError::NoFinitePairs);
    }
    // ordered sums double both numerator and denominator
    Ok(total as f64 / pairs as f64)
}

/// Average inverse path length over ordered pairs of distinct alive vertices,
/// `1/(N(N-1)) * sum 1/d(u,v)` with unreachable pairs contributing 0.
/// Zero for graphs with fewer than two alive vertices.
pub fn aipl(g: &Graph) -> f64 {
    aipl_with(g, Exec::default())
}

pub fn aipl_with(g: &Graph, exec: Exec) -> f64 {
    let n = g.alive_count();
    if n < 2 {
        return 0.0;
    }
    let sum: f64 = path_sums(g, exec).iter().map(|s| s.0).sum();
    sum / (n as f64 * (n - 1) as f64)
}

/// Greatest distance from `v` to any other alive vertex.
pub fn eccentricity(g: &Graph, v: VertexId) -> Result<Hops, MetricError> {
    if !g.is_alive(v) {
        return Err(MetricError::DeadVertex(v));
    }
    let dist = g.bfs_distances(v);
    Ok(g.alive_vertices()
        .map(|u| Hops::from(dist[u]))
        .max()
        .unwrap_or(Hops::Finite(0)))
}

/// Eccentricity of every alive vertex, in ascending id order.
pub fn eccentricities(g: &Graph, exec: Exec) -> Vec<(VertexId, Hops)> {
    let vertices: Vec<VertexId> = g.alive_vertices().collect();
    let n = vertices.len();
    if g.component_count() > 1 {
        return vertices.into_iter().map(|v| (v, Hops::Infinite)).collect();
    }
    let cap = g.vertex_capacity();
    exec.map_chunks(n, DEFAULT_CHUNK, |range| {
        let mut dist = vec![usize::MAX; cap];
        let mut queue = VecDeque::new();
        let mut order = Vec::new();
        range
            .map(|i| {
                bfs_into(g, vertices[i], &mut dist, &mut queue, &mut order);
                let ecc = order.last().map_or(0, |&v| dist[v]);
                for &v in &order {
                    dist[v] = usize::MAX;
                }
                (vertices[i], Hops::Finite(ecc))
            })
            .collect::<Vec<_>>()
    })
    .concat()
}

/// Largest shortest-path distance; infinite when any pair is unreachable.
pub fn diameter(g: &Graph) -> Hops {
    eccentricities(g, Exec::default())
        .into_iter()
        .map(|(_, e)| e)
        .max()
        .unwrap_or(Hops::Finite(0))
}

/// Smallest eccentricity.
pub fn radius(g: &Graph) -> Hops {
    eccentricities(g, Exec::default())
        .into_iter()
        .map(|(_, e)| e)
        .min()
        .unwrap_or(Hops::Finite(0))
}

/// Maximum eccentricity, which coincides with the diameter.
pub fn graph_eccentricity(g: &Graph) -> Hops {
    diameter(g)
}

/// Number of triangles through `v`.
pub fn triangles_at(g: &Graph, v: VertexId) -> usize {
    let nv = g.neighbors(v);
    let mut twice = 0;
    for &u in nv {
        twice += sorted_intersection_len(nv, g.neighbors(u));
    }
    twice / 2
}

fn sorted_intersection_len(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Local clustering coefficient `2 T(v) / (k (k - 1))`; 0 when `k < 2`.
pub fn clustering_coefficient(g: &Graph, v: VertexId) -> f64 {
    let k = g.degree(v);
    if k < 2 {
        return 0.0;
    }
    2.0 * triangles_at(g, v) as f64 / (k * (k - 1)) as f64
}

pub fn mean_clustering(g: &Graph) -> f64 {
    let n = g.alive_count();
    if n == 0 {
        return 0.0;
    }
    g.alive_vertices()
        .map(|v| clustering_coefficient(g, v))
        .sum::<f64>()
        / n as f64
}

pub fn density(g: &Graph) -> Result<f64, MetricError> {
    let n = g.alive_count();
    if n < 2 {
        return Err(MetricError::TooSmall);
    }
    Ok(2.0 * g.edge_count() as f64 / (n * (n - 1)) as f64)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Absent when no pair is connected.
    pub apl_constrained: Option<f64>,
    pub aipl: f64,
    pub diameter: Hops,
    pub radius: Hops,
    pub max_eccentricity: Hops,
    pub mean_clustering: f64,
    /// Absent below two vertices.
    pub density: Option<f64>,
}

impl MetricReport {
    pub fn compute(g: &Graph) -> Self {
        Self::compute_with(g, Exec::default())
    }

    pub fn compute_with(g: &Graph, exec: Exec) -> Self {
        let sums = path_sums(g, exec);
        let n = g.alive_count();
        let (inv, total, pairs) = sums
            .iter()
            .fold((0.0, 0u64, 0u64), |a, s| (a.0 + s.0, a.1 + s.1, a.2 + s.2));
        let ecc = eccentricities(g, exec);
        let diameter = ecc.iter().map(|e| e.1).max().unwrap_or(Hops::Finite(0));
        let radius = ecc.iter().map(|e| e.1).min().unwrap_or(Hops::Finite(0));
        MetricReport {
            vertex_count: n,
            edge_count: g.edge_count(),
            apl_constrained: (pairs > 0).then(|| total as f64 / pairs as f64),
            aipl: if n < 2 {
                0.0
            } else {
                inv / (n as f64 * (n - 1) as f64)
            },
            diameter,
            radius,
            max_eccentricity: diameter,
            mean_clustering: mean_clustering(g),
            density: density(g).ok(),
        }
    }

    pub const CSV_HEADER: [&'static str; 8] = [
        "n",
        "m",
        "apl",
        "aipl",
        "diameter",
        "radius",
        "mean_clustering",
        "density",
    ];

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.vertex_count.to_string(),
            self.edge_count.to_string(),
            g6_opt(self.apl_constrained),
            g6(self.aipl),
            self.diameter.to_string(),
            self.radius.to_string(),
            g6(self.mean_clustering),
            g6_opt(self.density),
        ]
    }
}
