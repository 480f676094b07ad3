//! Shortest-path betweenness for vertices and edges, and the extremal
//! selection used to pick attack targets.
//!
//! Raw scores count unordered pairs `{s, t}`: a pair with `k` shortest paths
//! adds `paths through x / k` to every vertex or edge `x` on them. Edge scores
//! include the endpoint pair, so a bridge between two leaves scores 1.

use std::collections::VecDeque;
use std::fmt;

use rand::Rng;

use crate::error::MetricError;
use crate::exec::{Exec, DEFAULT_CHUNK};
use crate::format::g6;
use crate::graph::{EdgeId, Graph, VertexId};

/// A removable graph element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "{v}"),
            Element::Edge(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Vertex,
    Edge,
}

impl TableKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Vertex => "vertex",
            TableKind::Edge => "edge",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub id: Element,
    pub raw: f64,
    pub normalized: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BetweennessTable {
    pub kind: TableKind,
    /// Ascending by id.
    pub entries: Vec<Entry>,
}

impl BetweennessTable {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn raw(&self, id: Element) -> Option<f64> {
        self.entries
            .binary_search_by(|e| e.id.cmp(&id))
            .ok()
            .map(|i| self.entries[i].raw)
    }

    pub fn normalized(&self, id: Element) -> Option<f64> {
        self.entries
            .binary_search_by(|e| e.id.cmp(&id))
            .ok()
            .map(|i| self.entries[i].normalized)
    }

    pub const CSV_HEADER: [&'static str; 4] = ["kind", "id", "raw", "normalized"];

    pub fn csv_records(&self) -> impl Iterator<Item = Vec<String>> + '_ {
        self.entries.iter().map(|e| {
            vec![
                self.kind.as_str().to_string(),
                e.id.to_string(),
                g6(e.raw),
                g6(e.normalized),
            ]
        })
    }
}

struct Scores {
    vertex: Vec<f64>,
    edge: Vec<f64>,
}

/// Brandes accumulation from every alive source. Edge scores are indexed by
/// position in `edges`.
fn accumulate(g: &Graph, edges: &[EdgeId], exec: Exec) -> Scores {
    let cap = g.vertex_capacity();
    // edge slot for each adjacency position
    let mut slot: Vec<Vec<usize>> = (0..cap).map(|v| vec![0; g.degree(v)]).collect();
    for (k, e) in edges.iter().enumerate() {
        let (u, v) = e.endpoints();
        let iu = g.neighbors(u).binary_search(&v).expect("edge present");
        let iv = g.neighbors(v).binary_search(&u).expect("edge present");
        slot[u][iu] = k;
        slot[v][iv] = k;
    }
    let sources: Vec<VertexId> = g.alive_vertices().collect();
    let partial = exec.map_chunks(sources.len(), DEFAULT_CHUNK, |range| {
        let mut vertex = vec![0.0; cap];
        let mut edge = vec![0.0; edges.len()];
        let mut dist = vec![usize::MAX; cap];
        let mut sigma = vec![0.0f64; cap];
        let mut delta = vec![0.0f64; cap];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for &s in &sources[range] {
            order.clear();
            dist[s] = 0;
            sigma[s] = 1.0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    if dist[w] == dist[u] + 1 {
                        sigma[w] += sigma[u];
                    }
                }
            }
            for &w in order.iter().rev() {
                let coeff = (1.0 + delta[w]) / sigma[w];
                for (k, &u) in g.neighbors(w).iter().enumerate() {
                    if dist[u] != usize::MAX && dist[u] + 1 == dist[w] {
                        let c = sigma[u] * coeff;
                        edge[slot[w][k]] += c;
                        delta[u] += c;
                    }
                }
                if w != s {
                    vertex[w] += delta[w];
                }
            }
            for &w in &order {
                dist[w] = usize::MAX;
                sigma[w] = 0.0;
                delta[w] = 0.0;
            }
        }
        Scores { vertex, edge }
    });
    let mut total = Scores {
        vertex: vec![0.0; cap],
        edge: vec![0.0; edges.len()],
    };
    for p in partial {
        total
            .vertex
            .iter_mut()
            .zip(&p.vertex)
            .for_each(|(a, b)| *a += b);
        total
            .edge
            .iter_mut()
            .zip(&p.edge)
            .for_each(|(a, b)| *a += b);
    }
    // every unordered pair was visited from both ends
    total.vertex.iter_mut().for_each(|x| *x /= 2.0);
    total.edge.iter_mut().for_each(|x| *x /= 2.0);
    total
}

fn vertex_norm(n: usize) -> f64 {
    if n < 3 {
        0.0
    } else {
        ((n - 1) * (n - 2)) as f64 / 2.0
    }
}

fn edge_norm(n: usize) -> f64 {
    if n < 2 {
        0.0
    } else {
        (n * (n - 1)) as f64 / 2.0
    }
}

fn scale(raw: f64, norm: f64) -> f64 {
    if norm > 0.0 {
        raw / norm
    } else {
        0.0
    }
}

/// Vertex betweenness, normalized by `(n-1)(n-2)/2`.
pub fn vertex_betweenness(g: &Graph) -> BetweennessTable {
    vertex_betweenness_with(g, Exec::default())
}

pub fn vertex_betweenness_with(g: &Graph, exec: Exec) -> BetweennessTable {
    let edges: Vec<EdgeId> = g.edges().collect();
    let scores = accumulate(g, &edges, exec);
    let norm = vertex_norm(g.alive_count());
    BetweennessTable {
        kind: TableKind::Vertex,
        entries: g
            .alive_vertices()
            .map(|v| Entry {
                id: Element::Vertex(v),
                raw: scores.vertex[v],
                normalized: scale(scores.vertex[v], norm),
            })
            .collect(),
    }
}

/// Edge betweenness, normalized by `n(n-1)/2`.
pub fn edge_betweenness(g: &Graph) -> BetweennessTable {
    edge_betweenness_with(g, Exec::default())
}

pub fn edge_betweenness_with(g: &Graph, exec: Exec) -> BetweennessTable {
    let edges: Vec<EdgeId> = g.edges().collect();
    let scores = accumulate(g, &edges, exec);
    let norm = edge_norm(g.alive_count());
    BetweennessTable {
        kind: TableKind::Edge,
        entries: edges
            .iter()
            .zip(&scores.edge)
            .map(|(&e, &raw)| Entry {
                id: Element::Edge(e),
                raw,
                normalized: scale(raw, norm),
            })
            .collect(),
    }
}

/// Which end of a value ranking to pick from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    Low,
    /// Lower median of the sorted values.
    Median,
    High,
    /// Uniform over all candidates, ignoring values.
    Random,
}

impl Selector {
    pub fn letter(self) -> char {
        match self {
            Selector::Low => 'L',
            Selector::Median => 'M',
            Selector::High => 'H',
            Selector::Random => 'R',
        }
    }
}

/// Values this close are treated as ties: betweenness sums of symmetric
/// positions can differ in the last bits.
fn tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

/// Picks the candidate whose value matches `selector`, breaking ties uniformly
/// with `rng`. Returns `None` for an empty candidate list.
pub fn extremal_by<K: Copy, R: Rng + ?Sized>(
    candidates: &[(K, f64)],
    selector: Selector,
    rng: &mut R,
) -> Option<(K, f64)> {
    if candidates.is_empty() {
        return None;
    }
    let target = match selector {
        Selector::Random => return Some(candidates[rng.gen_range(0..candidates.len())]),
        Selector::Low => candidates.iter().map(|c| c.1).fold(f64::INFINITY, f64::min),
        Selector::High => candidates
            .iter()
            .map(|c| c.1)
            .fold(f64::NEG_INFINITY, f64::max),
        Selector::Median => {
            let mut values: Vec<f64> = candidates.iter().map(|c| c.1).collect();
            values.sort_by(f64::total_cmp);
            values[(values.len() - 1) / 2]
        }
    };
    let ties: Vec<&(K, f64)> = candidates.iter().filter(|c| tied(c.1, target)).collect();
    Some(*ties[rng.gen_range(0..ties.len())])
}

/// Extremal entry of a betweenness table by raw value.
pub fn extremal<R: Rng + ?Sized>(
    table: &BetweennessTable,
    selector: Selector,
    rng: &mut R,
) -> Result<Element, MetricError> {
    let candidates: Vec<(Element, f64)> = table.entries.iter().map(|e| (e.id, e.raw)).collect();
    extremal_by(&candidates, selector, rng)
        .map(|c| c.0)
        .ok_or(MetricError::EmptyTable)
}
