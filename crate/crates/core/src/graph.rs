//! Undirected simple graph with logical vertex deletion.
//!
//! Vertex ids are dense indices that stay valid for the lifetime of a graph:
//! removing a vertex clears its adjacency and flips its alive flag instead of
//! compacting the id space, so traces recorded during an attack always refer
//! to the original labels.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

pub type VertexId = usize;

/// Canonical undirected edge, `(low, high)` with `low < high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(VertexId, VertexId);

impl EdgeId {
    /// Builds the canonical form of `{u, v}`. Returns `None` for a self loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(EdgeId(u, v)),
            std::cmp::Ordering::Greater => Some(EdgeId(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn low(self) -> VertexId {
        self.0
    }

    pub fn high(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    alive_count: usize,
    edge_count: usize,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            alive: vec![true; n],
            alive_count: n,
            edge_count: 0,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                let e = EdgeId::new(u, v).expect("checked distinct");
                return Err(GraphError::DuplicateEdge(e.low(), e.high()));
            }
            g.insert_unchecked(u, v);
        }
        Ok(g)
    }

    /// Total id space, including removed vertices.
    pub fn vertex_capacity(&self) -> usize {
        self.adjacency.len()
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    /// Sorted neighbor list. Empty for removed or out-of-range vertices.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adjacency.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| EdgeId(u, v))
        })
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.vertex_capacity();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        let e = EdgeId::new(u, v).ok_or(GraphError::SelfLoop(u))?;
        if !self.alive[u] {
            return Err(GraphError::AlreadyRemoved(u));
        }
        if !self.alive[v] {
            return Err(GraphError::AlreadyRemoved(v));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(e.low(), e.high()));
        }
        self.insert_unchecked(u, v);
        Ok(e)
    }

    fn insert_unchecked(&mut self, u: VertexId, v: VertexId) {
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        self.edge_count += 1;
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        let (u, v) = e.endpoints();
        let pu = self
            .adjacency
            .get(u)
            .and_then(|l| l.binary_search(&v).ok())
            .ok_or(GraphError::NoSuchEdge(u, v))?;
        self.adjacency[u].remove(pu);
        let pv = self.adjacency[v]
            .binary_search(&u)
            .expect("adjacency symmetric");
        self.adjacency[v].remove(pv);
        self.edge_count -= 1;
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if v >= self.vertex_capacity() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.vertex_capacity(),
            });
        }
        if !self.alive[v] {
            return Err(GraphError::AlreadyRemoved(v));
        }
        let nbrs = std::mem::take(&mut self.adjacency[v]);
        for &u in &nbrs {
            let list = &mut self.adjacency[u];
            let pos = list.binary_search(&v).expect("adjacency symmetric");
            list.remove(pos);
        }
        self.edge_count -= nbrs.len();
        self.alive[v] = false;
        self.alive_count -= 1;
        Ok(())
    }

    /// Connected components of the alive vertices, each sorted ascending, ordered
    /// by size descending and then by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_capacity();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.alive_vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        // components are discovered in increasing order of their minimum id,
        // so a stable sort on size keeps the secondary key
        out.sort_by_key(|c| std::cmp::Reverse(c.len()));
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        let mut labels = vec![usize::MAX; self.vertex_capacity()];
        self.label_components(&mut labels)
    }

    /// Writes a component label per alive vertex (`usize::MAX` for removed ones)
    /// and returns the number of components.
    pub fn label_components(&self, labels: &mut [usize]) -> usize {
        labels.iter_mut().for_each(|l| *l = usize::MAX);
        let mut next = 0;
        let mut stack = Vec::new();
        for start in self.alive_vertices() {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = next;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if labels[w] == usize::MAX {
                        labels[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        next
    }

    /// Hop distances from `source` over alive vertices; `None` when unreachable.
    pub fn bfs_distances(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_capacity()];
        if !self.is_alive(source) {
            return dist;
        }
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced subgraph on `vertices`, relabelled densely in the given order.
    /// Returns the subgraph and the local-to-global id map.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut local = vec![usize::MAX; self.vertex_capacity()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut degree_sum = 0;
        for (i, &v) in vertices.iter().enumerate() {
            let list: &mut Vec<VertexId> = &mut adjacency[i];
            list.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| local[w])
                    .filter(|&l| l != usize::MAX),
            );
            list.sort_unstable();
            degree_sum += list.len();
        }
        let sub = Graph {
            alive: vec![true; vertices.len()],
            alive_count: vertices.len(),
            edge_count: degree_sum / 2,
            adjacency,
        };
        (sub, vertices.to_vec())
    }

    /// Radius-limited view around `center`: every alive vertex within `radius`
    /// hops plus all edges among them. `None` means no limit.
    pub fn discover(
        &self,
        center: VertexId,
        radius: Option<usize>,
    ) -> Result<DiscoveredView, GraphError> {
        if !self.is_alive(center) {
            return Err(GraphError::DeadCenter(center));
        }
        let limit = radius.unwrap_or(usize::MAX);
        let mut dist = vec![usize::MAX; self.vertex_capacity()];
        dist[center] = 0;
        let mut order = vec![center];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            if dist[u] == limit {
                continue;
            }
            for &w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    order.push(w);
                }
            }
        }
        order.sort_unstable();
        let (local, to_global) = self.induced_subgraph(&order);
        Ok(DiscoveredView {
            center,
            radius,
            local,
            to_global,
        })
    }
}

/// What an attacker knows: the induced subgraph within `radius` hops of
/// `center`, with local ids mapped back to the global graph.
#[derive(Clone, Debug)]
pub struct DiscoveredView {
    pub center: VertexId,
    pub radius: Option<usize>,
    pub local: Graph,
    /// Local id -> global id, ascending.
    pub to_global: Vec<VertexId>,
}

impl DiscoveredView {
    pub fn global_id(&self, local: VertexId) -> VertexId {
        self.to_global[local]
    }

    pub fn local_id(&self, global: VertexId) -> Option<VertexId> {
        self.to_global.binary_search(&global).ok()
    }

    pub fn global_edge(&self, e: EdgeId) -> EdgeId {
        EdgeId::new(self.global_id(e.low()), self.global_id(e.high()))
            .expect("distinct local ids map to distinct global ids")
    }

    pub fn len(&self) -> usize {
        self.to_global.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_global.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn builds_path() {
        let g = path(3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(4, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn vertex_removal() {
        let mut star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        star.remove_vertex(0).unwrap();
        assert_eq!(star.edge_count(), 0);
        assert_eq!(star.alive_count(), 3);
        assert_eq!(star.components().len(), 3);
        assert_eq!(star.remove_vertex(0), Err(GraphError::AlreadyRemoved(0)));

        let mut p3 = path(3);
        p3.remove_vertex(1).unwrap();
        assert_eq!(p3.components(), vec![vec![0], vec![2]]);

        let mut k4 = complete(4);
        k4.remove_vertex(2).unwrap();
        assert_eq!(k4.edge_count(), 3);
        assert!(k4.alive_vertices().all(|v| k4.degree(v) == 2));
    }

    #[test]
    fn edge_removal() {
        let mut k2 = path(2);
        k2.remove_edge(EdgeId::new(0, 1).unwrap()).unwrap();
        assert_eq!(k2.edge_count(), 0);
        assert_eq!(k2.alive_count(), 2);

        let mut tri = complete(3);
        tri.remove_edge(EdgeId::new(1, 0).unwrap()).unwrap();
        assert_eq!(tri.edges().collect::<Vec<_>>().len(), 2);
        assert!(tri.is_connected());

        let mut p3 = path(3);
        let e = EdgeId::new(0, 1).unwrap();
        p3.remove_edge(e).unwrap();
        assert_eq!(p3.remove_edge(e), Err(GraphError::NoSuchEdge(0, 1)));
    }

    #[test]
    fn component_order() {
        let g = Graph::from_edge_list(6, &[(3, 4), (0, 5), (3, 2), (4, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![2, 3, 4], vec![0, 5], vec![1]]);
        assert_eq!(complete(4).components(), vec![vec![0, 1, 2, 3]]);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn discovery_radius() {
        let g = path(4);
        let v1 = g.discover(0, Some(1)).unwrap();
        assert_eq!(v1.to_global, vec![0, 1]);
        assert_eq!(v1.local.edge_count(), 1);
        assert_eq!(g.discover(0, Some(2)).unwrap().to_global, vec![0, 1, 2]);
        assert_eq!(g.discover(0, Some(99)).unwrap().to_global, vec![0, 1, 2, 3]);
        assert_eq!(g.discover(0, None).unwrap().len(), 4);
        assert_eq!(g.discover(2, Some(0)).unwrap().to_global, vec![2]);

        let mut dead = path(4);
        dead.remove_vertex(0).unwrap();
        assert!(matches!(
            dead.discover(0, None),
            Err(GraphError::DeadCenter(0))
        ));
    }

    #[test]
    fn edge_display_is_canonical() {
        assert_eq!(EdgeId::new(5, 2).unwrap().to_string(), "2-5");
        assert!(EdgeId::new(3, 3).is_none());
    }
}
