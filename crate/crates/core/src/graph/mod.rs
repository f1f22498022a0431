//! Simple undirected graphs on dense labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency lists are kept sorted so
//! that every traversal visits neighbours in ascending label order, which is
//! what makes BFS roots, parents and component orders deterministic.

mod bfs;
mod generate;
mod io;
mod ops;

pub use bfs::{
    bfs_distances, bfs_layering, bfs_layering_from, weak_diameter, weak_diameter_within,
    BfsLayering, WeakDiameter,
};
pub use generate::{generate, Family};
pub use io::{format_edge_list, parse_edge_list};
pub use ops::{contract_partition, strong_product, subdivide, VertexPartition};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge, always stored with `0 < 1`.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn normalize(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    /// `up_offset[u]` is the index in `edges` of the first edge `(u, v)` with `u < v`.
    up_offset: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adj(vec![Vec::new(); n])
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = normalize(u, w[0]);
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self::from_sorted_adj(adj))
    }

    /// Like [`Graph::from_edges`] but silently drops loops and repeated edges.
    pub fn from_edges_lossy<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge endpoint out of range");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_sorted_adj(adj)
    }

    fn from_sorted_adj(adj: Vec<Vec<Vertex>>) -> Self {
        let mut edges = Vec::new();
        let mut up_offset = Vec::with_capacity(adj.len());
        for (u, list) in adj.iter().enumerate() {
            up_offset.push(edges.len());
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        Graph {
            adj,
            edges,
            up_offset,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let (u, v) = normalize(u, v);
        if v >= self.n() {
            return None;
        }
        let list = &self.adj[u];
        let pos = list.binary_search(&v).ok()?;
        let below = list.partition_point(|&w| w < u);
        Some(self.up_offset[u] + pos - below)
    }

    /// Subgraph induced by `keep`, relabelled densely in ascending order of
    /// the original labels. Returns the graph and the map new label -> old label.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut map: Vec<Vertex> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut inv = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (inv[w] != usize::MAX).then_some(inv[w]))
                    .collect()
            })
            .collect();
        (Graph::from_sorted_adj(adj), map)
    }

    /// Spanning subgraph `(V(G), edges)`; `edges` must be edges of `self`.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        Graph::from_edges(self.n(), edges.iter().map(|&(u, v)| normalize(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest label.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Components of `G[set]`, each sorted, ordered by smallest label.
    pub fn components_within(&self, set: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut members = vec![s];
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Whether `G[set]` is connected. The empty set is not connected.
    pub fn is_connected_set(&self, set: &[Vertex]) -> bool {
        !set.is_empty() && self.components_within(set).len() == 1
    }

    /// Whether some edge joins `a` and `b` (or they share a vertex).
    pub fn sets_touch(&self, a: &[Vertex], b: &[Vertex]) -> bool {
        let mut mark = vec![false; self.n()];
        for &v in b {
            mark[v] = true;
        }
        a.iter()
            .any(|&u| mark[u] || self.adj[u].iter().any(|&w| mark[w]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn edge_index_matches_edge_list() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4), (1, 2), (0, 1), (2, 4)]).unwrap();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(0, 2), None);
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (h, map) = g.induced_subgraph(&[3, 1, 2]);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn components_sorted_by_smallest_label() {
        let g = Graph::from_edges(6, [(4, 5), (0, 3), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 2], vec![4, 5]]);
        assert!(!g.is_connected_set(&[0, 1]));
        assert!(g.sets_touch(&[0], &[3]));
        assert!(!g.sets_touch(&[0], &[1, 2]));
    }
}
