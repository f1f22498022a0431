use std::collections::{HashMap, VecDeque};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// BFS layering `L_0..L_s` of one connected component, with its BFS tree.
///
/// Layers are sorted. The parent of a vertex in `L_i` (`i >= 1`) is its
/// smallest-label neighbour in `L_{i-1}`. Vertices are in original labels,
/// so layerings of induced subgraphs can be compared with layerings of the
/// whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayering {
    root: Vertex,
    layers: Vec<Vec<Vertex>>,
    depth: HashMap<Vertex, usize>,
    parent: HashMap<Vertex, Vertex>,
}

impl BfsLayering {
    /// Layering of the component of `root` inside `G[set]`.
    ///
    /// `set` must contain `root`; vertices outside `set` are never visited.
    pub fn within(g: &Graph, set: &[Vertex], root: Vertex) -> Result<Self> {
        if !set.contains(&root) {
            return Err(Error::Precondition(format!(
                "root {root} not in vertex set"
            )));
        }
        let inside: std::collections::HashSet<Vertex> = set.iter().copied().collect();
        Ok(Self::build(g, root, |v| inside.contains(&v)))
    }

    fn build(g: &Graph, root: Vertex, allowed: impl Fn(Vertex) -> bool) -> Self {
        let mut depth = HashMap::new();
        depth.insert(root, 0usize);
        let mut layers: Vec<Vec<Vertex>> = vec![vec![root]];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = depth[&u];
            for &w in g.neighbors(u) {
                if allowed(w) && !depth.contains_key(&w) {
                    depth.insert(w, du + 1);
                    if layers.len() == du + 1 {
                        layers.push(Vec::new());
                    }
                    layers[du + 1].push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut parent = HashMap::with_capacity(depth.len());
        for layer in layers.iter_mut() {
            layer.sort_unstable();
        }
        for (i, layer) in layers.iter().enumerate().skip(1) {
            for &v in layer {
                // Sorted adjacency: the first neighbour one layer up is the smallest.
                let p = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|w| depth.get(w) == Some(&(i - 1)))
                    .expect("BFS vertex has a neighbour in the previous layer");
                parent.insert(v, p);
            }
        }
        BfsLayering {
            root,
            layers,
            depth,
            parent,
        }
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    /// Index `s` of the last layer.
    pub fn height(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.depth.contains_key(&v)
    }

    /// Layer index of `v`, if `v` was reached.
    pub fn depth_of(&self, v: Vertex) -> Option<usize> {
        self.depth.get(&v).copied()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent.get(&v).copied()
    }

    /// BFS-tree path from `v` up to the root, starting at `v`.
    pub fn path_to_root(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut cur = v;
        // The bound only matters for corrupted parent maps.
        while let Some(p) = self.parent(cur) {
            if path.len() > self.depth.len() {
                break;
            }
            path.push(p);
            cur = p;
        }
        path
    }

    /// The vertical path of `len` edges from `v` towards the root, starting
    /// at `v`, or `None` when `v` is shallower than `len`.
    pub fn vertical_path(&self, v: Vertex, len: usize) -> Option<Vec<Vertex>> {
        if self.depth_of(v)? < len {
            return None;
        }
        let mut path = Vec::with_capacity(len + 1);
        let mut cur = v;
        path.push(cur);
        for _ in 0..len {
            cur = self.parent(cur)?;
            path.push(cur);
        }
        Some(path)
    }

    /// All reached vertices, sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.layers.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Replaces the parent of `v`; used to build negative controls.
    #[doc(hidden)]
    pub fn with_parent(mut self, v: Vertex, p: Vertex) -> Self {
        self.parent.insert(v, p);
        self
    }
}

/// BFS layering of the component selected by `component_hint` (vertex 0's
/// component when absent), rooted at that component's smallest label.
pub fn bfs_layering(g: &Graph, component_hint: Option<Vertex>) -> Result<BfsLayering> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let hint = component_hint.unwrap_or(0);
    if hint >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: hint,
            n: g.n(),
        });
    }
    let reach = BfsLayering::build(g, hint, |_| true);
    let root = reach.vertices()[0];
    Ok(BfsLayering::build(g, root, |_| true))
}

/// BFS layering from an explicit root.
pub fn bfs_layering_from(g: &Graph, root: Vertex) -> Result<BfsLayering> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if root >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    Ok(BfsLayering::build(g, root, |_| true))
}

/// Distances from `src`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, src: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WeakDiameter {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for WeakDiameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeakDiameter::Finite(d) => write!(f, "{d}"),
            WeakDiameter::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest distance in `g` between two vertices of `s`. The empty set has
/// weak diameter 0.
pub fn weak_diameter(g: &Graph, s: &[Vertex]) -> WeakDiameter {
    let mut best = 0;
    for &u in s {
        let dist = bfs_distances(g, u);
        for &v in s {
            match dist[v] {
                Some(d) => best = best.max(d),
                None => return WeakDiameter::Infinite,
            }
        }
    }
    WeakDiameter::Finite(best)
}

/// Weak diameter of `s` in `g` if it is at most `limit`, else `None`.
///
/// Each BFS is cut off at radius `limit`, so the cost depends on the size of
/// the balls rather than on the whole graph.
pub fn weak_diameter_within(g: &Graph, s: &[Vertex], limit: usize) -> Option<usize> {
    if s.is_empty() {
        return Some(0);
    }
    let mut target: HashMap<Vertex, ()> = HashMap::with_capacity(s.len());
    for &v in s {
        target.insert(v, ());
    }
    let mut best = 0;
    let mut dist: HashMap<Vertex, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &u in s {
        dist.clear();
        queue.clear();
        dist.insert(u, 0);
        queue.push_back(u);
        let mut found = 1;
        while let Some(x) = queue.pop_front() {
            let dx = dist[&x];
            if dx == limit {
                continue;
            }
            for &w in g.neighbors(x) {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(dx + 1);
                    if target.contains_key(&w) {
                        found += 1;
                        best = best.max(dx + 1);
                    }
                    queue.push_back(w);
                }
            }
            if found == target.len() {
                break;
            }
        }
        if found < target.len() {
            return None;
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn path(n: usize) -> Graph {
        generate(&Family::Path(n)).unwrap()
    }

    #[test]
    fn path_layers_are_singletons() {
        let l = bfs_layering(&path(5), None).unwrap();
        assert_eq!(l.layers(), &[vec![0], vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(l.parent(3), Some(2));
        assert_eq!(l.parent(0), None);
    }

    #[test]
    fn single_vertex_layering() {
        let l = bfs_layering(&Graph::empty(1), None).unwrap();
        assert_eq!(l.layers(), &[vec![0]]);
        assert_eq!(l.parent(0), None);
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert_eq!(bfs_layering(&Graph::empty(0), None), Err(Error::EmptyGraph));
    }

    #[test]
    fn grid_corner_layer_sizes() {
        // Distances from the corner of a 3x3 grid are r + c.
        let g = generate(&Family::Grid { rows: 3, cols: 3 }).unwrap();
        let l = bfs_layering(&g, None).unwrap();
        let sizes: Vec<usize> = l.layers().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 2, 1]);
        // Parent is the smallest neighbour one layer up: (1,1)=4 has parents 1 and 3.
        assert_eq!(l.parent(4), Some(1));
    }

    #[test]
    fn hint_selects_component_and_smallest_root() {
        let g = Graph::from_edges(5, [(0, 1), (2, 4), (4, 3)]).unwrap();
        let l = bfs_layering(&g, Some(4)).unwrap();
        assert_eq!(l.root(), 2);
        assert_eq!(l.layers(), &[vec![2], vec![4], vec![3]]);
    }

    #[test]
    fn weak_diameter_examples() {
        let p = path(6);
        assert_eq!(weak_diameter(&p, &[3]), WeakDiameter::Finite(0));
        assert_eq!(
            weak_diameter(&p, &(0..6).collect::<Vec<_>>()),
            WeakDiameter::Finite(5)
        );
        assert_eq!(weak_diameter(&p, &[]), WeakDiameter::Finite(0));
        let c6 = generate(&Family::Cycle(6)).unwrap();
        assert_eq!(weak_diameter(&c6, &[0, 3]), WeakDiameter::Finite(3));
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(weak_diameter(&split, &[0, 2]), WeakDiameter::Infinite);
    }

    #[test]
    fn bounded_weak_diameter_agrees() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        assert_eq!(weak_diameter_within(&c6, &[0, 3], 3), Some(3));
        assert_eq!(weak_diameter_within(&c6, &[0, 3], 2), None);
        // Distances go through vertices outside the set.
        assert_eq!(weak_diameter_within(&c6, &[0, 2, 4], 5), Some(2));
    }
}
