//! Tree-partitions built from a tree decomposition.
//!
//! Construction: parts are grown from a seed set `S` inside a region `C`.
//! The part is `S`, or `S` plus a separator `X` when some child interface
//! would get too large. `X` is a union of at most `2Δ-1` bags that leaves no
//! component of `G[C] - X` holding more than `|S| / 2Δ` seed vertices. Every
//! component `C'` of `G[C] - part` becomes a child region with seed
//! `N(part) ∩ C'`.
//!
//! With `k` the largest bag size and threshold `A = 4Δ²k`, seeds never exceed
//! `A`, so the width is at most `(4Δ² + 2Δ - 1)·k`. For a decomposition of
//! width `tw` this is `(4Δ² + 2Δ - 1)(tw + 1)`.

use std::collections::VecDeque;

use super::{validate_tree_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{normalize, Graph, Vertex, VertexPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePartition {
    pub parts: VertexPartition,
    pub tree_edges: Vec<(usize, usize)>,
    pub root: usize,
    pub depth: Vec<usize>,
}

impl TreePartition {
    /// Largest part size.
    pub fn width(&self) -> usize {
        self.parts.max_part_size()
    }

    /// One part holding all of `V(g)`.
    pub fn single_part(g: &Graph) -> Result<Self> {
        let parts = VertexPartition::new(g.n(), vec![g.vertices().collect()])?;
        Ok(TreePartition {
            parts,
            tree_edges: Vec::new(),
            root: 0,
            depth: vec![0],
        })
    }

    /// Builds a tree-partition from parts and tree edges, rooting it at the
    /// part holding vertex 0 and computing depths.
    pub fn from_parts(
        n: usize,
        parts: Vec<Vec<Vertex>>,
        tree_edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let parts = VertexPartition::new(n, parts)?;
        let root = if n == 0 { 0 } else { parts.part_of(0) };
        let depth = tree_depths(parts.len(), &tree_edges, root)?;
        Ok(TreePartition {
            parts,
            tree_edges,
            root,
            depth,
        })
    }

    /// The documented width guarantee of [`tree_partition`] for a
    /// decomposition with largest bag `bag_size` and maximum degree `delta`.
    pub fn width_bound(bag_size: usize, delta: usize) -> usize {
        if delta == 0 {
            1
        } else {
            (4 * delta * delta + 2 * delta - 1) * bag_size
        }
    }
}

fn tree_depths(count: usize, tree_edges: &[(usize, usize)], root: usize) -> Result<Vec<usize>> {
    let tree = Graph::from_edges(count, tree_edges.iter().map(|&(a, b)| normalize(a, b)))
        .map_err(|e| Error::InvalidTreePartition(e.to_string()))?;
    if count == 0 {
        return Ok(Vec::new());
    }
    if tree.m() + 1 != count || !tree.is_connected() {
        return Err(Error::InvalidTreePartition(
            "part graph is not a tree".into(),
        ));
    }
    Ok(crate::graph::bfs_distances(&tree, root)
        .into_iter()
        .map(|d| d.unwrap())
        .collect())
}

/// Checks the tree-partition conditions, including stored depths.
pub fn validate_tree_partition(g: &Graph, tp: &TreePartition) -> Result<()> {
    let fail = |m: String| Err(Error::InvalidTreePartition(m));
    if tp.parts.parts().iter().map(Vec::len).sum::<usize>() != g.n() {
        return fail("parts do not cover the graph".into());
    }
    let depth = tree_depths(tp.parts.len(), &tp.tree_edges, tp.root)?;
    if depth != tp.depth {
        return fail("stored depths differ from tree distances".into());
    }
    let tree = Graph::from_edges_lossy(
        tp.parts.len(),
        tp.tree_edges.iter().map(|&(a, b)| normalize(a, b)),
    );
    for &(u, v) in g.edges() {
        let (a, b) = (tp.parts.part_of(u), tp.parts.part_of(v));
        if a != b && !tree.has_edge(a, b) {
            return fail(format!("edge {u}-{v} joins non-adjacent parts {a} and {b}"));
        }
    }
    Ok(())
}

/// Tree-partition of `g` guided by `td`; see the module docs for the bound.
pub fn tree_partition(g: &Graph, td: &TreeDecomposition) -> Result<TreePartition> {
    validate_tree_decomposition(g, td).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    let n = g.n();
    if n == 0 {
        return Ok(TreePartition {
            parts: VertexPartition::new(0, Vec::new())?,
            tree_edges: Vec::new(),
            root: 0,
            depth: Vec::new(),
        });
    }
    let delta = g.max_degree();
    let bag_size = td.bags.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let threshold = 4 * delta * delta * bag_size;
    let pieces = (2 * delta).saturating_sub(1);
    let bag_tree = BagTree::new(td);

    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    let mut tree_edges = Vec::new();
    let mut first_root: Option<usize> = None;
    for comp in g.components() {
        let mut stack: Vec<(Vec<Vertex>, Vec<Vertex>, Option<usize>)> =
            vec![(comp.clone(), vec![comp[0]], None)];
        while let Some((region, seed, parent)) = stack.pop() {
            let mut part = seed.clone();
            let mut children = child_regions(g, &region, &part);
            if delta > 0 && children.iter().any(|(_, s)| s.len() > threshold) {
                let sep = bag_tree.separator(&region, &seed, pieces);
                part.extend(sep);
                part.sort_unstable();
                part.dedup();
                children = child_regions(g, &region, &part);
            }
            let id = parts.len();
            parts.push(part);
            match parent {
                Some(p) => tree_edges.push((p, id)),
                None => match first_root {
                    None => first_root = Some(id),
                    Some(r) => tree_edges.push((r, id)),
                },
            }
            // Reverse so the smallest-label child is expanded first.
            for (c, s) in children.into_iter().rev() {
                stack.push((c, s, Some(id)));
            }
        }
    }
    TreePartition::from_parts(n, parts, tree_edges)
}

/// Components of `G[region - part]` with their seeds `N(part) ∩ C'`.
fn child_regions(g: &Graph, region: &[Vertex], part: &[Vertex]) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    let rest: Vec<Vertex> = region
        .iter()
        .copied()
        .filter(|v| part.binary_search(v).is_err())
        .collect();
    g.components_within(&rest)
        .into_iter()
        .map(|c| {
            let seed = c
                .iter()
                .copied()
                .filter(|&v| g.neighbors(v).iter().any(|w| part.binary_search(w).is_ok()))
                .collect();
            (c, seed)
        })
        .collect()
}

/// Rooted view of a tree decomposition used to find balanced separators.
struct BagTree<'a> {
    td: &'a TreeDecomposition,
    /// Bags in BFS order from bag 0, with parents.
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl<'a> BagTree<'a> {
    fn new(td: &'a TreeDecomposition) -> Self {
        let count = td.bags.len();
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in &td.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; count];
        let mut depth = vec![usize::MAX; count];
        let mut order = Vec::with_capacity(count);
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &adj[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        BagTree {
            td,
            order,
            parent,
            depth,
        }
    }

    /// Union of at most `pieces` bags (restricted to `region`) such that each
    /// component of `G[region]` minus the union holds at most
    /// `|seed| / (pieces + 1)` seed vertices.
    fn separator(&self, region: &[Vertex], seed: &[Vertex], pieces: usize) -> Vec<Vertex> {
        let count = self.td.bags.len();
        let in_region = |v: &Vertex| region.binary_search(v).is_ok();
        // Each seed vertex is charged to its shallowest bag.
        let mut top: std::collections::HashMap<Vertex, usize> = std::collections::HashMap::new();
        for (x, bag) in self.td.bags.iter().enumerate() {
            for v in bag.iter().filter(|v| seed.binary_search(v).is_ok()) {
                let e = top.entry(*v).or_insert(x);
                if self.depth[x] < self.depth[*e] {
                    *e = x;
                }
            }
        }
        let mut acc = vec![0usize; count];
        for &x in top.values() {
            acc[x] += 1;
        }
        let total = seed.len();
        let mut sep = Vec::new();
        for &x in self.order.iter().rev() {
            if acc[x] * (pieces + 1) > total {
                sep.extend(self.td.bags[x].iter().copied().filter(in_region));
                acc[x] = 0;
            }
            if let Some(p) = self.parent[x] {
                acc[p] += acc[x];
            }
        }
        sep.sort_unstable();
        sep.dedup();
        sep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{exact_treewidth, treewidth_upper, Heuristic};
    use crate::graph::{generate, Family};

    fn build(g: &Graph) -> TreePartition {
        let (_, td) = treewidth_upper(g, Heuristic::MinFill);
        let tp = tree_partition(g, &td).unwrap();
        validate_tree_partition(g, &tp).unwrap();
        tp
    }

    #[test]
    fn trees_get_singleton_parts() {
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        edges.extend([(1, 4), (1, 5), (3, 6), (6, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        let tp = build(&g);
        assert_eq!(tp.width(), 1);
        assert_eq!(tp.parts.len(), 8);
    }

    #[test]
    fn cycles_have_width_two() {
        for n in 3..20 {
            let g = generate(&Family::Cycle(n)).unwrap();
            assert!(build(&g).width() <= 2, "C_{n}");
        }
    }

    #[test]
    fn k4_single_part_is_valid() {
        let g = generate(&Family::Clique(4)).unwrap();
        let single = TreePartition::single_part(&g).unwrap();
        validate_tree_partition(&g, &single).unwrap();
        assert_eq!(single.width(), 4);
        assert!(build(&g).width() <= 4);
    }

    #[test]
    fn invalid_decomposition_rejected() {
        let g = generate(&Family::Cycle(4)).unwrap();
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2]],
            tree_edges: vec![],
        };
        assert!(matches!(
            tree_partition(&g, &td),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn bad_partitions_are_caught() {
        let g = generate(&Family::Path(3)).unwrap();
        let tp =
            TreePartition::from_parts(3, vec![vec![0], vec![1], vec![2]], vec![(0, 2), (2, 1)])
                .unwrap();
        assert!(validate_tree_partition(&g, &tp).is_err());
        let mut tp =
            TreePartition::from_parts(3, vec![vec![0], vec![1], vec![2]], vec![(0, 1), (1, 2)])
                .unwrap();
        validate_tree_partition(&g, &tp).unwrap();
        tp.depth[2] = 5;
        assert!(validate_tree_partition(&g, &tp).is_err());
    }

    #[test]
    fn width_within_documented_bound() {
        for f in [
            Family::Grid { rows: 6, cols: 6 },
            Family::PohoataDavies(5),
            Family::Wall(4),
            Family::RandomGnp {
                n: 25,
                p: 0.15,
                seed: 3,
            },
        ] {
            let g = generate(&f).unwrap();
            let (_, td) =
                exact_treewidth(&g, 64).unwrap_or_else(|_| treewidth_upper(&g, Heuristic::MinFill));
            let tp = tree_partition(&g, &td).unwrap();
            validate_tree_partition(&g, &tp).unwrap();
            let bag = td.width() + 1;
            assert!(
                tp.width() <= TreePartition::width_bound(bag, g.max_degree()),
                "{f}"
            );
        }
    }
}
