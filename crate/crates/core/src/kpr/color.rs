use std::collections::HashMap;

use super::{iterated_bfs, IteratedBfsTree, KprParams};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Result of [`kpr_coloring`] together with its recursion tree.
#[derive(Clone, Debug)]
pub struct KprColoring {
    pub coloring: EdgeColoring,
    pub tree: IteratedBfsTree,
    /// Set when the tree is deeper than `q + 1` or was truncated.
    pub depth_exceeded: bool,
}

/// Clustered edge-coloring from iterated BFSes of width 2.
///
/// A node of height `t` gets `2^t` colors: leaves are monochromatic; an
/// expanded node colors the components of even slices `L_0 ∪ L_1`,
/// `L_2 ∪ L_3`, … with the first half of its palette and odd slices with the
/// second half. An edge inside a layer lies in one even and one odd slice
/// and keeps the even-slice color.
pub fn kpr_coloring(g: &Graph, p: usize, q: usize) -> Result<KprColoring> {
    let params = KprParams::for_coloring(p, q)?;
    let tree = iterated_bfs(g, params, None);
    let mut height = vec![0usize; tree.nodes.len()];
    // Children come after their parent in preorder.
    for i in (0..tree.nodes.len()).rev() {
        height[i] = tree.nodes[i]
            .children
            .iter()
            .map(|&c| height[c] + 1)
            .max()
            .unwrap_or(0);
    }
    let top = tree.roots.iter().map(|&r| height[r]).max().unwrap_or(0);
    let colors = resolve_even_precedence(g, &tree, &height)?;
    debug_assert!(colors.iter().all(|&c| c != usize::MAX));
    let coloring = EdgeColoring::new(g.clone(), colors, 1 << top)?;
    let depth_exceeded = tree.depth() > q + 1 || tree.truncated();
    Ok(KprColoring {
        coloring,
        tree,
        depth_exceeded,
    })
}

/// Colors edges top-down: each expanded node hands every edge of its
/// subgraph to exactly one child (even slices win), and the leaf an edge
/// reaches fixes its color.
fn resolve_even_precedence(
    g: &Graph,
    tree: &IteratedBfsTree,
    height: &[usize],
) -> Result<Vec<usize>> {
    let mut colors = vec![usize::MAX; g.m()];
    for &r in &tree.roots {
        let mut edges = Vec::new();
        for_each_inner_edge(g, &tree.nodes[r].vertices, |e| edges.push(e));
        descend(g, tree, height, r, 0, edges, &mut colors)?;
    }
    Ok(colors)
}

fn descend(
    g: &Graph,
    tree: &IteratedBfsTree,
    height: &[usize],
    node: usize,
    base: usize,
    edges: Vec<usize>,
    colors: &mut [usize],
) -> Result<()> {
    let n = &tree.nodes[node];
    if n.children.is_empty() {
        for e in edges {
            colors[e] = base;
        }
        return Ok(());
    }
    let half = 1usize << (height[node] - 1);
    // Which child receives each edge: the first even-slice child containing
    // both endpoints, else the odd-slice one.
    let mut owner: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for &c in &n.children {
        for &v in &tree.nodes[c].vertices {
            owner.entry(v).or_default().push(c);
        }
    }
    let mut per_child: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in edges {
        let (u, v) = g.edges()[e];
        let cu = &owner[&u];
        let cv = &owner[&v];
        let shared = cu.iter().filter(|c| cv.contains(c));
        let pick = shared
            .min_by_key(|&&c| (tree.nodes[c].slice.unwrap_or(0) % 2, c))
            .ok_or_else(|| Error::Precondition(format!("edge {u}-{v} lies in no slice")))?;
        per_child.entry(*pick).or_default().push(e);
    }
    for &c in &n.children {
        let odd = tree.nodes[c].slice.unwrap_or(0) % 2 == 1;
        let es = per_child.remove(&c).unwrap_or_default();
        descend(
            g,
            tree,
            height,
            c,
            if odd { base + half } else { base },
            es,
            colors,
        )?;
    }
    Ok(())
}

fn for_each_inner_edge(g: &Graph, set: &[Vertex], mut f: impl FnMut(usize)) {
    for &u in set {
        for &v in g.neighbors(u) {
            if u < v && set.binary_search(&v).is_ok() {
                f(g.edge_index(u, v).expect("edge"));
            }
        }
    }
}

/// Checks that every monochromatic component lies inside the vertex set of
/// a single leaf of the recursion tree.
pub fn audit_monochromatic(
    tree: &IteratedBfsTree,
    coloring: &EdgeColoring,
) -> std::result::Result<(), String> {
    let mut leaves_of: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for l in tree.leaves() {
        for &v in &tree.nodes[l].vertices {
            leaves_of.entry(v).or_default().push(l);
        }
    }
    for c in 0..coloring.h() {
        for comp in coloring.monochromatic_components(c) {
            let inside = leaves_of.get(&comp[0]).is_some_and(|ls| {
                ls.iter().any(|&l| {
                    comp.iter()
                        .all(|v| tree.nodes[l].vertices.binary_search(v).is_ok())
                })
            });
            if !inside {
                return Err(format!(
                    "color {c} component starting at {} spans several leaves",
                    comp[0]
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_clustering;
    use crate::graph::{generate, Family};

    #[test]
    fn edgeless_and_short_path() {
        let c = kpr_coloring(&Graph::empty(5), 2, 2).unwrap();
        assert_eq!(c.coloring.used_colors(), 0);
        let c = kpr_coloring(&generate(&Family::Path(9)).unwrap(), 2, 2).unwrap();
        assert_eq!(c.coloring.used_colors(), 1);
        assert!(!c.depth_exceeded);
    }

    #[test]
    fn long_path_alternates() {
        let g = generate(&Family::Path(200)).unwrap();
        let c = kpr_coloring(&g, 2, 2).unwrap();
        assert!(c.coloring.used_colors() <= 2);
        assert_eq!(&c.coloring.colors()[..4], &[0, 1, 0, 1]);
        assert_eq!(verify_clustering(&c.coloring).clustering, 2);
        audit_monochromatic(&c.tree, &c.coloring).unwrap();
    }

    #[test]
    fn grid_leaves_contain_components() {
        let g = generate(&Family::Grid { rows: 30, cols: 30 }).unwrap();
        let c = kpr_coloring(&g, 2, 1).unwrap();
        assert!(c.coloring.used_colors() <= 1 << c.tree.depth());
        audit_monochromatic(&c.tree, &c.coloring).unwrap();
    }

    #[test]
    fn within_layer_edges_take_even_color() {
        // Triangle 0-1-2 hanging off a long path: 1 and 2 share a layer.
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        edges.extend((2..80).map(|i| (i, i + 1)));
        let g = Graph::from_edges(81, edges).unwrap();
        let c = kpr_coloring(&g, 2, 2).unwrap();
        // Layers {0},{1,2},{3},...: edge 1-2 is in slices 0 and 1.
        assert_eq!(c.coloring.color(1, 2), c.coloring.color(0, 1));
        audit_monochromatic(&c.tree, &c.coloring).unwrap();
    }
}
