use super::{refine_product, EdgeColoring};
use crate::decomposition::{
    exact_treewidth, tree_partition, treewidth_lower, treewidth_upper, validate_tree_partition,
    Heuristic, TreePartition, DEFAULT_EXACT_BUDGET,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// 3-edge-coloring from a tree-partition: edges inside a part get color 2,
/// an edge between parts gets the depth of the shallower part mod 2.
///
/// Each monochromatic component then has all its edges incident to one part,
/// so its size is at most `width * (Δ + 1)`.
pub fn tree_partition_coloring(g: &Graph, tp: &TreePartition) -> Result<EdgeColoring> {
    validate_tree_partition(g, tp)?;
    EdgeColoring::from_fn(g, 3, |u, v| {
        let (a, b) = (tp.parts.part_of(u), tp.parts.part_of(v));
        if a == b {
            2
        } else {
            tp.depth[a].min(tp.depth[b]) % 2
        }
    })
}

/// Refines `c1` by the tree-partition coloring of each of its classes.
///
/// Every class `(V, F_i)` must have treewidth at most `t`; this is checked
/// exactly when the class fits the exact oracle and by the lower bound
/// otherwise. Uses at most `3 * h1` colors.
pub fn bounded_tw_coloring(g: &Graph, c1: &EdgeColoring, t: usize) -> Result<EdgeColoring> {
    if c1.host() != g {
        return Err(Error::HostMismatch);
    }
    let mut inner = vec![0usize; g.m()];
    for class in 0..c1.h() {
        let edges = c1.class(class);
        if edges.is_empty() {
            continue;
        }
        let cg = Graph::from_edges_lossy(g.n(), edges.iter().copied());
        let td = match exact_treewidth(&cg, DEFAULT_EXACT_BUDGET) {
            Ok((w, td)) => {
                if w > t {
                    return Err(Error::ClassTooWide {
                        class,
                        width: w,
                        bound: t,
                    });
                }
                td
            }
            Err(_) => {
                let lo = treewidth_lower(&cg);
                if lo > t {
                    return Err(Error::ClassTooWide {
                        class,
                        width: lo,
                        bound: t,
                    });
                }
                log::warn!(
                    "class {class} too large for the exact oracle; using a heuristic decomposition"
                );
                treewidth_upper(&cg, Heuristic::MinFill).1
            }
        };
        let tp = tree_partition(&cg, &td)?;
        let sub = tree_partition_coloring(&cg, &tp)?;
        for (&(u, v), &c) in cg.edges().iter().zip(sub.colors()) {
            inner[g.edge_index(u, v).expect("class edge in host")] = c;
        }
    }
    let c2 = EdgeColoring::new(g.clone(), inner, 3)?;
    refine_product(c1, &c2)
}
