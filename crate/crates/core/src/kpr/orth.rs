use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BfsLayering, Graph, Vertex};

/// A breach of the nested-BFS control property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrthogonalityViolation {
    /// The outer tree path from the root to `w` meets the inner host at
    /// `u`, which is `position` steps above `w` (only the last `h` may).
    TooFarUp {
        w: Vertex,
        u: Vertex,
        position: usize,
    },
    /// The path meets inner layer `found` although `w` is in layer `layer`.
    LayerOutOfRange {
        w: Vertex,
        u: Vertex,
        layer: usize,
        found: usize,
    },
    /// The path meets the inner host outside the inner BFS component.
    OutsideInner { w: Vertex, u: Vertex },
}

impl fmt::Display for OrthogonalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrthogonalityViolation::TooFarUp { w, u, position } => {
                write!(f, "path to {w} meets the slice at {u}, {position} steps up")
            }
            OrthogonalityViolation::LayerOutOfRange { w, u, layer, found } => {
                write!(
                    f,
                    "path to {w} (inner layer {layer}) meets inner layer {found} at {u}"
                )
            }
            OrthogonalityViolation::OutsideInner { w, u } => {
                write!(f, "path to {w} meets {u} outside the inner BFS")
            }
        }
    }
}

/// Checks, for every `w` in inner layer `ℓ`, that the outer BFS-tree path
/// from the root to `w` only meets inner layers `ℓ-h+1 ..= ℓ+h-1`, and that
/// only its last `h` vertices lie in `inner_host`.
///
/// `inner_host` must lie within `h` consecutive outer layers and contain
/// the vertices of `inner`.
pub fn check_orthogonality(
    g: &Graph,
    outer: &BfsLayering,
    inner_host: &[Vertex],
    inner: &BfsLayering,
    h: usize,
) -> Result<Vec<OrthogonalityViolation>> {
    let host: HashSet<Vertex> = inner_host.iter().copied().collect();
    let mut lo = usize::MAX;
    let mut hi = 0;
    for &v in inner_host {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        let d = outer
            .depth_of(v)
            .ok_or_else(|| Error::Precondition(format!("vertex {v} is outside the outer BFS")))?;
        lo = lo.min(d);
        hi = hi.max(d);
    }
    if !inner_host.is_empty() && hi - lo >= h {
        return Err(Error::Precondition(format!(
            "inner host spans outer layers {lo}..={hi}, more than {h}"
        )));
    }
    if let Some(v) = inner.vertices().into_iter().find(|v| !host.contains(v)) {
        return Err(Error::Precondition(format!(
            "inner BFS vertex {v} is outside the inner host"
        )));
    }

    let mut violations = Vec::new();
    for (layer, vs) in inner.layers().iter().enumerate() {
        for &w in vs {
            for (position, &u) in outer.path_to_root(w).iter().enumerate() {
                if !host.contains(&u) {
                    continue;
                }
                if position >= h {
                    violations.push(OrthogonalityViolation::TooFarUp { w, u, position });
                }
                match inner.depth_of(u) {
                    None => violations.push(OrthogonalityViolation::OutsideInner { w, u }),
                    Some(found) => {
                        if found + h <= layer || found >= layer + h {
                            violations.push(OrthogonalityViolation::LayerOutOfRange {
                                w,
                                u,
                                layer,
                                found,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bfs_layering, generate, Family};

    #[test]
    fn single_edge_slice() {
        let g = generate(&Family::Path(5)).unwrap();
        let outer = bfs_layering(&g, None).unwrap();
        let inner = BfsLayering::within(&g, &[2, 3], 2).unwrap();
        assert!(check_orthogonality(&g, &outer, &[2, 3], &inner, 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn grid_slices_from_a_corner() {
        let g = generate(&Family::Grid { rows: 5, cols: 5 }).unwrap();
        let outer = bfs_layering(&g, None).unwrap();
        for i in 0..outer.height() {
            let mut set = [outer.layers()[i].clone(), outer.layers()[i + 1].clone()].concat();
            set.sort_unstable();
            for comp in g.components_within(&set) {
                let inner = BfsLayering::within(&g, &comp, comp[0]).unwrap();
                assert!(check_orthogonality(&g, &outer, &comp, &inner, 2)
                    .unwrap()
                    .is_empty());
            }
        }
    }

    #[test]
    fn corrupted_parent_is_caught() {
        // C_8 from 0: layers {0},{1,7},{2,6},{3,5},{4}. The slice L_3 ∪ L_4
        // is the path 3-4-5; rooting its BFS at 3 puts 5 in inner layer 2.
        let g = generate(&Family::Cycle(8)).unwrap();
        let outer = bfs_layering(&g, None).unwrap();
        let slice = [3, 4, 5];
        let inner = BfsLayering::within(&g, &slice, 3).unwrap();
        assert!(check_orthogonality(&g, &outer, &slice, &inner, 2)
            .unwrap()
            .is_empty());
        // Claim 4's parent is 5 and 5's parent is 3: the path 4-5-3-… now
        // meets the slice three times.
        let bad = outer.with_parent(4, 5).with_parent(5, 3);
        let v = check_orthogonality(&g, &bad, &slice, &inner, 2).unwrap();
        assert!(v.iter().any(|x| matches!(
            x,
            OrthogonalityViolation::TooFarUp {
                w: 4,
                u: 3,
                position: 2
            }
        )));
    }

    #[test]
    fn precondition_checked() {
        let g = generate(&Family::Path(6)).unwrap();
        let outer = bfs_layering(&g, None).unwrap();
        let inner = BfsLayering::within(&g, &[1, 2, 3], 1).unwrap();
        assert!(check_orthogonality(&g, &outer, &[1, 2, 3], &inner, 2).is_err());
    }
}
