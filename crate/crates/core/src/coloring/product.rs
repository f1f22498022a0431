use std::collections::HashSet;

use super::{densify, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Certificate that a graph is a subgraph of `H ⊠ P` for a path `P`:
/// vertex `v` maps to `coords[v] = (x, i)` with `x ∈ V(H)` and `i` the
/// 0-based position on the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEmbedding {
    pub h: Graph,
    pub coords: Vec<(Vertex, usize)>,
}

impl ProductEmbedding {
    /// The embedding of `strong_product(h, path(len))` into itself.
    pub fn of_product(h: &Graph, len: usize) -> Self {
        let coords = (0..h.n())
            .flat_map(|x| (0..len).map(move |i| (x, i)))
            .collect();
        ProductEmbedding {
            h: h.clone(),
            coords,
        }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.coords.len() != g.n() {
            return Err(Error::InvalidParameter(format!(
                "embedding lists {} vertices, graph has {}",
                self.coords.len(),
                g.n()
            )));
        }
        let mut seen = HashSet::with_capacity(g.n());
        for (v, &(x, i)) in self.coords.iter().enumerate() {
            if x >= self.h.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.h.n(),
                });
            }
            if !seen.insert((x, i)) {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} shares coordinates ({x}, {i})"
                )));
            }
        }
        for &(u, v) in g.edges() {
            let ((x1, i1), (x2, i2)) = (self.coords[u], self.coords[v]);
            let along = x1 == x2 && i1.abs_diff(i2) == 1;
            let across = self.h.has_edge(x1, x2) && i1.abs_diff(i2) <= 1;
            if !(along || across) {
                return Err(Error::NotAProductEmbedding(u, v));
            }
        }
        Ok(())
    }
}

/// 3-edge-coloring of a subgraph of `H ⊠ P`: edges within one path layer
/// get color 2, an edge between layers `i` and `i+1` gets `i mod 2`.
pub fn product_coloring(g: &Graph, emb: &ProductEmbedding) -> Result<EdgeColoring> {
    emb.check(g)?;
    EdgeColoring::from_fn(g, 3, |u, v| {
        let (i, j) = (emb.coords[u].1, emb.coords[v].1);
        if i == j {
            2
        } else {
            i.min(j) % 2
        }
    })
}

/// Product of two colorings of the same host, re-indexed densely in
/// first-seen edge order.
pub fn refine_product(c1: &EdgeColoring, c2: &EdgeColoring) -> Result<EdgeColoring> {
    if c1.host() != c2.host() {
        return Err(Error::HostMismatch);
    }
    let keys = c1
        .colors()
        .iter()
        .copied()
        .zip(c2.colors().iter().copied())
        .collect();
    densify(c1.host(), keys)
}
