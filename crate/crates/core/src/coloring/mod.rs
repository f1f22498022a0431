//! Edge-colorings, clustering statistics and the deterministic 3-colorings
//! built from tree-partitions and product structure.

mod product;
mod tree;

pub use product::{product_coloring, refine_product, ProductEmbedding};
pub use tree::{bounded_tw_coloring, tree_partition_coloring};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{weak_diameter, Edge, Graph, Vertex, WeakDiameter};

/// A total map from the edges of `host` to colors `0..h`.
///
/// Colors are stored by edge index, so they follow `host.edges()` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    colors: Vec<usize>,
    h: usize,
}

impl EdgeColoring {
    pub fn new(host: Graph, colors: Vec<usize>, h: usize) -> Result<Self> {
        if colors.len() != host.m() {
            return Err(Error::InvalidParameter(format!(
                "coloring has {} entries, host has {} edges",
                colors.len(),
                host.m()
            )));
        }
        if let Some(i) = colors.iter().position(|&c| c >= h) {
            let (u, v) = host.edges()[i];
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} has color {} >= {h}",
                colors[i]
            )));
        }
        Ok(EdgeColoring { host, colors, h })
    }

    /// Every edge gets color 0.
    pub fn monochromatic(host: &Graph) -> Self {
        EdgeColoring {
            host: host.clone(),
            colors: vec![0; host.m()],
            h: 1,
        }
    }

    pub fn from_fn(
        host: &Graph,
        h: usize,
        mut f: impl FnMut(Vertex, Vertex) -> usize,
    ) -> Result<Self> {
        let colors = host.edges().iter().map(|&(u, v)| f(u, v)).collect();
        EdgeColoring::new(host.clone(), colors, h)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Size of the palette; colors are `0..h`.
    pub fn h(&self) -> usize {
        self.h
    }

    /// Colors by edge index.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.host.edge_index(u, v).map(|i| self.colors[i])
    }

    /// Number of distinct colors actually assigned.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.h];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn class(&self, c: usize) -> Vec<Edge> {
        self.host
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|&(_, &k)| k == c)
            .map(|(&e, _)| e)
            .collect()
    }

    /// The spanning subgraph `(V, F_c)`.
    pub fn class_graph(&self, c: usize) -> Graph {
        Graph::from_edges_lossy(self.host.n(), self.class(c))
    }

    /// Lines `u v c`, one per edge in edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.colors.len() * 8);
        for (&(u, v), c) in self.host.edges().iter().zip(&self.colors) {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }

    /// Parses `u v c` lines; every host edge must be listed exactly once.
    /// The palette size is one more than the largest color.
    pub fn parse(host: &Graph, text: &str) -> Result<Self> {
        let mut colors = vec![usize::MAX; host.m()];
        for (i, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse { line: i + 1, msg };
            if toks.len() != 3 {
                return Err(bad("expected `u v c`".into()));
            }
            let nums = toks
                .iter()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>();
            let nums = nums.map_err(|_| bad("not a nonnegative integer".into()))?;
            let idx = host
                .edge_index(nums[0], nums[1])
                .ok_or(Error::MissingEdge(nums[0], nums[1]))?;
            if colors[idx] != usize::MAX {
                return Err(Error::DuplicateEdge(
                    nums[0].min(nums[1]),
                    nums[0].max(nums[1]),
                ));
            }
            colors[idx] = nums[2];
        }
        if let Some(i) = colors.iter().position(|&c| c == usize::MAX) {
            let (u, v) = host.edges()[i];
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} has no color"
            )));
        }
        let h = colors.iter().max().map_or(0, |&c| c + 1);
        EdgeColoring::new(host.clone(), colors, h)
    }

    /// Vertex sets of the monochromatic components of color `c` that
    /// contain at least one edge, each sorted, ordered by smallest vertex.
    pub fn monochromatic_components(&self, c: usize) -> Vec<Vec<Vertex>> {
        let cg = self.class_graph(c);
        cg.components()
            .into_iter()
            .filter(|comp| comp.len() > 1)
            .collect()
    }
}

/// Statistics for one color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorStats {
    pub color: usize,
    /// Components of `(V, F_c)` containing at least one edge.
    pub components: usize,
    pub max_size: usize,
    /// Largest weak diameter (in the host) over those components.
    pub max_weak_diameter: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusteringReport {
    pub per_color: Vec<ColorStats>,
    /// Largest monochromatic component; 0 for an edgeless host.
    pub clustering: usize,
}

impl ClusteringReport {
    pub const CSV_HEADER: &'static str = "color,components,max_size,max_weak_diameter";

    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", Self::CSV_HEADER);
        for s in &self.per_color {
            out.push_str(&format!(
                "{},{},{},{}\n",
                s.color, s.components, s.max_size, s.max_weak_diameter
            ));
        }
        out
    }
}

/// Exact clustering statistics of `c`, one row per palette color.
pub fn verify_clustering(c: &EdgeColoring) -> ClusteringReport {
    let mut per_color = Vec::with_capacity(c.h());
    for color in 0..c.h() {
        let comps = c.monochromatic_components(color);
        let mut max_wd = 0;
        for comp in &comps {
            // Components are connected in the host, so the diameter is finite.
            if let WeakDiameter::Finite(d) = weak_diameter(c.host(), comp) {
                max_wd = max_wd.max(d);
            }
        }
        per_color.push(ColorStats {
            color,
            components: comps.len(),
            max_size: comps.iter().map(Vec::len).max().unwrap_or(0),
            max_weak_diameter: max_wd,
        });
    }
    let clustering = per_color.iter().map(|s| s.max_size).max().unwrap_or(0);
    ClusteringReport {
        per_color,
        clustering,
    }
}

/// Re-indexes colors densely in first-seen edge order.
fn densify(host: &Graph, keys: Vec<(usize, usize)>) -> Result<EdgeColoring> {
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let colors: Vec<usize> = keys
        .into_iter()
        .map(|k| {
            let next = index.len();
            *index.entry(k).or_insert(next)
        })
        .collect();
    EdgeColoring::new(host.clone(), colors, index.len())
}
