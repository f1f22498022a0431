//! Iterated BFS decompositions, the recursive clustered edge-coloring built
//! on them, and extraction of induced-minor witnesses when they go deep.
//!
//! Depth is counted from 0: the components of the input are the depth-0
//! nodes, and the components of a slice of a depth-`t` node sit at depth
//! `t + 1`.

mod color;
mod orth;
mod witness;

pub use color::{audit_monochromatic, kpr_coloring, KprColoring};
pub use orth::{check_orthogonality, OrthogonalityViolation};
pub use witness::{extract_witness, witness_pattern, InducedMinorWitness, WitnessLevel};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{weak_diameter_within, BfsLayering, Graph, Vertex};

/// Pattern `subd1(K_{p,q})`, slice width `h` and stop threshold `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KprParams {
    pub p: usize,
    pub q: usize,
    pub h: usize,
    pub d: usize,
}

impl KprParams {
    pub fn new(p: usize, q: usize, h: usize, d: usize) -> Result<Self> {
        if p < 2 || q < 1 || h < 1 {
            return Err(Error::InvalidParameter(format!(
                "need p >= 2, q >= 1, h >= 1 (got p={p}, q={q}, h={h})"
            )));
        }
        Ok(KprParams { p, q, h, d })
    }

    /// Separation between chosen witness vertices: `(8h+2)q + 4h + 6`.
    pub fn separation(q: usize, h: usize) -> usize {
        (8 * h + 2) * q + 4 * h + 6
    }

    /// `d = ((8h+2)q + 4h + 6)(p - 1)`: beyond depth `q`, a node this wide
    /// yields a `subd1(K_{p,q})` induced minor.
    pub fn for_witness(p: usize, q: usize, h: usize) -> Result<Self> {
        KprParams::new(p, q, h, Self::separation(q, h) * p.saturating_sub(1))
    }

    /// Width 2 and `d = 18(q+1)(p-1) - 1`, as used by the coloring.
    pub fn for_coloring(p: usize, q: usize) -> Result<Self> {
        KprParams::new(
            p,
            q,
            2,
            (18 * (q + 1) * p.saturating_sub(1)).saturating_sub(1),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeStatus {
    /// Weak diameter at most `d`.
    Leaf,
    /// Split into slice components (its children).
    Expanded,
    /// Too wide but at the depth cap.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsNode {
    /// Sorted; connected in the host.
    pub vertices: Vec<Vertex>,
    pub depth: usize,
    pub parent: Option<usize>,
    /// Index `i` of the parent slice `L_i ∪ … ∪ L_{i+h-1}`.
    pub slice: Option<usize>,
    /// Exact weak diameter in the host when it is at most `d`.
    pub weak_diameter: Option<usize>,
    pub status: NodeStatus,
    /// BFS layering of the node, kept for expanded nodes.
    pub layering: Option<BfsLayering>,
    pub children: Vec<usize>,
    /// The node had fewer than `h` layers, so its only slice is itself.
    pub short_slice: bool,
}

/// Recursion tree of iterated BFSes; nodes are in preorder (slice index,
/// then smallest vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedBfsTree {
    pub params: KprParams,
    pub max_depth: usize,
    pub nodes: Vec<BfsNode>,
    pub roots: Vec<usize>,
}

impl IteratedBfsTree {
    /// Largest node depth; 0 for an empty graph.
    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    pub fn truncated(&self) -> bool {
        self.nodes.iter().any(|n| n.status == NodeStatus::Truncated)
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].children.is_empty())
    }

    /// Path from the root component down to `node`, inclusive.
    pub fn ancestry(&self, node: usize) -> Vec<usize> {
        let mut chain = vec![node];
        while let Some(p) = self.nodes[*chain.last().unwrap()].parent {
            chain.push(p);
        }
        chain.reverse();
        chain
    }

    /// First node (preorder) at depth at least `q` whose weak diameter
    /// exceeds `d`: the starting point of witness extraction.
    pub fn witness_candidate(&self) -> Option<usize> {
        let q = self.params.q;
        (0..self.nodes.len())
            .find(|&i| self.nodes[i].depth >= q && self.nodes[i].weak_diameter.is_none())
    }

    /// Indented audit log, one line per node.
    pub fn audit_log(&self) -> String {
        let mut out = String::new();
        let KprParams { p, q, h, d } = self.params;
        let _ = writeln!(
            out,
            "iterated bfs: p={p} q={q} h={h} d={d} max_depth={} depth={}",
            self.max_depth,
            self.depth()
        );
        let mut stack: Vec<usize> = self.roots.iter().rev().copied().collect();
        while let Some(i) = stack.pop() {
            let n = &self.nodes[i];
            let slice = n.slice.map_or("-".to_string(), |s| s.to_string());
            let wd = n.weak_diameter.map_or(format!(">{d}"), |w| w.to_string());
            let status = match n.status {
                NodeStatus::Leaf => "leaf",
                NodeStatus::Expanded => "expanded",
                NodeStatus::Truncated => "truncated",
            };
            let _ = writeln!(
                out,
                "{:indent$}node {i}: depth {}, |V| {}, slice {slice}, weak diameter {wd}, {status}{}",
                "",
                n.depth,
                n.vertices.len(),
                if n.short_slice { ", short slice" } else { "" },
                indent = 2 * n.depth
            );
            stack.extend(n.children.iter().rev());
        }
        out
    }

    /// Runs [`check_orthogonality`] on every parent–child pair.
    pub fn check_all_orthogonality(&self, g: &Graph) -> Result<Vec<OrthogonalityViolation>> {
        let mut all = Vec::new();
        for node in &self.nodes {
            let Some(outer) = &node.layering else {
                continue;
            };
            for &c in &node.children {
                let child = &self.nodes[c];
                let inner = match &child.layering {
                    Some(l) => l.clone(),
                    None => BfsLayering::within(g, &child.vertices, child.vertices[0])?,
                };
                all.extend(check_orthogonality(
                    g,
                    outer,
                    &child.vertices,
                    &inner,
                    self.params.h,
                )?);
            }
        }
        Ok(all)
    }
}

/// Iterated BFSes of width `h` until weak diameter at most `d` (measured in
/// `g`), or until `max_depth` (default `q + 2`).
pub fn iterated_bfs(g: &Graph, params: KprParams, max_depth: Option<usize>) -> IteratedBfsTree {
    let max_depth = max_depth.unwrap_or(params.q + 2);
    let h = params.h;
    let mut nodes: Vec<BfsNode> = Vec::new();
    let mut roots = Vec::new();
    let mut stack: Vec<(Vec<Vertex>, usize, Option<usize>, Option<usize>)> = g
        .components()
        .into_iter()
        .rev()
        .map(|c| (c, 0, None, None))
        .collect();
    while let Some((vertices, depth, parent, slice)) = stack.pop() {
        let id = nodes.len();
        match parent {
            Some(p) => nodes[p].children.push(id),
            None => roots.push(id),
        }
        let wd = weak_diameter_within(g, &vertices, params.d);
        let mut node = BfsNode {
            vertices,
            depth,
            parent,
            slice,
            weak_diameter: wd,
            status: NodeStatus::Leaf,
            layering: None,
            children: Vec::new(),
            short_slice: false,
        };
        if wd.is_none() {
            if depth >= max_depth {
                node.status = NodeStatus::Truncated;
            } else {
                node.status = NodeStatus::Expanded;
                let layering = BfsLayering::within(g, &node.vertices, node.vertices[0])
                    .expect("node is connected");
                let layers = layering.layers();
                let slices = if layers.len() >= h {
                    layers.len() - h + 1
                } else {
                    1
                };
                node.short_slice = layers.len() < h;
                let mut pending = Vec::new();
                for i in 0..slices {
                    let mut set: Vec<Vertex> = layers[i..(i + h).min(layers.len())].concat();
                    set.sort_unstable();
                    for comp in g.components_within(&set) {
                        pending.push((comp, depth + 1, Some(id), Some(i)));
                    }
                }
                stack.extend(pending.into_iter().rev());
                node.layering = Some(layering);
            }
        }
        nodes.push(node);
    }
    IteratedBfsTree {
        params,
        max_depth,
        nodes,
        roots,
    }
}
