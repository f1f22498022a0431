//! Tree decompositions, treewidth bounds and tree-partitions.

mod exact;
mod heuristic;
mod partition;

pub use exact::{exact_treewidth, exact_treewidth_default, DEFAULT_EXACT_BUDGET, MAX_EXACT_BUDGET};
pub use heuristic::{degeneracy, minor_min_width, treewidth_lower, treewidth_upper, Heuristic};
pub use partition::{tree_partition, validate_tree_partition, TreePartition};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{normalize, Graph, Vertex};

/// A tree decomposition: bags indexed `0..bags.len()` joined by tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// One bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition {
            bags: vec![g.vertices().collect()],
            tree_edges: Vec::new(),
        }
    }

    /// Largest bag size minus one; 0 when every bag is empty.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn tree(&self) -> Result<Graph> {
        Graph::from_edges(
            self.bags.len(),
            self.tree_edges.iter().map(|&(a, b)| normalize(a, b)),
        )
    }

    /// Decomposition induced by an elimination ordering of all vertices.
    ///
    /// The bag of `v` is `v` plus its later neighbours in the fill graph; its
    /// parent is the bag of the earliest-eliminated of those neighbours.
    /// Forest roots are chained to the first root so the result is a tree.
    pub fn from_elimination_order(g: &Graph, order: &[Vertex]) -> Self {
        let n = g.n();
        assert_eq!(order.len(), n, "elimination order must list every vertex");
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj: Vec<BTreeSet<Vertex>> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().copied().collect())
            .collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent_vertex = Vec::with_capacity(n);
        for &v in order {
            let higher: Vec<Vertex> = adj[v].iter().copied().collect();
            for (i, &a) in higher.iter().enumerate() {
                adj[a].remove(&v);
                for &b in &higher[i + 1..] {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
            parent_vertex.push(higher.iter().copied().min_by_key(|&u| pos[u]));
            let mut bag = higher;
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
        }
        let mut tree_edges = Vec::new();
        let mut first_root = None;
        for (i, pv) in parent_vertex.iter().enumerate() {
            match pv {
                Some(u) => tree_edges.push((pos[*u], i)),
                None => match first_root {
                    None => first_root = Some(i),
                    Some(r) => tree_edges.push((r, i)),
                },
            }
        }
        if bags.is_empty() {
            bags.push(Vec::new());
        }
        TreeDecomposition { bags, tree_edges }
    }

    /// PACE-style text: `s td <bags> <width+1> <n>`, `b i v...` lines
    /// (1-based), then tree edges `i j`.
    pub fn to_pace(&self, n: usize) -> String {
        let max_bag = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = format!("s td {} {} {}\n", self.bags.len(), max_bag, n);
        for (i, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", i + 1));
            for v in bag {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        for &(a, b) in &self.tree_edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }

    pub fn from_pace(text: &str) -> Result<(Self, usize)> {
        let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
        let mut tree_edges = Vec::new();
        let mut n = None;
        for (i, line) in text.lines().enumerate() {
            let bad = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad("expected integer"));
            match toks.first() {
                None | Some(&"c") => {}
                Some(&"s") => {
                    if toks.len() != 5 || toks[1] != "td" {
                        return Err(bad("malformed header"));
                    }
                    bags = vec![None; num(toks[2])?];
                    n = Some(num(toks[4])?);
                }
                Some(&"b") => {
                    let idx = num(toks.get(1).ok_or_else(|| bad("missing bag index"))?)?;
                    let slot = idx
                        .checked_sub(1)
                        .and_then(|k| bags.get_mut(k))
                        .ok_or_else(|| bad("bag index out of range"))?;
                    let mut bag = toks[2..]
                        .iter()
                        .map(|t| {
                            num(t).and_then(|v| v.checked_sub(1).ok_or_else(|| bad("vertex 0")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    bag.sort_unstable();
                    *slot = Some(bag);
                }
                Some(_) => {
                    if toks.len() != 2 {
                        return Err(bad("expected tree edge"));
                    }
                    let (a, b) = (num(toks[0])?, num(toks[1])?);
                    if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
                        return Err(bad("tree edge out of range"));
                    }
                    tree_edges.push((a - 1, b - 1));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            msg: "missing `s td` header".into(),
        })?;
        let bags = bags.into_iter().map(Option::unwrap_or_default).collect();
        Ok((TreeDecomposition { bags, tree_edges }, n))
    }
}

/// First violated tree-decomposition condition, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    NotATree,
    VertexOutOfRange(Vertex),
    VertexMissing(Vertex),
    EdgeUncovered(Vertex, Vertex),
    /// The bags containing the vertex do not induce a connected subtree.
    VertexBagsDisconnected(Vertex),
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NotATree => write!(f, "bag graph is not a tree"),
            TdViolation::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            TdViolation::VertexMissing(v) => write!(f, "vertex {v} in no bag"),
            TdViolation::EdgeUncovered(u, v) => write!(f, "edge uncovered: {u}-{v}"),
            TdViolation::VertexBagsDisconnected(v) => write!(f, "bags of vertex {v} not connected"),
        }
    }
}

/// Treewidth bounds with the best decomposition found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreewidthBounds {
    pub lower: usize,
    pub upper: usize,
    /// Decomposition of width `upper`.
    pub td: TreeDecomposition,
}

impl TreewidthBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Exact treewidth when every component fits `budget`, otherwise the
/// heuristic lower bound and the better of the min-fill and min-degree
/// upper bounds.
pub fn treewidth_bounds(g: &Graph, budget: usize) -> TreewidthBounds {
    if let Ok((w, td)) = exact_treewidth(g, budget) {
        return TreewidthBounds {
            lower: w,
            upper: w,
            td,
        };
    }
    let lower = treewidth_lower(g);
    let (a, td_a) = treewidth_upper(g, Heuristic::MinFill);
    let (b, td_b) = treewidth_upper(g, Heuristic::MinDegree);
    let (upper, td) = if b < a { (b, td_b) } else { (a, td_a) };
    TreewidthBounds { lower, upper, td }
}

pub fn validate_tree_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> std::result::Result<(), TdViolation> {
    let tree = td.tree().map_err(|_| TdViolation::NotATree)?;
    if tree.n() == 0 || tree.m() + 1 != tree.n() || !tree.is_connected() {
        return Err(TdViolation::NotATree);
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return Err(TdViolation::VertexOutOfRange(v));
            }
            holders[v].push(i);
        }
    }
    if let Some(v) = holders.iter().position(Vec::is_empty) {
        return Err(TdViolation::VertexMissing(v));
    }
    for &(u, v) in g.edges() {
        let covered = holders[u].iter().any(|&b| td.bags[b].contains(&v));
        if !covered {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }
    for (v, bs) in holders.iter().enumerate() {
        if !tree.is_connected_set(bs) {
            return Err(TdViolation::VertexBagsDisconnected(v));
        }
    }
    Ok(())
}
