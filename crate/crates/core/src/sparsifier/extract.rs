//! Subcubic subgraphs of large treewidth.
//!
//! None of the strategies carries a treewidth guarantee; the width of what
//! they return is measured and reported.

use std::collections::HashSet;

use crate::decomposition::{exact_treewidth, treewidth_lower, treewidth_upper, Heuristic};
use crate::error::{Error, Result};
use crate::graph::{generate, normalize, Edge, Family, Graph, Vertex};
use crate::minors::{find_minor, SearchOutcome};

/// Hosts larger than this are refused by [`ExtractStrategy::ExactSmall`].
pub const EXACT_SMALL_LIMIT: usize = 16;
/// Maximal subcubic subgraphs evaluated by the exhaustive strategy.
const EXACT_SMALL_CAP: usize = 4_000;
/// Deletion states visited by the exhaustive strategy.
const EXACT_SMALL_STATES: usize = 200_000;
/// Greedy scores candidate deletions by the treewidth lower bound only on
/// hosts up to this size; beyond it the tie-break rule alone decides.
const GREEDY_SCORE_LIMIT: usize = 150;
/// Expansion budget of each wall-minor search.
pub const WALL_SEARCH_BUDGET: u64 = 200_000;
/// Width estimates are exact up to this many vertices.
const EXACT_ESTIMATE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtractStrategy {
    ExactSmall,
    WallMinor,
    Greedy,
}

impl ExtractStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            ExtractStrategy::ExactSmall => "exact_small",
            ExtractStrategy::WallMinor => "wall_minor",
            ExtractStrategy::Greedy => "greedy",
        }
    }
}

impl std::str::FromStr for ExtractStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact_small" => Ok(ExtractStrategy::ExactSmall),
            "wall_minor" => Ok(ExtractStrategy::WallMinor),
            "greedy" => Ok(ExtractStrategy::Greedy),
            _ => Err(Error::InvalidParameter(format!(
                "unknown extraction strategy `{s}`"
            ))),
        }
    }
}

impl std::fmt::Display for ExtractStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Treewidth bounds of an extracted subgraph; equal when computed exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WidthEstimate {
    pub lower: usize,
    pub upper: usize,
}

impl WidthEstimate {
    pub fn of(g: &Graph) -> Self {
        if g.n() <= EXACT_ESTIMATE_LIMIT {
            if let Ok((w, _)) = exact_treewidth(g, EXACT_ESTIMATE_LIMIT) {
                return WidthEstimate { lower: w, upper: w };
            }
        }
        let lower = treewidth_lower(g);
        let upper = treewidth_upper(g, Heuristic::MinFill).0.max(lower);
        WidthEstimate { lower, upper }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

impl std::fmt::Display for WidthEstimate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "{}..{}", self.lower, self.upper)
        }
    }
}

/// A subgraph `H` of `host` with `Δ(H) ≤ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcubicExtraction {
    pub host_n: usize,
    /// Sorted vertices of `H` (host labels).
    pub vertices: Vec<Vertex>,
    /// Sorted edges of `H` (host labels).
    pub edges: Vec<Edge>,
    pub width: WidthEstimate,
    /// The strategy that produced `H` (after any fallback).
    pub strategy: ExtractStrategy,
    pub requested: ExtractStrategy,
    /// False when a search cap stopped the strategy early.
    pub exhaustive: bool,
}

impl SubcubicExtraction {
    /// `H` relabelled densely; `map[i]` is the host label of vertex `i`.
    pub fn graph(&self) -> (Graph, Vec<Vertex>) {
        let mut inv = vec![usize::MAX; self.host_n];
        for (i, &v) in self.vertices.iter().enumerate() {
            inv[v] = i;
        }
        let g = Graph::from_edges(
            self.vertices.len(),
            self.edges.iter().map(|&(u, v)| normalize(inv[u], inv[v])),
        )
        .expect("extraction edges are distinct and inside its vertex set");
        (g, self.vertices.clone())
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.host_n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    fn spanning(
        host: &Graph,
        edges: Vec<Edge>,
        strategy: ExtractStrategy,
        requested: ExtractStrategy,
    ) -> Self {
        let mut edges = edges;
        edges.sort_unstable();
        let mut ex = SubcubicExtraction {
            host_n: host.n(),
            vertices: host.vertices().collect(),
            edges,
            width: WidthEstimate { lower: 0, upper: 0 },
            strategy,
            requested,
            exhaustive: true,
        };
        ex.width = WidthEstimate::of(&ex.graph().0);
        ex
    }
}

pub fn extract_subcubic(g: &Graph, strategy: ExtractStrategy) -> Result<SubcubicExtraction> {
    if strategy == ExtractStrategy::ExactSmall && g.n() > EXACT_SMALL_LIMIT {
        return Err(Error::Precondition(format!(
            "exact_small extraction needs at most {EXACT_SMALL_LIMIT} vertices, got {}",
            g.n()
        )));
    }
    if g.max_degree() <= 3 {
        return Ok(SubcubicExtraction::spanning(
            g,
            g.edges().to_vec(),
            strategy,
            strategy,
        ));
    }
    let ex = match strategy {
        ExtractStrategy::ExactSmall => exact_small(g)?,
        ExtractStrategy::Greedy => greedy(g, strategy),
        ExtractStrategy::WallMinor => wall_minor(g).unwrap_or_else(|| greedy(g, strategy)),
    };
    debug_assert!(ex.max_degree() <= 3);
    Ok(ex)
}

/// Exhaustive search over maximal subcubic spanning subgraphs for the one
/// of largest exact treewidth. Stops early once `tw(g)` is reached.
fn exact_small(g: &Graph) -> Result<SubcubicExtraction> {
    let target = exact_treewidth(g, EXACT_SMALL_LIMIT)?.0;
    let mut s = ExactSmall {
        g,
        seen: HashSet::new(),
        best: None,
        evaluated: 0,
        target,
        capped: false,
    };
    s.visit(0);
    let (_, mask) = s.best.expect("a maximal subcubic subgraph exists");
    let edges = (0..g.m())
        .filter(|&e| mask >> e & 1 == 0)
        .map(|e| g.edges()[e])
        .collect();
    let mut ex = SubcubicExtraction::spanning(
        g,
        edges,
        ExtractStrategy::ExactSmall,
        ExtractStrategy::ExactSmall,
    );
    ex.exhaustive = !s.capped;
    Ok(ex)
}

struct ExactSmall<'a> {
    g: &'a Graph,
    seen: HashSet<u128>,
    best: Option<(usize, u128)>,
    evaluated: usize,
    target: usize,
    capped: bool,
}

impl ExactSmall<'_> {
    fn done(&self) -> bool {
        self.capped || self.best.is_some_and(|(w, _)| w >= self.target)
    }

    fn degree(&self, deleted: u128, v: Vertex) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| deleted >> self.g.edge_index(v, w).unwrap() & 1 == 0)
            .count()
    }

    /// `deleted` is a bitmask over edge indices.
    fn visit(&mut self, deleted: u128) {
        if self.done() || !self.seen.insert(deleted) {
            return;
        }
        if self.seen.len() > EXACT_SMALL_STATES || self.evaluated >= EXACT_SMALL_CAP {
            self.capped = true;
            return;
        }
        let g = self.g;
        let Some(v) = g.vertices().find(|&v| self.degree(deleted, v) > 3) else {
            self.evaluate(deleted);
            return;
        };
        for &w in g.neighbors(v) {
            let e = g.edge_index(v, w).unwrap();
            if deleted >> e & 1 == 0 {
                self.visit(deleted | 1 << e);
                if self.done() {
                    return;
                }
            }
        }
    }

    fn evaluate(&mut self, deleted: u128) {
        let g = self.g;
        // Non-maximal subgraphs are dominated by a maximal superset.
        let maximal = (0..g.m()).filter(|&e| deleted >> e & 1 == 1).all(|e| {
            let (u, v) = g.edges()[e];
            self.degree(deleted, u) >= 3 || self.degree(deleted, v) >= 3
        });
        if !maximal {
            return;
        }
        self.evaluated += 1;
        let kept: Vec<Edge> = (0..g.m())
            .filter(|&e| deleted >> e & 1 == 0)
            .map(|e| g.edges()[e])
            .collect();
        let h = g.spanning_subgraph(&kept).expect("subset of edges");
        let w = exact_treewidth(&h, EXACT_SMALL_LIMIT).expect("small").0;
        if self.best.is_none_or(|(b, _)| w > b) {
            self.best = Some((w, deleted));
        }
    }
}

/// Repeatedly deletes an edge at the smallest vertex of degree above 3,
/// choosing the deletion that keeps the treewidth lower bound highest;
/// ties prefer edges whose other end is also over-full, then the
/// higher-degree other end, then the smaller label.
fn greedy(g: &Graph, requested: ExtractStrategy) -> SubcubicExtraction {
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let mut current = g.clone();
    while let Some(v) = current.vertices().find(|&v| current.degree(v) > 3) {
        let score = |w: Vertex| {
            let bound = if current.n() <= GREEDY_SCORE_LIMIT {
                let e = normalize(v, w);
                let rest: Vec<Edge> = edges.iter().copied().filter(|&x| x != e).collect();
                treewidth_lower(&current.spanning_subgraph(&rest).expect("subset"))
            } else {
                0
            };
            (
                bound,
                current.degree(w) > 3,
                current.degree(w),
                std::cmp::Reverse(w),
            )
        };
        let w = current
            .neighbors(v)
            .iter()
            .copied()
            .max_by_key(|&w| score(w))
            .expect("degree above 3");
        let e = normalize(v, w);
        edges.retain(|&x| x != e);
        current = g.spanning_subgraph(&edges).expect("subset");
    }
    SubcubicExtraction::spanning(g, edges, ExtractStrategy::Greedy, requested)
}

/// Largest wall found as a minor, realized as a subdivision: one host edge
/// per wall edge plus, inside each branch set, the BFS-tree paths joining
/// its (at most three) endpoints.
fn wall_minor(g: &Graph) -> Option<SubcubicExtraction> {
    let mut best = None;
    let mut exhaustive = true;
    let mut k = 2;
    while 2 * k * k <= g.n() {
        let wall = generate(&Family::Wall(k)).expect("positive size");
        match find_minor(g, &wall, WALL_SEARCH_BUDGET) {
            SearchOutcome::Found(m) => best = Some(m),
            SearchOutcome::Absent => break,
            SearchOutcome::BudgetExhausted => {
                exhaustive = false;
                break;
            }
        }
        k += 1;
    }
    let model = best?;
    let (edges, vertices) = realize(g, &model.pattern, &model.branch_sets);
    let mut ex = SubcubicExtraction {
        host_n: g.n(),
        vertices,
        edges,
        width: WidthEstimate { lower: 0, upper: 0 },
        strategy: ExtractStrategy::WallMinor,
        requested: ExtractStrategy::WallMinor,
        exhaustive,
    };
    if ex.max_degree() > 3 {
        return None;
    }
    ex.width = WidthEstimate::of(&ex.graph().0);
    Some(ex)
}

/// Subgraph realizing a subcubic `pattern` from its minor model.
fn realize(g: &Graph, pattern: &Graph, sets: &[Vec<Vertex>]) -> (Vec<Edge>, Vec<Vertex>) {
    let mut owner = vec![usize::MAX; g.n()];
    for (w, set) in sets.iter().enumerate() {
        for &v in set {
            owner[v] = w;
        }
    }
    let mut edges = Vec::new();
    let mut terminals: Vec<Vec<Vertex>> = vec![Vec::new(); pattern.n()];
    for &(a, b) in pattern.edges() {
        let (u, v) = sets[a]
            .iter()
            .flat_map(|&u| {
                g.neighbors(u)
                    .iter()
                    .filter(|&&v| owner[v] == b)
                    .map(move |&v| (u, v))
            })
            .min()
            .expect("model edge");
        edges.push(normalize(u, v));
        terminals[a].push(u);
        terminals[b].push(v);
    }
    let mut vertices = Vec::new();
    for (w, set) in sets.iter().enumerate() {
        let ts = &mut terminals[w];
        ts.sort_unstable();
        ts.dedup();
        let root = ts.first().copied().unwrap_or(set[0]);
        let bfs =
            crate::graph::BfsLayering::within(g, set, root).expect("branch sets are connected");
        let mut tree = vec![root];
        for &t in ts.iter().skip(1) {
            let path = bfs.path_to_root(t);
            for pair in path.windows(2) {
                edges.push(normalize(pair[0], pair[1]));
            }
            tree.extend(path);
        }
        vertices.extend(tree);
    }
    edges.sort_unstable();
    edges.dedup();
    vertices.sort_unstable();
    vertices.dedup();
    (edges, vertices)
}
