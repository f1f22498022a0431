//! Brute-force oracles shared by the integration tests. They deliberately
//! share no code with the library beyond the `Graph` type.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use gdecomp::graph::Graph;
use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Treewidth by the subset recurrence
/// `TW(S) = min_{v∈S} max(TW(S∖v), |Q(S∖v, v)|)`, where `Q(S, v)` is the set
/// of vertices outside `S ∪ {v}` reachable from `v` through `S`.
pub fn dp_treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset DP is exponential");
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let q = |s: u32, v: usize| -> u32 {
        // BFS from v through s.
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut out = 0u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            next &= !seen;
            seen |= next;
            out |= next & !s;
            frontier = next & s;
        }
        out & !(1 << v)
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    // The recurrence yields max |Q| + 0, with TW(∅) = -∞; track width + 1.
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let cand = tw[rest as usize].max(q(rest, v).count_ones() as usize + 1);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    tw[full as usize] - 1
}

pub fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::<(), ()>::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        p.add_node(());
    }
    for &(u, v) in g.edges() {
        p.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    p
}

/// Isomorphism-invariant bucket key.
fn invariant(g: &Graph) -> Vec<usize> {
    let mut key = vec![g.n(), g.m()];
    let mut per: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            let mut d: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            d.sort_unstable();
            d.insert(0, g.degree(v));
            d
        })
        .collect();
    per.sort();
    for d in per {
        key.extend(d);
        key.push(usize::MAX);
    }
    key
}

/// Graphs kept up to isomorphism.
#[derive(Default)]
pub struct IsoSet {
    buckets: HashMap<Vec<usize>, Vec<(Graph, UnGraph<(), ()>)>>,
    len: usize,
}

impl IsoSet {
    /// Inserts unless an isomorphic graph is present; returns whether new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let pg = to_petgraph(&g);
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket
            .iter()
            .any(|(_, other)| petgraph::algo::is_isomorphic(other, &pg))
        {
            return false;
        }
        bucket.push((g, pg));
        self.len += 1;
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let pg = to_petgraph(g);
        self.buckets.get(&invariant(g)).is_some_and(|b| {
            b.iter()
                .any(|(_, other)| petgraph::algo::is_isomorphic(other, &pg))
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.buckets.values().flatten().map(|(g, _)| g)
    }
}

/// All graphs on `n` vertices up to isomorphism, by adding a vertex with
/// every possible neighbourhood to each graph on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut next = IsoSet::default();
        for g in &level {
            for mask in 0u32..1 << (k - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                edges.extend(
                    (0..k - 1)
                        .filter(|&u| mask >> u & 1 == 1)
                        .map(|u| (u, k - 1)),
                );
                next.insert(Graph::from_edges(k, edges).unwrap());
            }
        }
        level = next.graphs().cloned().collect();
        level.sort_by_key(|g| (g.m(), g.edges().to_vec()));
    }
    level
}

pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn delete_vertex(g: &Graph, x: usize) -> Graph {
    let relabel = |v: usize| if v > x { v - 1 } else { v };
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| u != x && v != x)
        .map(|&(u, v)| (relabel(u), relabel(v)));
    Graph::from_edges(g.n() - 1, edges).unwrap()
}

/// Contracts edge `x-y` (`x < y`) into `x`.
pub fn contract_edge(g: &Graph, x: usize, y: usize) -> Graph {
    let relabel = |v: usize| {
        let v = if v == y { x } else { v };
        if v > y {
            v - 1
        } else {
            v
        }
    };
    let mut set = HashSet::new();
    for &(u, v) in g.edges() {
        let (a, b) = (relabel(u), relabel(v));
        if a != b {
            set.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(g.n() - 1, set).unwrap()
}

pub fn delete_edge(g: &Graph, e: usize) -> Graph {
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, &x)| x);
    Graph::from_edges(g.n(), edges).unwrap()
}

/// Whether `pattern` is an induced minor (or a minor, when `edge_deletions`)
/// of `host`, by exploring every deletion/contraction sequence down to the
/// pattern's size. Graphs with fewer edges than the pattern are pruned:
/// none of the operations adds edges.
pub fn closure_contains(host: &Graph, pattern: &Graph, edge_deletions: bool) -> bool {
    let target = pattern.n();
    if host.n() < target || host.m() < pattern.m() {
        return false;
    }
    let mut level = IsoSet::default();
    level.insert(host.clone());
    for size in (target..=host.n()).rev() {
        let mut seen = IsoSet::default();
        // Edge deletions keep the vertex count: saturate within the level.
        let mut stack: Vec<Graph> = level.graphs().cloned().collect();
        for g in &stack {
            seen.insert(g.clone());
        }
        while let Some(g) = stack.pop() {
            if edge_deletions {
                for e in 0..g.m() {
                    let h = delete_edge(&g, e);
                    if h.m() >= pattern.m() && seen.insert(h.clone()) {
                        stack.push(h);
                    }
                }
            }
        }
        if size == target {
            return seen.contains(pattern);
        }
        let mut next = IsoSet::default();
        for g in seen.graphs() {
            for x in g.vertices() {
                let h = delete_vertex(g, x);
                if h.m() >= pattern.m() {
                    next.insert(h);
                }
            }
            for &(x, y) in g.edges() {
                let h = contract_edge(g, x, y);
                if h.m() >= pattern.m() {
                    next.insert(h);
                }
            }
        }
        level = next;
    }
    false
}
