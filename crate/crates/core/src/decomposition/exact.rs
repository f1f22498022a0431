//! Exact treewidth by branch-and-bound over elimination orderings.
//!
//! Works per connected component on 64-bit adjacency masks. The search keeps
//! the best width found so far, prunes with the minor-min-width lower bound,
//! eliminates simplicial and safe almost-simplicial vertices without
//! branching, and memoises the best width reached for every set of
//! remaining vertices (the elimination graph only depends on that set).

use std::collections::HashMap;

use super::heuristic::{elimination_order, Heuristic};
use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_EXACT_BUDGET: usize = 32;
/// Hard cap imposed by the 64-bit masks.
pub const MAX_EXACT_BUDGET: usize = 64;

/// Exact treewidth with a witnessing decomposition.
///
/// `budget` caps the size of the largest connected component (isolated
/// vertices and other small components never count against it).
pub fn exact_treewidth(g: &Graph, budget: usize) -> Result<(usize, TreeDecomposition)> {
    let budget = budget.min(MAX_EXACT_BUDGET);
    let components = g.components();
    if let Some(big) = components.iter().find(|c| c.len() > budget) {
        return Err(Error::TooLargeForExact {
            n: big.len(),
            budget,
        });
    }
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    for comp in &components {
        let (w, local) = solve_component(g, comp);
        width = width.max(w);
        order.extend(local);
    }
    let td = TreeDecomposition::from_elimination_order(g, &order);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

pub fn exact_treewidth_default(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    exact_treewidth(g, DEFAULT_EXACT_BUDGET)
}

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn solve_component(g: &Graph, comp: &[Vertex]) -> (usize, Vec<Vertex>) {
    let k = comp.len();
    if k <= 2 {
        return (k.saturating_sub(1), comp.to_vec());
    }
    let (sub, map) = g.induced_subgraph(comp);
    let adj: Vec<u64> = sub
        .vertices()
        .map(|v| sub.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };

    let mut best_order = elimination_order(&sub, Heuristic::MinFill);
    let mut ub = TreeDecomposition::from_elimination_order(&sub, &best_order).width();
    let alt = elimination_order(&sub, Heuristic::MinDegree);
    let alt_w = TreeDecomposition::from_elimination_order(&sub, &alt).width();
    if alt_w < ub {
        ub = alt_w;
        best_order = alt;
    }
    let lb = mmw(&adj, all);
    if lb < ub {
        let mut search = Search {
            ub,
            best: best_order.clone(),
            memo: HashMap::new(),
        };
        let mut order = Vec::with_capacity(k);
        search.run(adj, all, 0, &mut order);
        ub = search.ub;
        best_order = search.best;
    }
    (ub, best_order.into_iter().map(|v| map[v]).collect())
}

struct Search {
    ub: usize,
    best: Vec<Vertex>,
    memo: HashMap<u64, usize>,
}

fn eliminate(adj: &mut [u64], remaining: &mut u64, v: usize) {
    let nb = adj[v] & *remaining;
    for u in bits(nb) {
        adj[u] = (adj[u] | nb) & !(1 << u) & !(1 << v);
    }
    *remaining &= !(1 << v);
    adj[v] = 0;
}

fn is_clique(adj: &[u64], set: u64) -> bool {
    bits(set).all(|u| (adj[u] | 1 << u) & set == set)
}

/// Minor-min-width on the masked graph.
fn mmw(adj: &[u64], remaining: u64) -> usize {
    let mut adj = adj.to_vec();
    let mut alive = remaining;
    let mut best = 0;
    while alive != 0 {
        let v = bits(alive)
            .min_by_key(|&v| ((adj[v] & alive).count_ones(), v))
            .unwrap();
        let nb = adj[v] & alive;
        best = best.max(nb.count_ones() as usize);
        if let Some(u) = bits(nb).min_by_key(|&u| ((adj[u] & alive).count_ones(), u)) {
            let rest = nb & !(1 << u);
            adj[u] |= rest;
            for w in bits(rest) {
                adj[w] |= 1 << u;
            }
        }
        alive &= !(1 << v);
    }
    best
}

impl Search {
    fn finish(&mut self, width: usize, order: &[Vertex], remaining: u64) {
        if width < self.ub {
            self.ub = width;
            self.best = order.iter().copied().chain(bits(remaining)).collect();
        }
    }

    fn run(
        &mut self,
        mut adj: Vec<u64>,
        mut remaining: u64,
        mut width: usize,
        order: &mut Vec<Vertex>,
    ) {
        let mark = order.len();
        loop {
            let r = remaining.count_ones() as usize;
            if r == 0 || r - 1 <= width {
                self.finish(width, order, remaining);
                order.truncate(mark);
                return;
            }
            // Simplicial vertices can always go first.
            if let Some(v) = bits(remaining).find(|&v| is_clique(&adj, adj[v] & remaining)) {
                width = width.max((adj[v] & remaining).count_ones() as usize);
                if width >= self.ub {
                    order.truncate(mark);
                    return;
                }
                eliminate(&mut adj, &mut remaining, v);
                order.push(v);
                continue;
            }
            break;
        }
        let low = width.max(mmw(&adj, remaining));
        if low >= self.ub {
            order.truncate(mark);
            return;
        }
        // An almost simplicial vertex of degree at most the lower bound is safe.
        let almost = bits(remaining).find(|&v| {
            let nb = adj[v] & remaining;
            (nb.count_ones() as usize) <= low && bits(nb).any(|w| is_clique(&adj, nb & !(1 << w)))
        });
        if let Some(v) = almost {
            width = width.max((adj[v] & remaining).count_ones() as usize);
            eliminate(&mut adj, &mut remaining, v);
            order.push(v);
            self.run(adj, remaining, width, order);
            order.truncate(mark);
            return;
        }
        if let Some(&seen) = self.memo.get(&remaining) {
            if seen <= width {
                order.truncate(mark);
                return;
            }
        }
        self.memo.insert(remaining, width);

        let mut cands: Vec<(usize, usize)> = bits(remaining)
            .map(|v| ((adj[v] & remaining).count_ones() as usize, v))
            .collect();
        cands.sort_unstable();
        for (deg, v) in cands {
            let w = width.max(deg);
            if w >= self.ub {
                break;
            }
            let mut next = adj.clone();
            let mut rem = remaining;
            eliminate(&mut next, &mut rem, v);
            order.push(v);
            self.run(next, rem, w, order);
            order.truncate(mark);
        }
    }
}
