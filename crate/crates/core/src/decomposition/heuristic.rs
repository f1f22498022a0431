use std::collections::BTreeSet;

use super::TreeDecomposition;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Heuristic {
    MinFill,
    MinDegree,
}

impl std::str::FromStr for Heuristic {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "min_fill" => Ok(Heuristic::MinFill),
            "min_degree" => Ok(Heuristic::MinDegree),
            _ => Err(crate::Error::InvalidParameter(format!(
                "unknown heuristic `{s}`"
            ))),
        }
    }
}

fn adjacency(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect()
}

fn fill_in(adj: &[BTreeSet<Vertex>], v: Vertex) -> usize {
    let nb: Vec<Vertex> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Greedy elimination ordering; ties go to the smallest label.
pub fn elimination_order(g: &Graph, heuristic: Heuristic) -> Vec<Vertex> {
    let mut adj = adjacency(g);
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = match heuristic {
            Heuristic::MinDegree => *alive.iter().min_by_key(|&&v| (adj[v].len(), v)).unwrap(),
            Heuristic::MinFill => *alive
                .iter()
                .min_by_key(|&&v| (fill_in(&adj, v), v))
                .unwrap(),
        };
        let nb: Vec<Vertex> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        alive.remove(&v);
        order.push(v);
    }
    order
}

/// Heuristic upper bound with its witnessing decomposition.
pub fn treewidth_upper(g: &Graph, heuristic: Heuristic) -> (usize, TreeDecomposition) {
    let order = elimination_order(g, heuristic);
    let td = TreeDecomposition::from_elimination_order(g, &order);
    (td.width(), td)
}

/// Degeneracy: the largest minimum degree met while repeatedly deleting a
/// minimum-degree vertex.
pub fn degeneracy(g: &Graph) -> usize {
    let mut adj = adjacency(g);
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut best = 0;
    while let Some(&v) = alive.iter().min_by_key(|&&v| (adj[v].len(), v)) {
        best = best.max(adj[v].len());
        let nb: Vec<Vertex> = adj[v].iter().copied().collect();
        for a in nb {
            adj[a].remove(&v);
        }
        alive.remove(&v);
    }
    best
}

/// Minor-min-width: contract a minimum-degree vertex into its
/// minimum-degree neighbour, recording the largest minimum degree seen.
pub fn minor_min_width(g: &Graph) -> usize {
    let mut adj = adjacency(g);
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut best = 0;
    while let Some(&v) = alive.iter().min_by_key(|&&v| (adj[v].len(), v)) {
        best = best.max(adj[v].len());
        let nb: Vec<Vertex> = adj[v].iter().copied().collect();
        if let Some(&u) = nb.iter().min_by_key(|&&u| (adj[u].len(), u)) {
            for &w in &nb {
                adj[w].remove(&v);
                if w != u {
                    adj[w].insert(u);
                    adj[u].insert(w);
                }
            }
        }
        adj[v].clear();
        alive.remove(&v);
    }
    best
}

/// Best of the implemented lower bounds.
pub fn treewidth_lower(g: &Graph) -> usize {
    degeneracy(g).max(minor_min_width(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_tree_decomposition;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn cliques_and_paths() {
        for n in 1..7 {
            let k = fam(Family::Clique(n));
            for h in [Heuristic::MinFill, Heuristic::MinDegree] {
                let (w, td) = treewidth_upper(&k, h);
                assert_eq!(w, n - 1);
                assert_eq!(validate_tree_decomposition(&k, &td), Ok(()));
            }
            assert_eq!(treewidth_lower(&k), n - 1);
        }
        let p = fam(Family::Path(12));
        assert_eq!(treewidth_upper(&p, Heuristic::MinFill).0, 1);
        assert_eq!(treewidth_upper(&p, Heuristic::MinDegree).0, 1);
        assert_eq!(treewidth_lower(&p), 1);
    }

    #[test]
    fn grid_bounds_bracket_known_value() {
        let g = fam(Family::Grid { rows: 4, cols: 4 });
        let (w, td) = treewidth_upper(&g, Heuristic::MinFill);
        assert!(w >= 4);
        assert_eq!(validate_tree_decomposition(&g, &td), Ok(()));
        assert!(treewidth_lower(&g) <= 4);
    }

    #[test]
    fn edgeless_graph_has_width_zero() {
        let g = Graph::empty(4);
        assert_eq!(treewidth_upper(&g, Heuristic::MinFill).0, 0);
        assert_eq!(treewidth_lower(&g), 0);
    }
}
