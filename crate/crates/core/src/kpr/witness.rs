//! Induced-minor witnesses for deep iterated-BFS branches.
//!
//! Given a node at depth `q` whose weak diameter exceeds `d`, let
//! `G_1, …, G_{q+1}` be the nodes on its branch (`G_1` a component of the
//! host) and `T_i` the BFS tree of `G_i`. The model of `subd1(K_{p,q})` is
//! built bottom-up: `p` far-apart vertices of `G_{q+1}` start the left
//! branch sets, each with a vertical path of length `4h+2` in `T_q`. Going
//! from `G_i` to `G_{i-1}`, the union of the `T_{i-1}` root paths of the
//! paths' top ends `z_j` becomes a new right branch set (minus the `z_j`,
//! which become subdivision vertices), each path is absorbed into its left
//! branch set, and new vertical paths in `T_{i-2}` start at the middle of the
//! old ones. The six invariant items are checked at every level.

use std::collections::{HashSet, VecDeque};

use super::{IteratedBfsTree, KprParams};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, generate, subdivide, BfsLayering, Family, Graph, Vertex};
use crate::minors::{validate_model, MinorModel, ModelKind};

/// Vertical paths used at one level of the construction, deepest vertex
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessLevel {
    pub level: usize,
    pub paths: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMinorWitness {
    pub params: KprParams,
    /// Left branch sets `A_1..A_p`.
    pub left: Vec<Vec<Vertex>>,
    /// Right branch sets `B_1..B_q`.
    pub right: Vec<Vec<Vertex>>,
    /// `subdivision[j][b]` joins `A_j` and `B_b`.
    pub subdivision: Vec<Vec<Vertex>>,
    /// Audit trail, from level `q+1` down to 2.
    pub levels: Vec<WitnessLevel>,
    /// Tree nodes `G_1..G_{q+1}`.
    pub branch: Vec<usize>,
}

/// `subd1(K_{p,q})` with left vertices `0..p`, right vertices `p..p+q` and
/// subdivision vertices after them.
pub fn witness_pattern(p: usize, q: usize) -> Graph {
    let k = generate(&Family::Biclique(p, q)).expect("positive sides");
    subdivide(&k, 1).expect("s = 1")
}

impl InducedMinorWitness {
    /// Branch sets indexed like [`witness_pattern`].
    pub fn branch_sets(&self) -> Vec<Vec<Vertex>> {
        let (p, q) = (self.left.len(), self.right.len());
        let k = generate(&Family::Biclique(p, q)).expect("positive sides");
        let mut sets = vec![Vec::new(); p + q + p * q];
        for j in 0..p {
            sets[j] = self.left[j].clone();
        }
        for b in 0..q {
            sets[p + b] = self.right[b].clone();
        }
        for j in 0..p {
            for b in 0..q {
                let e = k.edge_index(j, p + b).expect("biclique edge");
                sets[p + q + e] = vec![self.subdivision[j][b]];
            }
        }
        sets
    }

    pub fn to_model(&self, g: &Graph) -> MinorModel {
        MinorModel {
            host: g.clone(),
            pattern: witness_pattern(self.left.len(), self.right.len()),
            branch_sets: self.branch_sets(),
            kind: ModelKind::InducedMinor,
        }
    }
}

/// Builds the witness from `node` (or its ancestor at depth `q`).
///
/// Errors with [`Error::Precondition`] when the node is shallower than `q`
/// or its weak diameter is at most `d`, and with [`Error::WitnessInvariant`]
/// when a per-level check fails.
pub fn extract_witness(
    g: &Graph,
    tree: &IteratedBfsTree,
    node: usize,
    params: KprParams,
) -> Result<InducedMinorWitness> {
    let KprParams { p, q, h, d } = params;
    let n = tree
        .nodes
        .get(node)
        .ok_or_else(|| Error::Precondition(format!("no node {node}")))?;
    if n.depth < q {
        return Err(Error::Precondition(format!(
            "node {node} has depth {} < q = {q}",
            n.depth
        )));
    }
    if let Some(w) = n.weak_diameter {
        return Err(Error::Precondition(format!(
            "node {node} has weak diameter {w} <= d = {d}"
        )));
    }
    let chain = tree.ancestry(node);
    let branch: Vec<usize> = chain[..=q].to_vec();
    // T_i is the layering of G_i, i = 1..=q.
    let layering = |i: usize| -> Result<&BfsLayering> {
        tree.nodes[branch[i - 1]].layering.as_ref().ok_or_else(|| {
            Error::Precondition(format!("branch node at depth {} was not expanded", i - 1))
        })
    };
    let plen = 4 * h + 2;
    let sep = KprParams::separation(q, h);

    // Base case in G_{q+1}.
    let top = &tree.nodes[branch[q]].vertices;
    let picks = far_apart(g, top, p, sep)?;
    let t_q = layering(q)?;
    let mut left: Vec<Vec<Vertex>> = picks.iter().map(|&v| vec![v]).collect();
    let mut right: Vec<Vec<Vertex>> = Vec::new();
    let mut subdivision: Vec<Vec<Vertex>> = vec![Vec::new(); p];
    let mut paths = vertical_paths(t_q, &picks, plen, q + 1)?;
    let mut levels = Vec::new();

    let mut state = Level {
        g,
        params,
        level: q + 1,
    };
    state.check_items(t_q, &paths, &left, &right, &subdivision)?;
    state.check_model(&left, &right, &subdivision, &tree.nodes[branch[q]].vertices)?;
    levels.push(WitnessLevel {
        level: q + 1,
        paths: paths.clone(),
    });

    for i in (2..=q + 1).rev() {
        let t = layering(i - 1)?;
        let z: Vec<Vertex> = paths
            .iter()
            .map(|pp| *pp.last().expect("nonempty path"))
            .collect();
        let zs: HashSet<Vertex> = z.iter().copied().collect();
        let mut x: Vec<Vertex> = z
            .iter()
            .flat_map(|&v| t.path_to_root(v))
            .filter(|v| !zs.contains(v))
            .collect();
        x.sort_unstable();
        x.dedup();
        right.push(x);
        for j in 0..p {
            subdivision[j].push(z[j]);
            left[j].extend(paths[j].iter().copied().filter(|&v| v != z[j]));
            left[j].sort_unstable();
            left[j].dedup();
        }
        state.level = i - 1;
        state.check_model(
            &left,
            &right,
            &subdivision,
            &tree.nodes[branch[i - 2]].vertices,
        )?;
        if i > 2 {
            let mids: Vec<Vertex> = paths.iter().map(|pp| pp[plen / 2]).collect();
            let t_next = layering(i - 2)?;
            paths = vertical_paths(t_next, &mids, plen, i - 1)?;
            state.check_items(t_next, &paths, &left, &right, &subdivision)?;
            levels.push(WitnessLevel {
                level: i - 1,
                paths: paths.clone(),
            });
        }
    }
    let w = InducedMinorWitness {
        params,
        left,
        right,
        subdivision,
        levels,
        branch,
    };
    validate_model(&w.to_model(g)).map_err(|v| Error::WitnessInvariant {
        level: 1,
        item: 0,
        detail: v.to_string(),
    })?;
    Ok(w)
}

/// `p` vertices of `set` pairwise at host distance at least `sep`.
///
/// Greedy farthest-point selection from the smallest vertex first; when
/// that falls short, walks a path inside `set` between two vertices more
/// than `(p-1)·sep` apart and takes the vertices at distance `0, sep, 2sep,
/// …` from its start.
fn far_apart(g: &Graph, set: &[Vertex], p: usize, sep: usize) -> Result<Vec<Vertex>> {
    let mut picks = vec![set[0]];
    let mut nearest: Vec<usize> = dist_on(g, set[0], set);
    while picks.len() < p {
        let (best, _) = set
            .iter()
            .zip(&nearest)
            .max_by_key(|&(&v, &dv)| (dv, std::cmp::Reverse(v)))
            .expect("nonempty set");
        let best = *best;
        picks.push(best);
        for (slot, dv) in nearest.iter_mut().zip(dist_on(g, best, set)) {
            *slot = (*slot).min(dv);
        }
    }
    if pairwise_min(g, &picks) >= sep {
        return Ok(picks);
    }
    let span = (p - 1) * sep;
    for &u in set {
        let du = dist_on(g, u, set);
        if let Some(k) = du.iter().position(|&x| x > span) {
            let path = path_within(g, set, u, set[k]);
            let from_u = bfs_distances(g, u);
            let mut out = Vec::with_capacity(p);
            for step in 0..p {
                let target = step * sep;
                let v = *path
                    .iter()
                    .find(|&&v| from_u[v].unwrap_or(usize::MAX) >= target)
                    .expect("path reaches far end");
                out.push(v);
            }
            return Ok(out);
        }
    }
    Err(Error::Precondition(format!(
        "no {p} vertices pairwise {sep} apart"
    )))
}

fn dist_on(g: &Graph, src: Vertex, set: &[Vertex]) -> Vec<usize> {
    let d = bfs_distances(g, src);
    set.iter().map(|&v| d[v].unwrap_or(usize::MAX)).collect()
}

fn pairwise_min(g: &Graph, vs: &[Vertex]) -> usize {
    let mut best = usize::MAX;
    for (i, &a) in vs.iter().enumerate() {
        let d = bfs_distances(g, a);
        for &b in &vs[i + 1..] {
            best = best.min(d[b].unwrap_or(usize::MAX));
        }
    }
    best
}

/// Shortest path from `u` to `v` inside `G[set]`.
fn path_within(g: &Graph, set: &[Vertex], u: Vertex, v: Vertex) -> Vec<Vertex> {
    let layering = BfsLayering::within(g, set, v).expect("u, v in set");
    layering.path_to_root(u)
}

fn vertical_paths(
    t: &BfsLayering,
    starts: &[Vertex],
    len: usize,
    level: usize,
) -> Result<Vec<Vec<Vertex>>> {
    starts
        .iter()
        .map(|&v| {
            t.vertical_path(v, len)
                .ok_or_else(|| Error::WitnessInvariant {
                    level,
                    item: 2,
                    detail: format!(
                        "vertex {v} is too shallow for a vertical path of length {len}"
                    ),
                })
        })
        .collect()
}

struct Level<'a> {
    g: &'a Graph,
    params: KprParams,
    level: usize,
}

impl Level<'_> {
    fn fail(&self, item: u8, detail: String) -> Error {
        Error::WitnessInvariant {
            level: self.level,
            item,
            detail,
        }
    }

    /// The model of `subd1(K_{p,r})` built so far, inside `G_level`.
    fn check_model(
        &self,
        left: &[Vec<Vertex>],
        right: &[Vec<Vertex>],
        sub: &[Vec<Vertex>],
        host: &[Vertex],
    ) -> Result<()> {
        let p = left.len();
        let w = InducedMinorWitness {
            params: self.params,
            left: left.to_vec(),
            right: right.to_vec(),
            subdivision: sub.to_vec(),
            levels: Vec::new(),
            branch: Vec::new(),
        };
        let sets = if right.is_empty() {
            left.to_vec()
        } else {
            w.branch_sets()
        };
        for v in sets.iter().flatten() {
            if host.binary_search(v).is_err() {
                return Err(self.fail(0, format!("branch vertex {v} outside the level's subgraph")));
            }
        }
        let pattern = if right.is_empty() {
            Graph::empty(p)
        } else {
            witness_pattern(p, right.len())
        };
        let m = MinorModel {
            host: self.g.clone(),
            pattern,
            branch_sets: sets,
            kind: ModelKind::InducedMinor,
        };
        validate_model(&m).map_err(|v| self.fail(0, format!("model: {v}")))
    }

    fn check_items(
        &self,
        t: &BfsLayering,
        paths: &[Vec<Vertex>],
        left: &[Vec<Vertex>],
        right: &[Vec<Vertex>],
        sub: &[Vec<Vertex>],
    ) -> Result<()> {
        let g = self.g;
        let KprParams { q, h, .. } = self.params;
        let i = self.level;
        let others: Vec<&Vec<Vertex>> = right.iter().collect();
        let singles: Vec<Vec<Vertex>> = sub.iter().flatten().map(|&v| vec![v]).collect();
        for (j, pj) in paths.iter().enumerate() {
            // Vertical, of length exactly 4h+2.
            let vertical =
                pj.len() == 4 * h + 3 && pj.windows(2).all(|w| t.parent(w[0]) == Some(w[1]));
            if !vertical {
                return Err(self.fail(
                    2,
                    format!("path {j} is not a vertical path of length {}", 4 * h + 2),
                ));
            }
            let aj: HashSet<Vertex> = left[j].iter().copied().collect();
            // (1) meets exactly one branch set, A_j.
            if !pj.iter().any(|v| aj.contains(v)) {
                return Err(self.fail(1, format!("path {j} misses A_{j}")));
            }
            for (k, set) in left.iter().enumerate().filter(|&(k, _)| k != j) {
                if pj.iter().any(|v| set.contains(v)) {
                    return Err(self.fail(1, format!("path {j} meets A_{k}")));
                }
            }
            for set in others.iter().copied().chain(singles.iter()) {
                if pj.iter().any(|v| set.contains(v)) {
                    return Err(self.fail(
                        1,
                        format!("path {j} meets a right or subdivision branch set"),
                    ));
                }
            }
            // (2) deep end inside A_j, top end outside.
            if !aj.contains(&pj[0]) || aj.contains(pj.last().unwrap()) {
                return Err(self.fail(2, format!("path {j} endpoints misplaced")));
            }
            // (3) pairwise disjoint and non-adjacent.
            for (k, pk) in paths.iter().enumerate().skip(j + 1) {
                if g.sets_touch(pj, pk) {
                    return Err(self.fail(3, format!("paths {j} and {k} touch")));
                }
            }
            // (4) not adjacent to any other branch set.
            for (k, set) in left.iter().enumerate().filter(|&(k, _)| k != j) {
                if g.sets_touch(pj, set) {
                    return Err(self.fail(4, format!("path {j} touches A_{k}")));
                }
            }
            for set in others.iter().copied().chain(singles.iter()) {
                if g.sets_touch(pj, set) {
                    return Err(self.fail(
                        4,
                        format!("path {j} touches a right or subdivision branch set"),
                    ));
                }
            }
            // (5) size bound.
            let cap = (4 * h + 1) * (q + 1 - i) + 1;
            if left[j].len() > cap {
                return Err(self.fail(5, format!("|A_{j}| = {} > {cap}", left[j].len())));
            }
        }
        // (6) pairwise separation in the host.
        let need = (8 * h + 2) * (i - 1) + 4 * h + 6;
        for j in 0..left.len() {
            let near = within_distance(g, &left[j], need - 1);
            for (k, set) in left.iter().enumerate().skip(j + 1) {
                if set.iter().any(|v| near.contains(v)) {
                    return Err(self.fail(6, format!("A_{j} and A_{k} closer than {need}")));
                }
            }
        }
        Ok(())
    }
}

/// Vertices within `radius` of `src` in `g`.
fn within_distance(g: &Graph, src: &[Vertex], radius: usize) -> HashSet<Vertex> {
    let mut seen: HashSet<Vertex> = src.iter().copied().collect();
    let mut queue: VecDeque<(Vertex, usize)> = src.iter().map(|&v| (v, 0)).collect();
    while let Some((v, dv)) = queue.pop_front() {
        if dv == radius {
            continue;
        }
        for &w in g.neighbors(v) {
            if seen.insert(w) {
                queue.push_back((w, dv + 1));
            }
        }
    }
    seen
}
