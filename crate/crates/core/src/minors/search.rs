//! Exhaustive branch-set search.
//!
//! Pattern vertices are placed one at a time (descending degree, then
//! label). Each branch set is a connected set of free host vertices,
//! enumerated once each by the ESU scheme (rooted at its smallest vertex).
//! Growing a set only shrinks what is left for the remaining pattern
//! vertices, so a set that starves some unplaced vertex prunes every
//! extension of it as well.
//!
//! Branch sets are capped in size and the cap is raised 1, 2, 3, … until a
//! model is found or a round runs without the cap ever cutting a set short,
//! so models with small branch sets are found first.

use super::{validate_model, MinorModel, ModelKind};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MinorModel),
    Absent,
    /// The search expanded `budget` candidate branch sets without deciding.
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn model(&self) -> Option<&MinorModel> {
        match self {
            SearchOutcome::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

pub fn find_induced_minor(host: &Graph, pattern: &Graph, budget: u64) -> SearchOutcome {
    search(host, pattern, budget, ModelKind::InducedMinor)
}

pub fn find_minor(host: &Graph, pattern: &Graph, budget: u64) -> SearchOutcome {
    search(host, pattern, budget, ModelKind::Minor)
}

const FREE: usize = usize::MAX;

fn search(host: &Graph, pattern: &Graph, budget: u64, kind: ModelKind) -> SearchOutcome {
    if pattern.n() > host.n() || (kind == ModelKind::Minor && pattern.m() > host.m()) {
        return SearchOutcome::Absent;
    }
    let mut order: Vec<Vertex> = pattern.vertices().collect();
    order.sort_by_key(|&w| (std::cmp::Reverse(pattern.degree(w)), w));
    let mut s = Search {
        host,
        pattern,
        induced: kind == ModelKind::InducedMinor,
        order,
        placed: vec![false; pattern.n()],
        owner: vec![FREE; host.n()],
        sets: vec![Vec::new(); pattern.n()],
        expanded: 0,
        budget,
        exhausted: false,
        found: false,
        cap: 0,
        cut: false,
    };
    for cap in 1..=host.n().max(1) {
        s.cap = cap;
        s.cut = false;
        s.place(0);
        if s.stopped() || !s.cut {
            break;
        }
    }
    if s.found {
        let m = MinorModel {
            host: host.clone(),
            pattern: pattern.clone(),
            branch_sets: s.sets,
            kind,
        };
        debug_assert_eq!(validate_model(&m), Ok(()));
        if validate_model(&m).is_ok() {
            return SearchOutcome::Found(m);
        }
        unreachable!("search produced an invalid model");
    }
    if s.exhausted {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::Absent
    }
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    induced: bool,
    order: Vec<Vertex>,
    placed: Vec<bool>,
    owner: Vec<usize>,
    sets: Vec<Vec<Vertex>>,
    expanded: u64,
    budget: u64,
    exhausted: bool,
    found: bool,
    /// Largest branch set allowed in this round.
    cap: usize,
    /// Whether the cap stopped some set from growing this round.
    cut: bool,
}

impl<'a> Search<'a> {
    fn stopped(&self) -> bool {
        self.found || self.exhausted
    }

    /// Free host vertices that a branch set of `u` may use given the
    /// placed sets.
    fn region(&self, u: Vertex) -> Vec<bool> {
        let g = self.host;
        let mut ok: Vec<bool> = self.owner.iter().map(|&o| o == FREE).collect();
        if self.induced {
            for x in self.pattern.vertices() {
                if self.placed[x] && x != u && !self.pattern.has_edge(u, x) {
                    for &v in &self.sets[x] {
                        for &y in g.neighbors(v) {
                            ok[y] = false;
                        }
                    }
                }
            }
        }
        ok
    }

    /// Components of `region` that touch the sets of all placed neighbours
    /// of `u` other than `skip`.
    fn viable(&self, u: Vertex, region: &[bool], skip: Option<Vertex>) -> Vec<bool> {
        let g = self.host;
        let need: Vec<Vertex> = self
            .pattern
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&x| self.placed[x] && Some(x) != skip)
            .collect();
        let mut out = vec![false; g.n()];
        let mut seen = vec![false; g.n()];
        for start in g.vertices() {
            if !region[start] || seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in g.neighbors(x) {
                    if region[y] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            let touches_all = need.iter().all(|&x| {
                comp.iter().any(|&v| {
                    self.owner[v] == x || g.neighbors(v).iter().any(|&y| self.owner[y] == x)
                })
            });
            if touches_all {
                for v in comp {
                    out[v] = true;
                }
            }
        }
        out
    }

    /// After tentatively placing `w`, checks conditions that can only get
    /// worse when `w`'s set grows.
    fn starves_someone(&self, w: Vertex) -> bool {
        let free = self.owner.iter().filter(|&&o| o == FREE).count();
        let unplaced = self.placed.iter().filter(|&&p| !p).count();
        if free < unplaced {
            return true;
        }
        for u in self.pattern.vertices().filter(|&u| !self.placed[u]) {
            let region = self.region(u);
            if !self.viable(u, &region, Some(w)).contains(&true) {
                return true;
            }
        }
        false
    }

    fn place(&mut self, k: usize) {
        if k == self.order.len() {
            self.found = true;
            return;
        }
        let w = self.order[k];
        let allowed = {
            let region = self.region(w);
            self.viable(w, &region, None)
        };
        let g = self.host;
        // ESU: each connected subset of `allowed` once, rooted at its minimum.
        let mut in_sub = vec![false; g.n()];
        let mut near = vec![0u32; g.n()];
        for root in g.vertices().filter(|&v| allowed[v]) {
            let ext: Vec<Vertex> = g
                .neighbors(root)
                .iter()
                .copied()
                .filter(|&u| u > root && allowed[u])
                .collect();
            let mut sub = vec![root];
            self.enter(root, &mut in_sub, &mut near);
            self.grow(k, w, root, &allowed, &mut sub, ext, &mut in_sub, &mut near);
            self.leave(root, &mut in_sub, &mut near);
            if self.stopped() {
                return;
            }
        }
    }

    fn enter(&self, v: Vertex, in_sub: &mut [bool], near: &mut [u32]) {
        in_sub[v] = true;
        near[v] += 1;
        for &y in self.host.neighbors(v) {
            near[y] += 1;
        }
    }

    fn leave(&self, v: Vertex, in_sub: &mut [bool], near: &mut [u32]) {
        in_sub[v] = false;
        near[v] -= 1;
        for &y in self.host.neighbors(v) {
            near[y] -= 1;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        k: usize,
        w: Vertex,
        root: Vertex,
        allowed: &[bool],
        sub: &mut Vec<Vertex>,
        mut ext: Vec<Vertex>,
        in_sub: &mut Vec<bool>,
        near: &mut Vec<u32>,
    ) {
        self.expanded += 1;
        if self.expanded > self.budget {
            self.exhausted = true;
            return;
        }
        // Try `sub` as the branch set of `w`.
        for &v in sub.iter() {
            self.owner[v] = w;
        }
        self.placed[w] = true;
        self.sets[w] = sub.clone();
        let prune = self.starves_someone(w);
        if !prune {
            let touches = self
                .pattern
                .neighbors(w)
                .iter()
                .filter(|&&x| self.placed[x] && x != w)
                .all(|&x| {
                    sub.iter()
                        .any(|&v| self.host.neighbors(v).iter().any(|&y| self.owner[y] == x))
                });
            if touches {
                self.place(k + 1);
            }
        }
        if self.found {
            return;
        }
        self.placed[w] = false;
        for &v in sub.iter() {
            self.owner[v] = FREE;
        }
        self.sets[w].clear();
        if prune || self.stopped() {
            return;
        }
        if sub.len() >= self.cap {
            self.cut |= !ext.is_empty();
            return;
        }
        let g = self.host;
        while !ext.is_empty() {
            let x = ext.remove(0);
            let mut next = ext.clone();
            for &y in g.neighbors(x) {
                if y > root && allowed[y] && near[y] == 0 {
                    next.push(y);
                }
            }
            sub.push(x);
            self.enter(x, in_sub, near);
            self.grow(k, w, root, allowed, sub, next, in_sub, near);
            self.leave(x, in_sub, near);
            sub.pop();
            if self.stopped() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, subdivide, Family};

    fn c8() -> Graph {
        subdivide(&generate(&Family::Biclique(2, 2)).unwrap(), 1).unwrap()
    }

    #[test]
    fn c8_in_itself() {
        let h = c8();
        let out = find_induced_minor(&h, &h, DEFAULT_SEARCH_BUDGET);
        let m = out.model().expect("found");
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn trees_have_no_cycles() {
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let c3 = generate(&Family::Cycle(3)).unwrap();
        assert_eq!(
            find_induced_minor(&tree, &c3, DEFAULT_SEARCH_BUDGET),
            SearchOutcome::Absent
        );
        assert_eq!(
            find_minor(&tree, &c3, DEFAULT_SEARCH_BUDGET),
            SearchOutcome::Absent
        );
        assert_eq!(
            find_induced_minor(&tree, &c8(), DEFAULT_SEARCH_BUDGET),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn k4_and_c4() {
        let k4 = generate(&Family::Clique(4)).unwrap();
        let c4 = generate(&Family::Cycle(4)).unwrap();
        assert!(find_minor(&k4, &c4, DEFAULT_SEARCH_BUDGET).is_found());
        assert_eq!(
            find_induced_minor(&k4, &c4, DEFAULT_SEARCH_BUDGET),
            SearchOutcome::Absent
        );
        assert_eq!(
            find_minor(&c4, &k4, DEFAULT_SEARCH_BUDGET),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn grid_has_k4_minor() {
        let g = generate(&Family::Grid { rows: 3, cols: 3 }).unwrap();
        let k4 = generate(&Family::Clique(4)).unwrap();
        let out = find_minor(&g, &k4, DEFAULT_SEARCH_BUDGET);
        assert_eq!(validate_model(out.model().unwrap()), Ok(()));
    }

    #[test]
    fn cliques_prune_fast() {
        let k = generate(&Family::Clique(30)).unwrap();
        assert_eq!(find_induced_minor(&k, &c8(), 10_000), SearchOutcome::Absent);
    }

    #[test]
    fn budget_is_reported() {
        let g = generate(&Family::Grid { rows: 4, cols: 4 }).unwrap();
        let k5 = generate(&Family::Clique(5)).unwrap();
        assert_eq!(find_minor(&g, &k5, 50), SearchOutcome::BudgetExhausted);
    }
}
