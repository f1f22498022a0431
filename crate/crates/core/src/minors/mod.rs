//! Minor and induced-minor models: validation, text format and search.

mod search;

pub use search::{find_induced_minor, find_minor, SearchOutcome, DEFAULT_SEARCH_BUDGET};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Minor,
    InducedMinor,
}

/// Branch sets realizing `pattern` in `host`; `branch_sets[w]` belongs to
/// pattern vertex `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub host: Graph,
    pub pattern: Graph,
    pub branch_sets: Vec<Vec<Vertex>>,
    pub kind: ModelKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    WrongBranchSetCount { expected: usize, found: usize },
    EmptyBranchSet(Vertex),
    VertexOutOfRange(Vertex),
    Overlap(Vertex, Vertex),
    NotConnected(Vertex),
    MissingAdjacency(Vertex, Vertex),
    ExtraAdjacency(Vertex, Vertex),
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::WrongBranchSetCount { expected, found } => {
                write!(f, "expected {expected} branch sets, found {found}")
            }
            ModelViolation::EmptyBranchSet(w) => write!(f, "branch set {w} is empty"),
            ModelViolation::VertexOutOfRange(v) => write!(f, "host vertex {v} out of range"),
            ModelViolation::Overlap(a, b) => write!(f, "branch sets {a} and {b} overlap"),
            ModelViolation::NotConnected(w) => write!(f, "branch set {w} not connected"),
            ModelViolation::MissingAdjacency(a, b) => write!(f, "missing adjacency {a}-{b}"),
            ModelViolation::ExtraAdjacency(a, b) => write!(f, "extra adjacency {a}-{b}"),
        }
    }
}

/// Checks every model condition; reports the first violation found.
pub fn validate_model(m: &MinorModel) -> std::result::Result<(), ModelViolation> {
    let (host, pattern) = (&m.host, &m.pattern);
    if m.branch_sets.len() != pattern.n() {
        return Err(ModelViolation::WrongBranchSetCount {
            expected: pattern.n(),
            found: m.branch_sets.len(),
        });
    }
    let mut owner = vec![usize::MAX; host.n()];
    for (w, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::EmptyBranchSet(w));
        }
        for &v in set {
            if v >= host.n() {
                return Err(ModelViolation::VertexOutOfRange(v));
            }
            if owner[v] != usize::MAX {
                return Err(ModelViolation::Overlap(owner[v], w));
            }
            owner[v] = w;
        }
    }
    for (w, set) in m.branch_sets.iter().enumerate() {
        if !host.is_connected_set(set) {
            return Err(ModelViolation::NotConnected(w));
        }
    }
    // Adjacent branch-set pairs, from the host edges.
    let mut touching = std::collections::BTreeSet::new();
    for &(u, v) in host.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            touching.insert((a.min(b), a.max(b)));
        }
    }
    for &(a, b) in pattern.edges() {
        if !touching.contains(&(a, b)) {
            return Err(ModelViolation::MissingAdjacency(a, b));
        }
    }
    if m.kind == ModelKind::InducedMinor {
        if let Some(&(a, b)) = touching.iter().find(|&&(a, b)| !pattern.has_edge(a, b)) {
            return Err(ModelViolation::ExtraAdjacency(a, b));
        }
    }
    Ok(())
}

impl MinorModel {
    /// Lines `w: u1 u2 ...`, one per pattern vertex.
    pub fn to_text(&self) -> String {
        format_branch_sets(&self.branch_sets)
    }

    /// Reads the text format; pattern vertices may appear in any order but
    /// each exactly once.
    pub fn parse(host: &Graph, pattern: &Graph, kind: ModelKind, text: &str) -> Result<Self> {
        let mut sets: Vec<Option<Vec<Vertex>>> = vec![None; pattern.n()];
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| bad("expected `v: u1 u2 ...`"))?;
            let w: usize = head.trim().parse().map_err(|_| bad("bad pattern vertex"))?;
            let slot = sets
                .get_mut(w)
                .ok_or_else(|| bad("pattern vertex out of range"))?;
            if slot.is_some() {
                return Err(bad("pattern vertex listed twice"));
            }
            let set = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad host vertex")))
                .collect::<Result<Vec<_>>>()?;
            *slot = Some(set);
        }
        let branch_sets = sets
            .into_iter()
            .enumerate()
            .map(|(w, s)| {
                s.ok_or(Error::Parse {
                    line: 0,
                    msg: format!("pattern vertex {w} missing"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MinorModel {
            host: host.clone(),
            pattern: pattern.clone(),
            branch_sets,
            kind,
        })
    }
}

pub fn format_branch_sets(sets: &[Vec<Vertex>]) -> String {
    let mut out = String::new();
    for (w, set) in sets.iter().enumerate() {
        out.push_str(&format!("{w}:"));
        for v in set {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn model(host: &Graph, pattern: &Graph, sets: Vec<Vec<usize>>, kind: ModelKind) -> MinorModel {
        MinorModel {
            host: host.clone(),
            pattern: pattern.clone(),
            branch_sets: sets,
            kind,
        }
    }

    #[test]
    fn single_vertex_pattern() {
        let g = generate(&Family::Cycle(5)).unwrap();
        let k1 = Graph::empty(1);
        assert_eq!(
            validate_model(&model(
                &g,
                &k1,
                vec![vec![0, 1, 2]],
                ModelKind::InducedMinor
            )),
            Ok(())
        );
        assert_eq!(
            validate_model(&model(&g, &k1, vec![vec![0, 2]], ModelKind::Minor)),
            Err(ModelViolation::NotConnected(0))
        );
    }

    #[test]
    fn edge_pattern() {
        let g = generate(&Family::Path(4)).unwrap();
        let p2 = generate(&Family::Path(2)).unwrap();
        assert_eq!(
            validate_model(&model(
                &g,
                &p2,
                vec![vec![1], vec![2]],
                ModelKind::InducedMinor
            )),
            Ok(())
        );
        let err = validate_model(&model(
            &g,
            &p2,
            vec![vec![0], vec![2]],
            ModelKind::InducedMinor,
        ))
        .unwrap_err();
        assert_eq!(err, ModelViolation::MissingAdjacency(0, 1));
        assert!(err.to_string().starts_with("missing adjacency"));
    }

    #[test]
    fn induced_rejects_extra_adjacency() {
        let g = generate(&Family::Cycle(4)).unwrap();
        let p3 = generate(&Family::Path(3)).unwrap();
        // Sets {1} and {2} are adjacent in the host but not in the pattern.
        let m = model(
            &g,
            &p3,
            vec![vec![1], vec![0, 3], vec![2]],
            ModelKind::InducedMinor,
        );
        assert_eq!(
            validate_model(&m),
            Err(ModelViolation::ExtraAdjacency(0, 2))
        );
        let m = MinorModel {
            kind: ModelKind::Minor,
            ..m
        };
        assert_eq!(validate_model(&m), Ok(()));
    }

    #[test]
    fn overlap_and_text() {
        let g = generate(&Family::Path(3)).unwrap();
        let p2 = generate(&Family::Path(2)).unwrap();
        let m = model(&g, &p2, vec![vec![0, 1], vec![1, 2]], ModelKind::Minor);
        assert_eq!(validate_model(&m), Err(ModelViolation::Overlap(0, 1)));
        assert_eq!(m.to_text(), "0: 0 1\n1: 1 2\n");
        let back = MinorModel::parse(&g, &p2, ModelKind::Minor, "1: 1 2\n0: 0 1\n").unwrap();
        assert_eq!(back, m);
        assert!(MinorModel::parse(&g, &p2, ModelKind::Minor, "0: 0\n").is_err());
    }
}
