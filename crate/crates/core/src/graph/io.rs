//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let nums = parse_pair(header, hline + 1)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let (u, v) = parse_pair(line, i + 1)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if u > v {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected u < v, got {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline + 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let bad = |msg: &str| Error::Parse {
        line: lineno,
        msg: msg.to_string(),
    };
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not a nonnegative integer"))?;
    let b = b.parse().map_err(|_| bad("not a nonnegative integer"))?;
    Ok((a, b))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
