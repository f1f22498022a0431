//! Contraction–uncontraction sparsification.
//!
//! For one color class `F`: contract the components of `(V(G), F)`, pick a
//! subcubic subgraph `H` of the contracted graph, and keep in each part
//! only the endpoints of `H`'s edges plus a minimal connector. The kept
//! vertices induce `G'`, in which every vertex meets at most three edges
//! of `F`. Iterating over all classes bounds the maximum degree by `3h`.

mod extract;

pub use extract::{
    extract_subcubic, ExtractStrategy, SubcubicExtraction, WidthEstimate, EXACT_SMALL_LIMIT,
    WALL_SEARCH_BUDGET,
};

use std::fmt::Write as _;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{contract_partition, normalize, Edge, Graph, Vertex, VertexPartition};
use crate::minors::{validate_model, MinorModel, ModelKind};

/// Components of `(V(g), f)`, ordered by smallest vertex.
pub fn color_components(g: &Graph, f: &[Edge]) -> Result<VertexPartition> {
    let sub = g.spanning_subgraph(&dedup(f))?;
    VertexPartition::new(g.n(), sub.components())
}

fn dedup(f: &[Edge]) -> Vec<Edge> {
    let mut f: Vec<Edge> = f.iter().map(|&(u, v)| normalize(u, v)).collect();
    f.sort_unstable();
    f.dedup();
    f
}

/// What survives of one part of the partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeptPart {
    /// Index of the part, i.e. the vertex of the contracted graph.
    pub part: usize,
    /// Endpoints of the extracted edges leaving the part (or its smallest
    /// vertex if there are none).
    pub terminals: Vec<Vertex>,
    /// Sorted minimal connected superset of the terminals within the part.
    pub vertices: Vec<Vertex>,
}

/// Every stage of one sparsification, for inspection and reporting.
#[derive(Clone, Debug)]
pub struct SparsifyTrace {
    pub input: Graph,
    /// The color class (sorted, normalized).
    pub f: Vec<Edge>,
    pub partition: VertexPartition,
    pub contracted: Graph,
    pub extraction: SubcubicExtraction,
    /// One entry per vertex of the extracted subgraph, in its order.
    pub kept: Vec<KeptPart>,
    /// `input` induced on the kept vertices, relabelled densely.
    pub output: Graph,
    /// `output_vertices[i]` is the input label of output vertex `i`.
    pub output_vertices: Vec<Vertex>,
}

impl SparsifyTrace {
    /// Largest number of `f`-edges at one vertex of the output.
    pub fn f_degree_max(&self) -> usize {
        f_degrees(&self.output, &self.output_vertices, &self.f)
            .into_iter()
            .max()
            .unwrap_or(0)
    }

    /// The extracted subgraph as a minor of the output, with the kept
    /// parts as branch sets.
    pub fn model(&self) -> MinorModel {
        let mut inv = vec![usize::MAX; self.input.n()];
        for (i, &v) in self.output_vertices.iter().enumerate() {
            inv[v] = i;
        }
        let branch_sets = self
            .kept
            .iter()
            .map(|k| k.vertices.iter().map(|&v| inv[v]).collect())
            .collect();
        MinorModel {
            host: self.output.clone(),
            pattern: self.extraction.graph().0,
            branch_sets,
            kind: ModelKind::Minor,
        }
    }

    /// Staged text report: sizes and degrees after each step.
    pub fn report(&self) -> String {
        let mut out = String::new();
        let g = &self.input;
        let _ = writeln!(
            out,
            "input: |V| {}, |E| {}, max degree {}, |F| {}",
            g.n(),
            g.m(),
            g.max_degree(),
            self.f.len()
        );
        let _ = writeln!(
            out,
            "partition: {} parts, max part size {}",
            self.partition.len(),
            self.partition.max_part_size()
        );
        let c = &self.contracted;
        let _ = writeln!(
            out,
            "contracted: |V| {}, |E| {}, max degree {}",
            c.n(),
            c.m(),
            c.max_degree()
        );
        let x = &self.extraction;
        let _ = writeln!(
            out,
            "extraction: strategy {}{}, |V| {}, |E| {}, max degree {}, width {}{}",
            x.strategy,
            if x.strategy != x.requested {
                format!(" (fallback from {})", x.requested)
            } else {
                String::new()
            },
            x.vertices.len(),
            x.edges.len(),
            x.max_degree(),
            x.width,
            if x.exhaustive { "" } else { ", search capped" }
        );
        let _ = writeln!(
            out,
            "kept: max part size {}, max terminals {}",
            self.kept
                .iter()
                .map(|k| k.vertices.len())
                .max()
                .unwrap_or(0),
            self.kept
                .iter()
                .map(|k| k.terminals.len())
                .max()
                .unwrap_or(0)
        );
        let o = &self.output;
        let _ = writeln!(
            out,
            "output: |V| {}, |E| {}, max degree {}, max F-degree {}",
            o.n(),
            o.m(),
            o.max_degree(),
            self.f_degree_max()
        );
        out
    }
}

fn f_degrees(sub: &Graph, map: &[Vertex], f: &[Edge]) -> Vec<usize> {
    let mut deg = vec![0usize; sub.n()];
    for &(a, b) in sub.edges() {
        if f.binary_search(&normalize(map[a], map[b])).is_ok() {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    deg
}

/// Checks that `sub` (with labels `map` into `g`) is the subgraph of `g`
/// induced on `map`: same vertices, exactly the edges of `g` among them.
pub fn check_induced(g: &Graph, sub: &Graph, map: &[Vertex]) -> Result<()> {
    if map.len() != sub.n()
        || map.windows(2).any(|w| w[0] >= w[1])
        || map.last().is_some_and(|&v| v >= g.n())
    {
        return Err(Error::SparsifyInvariant(
            "vertex map is not a sorted subset of the host".into(),
        ));
    }
    for a in sub.vertices() {
        for b in a + 1..sub.n() {
            if sub.has_edge(a, b) != g.has_edge(map[a], map[b]) {
                return Err(Error::SparsifyInvariant(format!(
                    "edge {}-{} differs between the host and the subgraph",
                    map[a], map[b]
                )));
            }
        }
    }
    Ok(())
}

/// One round of contraction, extraction and uncontraction for class `f`.
pub fn sparsify_once(g: &Graph, f: &[Edge], strategy: ExtractStrategy) -> Result<SparsifyTrace> {
    let f = dedup(f);
    let partition = color_components(g, &f)?;
    let contracted = contract_partition(g, &partition)?;
    let extraction = extract_subcubic(&contracted, strategy)?;

    let mut terminals: Vec<Vec<Vertex>> = vec![Vec::new(); contracted.n()];
    for &(x, y) in &extraction.edges {
        let (u, v) = partition.parts()[x]
            .iter()
            .flat_map(|&u| {
                g.neighbors(u)
                    .iter()
                    .filter(|&&v| partition.part_of(v) == y)
                    .map(move |&v| (u, v))
            })
            .min()
            .expect("contracted edge joins its parts");
        terminals[x].push(u);
        terminals[y].push(v);
    }
    let mut kept = Vec::with_capacity(extraction.vertices.len());
    for &x in &extraction.vertices {
        let part = &partition.parts()[x];
        let mut ts = std::mem::take(&mut terminals[x]);
        ts.sort_unstable();
        ts.dedup();
        if ts.is_empty() {
            ts.push(part[0]);
        }
        let vertices = minimal_connector(g, part, &ts);
        kept.push(KeptPart {
            part: x,
            terminals: ts,
            vertices,
        });
    }
    let keep: Vec<Vertex> = kept
        .iter()
        .flat_map(|k| k.vertices.iter().copied())
        .collect();
    let (output, output_vertices) = g.induced_subgraph(&keep);
    let trace = SparsifyTrace {
        input: g.clone(),
        f,
        partition,
        contracted,
        extraction,
        kept,
        output,
        output_vertices,
    };
    check_trace(&trace)?;
    Ok(trace)
}

/// Drops non-terminal vertices, smallest first and in repeated passes,
/// while the rest stays connected. The result is inclusion-minimal.
fn minimal_connector(g: &Graph, part: &[Vertex], terminals: &[Vertex]) -> Vec<Vertex> {
    let mut cur = part.to_vec();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            let v = cur[i];
            if terminals.binary_search(&v).is_err() {
                let rest: Vec<Vertex> = cur.iter().copied().filter(|&w| w != v).collect();
                if g.is_connected_set(&rest) {
                    cur = rest;
                    changed = true;
                    continue;
                }
            }
            i += 1;
        }
        if !changed {
            return cur;
        }
    }
}

fn check_trace(t: &SparsifyTrace) -> Result<()> {
    let fail = |msg: String| Err(Error::SparsifyInvariant(msg));
    check_induced(&t.input, &t.output, &t.output_vertices)?;
    for k in &t.kept {
        if !t.input.is_connected_set(&k.vertices) {
            return fail(format!("kept part {} is not connected", k.part));
        }
        if k.terminals.len() > 3 {
            return fail(format!(
                "part {} has {} terminals",
                k.part,
                k.terminals.len()
            ));
        }
        for &v in &k.vertices {
            let inside = t
                .input
                .neighbors(v)
                .iter()
                .filter(|w| k.vertices.binary_search(w).is_ok())
                .count();
            if inside > 3 {
                return fail(format!(
                    "vertex {v} has {inside} neighbours in its kept part"
                ));
            }
        }
    }
    let fmax = t.f_degree_max();
    if fmax > 3 {
        return fail(format!("a vertex meets {fmax} edges of the color class"));
    }
    if let Err(v) = validate_model(&t.model()) {
        return fail(format!(
            "extracted subgraph is not a minor of the output: {v}"
        ));
    }
    Ok(())
}

/// Result of sparsifying every color class in turn.
#[derive(Clone, Debug)]
pub struct SparsifyAll {
    pub stages: Vec<SparsifyTrace>,
    pub output: Graph,
    /// `vertices[i]` is the original label of output vertex `i`.
    pub vertices: Vec<Vertex>,
    /// Number of colors of the input coloring.
    pub h: usize,
}

impl SparsifyAll {
    pub fn report(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.stages.iter().enumerate() {
            let _ = writeln!(out, "stage {i}:");
            for line in s.report().lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(
            out,
            "final: |V| {}, |E| {}, max degree {} (bound {})",
            self.output.n(),
            self.output.m(),
            self.output.max_degree(),
            3 * self.h
        );
        out
    }
}

/// Sparsifies class `i` of the surviving graph for `i = 0..h`; each stage
/// is an induced subgraph of the previous one and the result has maximum
/// degree at most `3h`.
pub fn sparsify_all(g: &Graph, c: &EdgeColoring, strategy: ExtractStrategy) -> Result<SparsifyAll> {
    if c.host() != g {
        return Err(Error::HostMismatch);
    }
    let mut current = g.clone();
    let mut vertices: Vec<Vertex> = g.vertices().collect();
    let mut stages = Vec::with_capacity(c.h());
    for i in 0..c.h() {
        let f: Vec<Edge> = current
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| c.color(vertices[a], vertices[b]) == Some(i))
            .collect();
        let trace = sparsify_once(&current, &f, strategy)?;
        check_induced(&current, &trace.output, &trace.output_vertices)?;
        vertices = trace.output_vertices.iter().map(|&v| vertices[v]).collect();
        current = trace.output.clone();
        stages.push(trace);
    }
    check_induced(g, &current, &vertices)?;
    if current.max_degree() > 3 * c.h() {
        return Err(Error::SparsifyInvariant(format!(
            "final maximum degree {} exceeds {}",
            current.max_degree(),
            3 * c.h()
        )));
    }
    Ok(SparsifyAll {
        stages,
        output: current,
        vertices,
        h: c.h(),
    })
}
