//! Experiment configuration, pipelines and CSV output.
//!
//! Each pipeline turns one graph into a [`ResultRow`] plus free-form
//! [`Detail`] records (written to a sidecar CSV). Graphs are processed in
//! parallel and rows are sorted by graph id, so output only depends on the
//! configuration.

mod bounds;
mod config;

pub use bounds::{BoundFormula, ShapeVars, CLUSTERED_COLORING, DEGREE_GRID, EXCLUDED_SUBDIVISION};
pub use config::{ColoringChoice, ExperimentConfig, Pipeline};

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::{
    product_coloring, tree_partition_coloring, verify_clustering, EdgeColoring, ProductEmbedding,
};
use crate::decomposition::{tree_partition, treewidth_bounds, TreewidthBounds};
use crate::error::{Error, Result};
use crate::graph::{generate, parse_edge_list, strong_product, Family, Graph};
use crate::kpr::{audit_monochromatic, extract_witness, iterated_bfs, kpr_coloring, KprParams};
use crate::minors::validate_model;
use crate::sparsifier::sparsify_all;

pub const CSV_HEADER: [&str; 12] = [
    "graph_id",
    "family",
    "n",
    "m",
    "delta",
    "tw_lo",
    "tw_hi",
    "colors",
    "clustering",
    "depth",
    "pipeline",
    "ms",
];
pub const DETAILS_HEADER: [&str; 3] = ["graph_id", "key", "value"];

/// One measured graph. `tw_lo == tw_hi` when the exact solver ran.
///
/// `depth` is the recursion depth for `kpr_color` and `witness`, the depth
/// of the partition tree for `tree_partition_color`, the number of
/// sparsified classes for `sparsify`/`bound_check`, and 0 otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultRow {
    pub graph_id: usize,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub tw_lo: usize,
    pub tw_hi: usize,
    pub colors: usize,
    pub clustering: usize,
    pub depth: usize,
    pub pipeline: Pipeline,
    pub ms: u128,
}

impl ResultRow {
    fn record(&self) -> [String; 12] {
        [
            self.graph_id.to_string(),
            self.family.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.delta.to_string(),
            self.tw_lo.to_string(),
            self.tw_hi.to_string(),
            self.colors.to_string(),
            self.clustering.to_string(),
            self.depth.to_string(),
            self.pipeline.to_string(),
            self.ms.to_string(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detail {
    pub graph_id: usize,
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExperimentOutput {
    pub rows: Vec<ResultRow>,
    pub details: Vec<Detail>,
}

/// Rows only; see [`run_experiment`] for the details as well.
pub fn run_pipeline(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    Ok(run_experiment(cfg)?.rows)
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    cfg.validate()?;
    let pipeline = cfg.pipeline.expect("validated");
    let graphs = load_graphs(cfg)?;
    let mut results: Vec<(ResultRow, Vec<Detail>)> = graphs
        .into_par_iter()
        .enumerate()
        .map(|(id, (label, g))| run_one(cfg, pipeline, id, label, &g))
        .collect::<Result<_>>()?;
    results.sort_by_key(|(r, _)| r.graph_id);
    let mut out = ExperimentOutput::default();
    for (row, details) in results {
        out.rows.push(row);
        out.details.extend(details);
    }
    Ok(out)
}

fn load_graphs(cfg: &ExperimentConfig) -> Result<Vec<(String, Graph)>> {
    if let Some(path) = &cfg.input {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        let label = path
            .file_stem()
            .map_or("input".into(), |s| s.to_string_lossy().into_owned());
        return Ok(vec![(label, parse_edge_list(&text)?)]);
    }
    let Some(name) = &cfg.family else {
        return Ok(Vec::new());
    };
    cfg.sizes
        .iter()
        .enumerate()
        .map(|(i, params)| {
            let family = Family::from_parts(name, params, cfg.seed.wrapping_add(i as u64))
                .map_err(|e| match e {
                    Error::InvalidParameter(msg) => Error::Config {
                        field: "sizes".into(),
                        msg,
                    },
                    other => other,
                })?;
            Ok((family.to_string(), generate(&family)?))
        })
        .collect()
}

fn bounds_of(g: &Graph, budget: usize, what: &str) -> TreewidthBounds {
    let b = treewidth_bounds(g, budget);
    if !b.is_exact() {
        log::warn!(
            "{what}: a component exceeds the exact budget {budget}; reporting treewidth bounds"
        );
    }
    b
}

struct Run {
    graph_id: usize,
    details: Vec<Detail>,
}

impl Run {
    fn note(&mut self, key: &str, value: impl ToString) {
        self.details.push(Detail {
            graph_id: self.graph_id,
            key: key.to_string(),
            value: value.to_string(),
        });
    }
}

fn run_one(
    cfg: &ExperimentConfig,
    pipeline: Pipeline,
    graph_id: usize,
    label: String,
    g: &Graph,
) -> Result<(ResultRow, Vec<Detail>)> {
    let start = Instant::now();
    let mut run = Run {
        graph_id,
        details: Vec::new(),
    };
    let mut family = label;
    // The product pipeline measures the product graph.
    let product;
    let host = if pipeline == Pipeline::ProductColor {
        product = strong_product(g, &generate(&Family::Path(cfg.path_len))?);
        family = format!("{family}*path({})", cfg.path_len);
        &product
    } else {
        g
    };
    let tw = bounds_of(host, cfg.budget, &family);
    let (colors, clustering, depth) = match pipeline {
        Pipeline::KprColor => {
            let kc = kpr_coloring(g, cfg.p, cfg.q)?;
            run.note("palette", kc.coloring.h());
            run.note("depth_exceeded", kc.depth_exceeded);
            run.note(
                "leaf_audit",
                audit_monochromatic(&kc.tree, &kc.coloring).map_or_else(|e| e, |_| "ok".into()),
            );
            (
                kc.coloring.used_colors(),
                verify_clustering(&kc.coloring).clustering,
                kc.tree.depth(),
            )
        }
        Pipeline::TreePartitionColor => {
            let tp = tree_partition(g, &tw.td)?;
            let c = tree_partition_coloring(g, &tp)?;
            let clustering = verify_clustering(&c).clustering;
            let bound = tp.width() * (g.max_degree() + 1);
            run.note("tp_width", tp.width());
            run.note("clustering_bound", bound);
            run.note("within_bound", clustering <= bound);
            (
                c.used_colors(),
                clustering,
                tp.depth.iter().copied().max().unwrap_or(0),
            )
        }
        Pipeline::ProductColor => {
            let emb = ProductEmbedding::of_product(g, cfg.path_len);
            let c = product_coloring(host, &emb)?;
            let h_tw = bounds_of(g, cfg.budget, "factor");
            let mut widest = (0, 0);
            for class in 0..c.h() {
                let b = bounds_of(&c.class_graph(class), cfg.budget, "color class");
                widest = (widest.0.max(b.lower), widest.1.max(b.upper));
            }
            run.note("factor_tw_lo", h_tw.lower);
            run.note("factor_tw_hi", h_tw.upper);
            run.note("class_tw_lo", widest.0);
            run.note("class_tw_hi", widest.1);
            run.note("class_tw_bound", 2 * h_tw.upper);
            (c.used_colors(), verify_clustering(&c).clustering, 0)
        }
        Pipeline::Sparsify | Pipeline::BoundCheck => {
            let c = coloring_for(cfg, g, &tw)?;
            let clustering = verify_clustering(&c).clustering;
            let sa = sparsify_all(g, &c, cfg.strategy)?;
            let out = &sa.output;
            run.note("out_n", out.n());
            run.note("out_m", out.m());
            run.note("out_delta", out.max_degree());
            run.note("degree_bound", 3 * c.h());
            if pipeline == Pipeline::BoundCheck {
                let tw2 = bounds_of(out, cfg.budget, "sparsified graph");
                if tw2.lower > tw.upper {
                    return Err(Error::SparsifyInvariant(format!(
                        "sparsified treewidth {} exceeds input treewidth {}",
                        tw2.lower, tw.upper
                    )));
                }
                run.note("out_tw_lo", tw2.lower);
                run.note("out_tw_hi", tw2.upper);
                run.note(
                    "ratio_lo",
                    format!("{:.4}", tw.lower as f64 / tw2.upper.max(1) as f64),
                );
                run.note(
                    "ratio_hi",
                    format!("{:.4}", tw.upper as f64 / tw2.lower.max(1) as f64),
                );
                run.note(
                    "clustering_pow_h",
                    format!("{:.0}", (clustering as f64).powi(c.h() as i32)),
                );
                let vars = ShapeVars {
                    k: tw.lower as f64,
                    delta: g.max_degree() as f64,
                    q: cfg.q as f64,
                    h: c.h() as f64,
                    c: clustering as f64,
                };
                run.note(
                    "shape_log2_clustered_coloring",
                    format!("{:.4}", CLUSTERED_COLORING.log2_shape(&vars)),
                );
            }
            (c.used_colors(), clustering, sa.stages.len())
        }
        Pipeline::Witness => {
            let params = KprParams::for_witness(cfg.p, cfg.q, 2)?;
            let tree = iterated_bfs(g, params, None);
            run.note("d", params.d);
            let outcome = match tree.witness_candidate() {
                None => "none".to_string(),
                Some(node) => match extract_witness(g, &tree, node, params) {
                    Ok(w) => match validate_model(&w.to_model(g)) {
                        Ok(()) => "found".to_string(),
                        Err(v) => format!("invalid: {v}"),
                    },
                    Err(e) => format!("failed: {e}"),
                },
            };
            run.note("witness", outcome);
            (0, 0, tree.depth())
        }
    };
    let ms = if cfg.timing {
        start.elapsed().as_millis()
    } else {
        0
    };
    let row = ResultRow {
        graph_id,
        family,
        n: host.n(),
        m: host.m(),
        delta: host.max_degree(),
        tw_lo: tw.lower,
        tw_hi: tw.upper,
        colors,
        clustering,
        depth,
        pipeline,
        ms,
    };
    Ok((row, run.details))
}

fn coloring_for(cfg: &ExperimentConfig, g: &Graph, tw: &TreewidthBounds) -> Result<EdgeColoring> {
    match cfg.coloring {
        ColoringChoice::TreePartition => tree_partition_coloring(g, &tree_partition(g, &tw.td)?),
        ColoringChoice::Kpr => Ok(kpr_coloring(g, cfg.p, cfg.q)?.coloring),
        ColoringChoice::Monochromatic => Ok(EdgeColoring::monochromatic(g)),
    }
}

fn io_err(path: &Path, e: impl ToString) -> Error {
    Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    }
}

fn to_csv<const N: usize>(header: [&str; N], records: impl Iterator<Item = [String; N]>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in records {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn rows_to_csv(rows: &[ResultRow]) -> String {
    to_csv(CSV_HEADER, rows.iter().map(ResultRow::record))
}

pub fn details_to_csv(details: &[Detail]) -> String {
    to_csv(
        DETAILS_HEADER,
        details
            .iter()
            .map(|d| [d.graph_id.to_string(), d.key.clone(), d.value.clone()]),
    )
}

/// Writes the rows as CSV with the fixed header.
pub fn emit_csv(rows: &[ResultRow], path: &Path) -> Result<()> {
    std::fs::write(path, rows_to_csv(rows)).map_err(|e| io_err(path, e))
}

/// Writes the details next to the rows, at `<stem>.details.csv`.
pub fn emit_details(details: &[Detail], rows_path: &Path) -> Result<std::path::PathBuf> {
    let path = rows_path.with_extension("details.csv");
    std::fs::write(&path, details_to_csv(details)).map_err(|e| io_err(&path, e))?;
    Ok(path)
}

/// Parses CSV produced by [`rows_to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<ResultRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse {
            line: 1,
            msg: "unexpected header".into(),
        });
    }
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        let field = |k: usize| {
            rec.get(k).ok_or_else(|| Error::Parse {
                line,
                msg: format!("missing field {k}"),
            })
        };
        let int = |k: usize| -> Result<usize> {
            field(k)?.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad integer in `{}`", CSV_HEADER[k]),
            })
        };
        rows.push(ResultRow {
            graph_id: int(0)?,
            family: field(1)?.to_string(),
            n: int(2)?,
            m: int(3)?,
            delta: int(4)?,
            tw_lo: int(5)?,
            tw_hi: int(6)?,
            colors: int(7)?,
            clustering: int(8)?,
            depth: int(9)?,
            pipeline: field(10)?.parse().map_err(|e: Error| Error::Parse {
                line,
                msg: e.to_string(),
            })?,
            ms: field(11)?.parse().map_err(|_| Error::Parse {
                line,
                msg: "bad integer in `ms`".into(),
            })?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> ExperimentConfig {
        ExperimentConfig::parse(text).unwrap()
    }

    #[test]
    fn empty_family_list_gives_header_only() {
        let rows = run_pipeline(&cfg("pipeline = kpr_color")).unwrap();
        assert!(rows.is_empty());
        assert_eq!(rows_to_csv(&rows), format!("{}\n", CSV_HEADER.join(",")));
    }

    #[test]
    fn path_tree_partition_coloring() {
        let rows = run_pipeline(&cfg(
            "family = path\nsizes = 10\npipeline = tree_partition_color",
        ))
        .unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].colors <= 3 && rows[0].clustering <= 3);
        assert_eq!(rows_to_csv(&rows).lines().count(), 2);
    }

    #[test]
    fn csv_round_trip_and_reproducibility() {
        let c = cfg(
            "family = random_gnp\nsizes = 10,0.3; 12,0.25; 9,0.5\npipeline = bound_check\nseed = 7",
        );
        let a = run_experiment(&c).unwrap();
        let b = run_experiment(&c).unwrap();
        assert_eq!(rows_to_csv(&a.rows), rows_to_csv(&b.rows));
        assert_eq!(details_to_csv(&a.details), details_to_csv(&b.details));
        assert_eq!(parse_csv(&rows_to_csv(&a.rows)).unwrap(), a.rows);
        assert_eq!(
            a.rows.iter().map(|r| r.graph_id).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn every_pipeline_runs() {
        for p in Pipeline::ALL {
            let c = cfg(&format!(
                "family = grid\nsizes = 3,4\npipeline = {p}\nq = 1"
            ));
            let out = run_experiment(&c).unwrap();
            assert_eq!(out.rows.len(), 1, "{p}");
            assert!(out.rows[0].tw_lo <= out.rows[0].tw_hi);
        }
    }

    #[test]
    fn bad_sizes_name_the_field() {
        let e = run_pipeline(&cfg("family = grid\nsizes = 3\npipeline = kpr_color")).unwrap_err();
        assert!(matches!(e, Error::Config { ref field, .. } if field == "sizes"));
    }
}
