//! `gdecomp`: command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain error (bad input, failed
//! validation), 2 on a usage error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gdecomp::coloring::{
    product_coloring, tree_partition_coloring, verify_clustering, EdgeColoring, ProductEmbedding,
};
use gdecomp::decomposition::{tree_partition, treewidth_bounds, DEFAULT_EXACT_BUDGET};
use gdecomp::experiment::{
    details_to_csv, emit_details, rows_to_csv, run_experiment, ExperimentConfig,
};
use gdecomp::graph::{format_edge_list, generate, parse_edge_list, Family, Graph};
use gdecomp::kpr::{extract_witness, iterated_bfs, kpr_coloring, KprParams};
use gdecomp::minors::{
    find_induced_minor, find_minor, validate_model, MinorModel, ModelKind, SearchOutcome,
    DEFAULT_SEARCH_BUDGET,
};
use gdecomp::sparsifier::{sparsify_all, ExtractStrategy};
use gdecomp::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "gdecomp",
    version,
    about = "Graph decompositions, clustered colorings and induced minors"
)]
struct Cli {
    /// Input graph (edge list); stdin when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Where to write the result; stdout when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for random families (generate) and experiments.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Each command's natural format.
    Auto,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ColorMethod {
    Kpr,
    TreePartition,
    /// The input is `H`; colors `H ⊠ P` for a path `P` of `--path-len`.
    Product,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Induced,
    Minor,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated graph, e.g. `grid(4,4)` or `random_gnp(20,0.2)`.
    Generate { family: String },
    /// Edge-color the input graph.
    Color {
        #[arg(long, value_enum, default_value_t = ColorMethod::Kpr)]
        method: ColorMethod,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, default_value_t = 4)]
        path_len: usize,
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        budget: usize,
    },
    /// Clustering report of a coloring (`u v c` lines) of the input graph.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Sparsify every color class; prints the resulting graph.
    Sparsify {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value = "greedy")]
        strategy: ExtractStrategy,
        /// Also write the staged report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Search the input graph for a pattern, or validate a given model.
    Minor {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Induced)]
        kind: Kind,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Model file (`w: u1 u2 ...` lines) to check instead of searching.
        #[arg(long)]
        validate: Option<PathBuf>,
    },
    /// Treewidth of the input: exact when small enough, else `lo..hi`.
    Treewidth {
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        budget: usize,
        /// Write the decomposition (PACE format) here.
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Run an experiment from a `key = value` config file.
    Experiment {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Override one config field, `key=value`; repeatable.
        #[arg(long = "set")]
        overrides: Vec<String>,
    },
    /// Run iterated BFSes and extract an induced `subd1(K_{p,q})` model.
    Witness {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value_t = 2)]
        h: usize,
        /// Write the recursion audit log here.
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn read_graph_file(path: &Path) -> Result<Graph> {
    parse_edge_list(&read(path)?)
}

fn input_graph(cli: &Cli) -> Result<Graph> {
    match &cli.input {
        Some(p) => read_graph_file(p),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| io_err(Path::new("<stdin>"), e))?;
            parse_edge_list(&s)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `name(params)`; a two-parameter `random_gnp` takes `--seed`.
fn parse_family(spec: &str, seed: u64) -> Result<Family> {
    let spec = spec.trim();
    if let Some(inner) = spec
        .strip_prefix("random_gnp(")
        .and_then(|s| s.strip_suffix(')'))
    {
        if inner.split(',').count() == 2 {
            return Family::from_parts("random_gnp", inner, seed);
        }
    }
    spec.parse()
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Generate { family } => emit(
            cli,
            &format_edge_list(&generate(&parse_family(family, cli.seed.unwrap_or(0))?)?),
        ),
        Command::Color {
            method,
            p,
            q,
            path_len,
            budget,
        } => {
            let g = input_graph(cli)?;
            let c = match method {
                ColorMethod::Kpr => kpr_coloring(&g, *p, *q)?.coloring,
                ColorMethod::TreePartition => tree_partition_coloring(
                    &g,
                    &tree_partition(&g, &treewidth_bounds(&g, *budget).td)?,
                )?,
                ColorMethod::Product => {
                    let path = generate(&Family::Path(*path_len))?;
                    let product = gdecomp::graph::strong_product(&g, &path);
                    product_coloring(&product, &ProductEmbedding::of_product(&g, *path_len))?
                }
            };
            emit(cli, &c.to_text())
        }
        Command::Verify { coloring } => {
            let g = input_graph(cli)?;
            let c = EdgeColoring::parse(&g, &read(coloring)?)?;
            let report = verify_clustering(&c);
            let text = if cli.format == Format::Text {
                format!(
                    "colors used: {}\nclustering: {}\n",
                    c.used_colors(),
                    report.clustering
                )
            } else {
                report.to_csv()
            };
            emit(cli, &text)
        }
        Command::Sparsify {
            coloring,
            strategy,
            report,
        } => {
            let g = input_graph(cli)?;
            let c = EdgeColoring::parse(&g, &read(coloring)?)?;
            let out = sparsify_all(&g, &c, *strategy)?;
            if let Some(path) = report {
                std::fs::write(path, out.report()).map_err(|e| io_err(path, e))?;
            }
            if cli.format == Format::Text {
                emit(cli, &out.report())
            } else {
                emit(cli, &format_edge_list(&out.output))
            }
        }
        Command::Minor {
            pattern,
            kind,
            budget,
            validate,
        } => {
            let host = input_graph(cli)?;
            let pattern = read_graph_file(pattern)?;
            let kind = match kind {
                Kind::Induced => ModelKind::InducedMinor,
                Kind::Minor => ModelKind::Minor,
            };
            if let Some(path) = validate {
                let m = MinorModel::parse(&host, &pattern, kind, &read(path)?)?;
                return match validate_model(&m) {
                    Ok(()) => emit(cli, "valid\n"),
                    Err(v) => {
                        emit(cli, &format!("invalid: {v}\n"))?;
                        Err(Error::Precondition(format!("model does not validate: {v}")))
                    }
                };
            }
            let outcome = match kind {
                ModelKind::InducedMinor => find_induced_minor(&host, &pattern, *budget),
                ModelKind::Minor => find_minor(&host, &pattern, *budget),
            };
            match outcome {
                SearchOutcome::Found(m) => emit(cli, &m.to_text()),
                SearchOutcome::Absent => emit(cli, "none\n"),
                SearchOutcome::BudgetExhausted => emit(cli, "unknown\n"),
            }
        }
        Command::Treewidth {
            budget,
            decomposition,
        } => {
            let g = input_graph(cli)?;
            let b = treewidth_bounds(&g, *budget);
            if let Some(path) = decomposition {
                std::fs::write(path, b.td.to_pace(g.n())).map_err(|e| io_err(path, e))?;
            }
            if b.is_exact() {
                emit(cli, &format!("{}\n", b.lower))
            } else {
                log::warn!("a component exceeds the exact budget {budget}; printing bounds");
                emit(cli, &format!("{}..{}\n", b.lower, b.upper))
            }
        }
        Command::Experiment { config, overrides } => {
            let mut cfg = match config {
                Some(p) => ExperimentConfig::load(p)?,
                None => ExperimentConfig::default(),
            };
            if let Some(seed) = cli.seed {
                cfg.seed = seed;
            }
            cfg.apply_overrides(overrides)?;
            let out = run_experiment(&cfg)?;
            let target = cli.output.clone().or_else(|| cfg.output.clone());
            let csv = rows_to_csv(&out.rows);
            match target {
                Some(path) => {
                    std::fs::write(&path, &csv).map_err(|e| io_err(&path, e))?;
                    emit_details(&out.details, &path)?;
                    Ok(())
                }
                None if cli.format == Format::Text => {
                    print!("{csv}\n{}", details_to_csv(&out.details));
                    Ok(())
                }
                None => {
                    print!("{csv}");
                    Ok(())
                }
            }
        }
        Command::Witness { p, q, h, log } => {
            let g = input_graph(cli)?;
            let params = KprParams::for_witness(*p, *q, *h)?;
            let tree = iterated_bfs(&g, params, None);
            if let Some(path) = log {
                std::fs::write(path, tree.audit_log()).map_err(|e| io_err(path, e))?;
            }
            match tree.witness_candidate() {
                None => emit(cli, "none\n"),
                Some(node) => {
                    let w = extract_witness(&g, &tree, node, params)?;
                    let m = w.to_model(&g);
                    validate_model(&m).map_err(|v| {
                        Error::Precondition(format!("witness does not validate: {v}"))
                    })?;
                    emit(cli, &m.to_text())
                }
            }
        }
    }
}
