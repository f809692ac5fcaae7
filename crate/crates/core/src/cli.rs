//! Batch command-line frontend. Every command prints one JSON document.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::answers::ans_via_interpolation_with;
use crate::cfi::cfi_with;
use crate::error::Error;
use crate::graph::{parse_graph, Graph};
use crate::limits::Limits;
use crate::quantum::{count_dominating_sets_with, eval_quantum_with, hsew_with, normalize_quantum_with, parse_quantum};
use crate::query::{count_answers_with, minimize_with, parse_query, ConjunctiveQuery};
use crate::width::{extension_width_with, semantic_extension_width_with, treewidth_with};
use crate::witness::{build_witness_with, verify_witness_with, WitnessCertificate, WitnessOptions};
use crate::wl::wl_compare;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "wldim", version, about = "WL dimension of conjunctive queries and CFI witness pairs")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

/// Caps and output options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    /// Partial assignments a single search may visit
    #[arg(long, global = true, default_value_t = Limits::default().max_assignments,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_assignments: u64,
    /// Largest base-graph degree accepted by the CFI construction
    #[arg(long, global = true, default_value_t = Limits::default().max_cfi_degree,
          value_parser = positive)]
    pub max_cfi_degree: usize,
    /// Largest graph handed to the exact treewidth solver
    #[arg(long, global = true, default_value_t = Limits::default().max_treewidth_vertices,
          value_parser = positive)]
    pub max_treewidth_vertices: usize,
    /// Worker thread cap; all computations currently run on one thread
    #[arg(long, global = true, default_value_t = 1, value_parser = positive)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl CliConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_assignments: self.max_assignments,
            max_cfi_degree: self.max_cfi_degree,
            max_treewidth_vertices: self.max_treewidth_vertices,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semantic extension width, extension width and treewidth of a query
    Width { query: PathBuf },
    /// Counting-minimal equivalent of a query
    Minimize { query: PathBuf },
    /// Number of answers of a query in a graph
    Count {
        #[arg(long)]
        query: PathBuf,
        graph: PathBuf,
    },
    /// CFI graph of a base graph with twisted vertices
    Cfi {
        graph: PathBuf,
        /// Comma-separated twisted base vertices
        #[arg(long, value_delimiter = ',')]
        odd: Vec<usize>,
        /// Write the graph here instead of embedding it in the output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k-WL equivalence of two graphs
    Wl {
        #[arg(long)]
        k: usize,
        g1: PathBuf,
        g2: PathBuf,
    },
    /// Build a witness certificate for a query
    Witness {
        #[arg(long)]
        query: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest pattern size tried by the homomorphism oracle
        #[arg(long, default_value_t = WitnessOptions::default().oracle_bound)]
        oracle_bound: usize,
        /// Largest clone multiplicity tried
        #[arg(long, default_value_t = WitnessOptions::default().max_multiplicity, value_parser = positive)]
        max_multiplicity: usize,
    },
    /// Re-check a witness certificate
    Verify { certificate: PathBuf },
    /// Number of size-k dominating sets
    Domset {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
    },
    /// Evaluate a quantum query given as `coeff | query` lines
    QuantumEval {
        #[arg(long)]
        spec: PathBuf,
        graph: PathBuf,
    },
    /// Answer count recovered from homomorphism counts only
    Interpolate {
        #[arg(long)]
        query: PathBuf,
        graph: PathBuf,
        /// Cap on the number of interpolation points
        #[arg(long, default_value_t = 4096)]
        max_ell: usize,
    },
}

/// Runs one command. Returns the exit code and the text for stdout.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let format = cli.config.format;
    let (code, value) = match execute(&cli.command, &cli.config) {
        Ok((code, value)) => (code, value),
        Err(e) => {
            let code = if e.is_budget() { EXIT_BUDGET } else { EXIT_DOMAIN };
            (code, json!({ "error": e.to_string() }))
        }
    };
    (code, render(&value, format))
}

fn render(value: &Value, format: Format) -> String {
    match (format, value) {
        (Format::Plain, Value::Object(map)) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        _ => format!("{}\n", serde_json::to_string_pretty(value).expect("values serialise")),
    }
}

fn read(path: &Path) -> crate::Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> crate::Result<()> {
    fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> crate::Result<Graph> {
    parse_graph(&read(path)?)
}

fn load_query(path: &Path) -> crate::Result<ConjunctiveQuery> {
    parse_query(&read(path)?)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("values serialise")
}

fn execute(command: &Command, config: &CliConfig) -> crate::Result<(i32, Value)> {
    let limits = config.limits();
    let value = match command {
        Command::Width { query } => {
            let q = load_query(query)?;
            let sew = semantic_extension_width_with(&q, &limits)?;
            let ew = extension_width_with(&q, &limits)?;
            let (tw, _) = treewidth_with(q.graph(), &limits)?;
            json!({ "sew": sew, "ew": ew, "tw": tw })
        }
        Command::Minimize { query } => {
            let q = load_query(query)?;
            let core = minimize_with(&q, &limits)?;
            json!({
                "query": core.to_dsl("q"),
                "vertices": core.n(),
                "removed": q.n() - core.n(),
            })
        }
        Command::Count { query, graph } => {
            let q = load_query(query)?;
            let g = load_graph(graph)?;
            json!({ "answers": count_answers_with(&q, &g, &limits)? })
        }
        Command::Cfi { graph, odd, out } => {
            let g = load_graph(graph)?;
            let chi = cfi_with(&g, odd, &limits)?;
            let text = chi.result().to_text();
            let mut v = json!({
                "vertices": chi.result().n(),
                "edges": chi.result().edge_count(),
                "origins": to_value(&chi.sidecar()),
            });
            match out {
                Some(path) => {
                    write(path, &text)?;
                    v["out"] = json!(path.display().to_string());
                }
                None => v["graph"] = json!(text),
            }
            v
        }
        Command::Wl { k, g1, g2 } => {
            let a = load_graph(g1)?;
            let b = load_graph(g2)?;
            let cmp = wl_compare(&a, &b, *k, &limits)?;
            json!({ "equivalent": cmp.equivalent, "rounds": cmp.rounds, "histogramHash": cmp.histogram_hash })
        }
        Command::Witness {
            query,
            out,
            oracle_bound,
            max_multiplicity,
        } => {
            let q = load_query(query)?;
            let opts = WitnessOptions {
                limits,
                oracle_bound: *oracle_bound,
                max_multiplicity: *max_multiplicity,
            };
            let cert = build_witness_with(&q, &opts)?;
            let code = if cert.valid { EXIT_OK } else { EXIT_DOMAIN };
            let value = match out {
                Some(path) => {
                    write(path, &cert.to_json())?;
                    json!({
                        "status": cert.status,
                        "valid": cert.valid,
                        "sew": cert.sew,
                        "counts": cert.counts,
                        "out": path.display().to_string(),
                    })
                }
                None => to_value(&cert),
            };
            return Ok((code, value));
        }
        Command::Verify { certificate } => {
            let cert = WitnessCertificate::from_json(&read(certificate)?)?;
            let report = verify_witness_with(&cert, &limits);
            let code = if report.passed { EXIT_OK } else { EXIT_DOMAIN };
            return Ok((code, to_value(&report)));
        }
        Command::Domset { k, graph } => {
            let g = load_graph(graph)?;
            json!({ "k": k, "dominatingSets": count_dominating_sets_with(*k, &g, &limits)? })
        }
        Command::QuantumEval { spec, graph } => {
            let raw = parse_quantum(&read(spec)?)?;
            let q = normalize_quantum_with(raw, &limits)?;
            let g = load_graph(graph)?;
            let value = eval_quantum_with(&q, &g, &limits)?;
            let hsew = if q.is_empty() { None } else { Some(hsew_with(&q, &limits)?) };
            json!({ "value": value.to_string(), "terms": q.len(), "hsew": hsew })
        }
        Command::Interpolate { query, graph, max_ell } => {
            let q = load_query(query)?;
            let g = load_graph(graph)?;
            json!({ "answers": ans_via_interpolation_with(&q, &g, *max_ell, &limits)? })
        }
    };
    Ok((EXIT_OK, value))
}
