//! Command-line front end. [`run`] never prints; it returns the JSON payload,
//! the diagnostics and the exit code so the binary stays a thin shim.
//!
//! Exit codes: 0 ok or found, 1 usage error, 2 validation failure, 3 nothing
//! exists, 4 budget or limit exceeded.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::duality::dual;
use crate::export::{to_dot, to_graphml};
use crate::fixtures;
use crate::generator::{generate_document, GenConfig, StartGraph};
use crate::map::{validate, PlaneMultigraph};
use crate::partition::{
    dual_cycle_to_partition, partition_to_dual_cycle, Bipartition, Condition, ConditionChecker,
    HamiltonCycleCertificate, PartitionError,
};
use crate::pmap::{parse, serialize};
use crate::solver::{
    enumerate_dual_hamilton_cycles, enumerate_tree_partitions, find_tree_partition, OracleError,
    Pruning, SearchConfig, SearchResult, VertexOrder,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NONE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json(code: i32, payload: &impl Serialize) -> Self {
        let stdout = serde_json::to_string(payload).expect("payload serializes") + "\n";
        CommandResult { code, stdout, stderr: String::new() }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.stderr = note.into();
        if !self.stderr.ends_with('\n') {
            self.stderr.push('\n');
        }
        self
    }

    fn usage(message: impl Into<String>) -> Self {
        let message = message.into();
        CommandResult::json(EXIT_USAGE, &json!({ "error": "usage", "message": message }))
            .with_note(message)
    }
}

#[derive(Debug, Parser)]
#[command(name = "dualham", version, about = "Tree-tree bipartitions and dual Hamilton cycles of plane multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Input,
    Degree,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PruningArg {
    Full,
    Cycles,
    Off,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StartArg {
    D2,
    C3,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Graphml,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a map is a loopless 2-connected plane multigraph.
    Validate {
        /// pmap file, or `fixture:<name>` for a shipped instance
        #[arg(long)]
        graph: String,
    },
    /// List facial cycles.
    Faces {
        #[arg(long)]
        graph: String,
    },
    /// Emit the dual and its edge correspondence.
    Dual {
        #[arg(long)]
        graph: String,
        /// Also write the dual pmap document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the four conditions for a bipartition.
    Check {
        #[arg(long)]
        graph: String,
        /// Vertices of S, comma separated.
        #[arg(long = "S")]
        s: String,
        /// all, 1, 2, 3 or 4
        #[arg(long, default_value = "all")]
        condition: String,
    },
    /// Convert between a bipartition and a dual Hamilton cycle.
    Convert {
        #[arg(long)]
        graph: String,
        #[arg(long, conflicts_with = "to_partition", requires = "s")]
        to_cycle: bool,
        #[arg(long, requires = "cycle")]
        to_partition: bool,
        #[arg(long = "S")]
        s: Option<String>,
        /// `face:edge,face:edge,...`
        #[arg(long)]
        cycle: Option<String>,
    },
    /// Search for a tree-tree bipartition.
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Input)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = PruningArg::Full)]
        pruning: PruningArg,
    },
    /// Count tree-tree bipartitions and dual Hamilton cycles exhaustively.
    Enumerate {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        limit: Option<usize>,
        /// Include the partitions and certificates themselves.
        #[arg(long)]
        list: bool,
    },
    /// Generate a seeded random instance.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        steps: usize,
        /// Relative weights of parallel, chord, subdivide moves.
        #[arg(long, default_value = "1,1,1")]
        weights: String,
        #[arg(long, value_enum, default_value_t = StartArg::D2)]
        start: StartArg,
        /// Also write the pmap document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render as DOT or GraphML.
    Export {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Also write the document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Loads `fixture:<name>` or a pmap file and validates it.
fn load_graph(source: &str) -> Result<PlaneMultigraph, CommandResult> {
    let text = match source.strip_prefix("fixture:") {
        Some(name) => fixtures::document(name)
            .map(str::to_string)
            .ok_or_else(|| CommandResult::usage(format!("no fixture named `{name}`")))?,
        None => fs::read_to_string(source)
            .map_err(|e| CommandResult::usage(format!("cannot read {source}: {e}")))?,
    };
    let map = parse(&text).map_err(|e| {
        CommandResult::json(
            EXIT_INVALID,
            &json!({ "verdict": "ParseError", "witness": { "line": e.line, "message": e.kind.to_string() } }),
        )
        .with_note(format!("{source}: {e}"))
    })?;
    validate(map).map_err(|e| CommandResult::json(EXIT_INVALID, &e).with_note(format!("{source}: {e}")))
}

fn parse_vertex_list(text: &str) -> Result<Vec<usize>, CommandResult> {
    text.split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CommandResult::usage(format!("`{t}` is not a vertex id (use e.g. 0,2,5)")))
        })
        .collect()
}

fn parse_bipartition(g: &PlaneMultigraph, text: &str) -> Result<Bipartition, CommandResult> {
    let s = parse_vertex_list(text)?;
    Bipartition::new(g.n_vertices(), s).map_err(|e| CommandResult::usage(e.to_string()))
}

fn write_side_file(out: &Option<PathBuf>, text: &str) -> Result<(), CommandResult> {
    if let Some(path) = out {
        fs::write(path, text)
            .map_err(|e| CommandResult::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct EnumerateReport {
    partitions: usize,
    dual_hamilton_cycles: usize,
    equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition_list: Option<Vec<Bipartition>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<Vec<String>>,
}

fn dispatch(command: Command) -> Result<CommandResult, CommandResult> {
    Ok(match command {
        Command::Validate { graph } => {
            let g = load_graph(&graph)?;
            CommandResult::json(
                EXIT_OK,
                &json!({ "verdict": "ok", "vertices": g.n_vertices(), "edges": g.n_edges(), "faces": g.n_faces() }),
            )
        }
        Command::Faces { graph } => {
            let g = load_graph(&graph)?;
            CommandResult::json(EXIT_OK, &json!({ "faces": g.faces() }))
        }
        Command::Dual { graph, out } => {
            let g = load_graph(&graph)?;
            let pair = dual(&g);
            let text = serialize(&pair.dual);
            write_side_file(&out, &text)?;
            let correspondence: serde_json::Map<String, Value> =
                pair.correspondence().map(|(a, b)| (a.to_string(), json!(b))).collect();
            CommandResult::json(EXIT_OK, &json!({ "pmap": text, "correspondence": correspondence }))
        }
        Command::Check { graph, s, condition } => {
            let g = load_graph(&graph)?;
            let p = parse_bipartition(&g, &s)?;
            let which: Vec<Condition> = if condition == "all" {
                Condition::ALL.to_vec()
            } else {
                let c = condition
                    .parse::<u8>()
                    .ok()
                    .and_then(Condition::from_number)
                    .ok_or_else(|| CommandResult::usage(format!("unknown condition `{condition}`")))?;
                vec![c]
            };
            let checker = ConditionChecker::new(&g);
            let mut payload = serde_json::Map::new();
            for c in which {
                let ok = checker.check(&p, c).map_err(|e| CommandResult::usage(e.to_string()))?;
                payload.insert(c.number().to_string(), json!(ok));
            }
            CommandResult::json(EXIT_OK, &payload)
        }
        Command::Convert { graph, to_cycle, to_partition, s, cycle } => {
            let g = load_graph(&graph)?;
            if to_cycle {
                let p = parse_bipartition(&g, s.as_deref().unwrap_or_default())?;
                match partition_to_dual_cycle(&g, &p) {
                    Ok(cert) => CommandResult::json(
                        EXIT_OK,
                        &json!({ "certificate": cert.to_string(), "cycle": cert }),
                    ),
                    Err(PartitionError::ConditionViolated(clause)) => CommandResult::json(
                        EXIT_NONE,
                        &json!({ "error": "ConditionViolated", "violation": clause }),
                    )
                    .with_note(format!("condition 1 fails: {clause}")),
                    Err(e) => return Err(CommandResult::usage(e.to_string())),
                }
            } else if to_partition {
                let text = cycle.unwrap_or_default();
                let parsed = text.parse::<HamiltonCycleCertificate>();
                match parsed.and_then(|cert| dual_cycle_to_partition(&g, &cert)) {
                    Ok(p) => CommandResult::json(EXIT_OK, &p),
                    Err(e) => CommandResult::json(
                        EXIT_INVALID,
                        &json!({ "error": "InvalidCertificate", "message": e.to_string() }),
                    )
                    .with_note(e.to_string()),
                }
            } else {
                return Err(CommandResult::usage("convert needs --to-cycle or --to-partition"));
            }
        }
        Command::Solve { graph, budget, workers, order, pruning } => {
            let g = load_graph(&graph)?;
            if budget == Some(0) || workers == 0 {
                return Err(CommandResult::usage("--budget and --workers must be positive"));
            }
            let cfg = SearchConfig {
                order: match order {
                    OrderArg::Input => VertexOrder::Input,
                    OrderArg::Degree => VertexOrder::DegreeDescending,
                },
                budget,
                pruning: match pruning {
                    PruningArg::Full => Pruning::Full,
                    PruningArg::Cycles => Pruning::CyclesOnly,
                    PruningArg::Off => Pruning::Off,
                },
                workers,
                ..Default::default()
            };
            let outcome = find_tree_partition(&g, &cfg);
            match outcome.result {
                SearchResult::Found(p) => {
                    let cert = partition_to_dual_cycle(&g, &p).expect("tree-tree bipartition");
                    CommandResult::json(
                        EXIT_OK,
                        &json!({ "result": "Found", "partition": p, "certificate": cert.to_string(), "stats": outcome.stats }),
                    )
                }
                SearchResult::Exhausted => CommandResult::json(
                    EXIT_NONE,
                    &json!({ "result": "Exhausted", "stats": outcome.stats }),
                ),
                SearchResult::BudgetExceeded => CommandResult::json(
                    EXIT_BUDGET,
                    &json!({ "result": "BudgetExceeded", "stats": outcome.stats }),
                ),
            }
        }
        Command::Enumerate { graph, limit, list } => {
            let g = load_graph(&graph)?;
            let partitions = match enumerate_tree_partitions(&g, limit) {
                Ok(p) => p,
                Err(e @ OracleError::LimitExceeded { limit }) => {
                    return Ok(CommandResult::json(
                        EXIT_BUDGET,
                        &json!({ "error": "LimitExceeded", "limit": limit }),
                    )
                    .with_note(e.to_string()))
                }
                Err(e) => return Err(CommandResult::usage(e.to_string())),
            };
            let cycles = enumerate_dual_hamilton_cycles(&g);
            let report = EnumerateReport {
                partitions: partitions.len(),
                dual_hamilton_cycles: cycles.len(),
                equal: partitions.len() == cycles.len(),
                partition_list: list.then(|| partitions.clone()),
                certificates: list.then(|| cycles.iter().map(|c| c.to_string()).collect()),
            };
            CommandResult::json(EXIT_OK, &report)
        }
        Command::Generate { seed, steps, weights, start, out } => {
            let parsed: Vec<f64> = weights
                .split(',')
                .map(|t| t.parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| CommandResult::usage(format!("bad --weights `{weights}`")))?;
            let weights: [f64; 3] = parsed
                .try_into()
                .map_err(|_| CommandResult::usage("--weights needs exactly three values"))?;
            let cfg = GenConfig {
                seed,
                steps,
                weights,
                start: match start {
                    StartArg::D2 => StartGraph::D2,
                    StartArg::C3 => StartGraph::C3,
                },
            };
            let doc = generate_document(&cfg).map_err(|e| CommandResult::usage(e.to_string()))?;
            write_side_file(&out, &doc)?;
            CommandResult::json(EXIT_OK, &json!({ "seed": seed, "steps": steps, "pmap": doc }))
        }
        Command::Export { graph, format, out } => {
            let g = load_graph(&graph)?;
            let (name, doc) = match format {
                FormatArg::Dot => ("dot", to_dot(&g)),
                FormatArg::Graphml => ("graphml", to_graphml(&g)),
            };
            write_side_file(&out, &doc)?;
            CommandResult::json(EXIT_OK, &json!({ "format": name, "document": doc }))
        }
    })
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandResult { code: EXIT_OK, stdout: String::new(), stderr: e.render().to_string() }
                }
                _ => CommandResult::usage(e.render().to_string()),
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|r| r)
}
