//! `annigraph`: construct finite commutative rings, build their annihilator
//! graphs, decide planarity and exact genus, and verify classification
//! claims.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 inconclusive (a search budget ran out).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use annigraph_core::classify::predict_classification;
use annigraph_core::corpus::{
    builtin_corpus, emit_report, emit_survey, parse_corpus_jsonl, run_corpus, run_survey,
    ReportFormat, VerificationReport,
};
use annigraph_core::export::{export_graph, ExportFormat};
use annigraph_core::graph::{annihilator_graph, graph_stats, zero_divisor_graph};
use annigraph_core::parse::elaborate_str;
use annigraph_core::ring::{element_classes, local_decomposition, structure_predicates};
use annigraph_core::topology::{min_genus, GenusBudget, MinGenusOutcome};

#[derive(Parser)]
#[command(name = "annigraph", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ring structure: order, units, nilpotents, local factors, prediction
    Info {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Export the annihilator graph (or the zero-divisor graph)
    Graph {
        expr: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormatArg,
        /// Export the classical zero-divisor graph instead of AG(R)
        #[arg(long)]
        zero_divisor_graph: bool,
    },
    /// Exact orientable genus of the annihilator graph
    Genus {
        expr: String,
        #[arg(long, default_value_t = 3)]
        max_genus: usize,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
        #[arg(long)]
        json: bool,
    },
    /// Verify classification claims (the built-in corpus by default)
    Verify {
        /// JSONL corpus file: one {"expr", "expected", "source"} per line
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Write the report here (.md, .csv, or .json); stdout otherwise
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
    },
    /// Consistency sweep: classification predicates vs computed genus
    Survey {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
    },
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn report_format_for(path: &Path) -> Result<ReportFormat, String> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("md") => Ok(ReportFormat::Markdown),
        Some("csv") => Ok(ReportFormat::Csv),
        Some("json") => Ok(ReportFormat::Json),
        _ => Err(format!(
            "cannot infer a report format from {}: use .md, .csv, or .json",
            path.display()
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Info { expr, json } => cmd_info(&expr, json),
        Cmd::Graph {
            expr,
            format,
            zero_divisor_graph: zdg,
        } => cmd_graph(&expr, format, zdg),
        Cmd::Genus {
            expr,
            max_genus,
            node_limit,
            json,
        } => cmd_genus(&expr, max_genus, node_limit, json),
        Cmd::Verify {
            corpus,
            report,
            node_limit,
        } => cmd_verify(corpus, report, node_limit),
        Cmd::Survey {
            max_order,
            report,
            node_limit,
        } => cmd_survey(max_order, report, node_limit),
    }
}

#[derive(Serialize)]
struct InfoOut {
    expr: String,
    order: usize,
    unit_count: usize,
    zero_divisor_count: usize,
    nonzero_zero_divisors: usize,
    nilpotents: Vec<String>,
    is_field: bool,
    is_local: bool,
    is_reduced: bool,
    local_factor_orders: Vec<usize>,
    minimal_prime_orders: Vec<usize>,
    predicted: Option<String>,
}

fn cmd_info(expr: &str, json: bool) -> ExitCode {
    let ring = match elaborate_str(expr) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let classes = element_classes(&ring);
    let s = structure_predicates(&ring);
    let mut factor_orders: Vec<usize> = local_decomposition(&ring)
        .iter()
        .map(|f| f.ring.order())
        .collect();
    factor_orders.sort_unstable();
    let predicted = predict_classification(&ring).ok().map(|p| {
        let kind = if p.planar {
            "planar"
        } else if p.toroidal {
            "toroidal"
        } else {
            "neither planar nor toroidal"
        };
        format!("{kind} ({})", p.rule)
    });
    let out = InfoOut {
        expr: expr.to_string(),
        order: ring.order(),
        unit_count: classes.units.len(),
        zero_divisor_count: classes.zero_divisors.len(),
        nonzero_zero_divisors: classes.zero_divisors.len() - 1,
        nilpotents: classes.nilpotents.iter().map(|&a| ring.label(a)).collect(),
        is_field: s.is_field,
        is_local: s.is_local,
        is_reduced: s.is_reduced,
        local_factor_orders: factor_orders,
        minimal_prime_orders: s.minimal_prime_orders,
        predicted,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("ring: {}", out.expr);
        println!("order: {}", out.order);
        println!(
            "units: {}   zero-divisors: {} ({} nonzero)",
            out.unit_count, out.zero_divisor_count, out.nonzero_zero_divisors
        );
        println!("nilpotents: [{}]", out.nilpotents.join(", "));
        println!(
            "field: {}   local: {}   reduced: {}",
            out.is_field, out.is_local, out.is_reduced
        );
        println!(
            "local factor orders: {:?}   minimal prime orders: {:?}",
            out.local_factor_orders, out.minimal_prime_orders
        );
        match &out.predicted {
            Some(p) => println!("classification: {p}"),
            None => println!("classification: not applicable (no zero-divisors)"),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_graph(expr: &str, format: GraphFormatArg, zero_divisor: bool) -> ExitCode {
    let ring = match elaborate_str(expr) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let graph = if zero_divisor {
        zero_divisor_graph(&ring)
    } else {
        annihilator_graph(&ring)
    };
    let graph = match graph {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let fmt = match format {
        GraphFormatArg::Dot => ExportFormat::Dot,
        GraphFormatArg::Json => ExportFormat::Json,
    };
    print!("{}", export_graph(&graph, fmt));
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct GenusOut {
    expr: String,
    vertices: usize,
    edges: usize,
    status: &'static str,
    genus: Option<usize>,
    genus_at_least: Option<usize>,
    faces: Option<usize>,
    rotation: Option<Vec<Vec<String>>>,
}

fn cmd_genus(expr: &str, max_genus: usize, node_limit: u64, json: bool) -> ExitCode {
    let ring = match elaborate_str(expr) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let g = match annihilator_graph(&ring) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let stats = graph_stats(&g);
    let budget = GenusBudget {
        max_genus,
        node_limit,
    };
    let outcome = min_genus(&g, budget);
    let mut exit = ExitCode::SUCCESS;
    let out = match &outcome {
        MinGenusOutcome::Exact(e) => GenusOut {
            expr: expr.to_string(),
            vertices: stats.order,
            edges: stats.size,
            status: "exact",
            genus: Some(e.genus),
            genus_at_least: None,
            faces: Some(e.faces),
            rotation: Some(
                e.rotation
                    .cyclic
                    .iter()
                    .map(|cycle| cycle.iter().map(|&v| g.label(v).to_string()).collect())
                    .collect(),
            ),
        },
        MinGenusOutcome::ExceedsMax { max_genus } => GenusOut {
            expr: expr.to_string(),
            vertices: stats.order,
            edges: stats.size,
            status: "exceeds_max",
            genus: None,
            genus_at_least: Some(*max_genus + 1),
            faces: None,
            rotation: None,
        },
        MinGenusOutcome::Exhausted { genus_at_least, .. } => GenusOut {
            expr: expr.to_string(),
            vertices: stats.order,
            edges: stats.size,
            status: "inconclusive",
            genus: None,
            genus_at_least: Some(*genus_at_least),
            faces: None,
            rotation: None,
        },
    };
    if matches!(outcome, MinGenusOutcome::Exhausted { .. }) {
        exit = ExitCode::from(3);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("ring: {}", out.expr);
        println!("vertices: {}, edges: {}", out.vertices, out.edges);
        match &outcome {
            MinGenusOutcome::Exact(e) => {
                let surface = match e.genus {
                    0 => "planar".to_string(),
                    1 => "toroidal".to_string(),
                    k => format!("embeds in the orientable surface with {k} handles"),
                };
                println!("genus: {} ({surface})", e.genus);
                println!(
                    "certificate: rotation system with {} faces (V - E + F = 2 - 2g)",
                    e.faces
                );
            }
            MinGenusOutcome::ExceedsMax { max_genus } => {
                println!("genus: > {max_genus} (every smaller genus exhaustively refuted)");
            }
            MinGenusOutcome::Exhausted { genus_at_least, .. } => {
                println!("inconclusive: node budget exhausted; genus is at least {genus_at_least}");
            }
        }
    }
    exit
}

fn write_or_print(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn verdict_exit(report: &VerificationReport) -> ExitCode {
    if report.failed > 0 || report.errors > 0 {
        ExitCode::from(1)
    } else if report.inconclusive > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verify(corpus: Option<PathBuf>, report: Option<PathBuf>, node_limit: u64) -> ExitCode {
    let entries = match &corpus {
        None => builtin_corpus(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return input_error(format!("{}: {e}", path.display())),
            };
            match parse_corpus_jsonl(&text) {
                Ok(es) => es,
                Err(e) => return input_error(e),
            }
        }
    };
    let budget = GenusBudget {
        max_genus: 3,
        node_limit,
    };
    let result = run_corpus(&entries, budget);
    let format = match &report {
        Some(p) => match report_format_for(p) {
            Ok(f) => f,
            Err(e) => return input_error(e),
        },
        None => ReportFormat::Markdown,
    };
    let rendered = emit_report(&result, format);
    if let Err(e) = write_or_print(report.as_deref(), &rendered) {
        return input_error(e);
    }
    if report.is_some() {
        println!(
            "{} entries: {} pass, {} fail, {} inconclusive, {} errors",
            result.results.len(),
            result.passed,
            result.failed,
            result.inconclusive,
            result.errors
        );
    }
    verdict_exit(&result)
}

fn cmd_survey(max_order: usize, report: Option<PathBuf>, node_limit: u64) -> ExitCode {
    let survey = match run_survey(max_order, node_limit) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let format = match &report {
        Some(p) => match report_format_for(p) {
            Ok(f) => f,
            Err(e) => return input_error(e),
        },
        None => ReportFormat::Markdown,
    };
    let rendered = emit_survey(&survey, format);
    if let Err(e) = write_or_print(report.as_deref(), &rendered) {
        return input_error(e);
    }
    if report.is_some() {
        println!(
            "{} rings: {} mismatches, {} inconclusive",
            survey.rows.len(),
            survey.mismatches,
            survey.inconclusive
        );
    }
    if survey.mismatches > 0 {
        ExitCode::from(1)
    } else if survey.inconclusive > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
