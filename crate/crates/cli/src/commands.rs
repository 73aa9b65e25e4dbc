use std::fmt::Write as _;
use std::io::Read;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use jaco_core::{construct, LinearFunction};
use jaco_infer::infer;
use jaco_invariants::analyze;
use jaco_sequences::{bettina_dplus, ell_sequence, SequenceVariant};
use jaco_verify::{registry, verify_selected, ClaimResult, ClaimStatus, Grid};

use crate::document::GraphDocument;
use crate::error::CliError;
use crate::render;

#[derive(Debug, Parser)]
#[command(
    name = "jaco",
    version,
    about = "Build, analyse and verify finite linear Jaco graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build J_n(mx + c) and write it out.
    Generate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        /// Include the materialised arc list in json-doc output.
        #[arg(long)]
        with_arcs: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the maximum degree, Jaconian set, prime Jaconian vertex and arc count.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the out-degree sequence L(n) for n = 1..=n-max.
    Sequence {
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 0)]
        c: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Variant::Corrected)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check claims against the brute-force construction over a parameter grid.
    Verify {
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        /// Slope range, e.g. `1..5` (inclusive), `1..=5` or `3`.
        #[arg(long, value_parser = parse_range, default_value = "1..5")]
        grid_m: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range, default_value = "0..5")]
        grid_c: RangeInclusive<u64>,
        /// Graph sizes.
        #[arg(long, value_parser = parse_range, default_value = "1..500")]
        grid_n: RangeInclusive<u64>,
        /// Indices for sequence-level claims.
        #[arg(long, value_parser = parse_range, default_value = "1..10000")]
        grid_seq_n: RangeInclusive<u64>,
        #[arg(long, default_value_t = 10)]
        witness_cap: usize,
        /// Write the full JSON report here; a table is always printed.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover (m, c) from an edge list or graph document (`-` reads stdin).
    Infer {
        input: PathBuf,
        /// Vertex count; defaults to the document's n or the largest vertex in the edge list.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long, default_value_t = 0)]
    pub c: u64,
    #[arg(long)]
    pub n: u64,
    /// Allow m = 0 (constant functions).
    #[arg(long)]
    pub relaxed: bool,
}

impl GraphArgs {
    fn function(&self) -> Result<LinearFunction, CliError> {
        Ok(LinearFunction::from_parts(self.m, self.c, self.relaxed)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edges,
    Dot,
    JsonDoc,
    CsvDegrees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Corrected,
    Printed,
    /// `a_n = min{k < n : k + a_k ≥ n}`; ignores --m and --c.
    ASeries,
    /// Out-degrees of J_∞(x) from Zeckendorf representations; ignores --m and --c.
    Bettina,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

/// Accepts `a`, `a..b` and `a..=b`; both bounds are inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        None => (num(s)?, num(s)?),
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

pub fn run(cli: Cli, stdout: &mut String) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            graph,
            format,
            with_arcs,
            out,
        } => {
            let g = construct(graph.function()?, graph.n)?;
            let text = match format {
                GraphFormat::Edges => render::edge_list(&g),
                GraphFormat::Dot => render::dot(&g),
                GraphFormat::JsonDoc => GraphDocument::from_graph(&g, with_arcs).to_json(),
                GraphFormat::CsvDegrees => render::csv_degrees(&g),
            };
            emit(text, out.as_deref(), stdout)
        }
        Command::Analyze { graph, out } => {
            let g = construct(graph.function()?, graph.n)?;
            emit(to_json(&analyze(&g)), out.as_deref(), stdout)
        }
        Command::Sequence {
            m,
            c,
            n_max,
            variant,
            format,
            out,
        } => {
            let values = sequence(m, c, n_max, variant)?;
            let text = match format {
                TableFormat::Text => values.iter().zip(1..).fold(String::new(), |mut s, (v, n)| {
                    writeln!(s, "{n} {v}").unwrap();
                    s
                }),
                TableFormat::Json => {
                    let (m, c) = if matches!(variant, Variant::ASeries | Variant::Bettina) {
                        (1, 0)
                    } else {
                        (m, c)
                    };
                    to_json(&SequenceDoc {
                        m,
                        c,
                        variant: variant_name(variant),
                        n_max,
                        values,
                    })
                }
            };
            emit(text, out.as_deref(), stdout)
        }
        Command::Verify {
            claims,
            grid_m,
            grid_c,
            grid_n,
            grid_seq_n,
            witness_cap,
            out,
        } => {
            let selected = select_claims(&claims)?;
            let grid = Grid {
                m: grid_m,
                c: grid_c,
                n: grid_n,
                seq_n: grid_seq_n,
                witness_cap,
                ..Grid::default()
            };
            let results = verify_selected(&grid, |id| selected.as_ref().is_none_or(|s| s.iter().any(|x| x == id)));
            if let Some(path) = out {
                write_file(
                    &path,
                    &to_json(&VerifyReport {
                        grid: &grid,
                        results: &results,
                    }),
                )?;
            }
            stdout.push_str(&table(&results));
            Ok(())
        }
        Command::Infer { input, n, out } => {
            let text = read_input(&input)?;
            let (arcs, n) = if text.trim_start().starts_with('{') {
                let g = GraphDocument::parse(&text)?.to_graph()?;
                (g.arcs().collect::<Vec<_>>(), n.unwrap_or(g.n()))
            } else {
                let arcs = render::parse_edge_list(&text)?;
                let n = match n.or_else(|| arcs.iter().map(|&(_, j)| j).max()) {
                    Some(n) => n,
                    None => return Err(CliError::Usage("empty edge list: pass --n".into())),
                };
                (arcs, n)
            };
            emit(to_json(&infer(&arcs, n)?), out.as_deref(), stdout)
        }
    }
}

fn sequence(m: u64, c: u64, n_max: u64, variant: Variant) -> Result<Vec<u64>, CliError> {
    let core = match variant {
        Variant::Corrected => SequenceVariant::Corrected,
        Variant::Printed => SequenceVariant::Printed,
        Variant::ASeries => SequenceVariant::ASeries,
        Variant::Bettina => {
            if n_max == 0 {
                return Err(CliError::Usage("n-max must be at least 1".into()));
            }
            return (1..=n_max).map(|n| bettina_dplus(n).map_err(CliError::from)).collect();
        }
    };
    let f = match variant {
        Variant::ASeries => LinearFunction::identity(),
        _ => LinearFunction::new(m, c)?,
    };
    Ok(ell_sequence(f, n_max, core)?.values.split_off(1))
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Corrected => "corrected",
        Variant::Printed => "printed",
        Variant::ASeries => "a-series",
        Variant::Bettina => "bettina",
    }
}

#[derive(Serialize)]
struct SequenceDoc {
    m: u64,
    c: u64,
    variant: &'static str,
    n_max: u64,
    /// Values for n = 1..=n_max.
    values: Vec<u64>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    grid: &'a Grid,
    results: &'a [ClaimResult],
}

fn select_claims(selector: &str) -> Result<Option<Vec<String>>, CliError> {
    if selector.trim() == "all" {
        return Ok(None);
    }
    let known: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let ids: Vec<String> = selector
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if ids.is_empty() {
        return Err(CliError::Usage("no claims selected".into()));
    }
    if let Some(bad) = ids.iter().find(|id| !known.contains(&id.as_str())) {
        return Err(CliError::Usage(format!("unknown claim `{bad}`")));
    }
    Ok(Some(ids))
}

fn table(results: &[ClaimResult]) -> String {
    let width = results.iter().map(|r| r.id.len()).max().unwrap_or(5).max(5);
    let mut s = format!("{:<width$}  {:<18}  {:>10}  detail\n", "claim", "status", "points");
    for r in results {
        let detail = match (r.witnesses.first(), &r.reason) {
            (Some(w), _) => w.to_string(),
            (None, Some(reason)) => reason.clone(),
            (None, None) => String::new(),
        };
        let status = if r.report_only {
            format!("{} *", r.status)
        } else {
            r.status.to_string()
        };
        writeln!(
            s,
            "{:<width$}  {:<18}  {:>10}  {detail}",
            r.id, status, r.grid.points_checked
        )
        .unwrap();
    }
    let count = |st: ClaimStatus| results.iter().filter(|r| r.status == st).count();
    writeln!(
        s,
        "{} claims: {} verified, {} counterexample, {} not applicable (* report only)",
        results.len(),
        count(ClaimStatus::VerifiedOnGrid),
        count(ClaimStatus::Counterexample),
        count(ClaimStatus::NotApplicable)
    )
    .unwrap();
    s
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
}

fn emit(text: String, out: Option<&Path>, stdout: &mut String) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, &text),
        None => {
            stdout.push_str(&text);
            Ok(())
        }
    }
}
