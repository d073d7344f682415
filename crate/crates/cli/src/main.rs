use anyhow::{bail, Context, Result};
use binedge::betti::{artinian_reduction_fm, hochster_betti, socle_monomials, ArtinianQuotient};
use binedge::classify::{classify_with, consistency_check, ClassifyOptions, Engine};
use binedge::enumerate::enumerate_connected;
use binedge::graphs::{build_fm, build_g1, build_g2, build_hi, chain, decompose, emit_graph6, parse_graph, Graph};
use binedge::ideal::stanley_reisner_complex;
use binedge::linalg::DEFAULT_PRIME;
use binedge::matroid::{exchange_violation, matroid_path_theorem_check};
use binedge::report::table1_report;
use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "binedge",
    version,
    about = "Binomial edge ideals: Betti tables, level and pseudo-Gorenstein classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Monomial,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fm,
    Hi,
    G1,
    G2,
    Chain,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graphs and cross-check them against the characterization theorems.
    Classify {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        graph6: Option<String>,
        /// One graph per line, graph6 or "n; u v; ..."; blank lines and `#` comments are skipped.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "monomial")]
        engine: EngineArg,
        #[arg(long = "char", default_value_t = DEFAULT_PRIME)]
        field_char: u32,
        #[arg(long)]
        json: bool,
        /// Per-graph time limit in seconds; records that exceed it are marked incomplete.
        #[arg(long)]
        time_limit: Option<u64>,
    },
    /// Print the graded Betti table of S/J_G.
    Betti {
        #[arg(long)]
        graph6: String,
        #[arg(long, value_enum, default_value = "exact")]
        engine: EngineArg,
        #[arg(long = "char", default_value_t = DEFAULT_PRIME)]
        field_char: u32,
        #[arg(long)]
        json: bool,
    },
    /// List connected graphs up to isomorphism as canonical graph6 words.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        indecomposable: bool,
    },
    /// Count indecomposable CM, level and pseudo-Gorenstein graphs for n = 2..=max-n.
    Table1 {
        #[arg(long)]
        max_n: usize,
        #[arg(long = "char", default_value_t = DEFAULT_PRIME)]
        field_char: u32,
        /// Write the per-graph database as JSON lines.
        #[arg(long)]
        database: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Build a graph from one of the named families and print it.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated: fm `m`, hi `r,s,i`, g1/g2 `i`, chain `m1,m2,...`.
        #[arg(long)]
        params: String,
        /// Print the "n; u v; ..." edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Test the basis exchange property of the initial complex, or check the path theorem.
    Matroid {
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        graph6: Option<String>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Socle of the Artinian reduction of the initial ideal of F_m.
    Socle {
        #[arg(long)]
        m: usize,
    },
}

fn main() -> ExitCode {
    let mut out = io::stdout().lock();
    match run(Cli::parse(), &mut out) {
        Ok(code) => code,
        // A closed pipe (`binedge enumerate --n 8 | head`) is not an error.
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

const VIOLATION: u8 = 2;

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { graph6, file, engine, field_char, json, time_limit } => {
            let inputs = match (graph6, file) {
                (Some(w), _) => vec![w],
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from)
                        .collect()
                }
                (None, None) => bail!("one of --graph6 or --file is required"),
            };
            let opts = ClassifyOptions {
                engine: match engine {
                    EngineArg::Monomial => Engine::Monomial,
                    EngineArg::Exact => Engine::Exact,
                },
                field_char,
                time_limit: time_limit.map(Duration::from_secs),
                ..ClassifyOptions::default()
            };
            let mut violated = false;
            for line in inputs {
                let g = parse_graph(&line).with_context(|| format!("parsing {line:?}"))?;
                violated |= classify_one(&g, &opts, json, out)?;
            }
            Ok(if violated { ExitCode::from(VIOLATION) } else { ExitCode::SUCCESS })
        }
        Command::Betti { graph6, engine, field_char, json } => {
            let g = parse_graph(&graph6)?;
            let table = match engine {
                EngineArg::Exact => binedge::classify::exact_table(&g, field_char, None)?,
                EngineArg::Monomial => hochster_betti(&stanley_reisner_complex(&g), field_char)?,
            };
            if json {
                writeln!(out, "{}", table.to_json())?;
            } else {
                write!(out, "{table}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, indecomposable } => {
            for g in enumerate_connected(n)? {
                if !indecomposable || decompose(&g).is_indecomposable() {
                    writeln!(out, "{}", emit_graph6(&g))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { max_n, field_char, database, csv } => {
            let report = table1_report(max_n, field_char)?;
            write!(out, "{report}")?;
            if let Some(path) = database {
                fs::write(&path, report.database_jsonl()).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = csv {
                fs::write(&path, report.database_csv()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family, params, edges } => {
            let ps: Vec<usize> = params
                .split(',')
                .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad parameter {s:?}")))
                .collect::<Result<_>>()?;
            let g = match (family, ps.as_slice()) {
                (Family::Fm, &[m]) => build_fm(m)?,
                (Family::Hi, &[r, s, i]) => build_hi(r, s, i)?,
                (Family::G1, &[i]) => build_g1(i)?,
                (Family::G2, &[i]) => build_g2(i)?,
                (Family::Chain, ms) => chain(ms)?,
                _ => bail!("wrong number of parameters for this family"),
            };
            if edges {
                writeln!(out, "{}", edge_list(&g))?;
            } else {
                writeln!(out, "{}", emit_graph6(&g))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matroid { graph6, max_n } => {
            if let Some(n_max) = max_n {
                let r = matroid_path_theorem_check(n_max)?;
                writeln!(out, "graphs checked: {}", r.graphs_checked)?;
                writeln!(out, "labelings checked: {}", r.labelings_checked)?;
                for w in &r.violations {
                    writeln!(out, "violation: {w}")?;
                }
                return Ok(if r.violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(VIOLATION) });
            }
            let g = parse_graph(graph6.as_deref().unwrap_or_default())?;
            match exchange_violation(&stanley_reisner_complex(&g)) {
                None => writeln!(out, "matroid")?,
                Some(w) => writeln!(out, "not a matroid: {w}")?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Socle { m } => {
            let a = artinian_reduction_fm(m)?;
            let soc = socle_monomials(&a);
            writeln!(out, "variables: {}", a.nvars)?;
            writeln!(out, "length: {}", a.length())?;
            writeln!(out, "socle dimension: {}", soc.len())?;
            for mono in &soc {
                let d: usize = mono.iter().map(|&e| e as usize).sum();
                writeln!(out, "{} (degree {d})", ArtinianQuotient::format_monomial(mono))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn edge_list(g: &Graph) -> String {
    let mut parts = vec![g.n().to_string()];
    parts.extend(g.edges().into_iter().map(|(u, v)| format!("{u} {v}")));
    parts.join("; ")
}

/// Prints one classification; returns whether a consistency check failed.
fn classify_one(g: &Graph, opts: &ClassifyOptions, json: bool, out: &mut impl Write) -> Result<bool> {
    let rec = classify_with(g, opts)?;
    let report = consistency_check(g, opts.field_char)?;
    let violated = !report.is_consistent();
    if json {
        let mut v = serde_json::to_value(&rec)?;
        v["checks"] = serde_json::to_value(&report.checks)?;
        writeln!(out, "{}", serde_json::to_string(&v)?)?;
        return Ok(violated);
    }
    let show = |b: Option<bool>| b.map_or("?".to_string(), |b| b.to_string());
    let num = |x: Option<usize>| x.map_or("?".to_string(), |x| x.to_string());
    writeln!(out, "graph: {}", rec.canonical_word)?;
    writeln!(out, "n: {}", rec.n)?;
    writeln!(out, "engine: {}", serde_json::to_value(rec.engine)?.as_str().unwrap_or_default())?;
    writeln!(out, "complete: {}", rec.complete)?;
    writeln!(out, "indecomposable: {}", rec.indecomposable)?;
    writeln!(out, "unmixed: {}", rec.unmixed)?;
    writeln!(out, "accessible: {}", rec.accessible)?;
    writeln!(out, "CM: {}", show(rec.cm))?;
    writeln!(out, "dim: {}", rec.dim)?;
    writeln!(out, "pd: {}", num(rec.pd))?;
    writeln!(out, "reg: {}", num(rec.reg))?;
    writeln!(out, "extremal betti: {}", rec.extremal_betti.map_or("?".to_string(), |x| x.to_string()))?;
    writeln!(out, "level: {}", show(rec.level))?;
    writeln!(out, "pseudo-Gorenstein: {}", show(rec.pseudo_gorenstein))?;
    writeln!(out, "Gorenstein: {}", rec.gorenstein)?;
    writeln!(out, "cone: {}", rec.is_cone)?;
    write!(out, "{report}")?;
    writeln!(out)?;
    Ok(violated)
}
