//! `tq`: enumerate quandles and finite topologies, check compatibility,
//! classify small topological quandles.
//!
//! Exit codes: 0 success, 1 a check came out false or an expectation did
//! not match, 2 usage or input error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use topquandle::catalog;
use topquandle::compat::{
    check_coarse_on_orbits, classify, compatibility_witness, compatible_classes,
    translation_failure, verify_counterexample_with, ExpectationStatus, MAX_CLASSIFY_ORDER,
};
use topquandle::format::{self, parse_quandle, parse_topology};
use topquandle::quandle::{enumerate_quandles, MAX_ENUMERATION_ORDER};
use topquandle::topology::{enumerate_preorders, MAX_PREORDER_ENUMERATION_ORDER};
use topquandle::{Preorder, QuandleTable};

#[derive(Parser)]
#[command(name = "tq", version, about = "Finite quandles and topological quandles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List quandle tables of a given order.
    Quandles {
        #[arg(long)]
        order: usize,
        /// One canonical table per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List finite topologies (as preorders) of a given order.
    Topologies {
        #[arg(long)]
        order: usize,
        /// One canonical preorder per homeomorphism class.
        #[arg(long)]
        up_to_homeo: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether a topology is compatible with a quandle.
    Check {
        quandle: PathBuf,
        topology: PathBuf,
        /// Print both criteria and the orbit test.
        #[arg(long)]
        explain: bool,
    },
    /// List the topologies compatible with a quandle.
    Compatible {
        quandle: PathBuf,
        /// One topology per isomorphism class of topological quandles.
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify topological quandles of a given order.
    Classify {
        #[arg(long)]
        order: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the order-6 quandle with a compatible topology that is neither
    /// coarse nor discrete on an orbit.
    VerifyCounterexample {
        /// Overwrite one table entry before checking, as `row,col=value`.
        #[arg(long)]
        mutate: Option<String>,
        /// Use this topology file instead of the built-in one.
        #[arg(long)]
        topology: Option<PathBuf>,
    },
    /// Export the Hasse diagram of a topology's quotient as DOT.
    Hasse {
        topology: PathBuf,
        /// Write the DOT file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: text for stdout and the exit status.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("TQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .with_context(|| format!("TQ_THREADS must be a number, got `{value}`"))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring thread pool")?;
    }
    Ok(())
}

fn check_range(what: &str, n: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        bail!("{what} order must be in 1..={max}, got {n}")
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_quandle(path: &Path) -> Result<QuandleTable> {
    parse_quandle(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_topology(path: &Path) -> Result<Preorder> {
    parse_topology(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Quandles {
            order,
            up_to_iso,
            format,
        } => {
            check_range("quandle", order, MAX_ENUMERATION_ORDER)?;
            let list = enumerate_quandles(order, up_to_iso)?;
            Ok(Outcome::ok(match format {
                Format::Text => text_listing(list.iter().map(format::write_quandle), list.len()),
                Format::Json => {
                    let tables: Vec<_> = list.iter().map(QuandleTable::rows).collect();
                    json_string(&json!({"order": order, "count": list.len(), "quandles": tables}))
                }
            }))
        }
        Command::Topologies {
            order,
            up_to_homeo,
            format,
        } => {
            check_range("topology", order, MAX_PREORDER_ENUMERATION_ORDER)?;
            let list = enumerate_preorders(order, up_to_homeo)?;
            Ok(Outcome::ok(preorder_listing(order, &list, format)))
        }
        Command::Check {
            quandle,
            topology,
            explain,
        } => cmd_check(&read_quandle(&quandle)?, &read_topology(&topology)?, explain),
        Command::Compatible {
            quandle,
            up_to_iso,
            format,
        } => {
            let q = read_quandle(&quandle)?;
            check_range("topology", q.order(), MAX_PREORDER_ENUMERATION_ORDER)?;
            let list: Vec<Preorder> = if up_to_iso {
                compatible_classes(&q)?
                    .into_iter()
                    .map(|c| c.representative)
                    .collect()
            } else {
                topquandle::compat::compatible_topologies(&q, false)?
            };
            Ok(Outcome::ok(preorder_listing(q.order(), &list, format)))
        }
        Command::Classify { order, out } => cmd_classify(order, out.as_deref()),
        Command::VerifyCounterexample { mutate, topology } => {
            let mut rows = catalog::counterexample6().rows();
            if let Some(spec) = mutate {
                let (r, c, v) = parse_mutation(&spec)?;
                rows[r][c] = v;
            }
            let p = match topology {
                Some(path) => read_topology(&path)?,
                None => catalog::counterexample_topology(),
            };
            if p.order() != 6 {
                bail!("topology has order {}, expected 6", p.order());
            }
            let report = verify_counterexample_with(&rows, &p);
            Ok(Outcome {
                stdout: format!("{report}\n"),
                code: if report.all_passed() { 0 } else { 1 },
            })
        }
        Command::Hasse { topology, out } => {
            let dot = read_topology(&topology)?.quotient_hasse().to_dot();
            match out {
                Some(path) => {
                    write_file(&path, &dot)?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(dot)),
            }
        }
    }
}

fn json_string(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize") + "\n"
}

fn text_listing(items: impl Iterator<Item = String>, count: usize) -> String {
    let mut s = String::new();
    for item in items {
        s.push_str(&item);
        s.push('\n');
    }
    writeln!(s, "# count {count}").unwrap();
    s
}

fn preorder_listing(order: usize, list: &[Preorder], format: Format) -> String {
    match format {
        Format::Text => text_listing(list.iter().map(format::write_preorder), list.len()),
        Format::Json => {
            let rels: Vec<_> = list.iter().map(Preorder::matrix_strings).collect();
            json_string(&json!({"order": order, "count": list.len(), "preorders": rels}))
        }
    }
}

fn cmd_check(q: &QuandleTable, p: &Preorder, explain: bool) -> Result<Outcome> {
    if q.order() != p.order() {
        bail!(
            "quandle has order {} but topology has order {}",
            q.order(),
            p.order()
        );
    }
    let witness = compatibility_witness(q, p)?;
    let mut s = String::new();
    if explain {
        match &witness {
            None => writeln!(s, "monotonicity: holds").unwrap(),
            Some(w) => writeln!(s, "monotonicity: fails ({w})").unwrap(),
        }
        match translation_failure(q, p)? {
            None => writeln!(s, "translations: every R_x is a homeomorphism, every L_x is continuous").unwrap(),
            Some(t) => writeln!(s, "translations: fails ({t})").unwrap(),
        }
        let coarse = check_coarse_on_orbits(q, p)?;
        writeln!(
            s,
            "coarse on orbits: {}",
            if coarse { "yes" } else { "no" }
        )
        .unwrap();
    }
    match witness {
        None => {
            s.push_str("compatible\n");
            Ok(Outcome::ok(s))
        }
        Some(w) => {
            writeln!(s, "incompatible: {w}").unwrap();
            Ok(Outcome { stdout: s, code: 1 })
        }
    }
}

fn cmd_classify(order: usize, out: Option<&Path>) -> Result<Outcome> {
    check_range("classification", order, MAX_CLASSIFY_ORDER)?;
    let report = classify(order)?;
    if let Some(path) = out {
        write_file(path, &report.to_json())?;
    }
    let mut s = report.summary_table();
    let mismatches = report.mismatches();
    for e in &report.quandles {
        if let Some(x) = &e.expectation {
            if x.status == ExpectationStatus::AdvisoryMismatch {
                writeln!(
                    s,
                    "note: #{} computed {} where {} was stated ({})",
                    e.index, x.computed, x.expected, x.citation
                )
                .unwrap();
            }
        }
    }
    if mismatches.is_empty() {
        return Ok(Outcome::ok(s));
    }
    for e in &mismatches {
        let x = e.expectation.as_ref().expect("mismatch has expectation");
        writeln!(s, "mismatch #{}: {}", e.index, x.citation).unwrap();
        writeln!(s, "- expected {}", x.expected).unwrap();
        writeln!(s, "+ computed {}", x.computed).unwrap();
    }
    Ok(Outcome { stdout: s, code: 1 })
}

fn parse_element(token: &str) -> Result<usize> {
    let token = token.trim();
    let value = match token.parse::<usize>() {
        Ok(v) => v,
        Err(_) => {
            let mut chars = token.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => (c as u8 - b'a') as usize,
                _ => bail!("invalid element `{token}`"),
            }
        }
    };
    if value >= 6 {
        bail!("element `{token}` is outside a..f");
    }
    Ok(value)
}

/// `row,col=value`, e.g. `c,a=c`.
fn parse_mutation(spec: &str) -> Result<(usize, usize, usize)> {
    let (cell, value) = spec
        .split_once('=')
        .ok_or_else(|| anyhow!("mutation must look like `row,col=value`, got `{spec}`"))?;
    let (row, col) = cell
        .split_once(',')
        .ok_or_else(|| anyhow!("mutation must look like `row,col=value`, got `{spec}`"))?;
    Ok((parse_element(row)?, parse_element(col)?, parse_element(value)?))
}
