//! Command-line front end: JSON inputs in, deterministic reports out.

pub mod corpus;
pub mod report;
pub mod runner;
pub mod schema;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::groebner::with_step_budget;
use crate::ring::MonomialOrder;
pub use report::{CheckEntry, Report, Status};
pub use runner::{run_item, run_verify, RunOptions, THEOREMS};
use schema::{from_json, CorpusItem};

#[derive(Debug, Parser)]
#[command(name = "semismooth", version, about = "Pushouts, T1 and double covers over Q")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Monomial order overriding the input files (grevlex, lex, block:k).
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Degree bound for the pushout generator search.
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
    /// Maximum reduction steps per Groebner computation.
    #[arg(long, global = true)]
    pub step_budget: Option<u64>,
    /// Print reports as JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Print reports as text (default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Seed for randomized checks; the bundled checks are deterministic and ignore it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Omega, T, T1 and the singular subscheme of a ring.
    T1 { file: PathBuf },
    /// Pushout of a gluing datum and the semi-smoothness checks.
    Glue { file: PathBuf },
    /// Double-cover checks.
    Cover { file: PathBuf },
    /// Checks on a family over the t-line.
    Family { file: PathBuf },
    /// Degree identities on P1 for deg N = m.
    P1 {
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Runs the checks of one theorem on a bundled item (or a corpus-item file).
    Verify { theorem: String, item: String },
    /// The bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    /// Runs every item, or the named ones.
    Run { names: Vec<String> },
    /// Lists the bundled items.
    List,
}

impl GlobalArgs {
    fn options(&self) -> Result<RunOptions> {
        let order = self.order.as_deref().map(MonomialOrder::parse).transpose()?;
        Ok(RunOptions { order, degree_bound: self.degree_bound })
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn file_item(kind: &str, path: &PathBuf) -> Result<CorpusItem> {
    let text = read(path)?;
    let payload: serde_json::Value =
        from_json(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(CorpusItem { name, kind: kind.into(), payload, expected: vec![], expected_failures: vec![] })
}

/// A bundled item by name, or a corpus-item JSON file.
fn lookup(item: &str) -> Result<CorpusItem> {
    if let Some(i) = corpus::find(item)? {
        return Ok(i);
    }
    let path = PathBuf::from(item);
    if path.exists() {
        return from_json(&read(&path)?);
    }
    Err(Error::Input(format!("unknown item `{item}`; try `corpus list`")))
}

/// Outcome of one item: its report and exit status.
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

fn outcome(item: &CorpusItem, res: Result<Report>) -> Outcome {
    match res {
        Ok(report) => {
            let code = if report.meets(&item.expected, &item.expected_failures) { 0 } else { 1 };
            Outcome { report, code }
        }
        Err(e) => {
            let mut report = Report::new(&item.name, &item.kind);
            report.error = Some(e.to_string());
            Outcome { report, code: e.exit_code() }
        }
    }
}

/// Runs a corpus item under the given options.
pub fn evaluate(item: &CorpusItem, opts: &RunOptions) -> Outcome {
    outcome(item, run_item(item, opts))
}

fn dispatch(cli: &Cli) -> Result<Vec<Outcome>> {
    let opts = cli.global.options()?;
    let single = |kind: &str, f: &PathBuf| -> Result<Vec<Outcome>> { Ok(vec![evaluate(&file_item(kind, f)?, &opts)]) };
    match &cli.command {
        Command::T1 { file } => single("hypersurface", file),
        Command::Glue { file } => single("gluing", file),
        Command::Cover { file } => single("cover", file),
        Command::Family { file } => single("family", file),
        Command::P1 { m } => {
            let item = CorpusItem {
                name: format!("p1-m{m}"),
                kind: "p1".into(),
                payload: serde_json::json!({ "m": m }),
                expected: vec![],
                expected_failures: vec![],
            };
            Ok(vec![evaluate(&item, &opts)])
        }
        Command::Verify { theorem, item } => {
            if !THEOREMS.contains(&theorem.as_str()) {
                return Err(Error::Input(format!("unknown theorem `{theorem}`; known: {}", THEOREMS.join(", "))));
            }
            let it = lookup(item)?;
            let res = run_verify(theorem, &it, &opts);
            let expected = if it.expected_failures.iter().any(|p| p.starts_with(theorem.as_str())) {
                CorpusItem { expected: vec![], ..it.clone() }
            } else {
                CorpusItem { expected: vec![theorem.clone()], expected_failures: vec![], ..it.clone() }
            };
            Ok(vec![outcome(&expected, res)])
        }
        Command::Corpus { action: CorpusAction::List } => Ok(vec![]),
        Command::Corpus { action: CorpusAction::Run { names } } => {
            let items = corpus::items()?;
            for n in names {
                if !items.iter().any(|i| &i.name == n) {
                    return Err(Error::Input(format!("unknown item `{n}`")));
                }
            }
            Ok(items
                .iter()
                .filter(|i| names.is_empty() || names.contains(&i.name))
                .map(|i| evaluate(i, &opts))
                .collect())
        }
    }
}

/// Runs a parsed command line, writing the reports to `out`; returns the exit status.
pub fn execute(cli: &Cli, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32 {
    if let Command::Corpus { action: CorpusAction::List } = cli.command {
        return match corpus::items() {
            Ok(items) => {
                for i in items {
                    let _ = writeln!(out, "{:<24} {}", i.name, i.kind);
                }
                0
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                e.exit_code()
            }
        };
    }
    let run = || dispatch(cli);
    let res = match cli.global.step_budget {
        Some(b) => with_step_budget(b, run),
        None => run(),
    };
    let outcomes = match res {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let reports: Vec<&Report> = outcomes.iter().map(|o| &o.report).collect();
    if cli.global.json {
        let text = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        };
        let _ = writeln!(out, "{text}");
    } else {
        for (o, r) in outcomes.iter().zip(&reports) {
            let _ = write!(out, "{}", r.to_text());
            let _ = writeln!(out, "  => {}", if o.code == 0 { "ok" } else { "FAILED" });
        }
    }
    for o in &outcomes {
        if let Some(e) = &o.report.error {
            let _ = writeln!(err, "error in {}: {e}", o.report.item);
        }
    }
    outcomes.iter().map(|o| o.code).max().unwrap_or(0)
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let cli = Cli::parse();
    execute(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
