//! Command-line front end and the text formats it speaks.
//!
//! Every failure is reported on stderr as a single line starting with an
//! error code (`SyntaxError`, `DocumentError`, `Condition1Violation`,
//! `Condition2Violation`, `Condition3Violation`, `WeightError`,
//! `NonConvergence`, `IoError`) followed by `: ` and a description, and the
//! process exits with status 2. `equal` exits 0 when the terms are
//! equivalent and 1 when they are not.

pub mod document;
pub mod dot;
pub mod syntax;
pub mod weights;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::canon;
use crate::flow::FlowGraph;
use crate::paths::{semiring_paths, PathError, PathMap, SemiringKind};
use crate::term::EdgeTerm;

pub use document::{flow_from_doc, flow_from_text, flow_to_doc, DocumentError, FlowDocument};
pub use dot::export_dot;
pub use syntax::{parse_expr, render_expr, render_label, SyntaxError};
pub use weights::{WeightError, WeightTable};

/// Exit status for reported errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "edgegraph", version, about = "Edge graph algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the flow document of an expression
    Eval { expr: String },
    /// Print the normal form of an expression
    Canon { expr: String },
    /// Decide whether two expressions denote the same graph
    Equal { left: String, right: String },
    /// Closed path weights between all pairs of edge ends
    Paths {
        expr: String,
        /// Weight table file (`-` for stdin)
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, default_value = "tropical")]
        semiring: SemiringKind,
    },
    /// Print the graph in Graphviz DOT format
    Dot { expr: String },
    /// Check a flow document
    Validate { file: PathBuf },
    /// Print the normal-form expression of a flow document
    FromFlow { file: PathBuf },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("IoError: {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Syntax(_) => "SyntaxError",
            CliError::Document(e) => e.code(),
            CliError::Weight(_) => "WeightError",
            CliError::Path(e) => e.code(),
            CliError::Io { .. } => "IoError",
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(io_err)
}

/// Formats a path map as `KIND LABEL KIND LABEL WEIGHT` rows in key order.
pub fn render_path_table(map: &PathMap<String, f64>) -> String {
    let mut out = String::new();
    for (from, to, w) in map.iter() {
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            from.kind(),
            render_label(from.label()),
            to.kind(),
            render_label(to.label()),
            w
        ));
    }
    out
}

/// Computes paths for an expression with weights from a table.
pub fn paths_for(
    term: &EdgeTerm<String>,
    table: &WeightTable,
    semiring: SemiringKind,
) -> Result<PathMap<String, f64>, CliError> {
    for label in term.labels() {
        table.get(label)?;
    }
    let weight = |x: &String| table.get(x).expect("checked above");
    Ok(semiring_paths(term, weight, &semiring)?)
}

enum Outcome {
    Print(String),
    Verdict(bool),
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    Ok(match command {
        Command::Eval { expr } => {
            let g = FlowGraph::eval(&parse_expr(&expr)?);
            Outcome::Print(flow_to_doc(&g).to_text())
        }
        Command::Canon { expr } => {
            let t = canon::normalize(&parse_expr(&expr)?);
            Outcome::Print(format!("{}\n", render_expr(&t)))
        }
        Command::Equal { left, right } => {
            let (a, b) = (parse_expr(&left)?, parse_expr(&right)?);
            Outcome::Verdict(canon::equivalent(&a, &b))
        }
        Command::Paths {
            expr,
            weights,
            semiring,
        } => {
            let term = parse_expr(&expr)?;
            let table = WeightTable::parse(&read_input(&weights)?)?;
            Outcome::Print(render_path_table(&paths_for(&term, &table, semiring)?))
        }
        Command::Dot { expr } => Outcome::Print(export_dot(&FlowGraph::eval(&parse_expr(&expr)?))),
        Command::Validate { file } => {
            flow_from_text(&read_input(&file)?)?;
            Outcome::Print("valid\n".into())
        }
        Command::FromFlow { file } => {
            let g = flow_from_text(&read_input(&file)?)?;
            Outcome::Print(format!("{}\n", render_expr(&canon::canonical_term(&g))))
        }
    })
}

/// Runs one command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let status = match execute(cli.command) {
        Ok(Outcome::Print(text)) => out.write_all(text.as_bytes()).map(|_| 0),
        Ok(Outcome::Verdict(v)) => writeln!(out, "{v}").map(|_| if v { 0 } else { 1 }),
        Err(e) => {
            let line = e.to_string().replace('\n', " ");
            writeln!(err, "{line}").map(|_| EXIT_ERROR)
        }
    };
    status.unwrap_or(EXIT_ERROR)
}
