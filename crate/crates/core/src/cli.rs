//! Command-line front end.
//!
//! Commands return a [`CmdOutput`] instead of printing, so they can be driven
//! from tests. Exit codes: 0 success, 1 input or validation error, 2 a
//! mathematical finding (no matroid exists, a law fails, a theorem disagrees).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::approx::{
    indiscernible_family, is_unary, lower_approx, neighborhood_family, property_report,
    upper_approx,
};
use crate::closure::{
    check_closure_axioms, induced_closure, sh_as_closure_table, AxiomReport, ClosureTable,
};
use crate::covering::{is_partition, Covering};
use crate::error::{Error, Result};
use crate::io::{parse_covering_with_cap, print_covering};
use crate::matroid::matroid_from_closure;
use crate::reduct::compute_reduct;
use crate::universe::{configured_cap, Subset};
use crate::verify::{sweep_with_cap, CoveringAnalysis, SweepMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FINDING: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rough-matroid",
    version,
    about = "Second-type covering approximations, closure operators and matroids"
)]
pub struct Cli {
    /// Suppress reports on standard output; rely on the exit code.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize a covering: unary flag, neighborhood families, reduct.
    Info(FileArg),
    /// Lower or upper approximation of a set.
    Approx {
        #[command(flatten)]
        file: FileArg,
        /// Comma-separated labels; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum)]
        op: ApproxOp,
    },
    /// Closure of a set under the induced operator or SH.
    Closure {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value = "induced")]
        operator: OperatorKind,
    },
    /// Reduct of a covering.
    Reduct {
        #[command(flatten)]
        file: FileArg,
        /// Print the reduct as a covering document.
        #[arg(long)]
        json: bool,
    },
    /// Matroid whose closure is the chosen operator, as JSON.
    Matroid {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum, default_value = "induced")]
        operator: OperatorKind,
    },
    /// Approximation laws, closure axioms and theorem verdicts for one covering.
    Check(FileArg),
    /// Verify every theorem over all (or randomly sampled) coverings.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct FileArg {
    /// Covering JSON document.
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Universe size.
    #[arg(long)]
    pub n: usize,
    /// Enumerate every covering (n ≤ 4).
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    /// Number of random coverings to sample.
    #[arg(long, value_name = "SAMPLES", requires = "seed")]
    pub random: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Also write the report as JSON to this path.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ApproxOp {
    Sl,
    Sh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    Induced,
    Sh,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            code: EXIT_OK,
            ..Default::default()
        }
    }

    fn input_error(err: impl std::fmt::Display) -> Self {
        CmdOutput {
            stderr: format!("error: {err}\n"),
            code: EXIT_INPUT,
            ..Default::default()
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CmdOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                CmdOutput {
                    stderr: text,
                    code: EXIT_INPUT,
                    ..Default::default()
                }
            } else {
                CmdOutput::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> CmdOutput {
    let mut out = match &cli.command {
        Command::Info(f) => with_covering(&f.file, cmd_info),
        Command::Approx { file, set, op } => with_covering(&file.file, |c| cmd_approx(c, set, *op)),
        Command::Closure {
            file,
            set,
            operator,
        } => with_covering(&file.file, |c| cmd_closure(c, set, *operator)),
        Command::Reduct { file, json } => with_covering(&file.file, |c| cmd_reduct(c, *json)),
        Command::Matroid { file, operator } => {
            with_covering(&file.file, |c| cmd_matroid(c, *operator))
        }
        Command::Check(f) => with_covering(&f.file, cmd_check),
        Command::Sweep(args) => cmd_sweep(args),
    };
    if cli.quiet {
        out.stdout.clear();
    }
    out
}

pub fn load_covering(path: &Path) -> Result<Covering, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_covering_with_cap(&text, configured_cap()).map_err(|e| e.to_string())
}

fn with_covering(path: &Path, f: impl FnOnce(&Covering) -> CmdOutput) -> CmdOutput {
    match load_covering(path) {
        Ok(c) => f(&c),
        Err(e) => CmdOutput::input_error(e),
    }
}

fn parse_set(c: &Covering, spec: &str) -> Result<Subset> {
    let labels = spec.split(',').map(str::trim).filter(|s| !s.is_empty());
    c.universe().subset(labels)
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn cmd_info(c: &Covering) -> CmdOutput {
    let u = c.universe();
    let n_family = neighborhood_family(c);
    let i_family = indiscernible_family(c);
    let reduct = compute_reduct(c);
    let mut s = String::new();
    let _ = writeln!(s, "universe: {}", u.format(u.full()));
    let _ = writeln!(s, "blocks: {}", c.len());
    let _ = writeln!(s, "covering: {c}");
    let _ = writeln!(s, "unary: {}", flag(is_unary(c)));
    let _ = writeln!(s, "N-family: {n_family}");
    let _ = writeln!(s, "N-partition: {}", flag(is_partition(&n_family)));
    let _ = writeln!(s, "I-family: {i_family}");
    let _ = writeln!(s, "I-partition: {}", flag(is_partition(&i_family)));
    let _ = writeln!(s, "reduct: {reduct}");
    let _ = writeln!(
        s,
        "reduct-partition: {}",
        flag(is_partition(&reduct.as_family()))
    );
    CmdOutput::ok(s)
}

pub fn cmd_approx(c: &Covering, set: &str, op: ApproxOp) -> CmdOutput {
    let x = match parse_set(c, set) {
        Ok(x) => x,
        Err(e) => return CmdOutput::input_error(e),
    };
    let image = match op {
        ApproxOp::Sl => lower_approx(c, x),
        ApproxOp::Sh => upper_approx(c, x),
    }
    .expect("parsed set lies in the universe");
    CmdOutput::ok(format!("{}\n", c.universe().format(image)))
}

const NON_UNARY_WARNING: &str =
    "warning: covering is not unary; the fixed points of SL do not form a closure system\n";

fn operator_table(c: &Covering, kind: OperatorKind) -> ClosureTable {
    match kind {
        OperatorKind::Induced => induced_closure(c),
        OperatorKind::Sh => sh_as_closure_table(c),
    }
}

pub fn cmd_closure(c: &Covering, set: &str, operator: OperatorKind) -> CmdOutput {
    let x = match parse_set(c, set) {
        Ok(x) => x,
        Err(e) => return CmdOutput::input_error(e),
    };
    let table = operator_table(c, operator);
    let mut out = CmdOutput::ok(format!("{}\n", c.universe().format(table.get(x))));
    if table.covering_not_unary() {
        out.stderr.push_str(NON_UNARY_WARNING);
    }
    out
}

pub fn cmd_reduct(c: &Covering, json: bool) -> CmdOutput {
    let reduct = compute_reduct(c);
    if json {
        return CmdOutput::ok(format!("{}\n", print_covering(&reduct)));
    }
    let removed: Vec<Subset> = c
        .blocks()
        .iter()
        .copied()
        .filter(|b| !reduct.is_block(*b))
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "reduct: {reduct}");
    let _ = writeln!(s, "removed: {}", c.universe().format_family(&removed));
    let _ = writeln!(
        s,
        "reduct-partition: {}",
        flag(is_partition(&reduct.as_family()))
    );
    CmdOutput::ok(s)
}

#[derive(Serialize)]
struct MatroidDoc {
    independents: Vec<Vec<String>>,
    rank: usize,
}

fn axiom_lines(s: &mut String, table: &ClosureTable, report: &AxiomReport) {
    for entry in &report.entries {
        match entry.witness {
            None => {
                let _ = writeln!(s, "  {}  pass  {}", entry.axiom, entry.axiom.statement());
            }
            Some(w) => {
                let _ = writeln!(s, "  {}  FAIL  {}", entry.axiom, w.describe(table));
            }
        }
    }
}

pub fn cmd_matroid(c: &Covering, operator: OperatorKind) -> CmdOutput {
    let table = operator_table(c, operator);
    if table.covering_not_unary() {
        let report = check_closure_axioms(&table);
        let mut s = String::from(
            "no matroid: covering is not unary, so its fixed points do not form a closure system\n",
        );
        let _ = writeln!(s, "induced operator axioms: {report}");
        axiom_lines(&mut s, &table, &report);
        return CmdOutput {
            stderr: s,
            code: EXIT_FINDING,
            ..Default::default()
        };
    }
    match matroid_from_closure(&table) {
        Ok(m) => {
            let doc = MatroidDoc {
                independents: m.independents().to_labels(),
                rank: m.rank(c.universe().full()),
            };
            CmdOutput::ok(format!(
                "{}\n",
                serde_json::to_string(&doc).expect("matroid document serializes")
            ))
        }
        Err(Error::AxiomsNotSatisfied(report)) => {
            let mut s = format!("no matroid: {} operator {report}\n", table.provenance());
            axiom_lines(&mut s, &table, &report);
            CmdOutput {
                stderr: s,
                code: EXIT_FINDING,
                ..Default::default()
            }
        }
        Err(e) => CmdOutput::input_error(e),
    }
}

pub fn cmd_check(c: &Covering) -> CmdOutput {
    let u = c.universe();
    let mut s = String::new();
    let mut code = EXIT_OK;
    let _ = writeln!(s, "covering: {c}");

    let report = property_report(c);
    let _ = writeln!(s, "approximation laws:");
    for entry in &report.entries {
        match entry.witness {
            None => {
                let _ = writeln!(
                    s,
                    "  {:<4} pass  {}",
                    entry.property.code(),
                    entry.property.statement()
                );
            }
            Some(w) => {
                code = EXIT_FINDING;
                let y =
                    w.y.map(|y| format!(", Y={}", u.format(y)))
                        .unwrap_or_default();
                let _ = writeln!(
                    s,
                    "  {:<4} FAIL  {} at X={}{y}: {} vs {}",
                    entry.property.code(),
                    entry.property.statement(),
                    u.format(w.x),
                    u.format(w.lhs),
                    u.format(w.rhs)
                );
            }
        }
    }

    let analysis = CoveringAnalysis::new(c);
    let _ = writeln!(s, "SH closure axioms:");
    axiom_lines(&mut s, &analysis.sh_table, &analysis.sh_axioms);
    let note = if analysis.unary {
        ""
    } else {
        " (covering not unary)"
    };
    let _ = writeln!(s, "induced closure axioms{note}:");
    axiom_lines(&mut s, &analysis.induced, &analysis.induced_axioms);

    let _ = writeln!(s, "theorems:");
    for v in analysis.verdicts() {
        if !v.applicable {
            let _ = writeln!(s, "  {:<38} n/a", v.id.name());
            continue;
        }
        let _ = writeln!(
            s,
            "  {:<38} left={:<5} right={:<5} {}",
            v.id.name(),
            v.left,
            v.right,
            if v.agree { "agree" } else { "DISAGREE" }
        );
        if let Some(w) = v.witness {
            code = EXIT_FINDING;
            let _ = writeln!(s, "    {w}");
        }
    }
    CmdOutput {
        stdout: s,
        code,
        ..Default::default()
    }
}

pub fn cmd_sweep(args: &SweepArgs) -> CmdOutput {
    let mode = match (args.exhaustive, args.random, args.seed) {
        (true, None, _) => SweepMode::Exhaustive,
        (false, Some(samples), Some(seed)) => SweepMode::Random { samples, seed },
        _ => return CmdOutput::input_error("choose --exhaustive or --random <samples> --seed <s>"),
    };
    let report = match sweep_with_cap(args.n, mode, configured_cap()) {
        Ok(r) => r,
        Err(e) => return CmdOutput::input_error(e),
    };
    if let Some(path) = &args.json {
        let mut text = report.to_json();
        text.push('\n');
        if let Err(e) = std::fs::write(path, text) {
            return CmdOutput::input_error(format!("cannot write {}: {e}", path.display()));
        }
    }
    let mut out = CmdOutput::ok(report.summary());
    if report.total_disagreements > 0 {
        out.code = EXIT_FINDING;
    }
    out
}
