//! Subcommand implementations. Each writes to the given sink and returns the
//! process exit code: 0 success, 1 computed failure, 2 usage or input error.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hyperop_core::diffrep::{classify_operator, order_evidence, rep_prefix};
use hyperop_core::operators::preserve_test;
use hyperop_core::poly::parse_coeff_list;
use hyperop_core::rational::parse_rational;
use hyperop_core::realroot::{interlaces, is_hyperbolic};
use hyperop_core::symbol::{probe_real_specializations, substitute_neg_w, symbol};
use hyperop_core::{Degree, Error, OperatorSpec, Poly};

use crate::corpus::{CorpusGenerator, CorpusSpec};
use crate::scenarios::{self, SCENARIOS};

#[derive(Debug, Parser)]
#[command(name = "hyperop", version, about = "Differential-operator representations of linear operators on R[x]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Q_0..Q_N of T = sum Q_k D^k.
    Rep(OpArgs),
    /// Classify monotonicity of the coefficient degrees.
    Monotone(OpArgs),
    /// Print the truncated symbol G_T(z, w).
    Symbol(SymbolArgs),
    /// Decide whether a polynomial has only real zeros.
    Hyperbolic {
        /// Ascending coefficients, e.g. "1,0,1" for x^2+1.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Decide whether the zeros of two polynomials interlace.
    Interlace {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Search a hyperbolic corpus for images that are not hyperbolic.
    Preserve(PreserveArgs),
    /// Print a generated corpus as JSON.
    Corpus(GeneratorArgs),
    /// Run the built-in verification scenarios.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        scenario: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Args)]
pub struct OpArgs {
    /// Operator JSON file.
    pub op_file: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SymbolArgs {
    #[command(flatten)]
    pub op: OpArgs,
    /// Substitute w -> -w.
    #[arg(long)]
    pub negate_w: bool,
    /// Comma-separated real values of w at which to Sturm-test the truncation.
    #[arg(long, allow_hyphen_values = true)]
    pub probe_w: Option<String>,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 4)]
    pub root_pool: i64,
}

#[derive(Debug, Args)]
pub struct PreserveArgs {
    pub op_file: PathBuf,
    /// Corpus JSON file; when absent the corpus is generated.
    pub corpus_file: Option<PathBuf>,
    #[command(flatten)]
    pub generator: GeneratorArgs,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SequenceExhausted(_) => 1,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: 2, message: e.to_string() }
    }
}

type CmdResult = Result<i32, CliError>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

pub fn read_operator(path: &Path) -> Result<OperatorSpec, CliError> {
    let op: OperatorSpec = read_json(path)?;
    if let OperatorSpec::DiagonalInBasis { basis, .. } = &op {
        basis.validate()?;
    }
    Ok(op)
}

fn json_line<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string(value).map_err(|e| CliError::usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn degree_label(d: Degree) -> String {
    match d {
        Degree::MinusInfinity => "−∞".to_string(),
        Degree::Finite(n) => n.to_string(),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Rep(args) => cmd_rep(&args, out),
        Command::Monotone(args) => cmd_monotone(&args, out),
        Command::Symbol(args) => cmd_symbol(&args, out),
        Command::Hyperbolic { poly } => cmd_hyperbolic(&poly, out),
        Command::Interlace { p, q } => cmd_interlace(&p, &q, out),
        Command::Preserve(args) => cmd_preserve(&args, out),
        Command::Corpus(args) => cmd_corpus(&args, out),
        Command::Verify { scenario, all } => cmd_verify(scenario.as_deref(), all, out),
    }
}

pub fn cmd_rep(args: &OpArgs, out: &mut dyn Write) -> CmdResult {
    let op = read_operator(&args.op_file)?;
    let rep = rep_prefix(&op, args.order)?;
    if args.json {
        json_line(out, &rep)?;
        return Ok(0);
    }
    writeln!(out, "# {}", rep.source)?;
    writeln!(out, "{:>3}  {:>6}  Q_k", "k", "deg")?;
    for (k, q) in rep.q.iter().enumerate() {
        writeln!(out, "{k:>3}  {:>6}  {q}", degree_label(q.degree()))?;
    }
    writeln!(out, "order: {}", order_evidence(&op, &rep))?;
    Ok(0)
}

pub fn cmd_monotone(args: &OpArgs, out: &mut dyn Write) -> CmdResult {
    let op = read_operator(&args.op_file)?;
    let (_, verdict) = classify_operator(&op, args.order)?;
    if args.json {
        json_line(out, &verdict)?;
    } else {
        writeln!(out, "{verdict}")?;
    }
    Ok(0)
}

pub fn cmd_symbol(args: &SymbolArgs, out: &mut dyn Write) -> CmdResult {
    let op = read_operator(&args.op.op_file)?;
    let mut s = symbol(&op, args.op.order)?;
    if args.negate_w {
        s = substitute_neg_w(&s);
    }
    if args.op.json {
        json_line(out, &s)?;
    } else {
        let label = if args.negate_w { "G_T(z,-w)" } else { "G_T(z,w)" };
        writeln!(out, "# {label}, truncated at w^{}", s.order)?;
        for (k, c) in s.w_coeffs.iter().enumerate() {
            writeln!(out, "w^{k}: {}", c.display_in("z"))?;
        }
    }
    if let Some(list) = &args.probe_w {
        let ws = list.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        for probe in probe_real_specializations(&s, &ws) {
            writeln!(out, "probe w = {}: {}", probe.w, probe.label())?;
        }
    }
    Ok(0)
}

pub fn cmd_hyperbolic(poly: &str, out: &mut dyn Write) -> CmdResult {
    let p = parse_coeff_list(poly)?;
    writeln!(out, "{}", is_hyperbolic(&p).label())?;
    Ok(0)
}

pub fn cmd_interlace(p: &str, q: &str, out: &mut dyn Write) -> CmdResult {
    let (p, q) = (parse_coeff_list(p)?, parse_coeff_list(q)?);
    match interlaces(&p, &q) {
        Ok(true) => writeln!(out, "True")?,
        Ok(false) => writeln!(out, "False")?,
        Err(e) => writeln!(out, "{}", e.name())?,
    }
    Ok(0)
}

fn generator(args: &GeneratorArgs) -> CorpusGenerator {
    CorpusGenerator {
        seed: args.seed,
        count: args.count,
        max_degree: args.max_degree,
        root_pool: args.root_pool,
    }
}

pub fn cmd_preserve(args: &PreserveArgs, out: &mut dyn Write) -> CmdResult {
    let op = read_operator(&args.op_file)?;
    let corpus: Vec<Poly> = match &args.corpus_file {
        Some(path) => read_json::<CorpusSpec>(path)?.polys(),
        None => generator(&args.generator).generate(),
    };
    let report = preserve_test(&op, &corpus)?;
    for item in &report.items {
        let tag = if item.is_violation() { "VIOLATION" } else { "ok" };
        writeln!(out, "[{}] {tag}: T[{}] = {}", item.index, corpus[item.index], item.image)?;
    }
    writeln!(out, "{}", report.summary())?;
    Ok(if report.violations().is_empty() { 0 } else { 1 })
}

pub fn cmd_corpus(args: &GeneratorArgs, out: &mut dyn Write) -> CmdResult {
    json_line(out, &generator(args).generate())?;
    Ok(0)
}

pub fn cmd_verify(scenario: Option<&str>, all: bool, out: &mut dyn Write) -> CmdResult {
    let names: Vec<&str> = match (scenario, all) {
        (_, true) => SCENARIOS.to_vec(),
        (Some(name), false) => vec![name],
        (None, false) => return Err(CliError::usage("pass --scenario NAME or --all")),
    };
    let mut failed = false;
    for name in names {
        match scenarios::run(name) {
            None => {
                return Err(CliError::usage(format!(
                    "unknown scenario {name:?}; expected one of {}",
                    SCENARIOS.join(", ")
                )))
            }
            Some(Ok(())) => writeln!(out, "PASS {name}")?,
            Some(Err(m)) => {
                failed = true;
                writeln!(out, "FAIL {name}")?;
                json_line(out, &m)?;
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}
