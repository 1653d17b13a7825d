//! Command-line front end: `classify`, `character` and `verify`.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
//! (bad flags, unparsable or non-dominant weights).

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::block::{classify, lambda_tail, phi_chain};
use crate::error::Error;
use crate::formulae::{expansion_to_series, expansion_to_series_bounded, irreducible_expansion, Mutation};
use crate::verify::{run_suite, Suite, SuiteConfig};
use crate::weight::Weight;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ospchar", version, about = "Characters of finite-dimensional irreducible osp(3|2m)-modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dominance, typicality, atypical roots, tail weight and φ-chain of a weight.
    Classify(ClassifyArgs),
    /// Verma expansion and truncated series of an irreducible character.
    Character(CharacterArgs),
    /// Run a verification suite over all weights in a bounded range.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Expansion,
    Series,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Rank m; inferred from the weight when omitted.
    #[arg(long)]
    pub m: Option<usize>,
    /// Weight as "λ1,…,λm;λ0", e.g. "2,2;1".
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct CharacterArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Largest total x-degree kept in the series.
    #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
    pub cutoff: i64,
    /// Materialize family members only up to this j (default: as far as the cutoff needs).
    #[arg(long)]
    pub j_max: Option<i64>,
    #[arg(long, value_enum, default_value = "both")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Trivial,
    Typical,
    VermaTensor,
    CEqualsF,
    Sanity,
    TensorTail,
    CrossPath,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationArg {
    ParitySign,
    JLo,
    TauOrientation,
    UpperLimit,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    /// Largest rank checked; ranks 1..=m are covered.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 6)]
    pub cutoff: i64,
    #[arg(long, default_value_t = 3)]
    pub max_height: i64,
    /// Run with a deliberately broken convention in the tail formula.
    #[arg(long, value_enum)]
    pub mutation: Option<MutationArg>,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Trivial => vec![Suite::Trivial],
            SuiteArg::Typical => vec![Suite::Typical],
            SuiteArg::VermaTensor => vec![Suite::VermaTensor],
            SuiteArg::CEqualsF => vec![Suite::CEqualsF],
            SuiteArg::Sanity => vec![Suite::Sanity],
            SuiteArg::TensorTail => vec![Suite::TensorTail],
            SuiteArg::CrossPath => vec![Suite::CrossPath],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::ParitySign => Mutation::ParitySign,
            MutationArg::JLo => Mutation::JLo,
            MutationArg::TauOrientation => Mutation::TauOrientation,
            MutationArg::UpperLimit => Mutation::UpperLimit,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Classify(a) => cmd_classify(a, out),
        Command::Character(a) => cmd_character(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    }
}

fn parse_weight(a: &WeightArgs) -> Result<Weight, Failure> {
    Ok(Weight::parse(&a.weight, a.m)?)
}

fn chain_text(chain: &[Weight]) -> String {
    chain.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" → ")
}

fn cmd_classify(a: &ClassifyArgs, out: &mut impl Write) -> Result<i32, Failure> {
    let lambda = parse_weight(&a.weight)?;
    let c = classify(&lambda)?;
    let tail = if c.typical { None } else { Some(lambda_tail(&lambda)?) };
    let chain = if c.typical || c.tail { None } else { Some(phi_chain(&lambda)?) };
    match a.output {
        Output::Json => {
            let v = json!({
                "weight": lambda,
                "classification": c,
                "lambda_tail": tail,
                "phi_chain": chain,
            });
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Output::Text => {
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(out, "weight: {lambda}")?;
            writeln!(out, "dominant: {}", yes_no(c.dominant))?;
            writeln!(out, "typical: {}", yes_no(c.typical))?;
            if !c.typical {
                let roots: Vec<String> = c.atypical_roots.iter().map(|r| r.to_string()).collect();
                writeln!(out, "atypical roots: {}", roots.join(", "))?;
                writeln!(out, "tail: {}", yes_no(c.tail))?;
                let ty: Vec<String> = c.atypical_type.iter().map(|h| h.to_string()).collect();
                writeln!(out, "atypical type: [{}]", ty.join(", "))?;
            }
            if let Some(t) = &tail {
                writeln!(out, "λ^T: {t}")?;
            }
            if let Some(ch) = &chain {
                writeln!(out, "φ-chain: {}", chain_text(ch))?;
            }
            if let Some(th) = c.theta {
                writeln!(out, "θ: {th}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_character(a: &CharacterArgs, out: &mut impl Write) -> Result<i32, Failure> {
    let lambda = parse_weight(&a.weight)?;
    let low = -lambda.delta_sum().twice() / 2;
    if a.cutoff < low {
        return Err(Failure::Usage(format!("--cutoff must be at least {low} for {lambda}")));
    }
    if a.j_max.is_some_and(|j| j < 0) {
        return Err(Failure::Usage("--j-max must be nonnegative".into()));
    }
    let e = irreducible_expansion(&lambda)?;
    let want_series = a.format != Format::Expansion;
    let series = if !want_series {
        None
    } else if let Some(j) = a.j_max {
        Some(expansion_to_series_bounded(&e, a.cutoff, j)?)
    } else {
        Some(expansion_to_series(&e, a.cutoff)?)
    };
    let show_expansion = a.format != Format::Series;
    match a.output {
        Output::Json => {
            let mut v = json!({ "weight": lambda, "cutoff": a.cutoff });
            if show_expansion {
                v["expansion"] = serde_json::to_value(&e)?;
            }
            if let Some(s) = &series {
                v["series"] = serde_json::to_value(s)?;
            }
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Output::Text => {
            if show_expansion {
                writeln!(out, "expansion: {}", e.render())?;
            }
            if let Some(s) = &series {
                writeln!(out, "series (x-degree ≤ {}): {}", a.cutoff, s.render())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut impl Write) -> Result<i32, Failure> {
    if a.m == 0 || a.m > crate::MAX_RANK {
        return Err(Error::UnsupportedRank(a.m).into());
    }
    let config = SuiteConfig {
        suites: a.suite.suites(),
        m_min: 1,
        m_max: a.m,
        max_height: a.max_height,
        cutoff: a.cutoff,
        mutation: a.mutation.map(Mutation::from),
    };
    let reports = run_suite(&config);
    let failed = reports.iter().filter(|r| !r.pass).count();
    match a.output {
        Output::Json => {
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Output::Text => {
            for r in &reports {
                writeln!(out, "{}", r.summary_line())?;
            }
            writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}
