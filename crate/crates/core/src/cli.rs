//! Batch front-end behind the `frs-lab` binary.
//!
//! Every command prints one JSON report `{config, results, summary,
//! output}` to stdout (or `--out`), optionally mirrors `results` to CSV,
//! and exits with 0 when every applicable check holds, 1 on a violation and
//! 2 on malformed input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{self, BoundReport};
use crate::decode;
use crate::error::{Error, Result};
use crate::frs::{AlphaRule, CodeDescriptor, FrsCode, Word};
use crate::linalg::AffineSubspace;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::recovery;
use crate::suite::{self, Summary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "frs-lab",
    version,
    about = "Folded Reed–Solomon list-decoding laboratory"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write the result rows as CSV.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct CodeArgs {
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated evaluation points (default rule when absent).
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<u64>>,
    /// JSON code descriptor `{q, k, s, n, alphas}`, inline or `@path`.
    #[arg(long)]
    pub code: Option<String>,
}

impl CodeArgs {
    pub fn build(&self) -> Result<FrsCode> {
        if let Some(src) = &self.code {
            let d: CodeDescriptor = serde_json::from_str(&read_inline(src)?)
                .map_err(|e| Error::Parse(format!("code descriptor: {e}")))?;
            return FrsCode::from_descriptor(&d);
        }
        let missing = |f: &str| Error::Parse(format!("missing --{f} (or pass --code)"));
        let rule = self
            .alphas
            .clone()
            .map_or(AlphaRule::Default, AlphaRule::Explicit);
        FrsCode::new(
            self.q.ok_or_else(|| missing("q"))?,
            self.k.ok_or_else(|| missing("k"))?,
            self.s.ok_or_else(|| missing("s"))?,
            self.n.ok_or_else(|| missing("n"))?,
            rule,
        )
    }
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 100)]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
pub enum Command {
    /// Encode a message given as a JSON coefficient list.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        message: String,
    },
    /// Interpolation decoder: the affine solution space for a received word.
    DecodeGw {
        #[command(flatten)]
        code: CodeArgs,
        /// JSON word, inline or `@path`.
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Certificate pruning at radius `--rho`, or `δ − ε` with `--eps`.
    Prune {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
        #[arg(long, conflicts_with = "eps")]
        rho: Option<Rational>,
        #[arg(long)]
        eps: Option<Rational>,
        #[arg(long, default_value_t = 4096)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Compare against the brute-force list.
        #[arg(long)]
        check: bool,
    },
    /// Brute-force list `B(y, ρ) ∩ C`.
    Oracle {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
        #[arg(long)]
        rho: Rational,
    },
    /// Randomized bound-verification suites.
    Verify {
        #[command(subcommand)]
        bound: VerifyCommand,
    },
    /// List-recovery lower-bound family.
    Counterexample {
        #[command(subcommand)]
        action: CounterexampleCommand,
    },
    /// Hill-climb for received words with large lists at the Chen–Zhang radius.
    Fuzz {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[command(flatten)]
        suite: SuiteArgs,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "bound")]
pub enum VerifyCommand {
    Gk {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        dims: Vec<usize>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    Srivastava {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    CzEdge {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        rho: Rational,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    CzTheorem {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    Wronskian {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        dims: Vec<usize>,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Exact parameter-chain check over a grid of rates.
    Params {
        #[arg(long, value_delimiter = ',', default_value = "1/2,1/4,1/8")]
        eps: Vec<Rational>,
        /// Check these rates instead of the default grid.
        #[arg(long, value_delimiter = ',')]
        rates: Option<Vec<Rational>>,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "action")]
pub enum CounterexampleCommand {
    Build(FamilyArgs),
    Verify(FamilyArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Number of basis polynomials; derived from `--eps` as `ceil(R/ε) + 1` when absent.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub eps: Option<Rational>,
    /// Use `B = {1, …, ℓ}`.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Explicit comma-separated scaling set `B`.
    #[arg(long, value_delimiter = ',', conflicts_with = "ell")]
    pub scalars: Option<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub config: Value,
    pub results: Vec<BoundReport>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub output: Value,
}

impl Report {
    fn new(cli: &Cli, results: Vec<BoundReport>, output: Value) -> Self {
        let config = json!({
            "version": env!("CARGO_PKG_VERSION"),
            "args": serde_json::to_value(&cli.command).expect("arguments serialize"),
        });
        let summary = Summary::of(&results);
        Self {
            config,
            results,
            summary,
            output,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.all_hold() {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        }
    }
}

fn read_inline(src: &str) -> Result<String> {
    match src.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}"))),
        None => Ok(src.to_string()),
    }
}

fn parse_word(code: &FrsCode, src: &str) -> Result<Word> {
    let w: Word =
        serde_json::from_str(&read_inline(src)?).map_err(|e| Error::Parse(format!("word: {e}")))?;
    code.check_word(&w)?;
    Ok(w)
}

fn parse_message(code: &FrsCode, src: &str) -> Result<Polynomial> {
    let c: Vec<u64> = serde_json::from_str(&read_inline(src)?)
        .map_err(|e| Error::Parse(format!("message: {e}")))?;
    let q = code.field().modulus();
    if c.iter().any(|&v| v >= q) {
        return Err(Error::Parse(format!(
            "message coefficient out of range for q = {q}"
        )));
    }
    let f = Polynomial::new(code.field(), c);
    code.check_message(&f)?;
    Ok(f)
}

fn poly_json(p: &Polynomial) -> Value {
    json!(p.coeffs())
}

fn space_json(a: &AffineSubspace) -> Value {
    json!({
        "dim": a.dim(),
        "offset": a.offset().map(poly_json),
        "basis": a.basis().iter().map(poly_json).collect::<Vec<_>>(),
    })
}

fn violation_seeds(results: &[BoundReport]) -> Vec<u64> {
    results
        .iter()
        .filter(|r| r.is_violation())
        .filter_map(|r| r.seed)
        .collect()
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    let (results, output) = match &cli.command {
        Command::Encode { code, message } => {
            let c = code.build()?;
            let f = parse_message(&c, message)?;
            (Vec::new(), json!({ "word": c.encode(&f)? }))
        }
        Command::DecodeGw { code, word, m } => {
            let c = code.build()?;
            let y = parse_word(&c, word)?;
            let interp = decode::gw_interpolate(&c, &y, *m)?;
            let a = decode::solution_space(&c, &interp);
            let out = json!({
                "degree_bound": interp.degree_bound,
                "radius": decode::gw_radius(&c, *m)?,
                "interpolant": interp.polys.iter().map(poly_json).collect::<Vec<_>>(),
                "space": space_json(&a),
            });
            let rep = BoundReport::new(
                "gw-dim",
                Rational::from_int(a.dim() as i64),
                Rational::from(*m - 1),
            )
            .with_m(*m);
            (vec![rep], out)
        }
        Command::Prune {
            code,
            word,
            rho,
            eps,
            trials,
            seed,
            check,
        } => {
            let c = code.build()?;
            let y = parse_word(&c, word)?;
            let rho = match (rho, eps) {
                (Some(r), _) => r.clone(),
                (None, Some(e)) => c.relative_distance() - e.clone(),
                (None, None) => return Err(Error::Parse("pass --rho or --eps".into())),
            };
            let (a, m) = decode::candidate_space(&c, &y, &rho)?;
            let mut results = Vec::new();
            let res = if a.is_empty() {
                None
            } else {
                Some(decode::prune_certificates(
                    &c, &y, &a, &rho, *trials, *seed,
                )?)
            };
            let found = res.as_ref().map(|r| r.messages()).unwrap_or_default();
            if *check {
                let oracle = decode::brute_force_list(&c, &y, &rho)?;
                let extra = found
                    .iter()
                    .filter(|f| oracle.binary_search(f).is_err())
                    .count();
                let rep = BoundReport::new("prune", Rational::from(extra), Rational::zero())
                    .with_rho(rho.clone())
                    .with_seed(*seed)
                    .with_detail(format!(
                        "oracle={} found={} complete={}",
                        oracle.len(),
                        found.len(),
                        found == oracle
                    ));
                results.push(rep);
            }
            let out = json!({ "rho": rho, "gw_m": m, "candidate_dim": a.dim(), "result": res });
            (results, out)
        }
        Command::Oracle { code, word, rho } => {
            let c = code.build()?;
            let y = parse_word(&c, word)?;
            let list = decode::brute_force_agreements(&c, &y, rho, crate::linalg::ENUMERATION_CAP)?;
            let out = json!({
                "rho": rho,
                "list": list.iter().map(|(f, a)| json!({"message": f.coeffs(), "agreement": a})).collect::<Vec<_>>(),
            });
            (Vec::new(), out)
        }
        Command::Verify { bound } => (verify(bound)?, Value::Null),
        Command::Counterexample { action } => counterexample(action)?,
        Command::Fuzz {
            code,
            t,
            steps,
            suite,
        } => {
            let c = code.build()?;
            let outcomes = suite::fuzz(&c, *t, suite.samples, *steps, suite.seed)?;
            let best = outcomes.iter().map(|o| o.list_size).max().unwrap_or(0);
            let results = outcomes.iter().map(|o| o.report.clone()).collect();
            (results, json!({ "max_list_size": best }))
        }
    };
    let mut report = Report::new(cli, results, output);
    let seeds = violation_seeds(&report.results);
    if !seeds.is_empty() {
        let mut out = match report.output.take() {
            Value::Object(m) => m,
            Value::Null => serde_json::Map::new(),
            other => serde_json::Map::from_iter([("output".to_string(), other)]),
        };
        out.insert("violating_samples".into(), json!(seeds));
        report.output = Value::Object(out);
    }
    Ok(report)
}

fn verify(cmd: &VerifyCommand) -> Result<Vec<BoundReport>> {
    match cmd {
        VerifyCommand::Gk { code, dims, suite } => {
            suite::gk_suite(&code.build()?, dims, suite.samples, suite.seed)
        }
        VerifyCommand::Srivastava { code, r, t, suite } => {
            suite::srivastava_suite(&code.build()?, *r, *t, suite.samples, suite.seed)
        }
        VerifyCommand::CzEdge { code, rho, suite } => {
            suite::cz_edge_suite(&code.build()?, rho, suite.samples, suite.seed)
        }
        VerifyCommand::CzTheorem { code, t, suite } => {
            suite::cz_theorem_suite(&code.build()?, *t, suite.samples, suite.seed)
        }
        VerifyCommand::Wronskian { code, dims, suite } => {
            suite::wronskian_suite(&code.build()?, dims, suite.samples, suite.seed)
        }
        VerifyCommand::Params { eps, rates } => match rates {
            None => suite::parameter_chain_grid(eps),
            Some(rates) => eps
                .iter()
                .flat_map(|e| {
                    rates
                        .iter()
                        .map(move |r| bounds::check_parameter_chain(e, r))
                })
                .collect(),
        },
    }
}

fn counterexample(cmd: &CounterexampleCommand) -> Result<(Vec<BoundReport>, Value)> {
    let (args, verify) = match cmd {
        CounterexampleCommand::Build(a) => (a, false),
        CounterexampleCommand::Verify(a) => (a, true),
    };
    let c = args.code.build()?;
    let m = match (args.m, &args.eps) {
        (Some(m), _) => m,
        (None, Some(eps)) => recovery::m_for_epsilon(&c.rate(), eps)?,
        (None, None) => return Err(Error::Parse("pass --m or --eps".into())),
    };
    let scalars: Vec<u64> = match (&args.scalars, args.ell) {
        (Some(b), _) => b.clone(),
        (None, Some(ell)) => (1..=ell as u64).collect(),
        (None, None) => return Err(Error::Parse("pass --ell or --scalars".into())),
    };
    let fam = recovery::build_counterexample(&c, m, &scalars)?;
    let mut out = json!({
        "m": fam.m(),
        "p": fam.p(),
        "ell": fam.ell(),
        "scalars": fam.scalars(),
        "basis": fam.basis().iter().map(poly_json).collect::<Vec<_>>(),
    });
    if !verify {
        return Ok((Vec::new(), out));
    }
    let chk = recovery::measure(&fam)?;
    out["family_size"] = json!(chk.family_size);
    out["per_coord_sizes"] = json!(chk.per_coord_sizes);
    out["check"] = serde_json::to_value(&chk).expect("check serializes");
    Ok((vec![recovery::verify_counterexample(&fam)?], out))
}

pub fn write_csv(path: &PathBuf, results: &[BoundReport]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    for r in results {
        w.serialize(r.row())
            .map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::Parse(format!("csv: {e}")))
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    let written = match &cli.out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => writeln!(stdout, "{text}").map_err(|e| Error::Parse(e.to_string())),
    };
    if let Err(e) = written.and_then(|_| {
        cli.csv
            .as_ref()
            .map_or(Ok(()), |p| write_csv(p, &report.results))
    }) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INPUT;
    }
    let code = report.exit_code();
    if code == EXIT_VIOLATION {
        let _ = writeln!(
            stderr,
            "bound violation in samples {:?}; the report reproduces them from the seed",
            violation_seeds(&report.results)
        );
    }
    code
}
