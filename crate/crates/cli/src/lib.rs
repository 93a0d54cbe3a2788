//! The `hyperdet-schur` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for usage, input-format and size-guard errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hyperdet_schur::error::Error;
use hyperdet_schur::hyperdet::matrix_from_tensor;
use hyperdet_schur::rational;
use hyperdet_schur::suites::{
    full_report, hyperdet222_suite, lemma1_suite, main_suite, pfaffian_suite, t2_suite,
    SuiteConfig, SuiteReport,
};
use hyperdet_schur::{critical_set, hyperdet_222, pfaffian, Partition, Tensor, Verdict};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hyperdet-schur",
    version,
    about = "Exact checks on hyperdeterminants of Schur components"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    T2,
    Main,
    Lemma1,
    Pfaffian,
    Hyperdet222,
}

#[derive(Debug, clap::Args)]
struct ConfigArgs {
    /// Tensor order (weight of the partitions)
    #[arg(long, default_value_t = 3)]
    p: usize,
    /// Dimension of the underlying vector space
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Random trials per case
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest size of the J - I determinant check
    #[arg(long, default_value_t = 10)]
    max_mu: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

impl ConfigArgs {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            p: self.p,
            n: self.n,
            trials: self.trials,
            seed: self.seed,
            max_mu: self.max_mu,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the critical set of a partition given as e.g. "4,1"
    CriticalSet {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Run one verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        args: ConfigArgs,
    },
    /// Evaluate the 2x2x2 hyperdeterminant of a tensor JSON file
    Hyperdet {
        #[arg(long)]
        input: PathBuf,
        /// Treat the input as an order-2 tensor and print its determinant
        #[arg(long, conflicts_with = "pfaffian")]
        det: bool,
        /// Treat the input as an order-2 skew tensor and print its Pfaffian
        #[arg(long)]
        pfaffian: bool,
    },
    /// Run every suite applicable at (p, n) and print one aggregate document
    Report {
        #[command(flatten)]
        args: ConfigArgs,
    },
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

struct Rendered {
    text: String,
    passed: bool,
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(r) => {
            let _ = out.write_all(r.text.as_bytes());
            if r.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command) -> Result<Rendered, Failure> {
    match command {
        Command::CriticalSet { lambda, output } => {
            let lambda: Partition = lambda.parse()?;
            let set = critical_set(&lambda)?;
            let text = match output {
                Output::Json => json(&set)?,
                Output::Text if set.is_empty() => "(empty)\n".to_string(),
                Output::Text => set.iter().map(|m| format!("{m}\n")).collect(),
            };
            Ok(Rendered { text, passed: true })
        }
        Command::Verify { suite, args } => verify(suite, &args),
        Command::Hyperdet {
            input,
            det,
            pfaffian: pf,
        } => {
            let raw = std::fs::read_to_string(&input)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let tensor = Tensor::from_json(&raw)?;
            let value = if det || pf {
                let m = matrix_from_tensor(&tensor)?;
                if det {
                    m.determinant()?
                } else {
                    pfaffian(&m)?
                }
            } else {
                hyperdet_222(&tensor)?
            };
            Ok(Rendered {
                text: format!("{}\n", rational::format(&value)),
                passed: true,
            })
        }
        Command::Report { args } => {
            let report = full_report(&args.config())?;
            let passed = report.verdict.passed();
            let text = match args.output {
                Output::Json => json(&report)?,
                Output::Text => report_text(&report),
            };
            Ok(Rendered { text, passed })
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Usage(format!("serialization failed: {e}")))
}

fn verdict(v: Verdict) -> &'static str {
    if v.passed() {
        "pass"
    } else {
        "FAIL"
    }
}

fn verify(suite: Suite, args: &ConfigArgs) -> Result<Rendered, Failure> {
    let config = args.config();
    let mut text = String::new();
    let passed = match suite {
        Suite::T2 => {
            let cases = t2_suite(&config)?;
            if args.output == Output::Json {
                text = json(&cases)?;
            } else {
                t2_text(&mut text, &cases);
            }
            cases.iter().all(|c| c.verdict.passed())
        }
        Suite::Main => {
            let cases = main_suite(&config)?;
            if args.output == Output::Json {
                text = json(&cases)?;
            } else {
                main_text(&mut text, &cases, &config);
            }
            cases.iter().all(|c| c.verdict.passed())
        }
        Suite::Lemma1 => {
            let cases = lemma1_suite(config.max_mu)?;
            if args.output == Output::Json {
                text = json(&cases)?;
            } else {
                lemma1_text(&mut text, &cases);
            }
            cases.iter().all(|c| c.verdict.passed())
        }
        Suite::Pfaffian => {
            config.validate()?;
            let cases = pfaffian_suite(config.trials, config.seed)?;
            if args.output == Output::Json {
                text = json(&cases)?;
            } else {
                pfaffian_text(&mut text, &cases);
            }
            cases.iter().all(|c| c.verdict.passed())
        }
        Suite::Hyperdet222 => {
            config.validate()?;
            let cases = hyperdet222_suite(config.trials, config.seed)?;
            if args.output == Output::Json {
                text = json(&cases)?;
            } else {
                named_text(&mut text, &cases);
            }
            cases.iter().all(|c| c.verdict.passed())
        }
    };
    if args.output == Output::Text {
        let _ = writeln!(text, "overall: {}", if passed { "pass" } else { "FAIL" });
    }
    Ok(Rendered { text, passed })
}

fn t2_text(s: &mut String, cases: &[hyperdet_schur::suites::T2Case]) {
    for c in cases {
        let crit: Vec<String> = c.critical_set.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "t2 lambda={} n={} rank={} critical=[{}] trials={} {}",
            c.lambda,
            c.n,
            c.component_rank,
            crit.join(" "),
            c.trials,
            verdict(c.verdict)
        );
        for f in &c.failures {
            let _ = writeln!(s, "  failure seed={} pi={}", f.seed, f.partition);
        }
    }
}

fn main_text(s: &mut String, cases: &[hyperdet_schur::DegeneracyReport], config: &SuiteConfig) {
    if cases.is_empty() {
        let _ = writeln!(
            s,
            "main: no non-exceptional shapes at p={} n={}",
            config.p, config.n
        );
    }
    for c in cases {
        let _ = writeln!(
            s,
            "main lambda={} n={} witnesses={}/{} {}",
            c.lambda,
            c.n,
            c.witnesses_found,
            c.trials,
            verdict(c.verdict)
        );
        for f in &c.failures {
            let _ = writeln!(
                s,
                "  failure seed={} check={} slot={} value={}",
                f.seed,
                f.check,
                f.slot,
                rational::format(&f.value)
            );
        }
    }
}

fn lemma1_text(s: &mut String, cases: &[hyperdet_schur::suites::Lemma1Case]) {
    for c in cases {
        let eig = match c.eigencheck {
            Some(true) => "ok",
            Some(false) => "failed",
            None => "skipped",
        };
        let _ = writeln!(
            s,
            "lemma1 mu={} det={} expected={} eigencheck={} {}",
            c.mu,
            rational::format(&c.det),
            rational::format(&c.closed_form),
            eig,
            verdict(c.verdict)
        );
    }
}

fn pfaffian_text(s: &mut String, cases: &[hyperdet_schur::suites::PfaffianCase]) {
    for c in cases {
        let _ = writeln!(
            s,
            "pfaffian size={} trials={} {}",
            c.size,
            c.trials,
            verdict(c.verdict)
        );
        for seed in &c.failures {
            let _ = writeln!(s, "  failure seed={seed}");
        }
    }
}

fn named_text(s: &mut String, cases: &[hyperdet_schur::suites::NamedCheck]) {
    for c in cases {
        let _ = writeln!(
            s,
            "hyperdet222 {} cases={} {}",
            c.name,
            c.cases,
            verdict(c.verdict)
        );
        for seed in &c.failures {
            let _ = writeln!(s, "  failure seed={seed}");
        }
    }
}

fn report_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    let c = &r.config;
    let _ = writeln!(
        s,
        "report p={} n={} trials={} seed={} max_mu={}",
        c.p, c.n, c.trials, c.seed, c.max_mu
    );
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    t2_text(&mut s, &r.t2);
    main_text(&mut s, &r.main, c);
    lemma1_text(&mut s, &r.lemma1);
    if let Some(p) = &r.pfaffian {
        pfaffian_text(&mut s, p);
    }
    if let Some(h) = &r.hyperdet222 {
        named_text(&mut s, h);
    }
    let _ = writeln!(s, "overall: {}", verdict(r.verdict));
    s
}
