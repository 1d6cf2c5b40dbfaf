//! Command dispatch for `stackc`.
//!
//! Exit codes: 0 success, 1 negative answer, 2 unknown (fuel ran out),
//! 3 usage or parse error.

pub mod cert_json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stack_calculus::bohm::{bounded_domain, sim_bounded, Lookup, SimVerdict};
use stack_calculus::check::verify_certificate;
use stack_calculus::context::CertificateKind;
use stack_calculus::reduce::{canonical_trace, convertible, reduce_traced, ReductOutcome};
use stack_calculus::separator::{separate, Separation};
use stack_calculus::strategy::{head_normalize_counted, outer_normalize, StrategyResult};
use stack_calculus::{parse_expr, parse_term, Dialect, Expr, RuleSet, Term, Tri};

pub const OK: i32 = 0;
pub const NEGATIVE: i32 = 1;
pub const UNKNOWN: i32 = 2;
pub const USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "stackc", about = "Stack calculus toolkit", version)]
struct Cli {
    /// Step budget for every reduction.
    #[arg(long, global = true, default_value_t = 10_000)]
    fuel: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = DialectArg::Extended)]
    dialect: DialectArg,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DialectArg {
    Original,
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Rules {
    Sigma,
    Sigmaeta,
}

impl Rules {
    fn set(self) -> RuleSet {
        match self {
            Rules::Sigma => RuleSet::SIGMA,
            Rules::Sigmaeta => RuleSet::SIGMA_ETA,
        }
    }
}

/// Arguments holding terms may be given inline or as `@path`.
#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the car/cdr-canonical form.
    Canon { expr: String },
    /// Leftmost reduction to normal form.
    Reduce {
        expr: String,
        #[arg(long, value_enum, default_value_t = Rules::Sigma)]
        rules: Rules,
        #[arg(long)]
        trace: bool,
    },
    /// Head normal form.
    Hnf { term: String },
    /// Outer normal form (original dialect only).
    Onf { term: String },
    /// Böhm tree nodes up to a depth.
    Tree {
        term: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Bounded similarity of two terms.
    Similar {
        a: String,
        b: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Build a separating context.
    Separate {
        a: String,
        b: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against two terms.
    Verify { cert: PathBuf, a: String, b: String },
    /// Convertibility.
    Eq {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Rules::Sigma)]
        rules: Rules,
    },
}

struct Failure(i32, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(USAGE, msg.into())
}

fn load(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn term_arg(arg: &str, dialect: Dialect) -> Result<Term, Failure> {
    let t = parse_term(load(arg)?.trim()).map_err(|e| usage(e.to_string()))?;
    if !dialect.accepts_term(&t) {
        return Err(usage(format!("not a term of the {dialect:?} dialect: {t}")));
    }
    Ok(t)
}

fn expr_arg(arg: &str, dialect: Dialect) -> Result<Expr, Failure> {
    let e = parse_expr(load(arg)?.trim()).map_err(|e| usage(e.to_string()))?;
    if !dialect.accepts_expr(&e) {
        return Err(usage(format!("not in the {dialect:?} dialect: {e}")));
    }
    Ok(e)
}

struct Report {
    code: i32,
    verdict: &'static str,
    text: String,
    json: Value,
}

impl Report {
    fn new(code: i32, verdict: &'static str, text: String) -> Self {
        Report {
            code,
            verdict,
            text,
            json: json!({}),
        }
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.json[key] = v;
        self
    }
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            return (code, e.render().to_string());
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(r) => {
            let out = match format {
                Format::Text => r.text,
                Format::Json => {
                    let mut j = r.json;
                    j["verdict"] = json!(r.verdict);
                    format!("{}\n", serde_json::to_string_pretty(&j).unwrap())
                }
            };
            (r.code, out)
        }
        Err(Failure(code, msg)) => (code, format!("error: {msg}\n")),
    }
}

fn dialect_of(d: DialectArg) -> Dialect {
    match d {
        DialectArg::Original => Dialect::Original,
        DialectArg::Extended => Dialect::Extended,
    }
}

fn dispatch(cli: Cli) -> Result<Report, Failure> {
    let fuel = cli.fuel;
    let dialect = dialect_of(cli.dialect);
    Ok(match cli.cmd {
        Cmd::Canon { expr } => {
            let e = expr_arg(&expr, dialect)?;
            let c = stack_calculus::canonical_form(&e);
            Report::new(OK, "ok", format!("{c}\n"))
                .with("result", json!(c.to_string()))
                .with("steps", json!(0))
                .with("fuelUsed", json!(0))
        }
        Cmd::Reduce { expr, rules, trace } => {
            let e = expr_arg(&expr, dialect)?;
            // With --trace, one line per canonical form along the leftmost
            // reduction; car/cdr bookkeeping steps fold into their result.
            let (chain, outcome) = if trace {
                canonical_trace(&e, rules.set(), fuel)
            } else {
                (vec![], reduce_traced(&e, rules.set(), fuel, |_, _| {}))
            };
            let (code, verdict) = match outcome {
                ReductOutcome::Normal { .. } => (OK, "normal"),
                ReductOutcome::FuelExhausted { .. } => (UNKNOWN, "fuel-exhausted"),
            };
            let result = outcome.expr().to_string();
            let mut text = String::new();
            if trace {
                for c in &chain {
                    let _ = writeln!(text, "{c}");
                }
            } else {
                let _ = writeln!(text, "{result}");
            }
            if code == UNKNOWN {
                let _ = writeln!(text, "(fuel exhausted after {} steps)", outcome.steps());
            }
            let chain: Vec<Value> = chain.iter().map(|c| json!(c.to_string())).collect();
            Report::new(code, verdict, text)
                .with("result", json!(result))
                .with("steps", json!(outcome.steps()))
                .with("fuelUsed", json!(outcome.steps()))
                .with("trace", Value::Array(chain))
        }
        Cmd::Hnf { term } => {
            let t = term_arg(&term, dialect)?;
            let (r, steps) = head_normalize_counted(&t, fuel);
            strategy_report(r.view().map(|v| v.recompose()), &r, steps)
        }
        Cmd::Onf { term } => {
            if dialect != Dialect::Original {
                return Err(usage("onf requires --dialect original"));
            }
            let t = term_arg(&term, dialect)?;
            let r = outer_normalize(&t, fuel).map_err(|e| usage(e.to_string()))?;
            let steps = match &r {
                StrategyResult::Diverged(n) => *n,
                _ => 0,
            };
            strategy_report(r.view().map(|v| v.recompose()), &r, steps)
        }
        Cmd::Tree { term, depth } => {
            let t = term_arg(&term, dialect)?;
            let mut text = String::new();
            let mut nodes = vec![];
            let mut unknown = false;
            for (path, node) in bounded_domain(&t, depth, fuel) {
                let shown = match &node {
                    Lookup::Defined(n) => n.to_string(),
                    Lookup::Undefined => "-".into(),
                    Lookup::Unknown => {
                        unknown = true;
                        "?".into()
                    }
                };
                let _ = writeln!(text, "{path}  {shown}");
                nodes.push(json!({"path": path.to_string(), "node": shown}));
            }
            let code = if unknown { UNKNOWN } else { OK };
            Report::new(code, if unknown { "unknown" } else { "ok" }, text)
                .with("nodes", Value::Array(nodes))
        }
        Cmd::Similar { a, b, depth } => {
            let (m, n) = (term_arg(&a, dialect)?, term_arg(&b, dialect)?);
            match sim_bounded(&m, &n, depth, fuel) {
                SimVerdict::Similar => Report::new(OK, "similar", "similar\n".into()),
                SimVerdict::Dissimilar { path, reason } => Report::new(
                    NEGATIVE,
                    "dissimilar",
                    format!("dissimilar at {path} ({reason})\n"),
                )
                .with("witnessPath", json!(path.to_string()))
                .with("reason", json!(reason)),
                SimVerdict::Unknown(side) => Report::new(
                    UNKNOWN,
                    "unknown",
                    format!("unknown: fuel exhausted on {side:?}\n"),
                ),
            }
            .with("fuelUsed", json!(fuel))
        }
        Cmd::Separate { a, b, depth, out } => {
            let (m, n) = (term_arg(&a, dialect)?, term_arg(&b, dialect)?);
            match separate(&m, &n, depth, fuel, dialect) {
                Separation::Separated { cert, path, reason } => {
                    let doc = cert_json::to_json(&cert);
                    if let Some(out) = &out {
                        std::fs::write(out, &doc)
                            .map_err(|e| usage(format!("{}: {e}", out.display())))?;
                    }
                    let what = match cert.kind {
                        CertificateKind::Separation => "separated",
                        CertificateKind::Distinguishing => "distinguished",
                    };
                    let mut text = format!("{what} at {path} ({reason})\n");
                    if out.is_none() {
                        text.push_str(&doc);
                        text.push('\n');
                    }
                    Report::new(OK, what, text)
                        .with("witnessPath", json!(path.to_string()))
                        .with("certificate", serde_json::from_str(&doc).unwrap())
                        .with("fuelUsed", json!(fuel))
                }
                Separation::NoneFound => Report::new(
                    NEGATIVE,
                    "none-found",
                    format!("no separating context found up to depth {depth}\n"),
                ),
                Separation::Unknown(why) => {
                    Report::new(UNKNOWN, "unknown", format!("unknown: {why}\n"))
                        .with("reason", json!(why))
                }
            }
        }
        Cmd::Verify { cert, a, b } => {
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| usage(format!("{}: {e}", cert.display())))?;
            let c = cert_json::from_json(&text).map_err(usage)?;
            let (m, n) = (term_arg(&a, dialect)?, term_arg(&b, dialect)?);
            // The certificate's own budget, unless the caller asks for more.
            let budget = c.fuel.max(fuel);
            if verify_certificate(&c, &m, &n, budget) {
                Report::new(OK, "verified", "verified\n".into())
            } else {
                Report::new(NEGATIVE, "rejected", "rejected\n".into())
            }
            .with("fuelUsed", json!(budget))
        }
        Cmd::Eq { a, b, rules } => {
            let (m, n) = (expr_arg(&a, dialect)?, expr_arg(&b, dialect)?);
            match convertible(&m, &n, rules.set(), fuel) {
                Tri::Yes => Report::new(OK, "convertible", "convertible\n".into()),
                Tri::No => Report::new(NEGATIVE, "not-convertible", "not convertible\n".into()),
                Tri::Unknown => Report::new(UNKNOWN, "unknown", "unknown\n".into()),
            }
            .with("fuelUsed", json!(fuel))
        }
    })
}

fn strategy_report<V>(shown: Option<Term>, r: &StrategyResult<V>, steps: usize) -> Report {
    let (code, verdict, text) = match (r, &shown) {
        (StrategyResult::Found(_), Some(t)) => (OK, "proper", format!("{t}\n")),
        (StrategyResult::Improper(_), Some(t)) => (NEGATIVE, "improper", format!("improper: {t}\n")),
        _ => (UNKNOWN, "diverged", format!("diverged after {steps} steps\n")),
    };
    let mut rep = Report::new(code, verdict, text)
        .with("steps", json!(steps))
        .with("fuelUsed", json!(steps));
    if let Some(t) = shown {
        rep = rep.with("result", json!(t.to_string()));
    }
    rep
}
