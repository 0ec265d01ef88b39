use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use renner_core::hecke::rewriter::Rewriter;
use renner_core::io::artifact::{estimated_work, DEFAULT_WORK_BOUND};
use renner_core::io::verify::{self, Suite};
use renner_core::io::{compute_table, render, Cache, CacheStatus, Format, Metadata, TableKind};
use renner_core::monoid::{MonoidContext, PartialPerm};
use renner_core::partition::MonoidKind;
use renner_core::Error;

#[derive(Parser)]
#[command(name = "renner", version, about = "Character tables of Renner monoids and their Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory (defaults to $RENNER_CACHE_DIR, then ~/.cache/renner)
    #[arg(long, env = "RENNER_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache
    #[arg(long)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table: M, A, B, Y, Mq, Yq or Aq
    Table {
        #[arg(long, value_parser = parse_kind)]
        monoid: MonoidKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kind: TableKind,
        #[arg(long, default_value = "pretty")]
        format: Format,
        /// Refuse computations whose estimated work exceeds this many operations
        #[arg(long, env = "RENNER_MAX_WORK", default_value_t = DEFAULT_WORK_BOUND)]
        max_work: u128,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Reduce T_r to standard elements; the element is an image array such as 0,3,0,0
    Reduce {
        #[arg(long, value_parser = parse_kind)]
        monoid: MonoidKind,
        #[arg(long)]
        n: usize,
        /// Also compare the q = 1 specialization against direct character values
        #[arg(long)]
        check: bool,
        element: String,
    },
    /// Run an invariant suite and print a JSON report
    Verify {
        /// Both monoid kinds when omitted
        #[arg(long, value_parser = parse_kind)]
        monoid: Option<MonoidKind>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

fn parse_kind(s: &str) -> Result<MonoidKind, String> {
    match s.to_ascii_lowercase().as_str() {
        "rook" => Ok(MonoidKind::Rook),
        "symplectic" => Ok(MonoidKind::Symplectic),
        _ => Err(format!("expected rook or symplectic, got {s:?}")),
    }
}

enum Failure {
    Verification,
    Usage(Error),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::NotInMonoid(_) | Error::UnsupportedSize(_) | Error::UnknownLabel(_) => {
                Failure::Usage(e)
            }
            _ => Failure::Internal(e),
        }
    }
}

fn context(kind: MonoidKind, n: usize) -> Result<MonoidContext, Error> {
    if n == 0 {
        return Err(Error::UnsupportedSize("n must be at least 1".into()));
    }
    if n > 4 {
        return Err(Error::UnsupportedSize(format!("reductions are limited to n <= 4, got {n}")));
    }
    Ok(MonoidContext::new(kind, n))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table { monoid, n, kind, format, max_work, cache } => {
            let cache = if cache.no_cache { Cache::disabled() } else { Cache::resolve(cache.cache_dir) };
            if estimated_work(monoid, n, kind) > max_work {
                // refuse before touching the cache
                compute_table(monoid, n, kind, max_work)?;
            }
            let meta = Metadata::new(monoid, n, kind);
            let (artifact, status) = cache.get_or_compute(&meta, || compute_table(monoid, n, kind, max_work))?;
            match status {
                CacheStatus::Corrupt(e) => eprintln!("warning: discarded corrupt cache entry ({e})"),
                CacheStatus::Stale => eprintln!("warning: discarded cache entry with mismatched metadata"),
                _ => {}
            }
            emit(&render(&artifact, format));
            Ok(())
        }
        Command::Reduce { monoid, n, check, element } => {
            let ctx = context(monoid, n)?;
            let r: PartialPerm = element.parse()?;
            if r.degree() != ctx.degree() {
                return Err(Error::Parse(format!("expected {} image values, got {}", ctx.degree(), r.degree())).into());
            }
            let rw = Rewriter::new(&ctx);
            let red = rw.reduce_to_standard(&r)?;
            let coefficients: Map<String, Value> =
                red.coefficients.iter().map(|(l, c)| (l.to_string(), Value::String(c.to_string()))).collect();
            if !check {
                emit_json(&Value::Object(coefficients));
                return Ok(());
            }
            let report = rw.consistency_report(&r)?;
            let passed = report.iter().all(|e| e.ok());
            let entries: Vec<Value> = report
                .iter()
                .map(|e| {
                    json!({
                        "character": e.character.to_string(),
                        "reducedAtOne": e.reduced.to_string(),
                        "direct": e.oracle,
                        "ok": e.ok(),
                    })
                })
                .collect();
            let out = json!({ "coefficients": coefficients, "check": entries, "passed": passed });
            emit_json(&out);
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Verify { monoid, n, suite } => {
            let kinds = match monoid {
                Some(k) => vec![k],
                None => vec![MonoidKind::Rook, MonoidKind::Symplectic],
            };
            for &k in &kinds {
                context(k, n)?;
            }
            let reports: Vec<_> = kinds.into_iter().map(|k| verify::run(k, n, suite)).collect();
            let passed = reports.iter().all(|r| r.passed);
            emit_json(&json!({ "reports": reports, "passed": passed }));
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).unwrap()));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
