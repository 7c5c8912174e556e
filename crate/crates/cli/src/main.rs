use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use combilab_core::family::{FamilySpec, Item, TableFamily};
use combilab_core::hessenberg::{charpoly, HessFSpec};
use combilab_core::verify::{self, GridBounds, Identity};
use combilab_core::{EnumLimits, Error, Exec};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

const MAX_ENUM_ENV: &str = "COMBILAB_MAX_ENUM";

#[derive(Parser)]
#[command(name = "combilab", version, about = "Exact counts, enumerations and identity checks for restricted compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact size of a family.
    Count(FamilyArgs),
    /// List every member of a family, one per line.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        /// Override every enumeration size guard.
        #[arg(long)]
        max_enum: Option<usize>,
    },
    /// Characteristic polynomial of F(n, p).
    Charpoly {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p')]
        p: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Check a named identity over a parameter grid.
    Verify {
        /// Identity name, or `all`.
        #[arg(long)]
        identity: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        max_p: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_enum: Option<usize>,
        /// Run cases on a single thread.
        #[arg(long)]
        sequential: bool,
    },
    /// CSV table with rows n and columns k.
    Table {
        #[arg(long, value_enum)]
        family: TableKind,
        #[arg(short = 'p')]
        p: Option<usize>,
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        max_k: usize,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(short = 'p')]
    p: Option<usize>,
    #[arg(short = 'm')]
    m: Option<usize>,
    #[arg(short = 'a')]
    a: Option<usize>,
    #[arg(long)]
    total: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Minpart,
    Marked,
    ExactLarge,
    WeakZeros,
    Insets,
    Usequences,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Insets,
    Marked,
    WeakZeros,
    Usequences,
    ChebFirst,
    ChebSecond,
    MinorSums,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

/// Failure of a subcommand, carrying its exit status.
struct Fail {
    code: u8,
    message: String,
}

impl Fail {
    fn usage(message: impl Into<String>) -> Self {
        Fail {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Guard { .. } => EXIT_GUARD,
            Error::Consistency(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail {
            code: EXIT_VERIFY_FAILED,
            message: format!("write error: {e}"),
        }
    }
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Fail> {
    v.ok_or_else(|| Fail::usage(format!("family {family} requires {flag}")))
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Fail> {
        Ok(match self.family {
            FamilyKind::Minpart => FamilySpec::MinPart {
                n: need(self.n, "-n", "minpart")?,
                p: need(self.p, "-p", "minpart")?,
            },
            FamilyKind::Marked => FamilySpec::Marked {
                n: need(self.n, "-n", "marked")?,
                k: need(self.k, "-k", "marked")?,
                p: need(self.p, "-p", "marked")?,
            },
            FamilyKind::ExactLarge => FamilySpec::ExactLarge {
                total: need(self.total, "--total", "exact-large")?,
                k: need(self.k, "-k", "exact-large")?,
                a: need(self.a, "-a", "exact-large")?,
            },
            FamilyKind::WeakZeros => FamilySpec::WeakZeros {
                n: need(self.n, "-n", "weak-zeros")?,
                k: need(self.k, "-k", "weak-zeros")?,
            },
            FamilyKind::Insets => FamilySpec::Insets {
                n: need(self.n, "-n", "insets")?,
                k: need(self.k, "-k", "insets")?,
                m: need(self.m, "-m", "insets")?,
            },
            FamilyKind::Usequences => FamilySpec::USequences {
                n: need(self.n, "-n", "usequences")?,
                k: need(self.k, "-k", "usequences")?,
            },
        })
    }
}

#[derive(Serialize)]
struct PartsLine<'a> {
    parts: &'a [usize],
}

#[derive(Serialize)]
struct SymbolsLine {
    symbols: String,
}

#[derive(Serialize)]
struct InsetLine<'a> {
    elements: &'a [usize],
}

#[derive(Serialize)]
struct Coeffs {
    coeffs: Vec<String>,
}

fn jsonl(item: &Item) -> String {
    let line = match item {
        Item::Composition(c) => serde_json::to_string(&PartsLine { parts: c.parts() }),
        Item::USequence(s) => serde_json::to_string(&SymbolsLine { symbols: s.to_string() }),
        Item::Inset(z) => serde_json::to_string(&InsetLine {
            elements: &z.elements(),
        }),
    };
    line.expect("plain structs always serialize")
}

fn env_limits() -> Result<EnumLimits, Fail> {
    match std::env::var(MAX_ENUM_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|max| EnumLimits::default().with_override(max))
            .map_err(|_| Fail::usage(format!("{MAX_ENUM_ENV} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(EnumLimits::default()),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Fail> {
    match cli.command {
        Command::Count(args) => {
            writeln!(out, "{}", args.spec()?.count()?)?;
        }
        Command::Enumerate { family, format, max_enum } => {
            let spec = family.spec()?;
            let limits = match max_enum {
                Some(max) => EnumLimits::default().with_override(max),
                None => env_limits()?,
            };
            for item in spec.enumerate(&limits)? {
                match format {
                    ListFormat::Text => writeln!(out, "{item}")?,
                    ListFormat::Jsonl => writeln!(out, "{}", jsonl(&item))?,
                }
            }
        }
        Command::Charpoly { n, p, format } => {
            let poly = charpoly(HessFSpec::new(n, p)?)?;
            match format {
                PolyFormat::Text => writeln!(out, "{poly}")?,
                PolyFormat::Json => {
                    let coeffs = Coeffs {
                        coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&coeffs).expect("strings serialize"))?;
                }
            }
        }
        Command::Verify {
            identity,
            max_n,
            max_k,
            max_p,
            max_m,
            max_enum,
            sequential,
        } => {
            let ids: Vec<Identity> = if identity == "all" {
                Identity::ALL.to_vec()
            } else {
                vec![identity.parse().map_err(|e: Error| Fail::usage(e.to_string()))?]
            };
            let bounds = GridBounds {
                max_n,
                max_k,
                max_p,
                max_m,
                max_enum,
            };
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let mut all_passed = true;
            for (i, id) in ids.into_iter().enumerate() {
                let report = verify::run(id, &bounds, exec);
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{report}")?;
                eprintln!("{id}: {:.3} s", report.elapsed.as_secs_f64());
                all_passed &= report.passed();
            }
            if !all_passed {
                return Err(Fail {
                    code: EXIT_VERIFY_FAILED,
                    message: "verification failed".into(),
                });
            }
        }
        Command::Table {
            family,
            p,
            m,
            max_n,
            max_k,
        } => {
            let need_p = |name| need(p, "-p", name);
            let fam = match family {
                TableKind::Insets => TableFamily::Insets {
                    m: need(m, "-m", "insets")?,
                },
                TableKind::Marked => TableFamily::Marked { p: need_p("marked")? },
                TableKind::WeakZeros => TableFamily::WeakZeros,
                TableKind::Usequences => TableFamily::USequences,
                TableKind::ChebFirst => TableFamily::ChebFirst,
                TableKind::ChebSecond => TableFamily::ChebSecond,
                TableKind::MinorSums => TableFamily::MinorSums {
                    p: need_p("minor-sums")?,
                },
            };
            if p == Some(0) {
                return Err(Fail::usage("p must be positive"));
            }
            let rows = fam.table(max_n, max_k)?;
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((0..=max_k).map(|k| k.to_string()))
                .collect();
            writeln!(out, "{}", header.join(","))?;
            for (n, row) in rows.iter().enumerate() {
                let cells: Vec<String> = std::iter::once(n.to_string())
                    .chain(row.iter().map(|c| c.as_ref().map(|v| v.to_string()).unwrap_or_default()))
                    .collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(f), _) => {
            eprintln!("combilab: {}", f.message);
            ExitCode::from(f.code)
        }
        (Ok(()), Err(e)) => {
            eprintln!("combilab: write error: {e}");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_exit_codes() {
        let code = |e: Error| Fail::from(e).code;
        assert_eq!(code(Error::Consistency("closed forms differ".into())), EXIT_VERIFY_FAILED);
        assert_eq!(code(Error::Guard { what: "n", value: 31, limit: 30 }), EXIT_GUARD);
        assert_eq!(code(Error::Domain("p must be positive".into())), EXIT_USAGE);
    }
}
