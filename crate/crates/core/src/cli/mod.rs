//! Command-line surface: compute tables, run verification suites, emit reports.

pub mod report;
pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::divisibility::{extract_ehat, AltSource};
use crate::error::{Error, Result};
use crate::gamma::{q_gamma_extract, two_sided_extract};
use crate::oracle::{Oracle, Stat, DEFAULT_BRUTE_MAX};
use crate::recurrences::{five_term, gamma_rec, quadratic_tq, simsun_rec, SimsunMethod};
use report::{PolyValue, Report, ResultEntry};
pub use verify::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "altdes",
    version,
    about = "Alternating descent polynomials, exactly"
)]
pub struct Cli {
    /// Largest n enumerated by brute force.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_MAX, env = "ALTDES_BRUTE_MAX")]
    pub brute_max: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a polynomial from its recurrence.
    #[command(subcommand)]
    Compute(Compute),
    /// Factor Â_n(1, q) = G_n(q) Ê_n(q).
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
    },
    /// Distribution of a statistic over S_n, by enumeration.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        stat: Stat,
    },
}

#[derive(Debug, Args)]
pub struct SizeArg {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Compute {
    /// Â_n(t), or Â_n(t, q) with --q.
    Alt {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        q: bool,
    },
    /// Simsun descent polynomial R_n(x).
    Simsun {
        #[command(flatten)]
        size: SizeArg,
    },
    /// Gamma vector of Â_n(t), or the q-gamma vector with --q.
    Gamma {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        q: bool,
    },
    /// Two-sided polynomial Ã_n(s, t) and its gamma coefficients.
    TwoSided {
        #[command(flatten)]
        size: SizeArg,
    },
}

pub fn parse_args<I, T>(args: I) -> std::result::Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args)
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::LimitExceeded { .. }
            | Error::InvalidArgument(_)
            | Error::PrefixTooLong { .. }
            | Error::InvalidPermutation(_)
    )
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let oracle = Oracle::new(cli.brute_max);
    let mut parameters = BTreeMap::new();
    parameters.insert("brute_max".to_string(), cli.brute_max.to_string());
    let (command, results) = match &cli.command {
        Command::Compute(c) => compute(c, &oracle, &mut parameters)?,
        Command::Factor { n } => {
            parameters.insert("n".into(), n.to_string());
            let f = extract_ehat(*n, AltSource::FaaDiBruno)?;
            let results = vec![
                ResultEntry::value("g_n", PolyValue::from(&f.g_n), ('q', 't')),
                ResultEntry::value("e_hat", PolyValue::from(&f.e_hat), ('q', 't')),
                ResultEntry::verdict(
                    "e_hat palindromic",
                    crate::check::ensure(f.verdicts.e_hat_palindromic, || {
                        format!("Ê_{n} is not palindromic")
                    }),
                ),
                ResultEntry::verdict(
                    "e_hat constant term is E_n",
                    crate::check::ensure(f.verdicts.constant_term_is_euler, || {
                        format!("Ê_{n}(0) = {}", f.e_hat.coeff(0))
                    }),
                ),
            ];
            ("factor".to_string(), results)
        }
        Command::Verify { suite, max_n } => {
            parameters.insert("max_n".into(), max_n.to_string());
            (
                format!("verify {suite}"),
                verify::run_suite(*suite, *max_n, &oracle)?,
            )
        }
        Command::Oracle { n, stat } => {
            parameters.insert("n".into(), n.to_string());
            parameters.insert("stat".into(), stat.to_string());
            let ms = oracle.stat_multiset(*n, *stat)?;
            let var = match stat {
                Stat::AltMaj | Stat::Maj => 'q',
                _ => 't',
            };
            let entry = ResultEntry::value(
                stat.name(),
                PolyValue::from(&ms.generating_poly()),
                (var, 't'),
            );
            ("oracle".to_string(), vec![entry])
        }
    };
    Ok(Report {
        command,
        parameters,
        results,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn compute(
    c: &Compute,
    oracle: &Oracle,
    parameters: &mut BTreeMap<String, String>,
) -> Result<(String, Vec<ResultEntry>)> {
    let (name, n, q) = match c {
        Compute::Alt { size, q } => ("alt", size.n, *q),
        Compute::Simsun { size } => ("simsun", size.n, false),
        Compute::Gamma { size, q } => ("gamma", size.n, *q),
        Compute::TwoSided { size } => ("two-sided", size.n, false),
    };
    parameters.insert("n".into(), n.to_string());
    if q {
        parameters.insert("q".into(), "true".into());
    }
    let results = match c {
        Compute::Alt { q: false, .. } => {
            vec![ResultEntry::value(
                "alt",
                PolyValue::from(&five_term(n)?),
                ('t', 'q'),
            )]
        }
        Compute::Alt { q: true, .. } => {
            vec![ResultEntry::value(
                "alt",
                PolyValue::from(&quadratic_tq(n)?),
                ('t', 'q'),
            )]
        }
        Compute::Simsun { .. } => {
            vec![ResultEntry::value(
                "simsun",
                PolyValue::from(&simsun_rec(n, SimsunMethod::Derivative)),
                ('x', 't'),
            )]
        }
        Compute::Gamma { q: false, .. } => {
            vec![ResultEntry::value(
                "gamma",
                PolyValue::from(&gamma_rec(n)),
                ('x', 't'),
            )]
        }
        Compute::Gamma { q: true, .. } => {
            let g = q_gamma_extract(&quadratic_tq(n)?, n)?;
            let mut out: Vec<ResultEntry> = g
                .gammas
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    ResultEntry::value(format!("gamma_{k}"), PolyValue::from(p), ('q', 't'))
                })
                .collect();
            out.push(ResultEntry::verdict(
                "nonnegative with (1+q)^k as a divisor",
                g.verdict(),
            ));
            out
        }
        Compute::TwoSided { .. } => {
            if n == 0 {
                return Err(Error::InvalidArgument("two-sided needs n >= 1".into()));
            }
            let a = oracle.brute_two_sided(n)?;
            let g = two_sided_extract(&a, n)?;
            let mut out = vec![ResultEntry::value(
                "two-sided",
                PolyValue::from(&a),
                ('s', 't'),
            )];
            out.extend(g.entries.iter().map(|(&(i, j), c)| {
                ResultEntry::value(
                    format!("gamma_({i},{j})"),
                    PolyValue::scalar(c.clone()),
                    ('x', 't'),
                )
            }));
            out.push(ResultEntry::verdict(
                "gamma coefficients nonnegative",
                g.verdict(),
            ));
            out
        }
    };
    Ok((format!("compute {name}"), results))
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

/// Parses `args`, runs the command and writes the report. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let report = match pool.install(|| execute(&cli)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return if is_usage(&e) { 2 } else { 1 };
        }
    };
    let text = render(&report, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    report.exit_code()
}
