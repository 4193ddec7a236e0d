//! `lrs`: period structure of linear recurrences over finite fields.

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lrs_core::gf::{self, FieldSpec};
use lrs_core::lfsr::DEFAULT_STATE_CAP;
use lrs_core::poly::{Poly, DEFAULT_SEED};
use lrs_core::{biperiod, catalog, Error};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "lrs",
    version,
    about = "Cycle structure and period sets of linear recurring sequences over GF(q)"
)]
struct Cli {
    #[command(flatten)]
    field: FieldArgs,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Largest state space (q^r) or enumeration size to materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    /// Seed for the randomized factorization steps. Results do not depend on it.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Display polynomials as "1 + x + x^2" in text output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads for cycle enumeration.
    #[arg(long, global = true, default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..256))]
    threads: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Field size, a prime power.
    #[arg(long, global = true)]
    q: Option<u64>,
    /// Characteristic (alternative to --q).
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Extension degree, used with --p.
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Monic defining polynomial for GF(p^m), low degree first, e.g. 1,1,0,1.
    #[arg(long, global = true)]
    modulus: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Period set, factorization, orders, fixed states and cycles of f.
    Analyze {
        /// Characteristic polynomial with f(0) = 1, low degree first.
        #[arg(long)]
        poly: String,
    },
    /// Decide whether a degree-r polynomial with biperiod T exists.
    Exists(Target),
    /// Print one degree-r polynomial with biperiod T.
    Construct(Target),
    /// Print every degree-r polynomial with biperiod T.
    Enumerate(Target),
    /// List the cycles of the state space, one per line.
    Cycles {
        #[arg(long)]
        poly: String,
    },
    /// Existence records for every (r, T) in the given ranges, one JSON object per line.
    Catalog {
        /// Degree range, e.g. 2..4 (inclusive).
        #[arg(long, value_parser = parse_range::<u32>)]
        r: RangeInclusive<u32>,
        /// Biperiod range, e.g. 2..15 (inclusive).
        #[arg(long = "T", visible_alias = "t", value_parser = parse_range::<u64>)]
        t: RangeInclusive<u64>,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long)]
    r: u32,
    #[arg(long = "T", visible_alias = "t")]
    t: u64,
}

/// `a..b`, `a..=b` and `a-b` are all inclusive; a single number is a one-point range.
fn parse_range<N: std::str::FromStr + Copy>(s: &str) -> Result<RangeInclusive<N>, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<N>()
            .map_err(|_| format!("invalid range bound {x:?}"))
    };
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    Ok(num(lo)?..=num(hi)?)
}

enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
    /// The answer was printed but is negative.
    NotConstructible,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 6,
            Failure::NotConstructible => 5,
            Failure::Core(e) => match e {
                Error::BadConstantTerm => 3,
                Error::CapExceeded { .. } => 4,
                Error::NotConstructible(_) | Error::NoSuchPolynomial(_) => 5,
                Error::Parse(_)
                | Error::NotPrime(_)
                | Error::ReducibleModulus(_)
                | Error::DegreeZero
                | Error::DegreeMismatch { .. }
                | Error::LengthMismatch { .. }
                | Error::OutOfRange(_)
                | Error::ZeroPolynomial
                | Error::ZeroLastCoefficient
                | Error::ZeroConstantTerm => 2,
                _ => 1,
            },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn field_from_args(a: &FieldArgs) -> Result<FieldSpec, Failure> {
    let modulus = a
        .modulus
        .as_deref()
        .map(|s| {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Failure::Usage(format!("invalid modulus coefficient {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let (p, m) = match (a.q, a.p) {
        (Some(q), None) => {
            let (p, m) = gf::prime_power(q)
                .ok_or_else(|| Failure::Usage(format!("--q {q} is not a prime power")))?;
            if a.m.is_some_and(|given| given != m) {
                return Err(Failure::Usage(format!("--m disagrees with --q {q}")));
            }
            (p, m)
        }
        (None, Some(p)) => (p, a.m.unwrap_or(1)),
        (Some(q), Some(p)) => {
            let m = a.m.unwrap_or(1);
            if gf::prime_power(q) != Some((p, m)) {
                return Err(Failure::Usage(format!(
                    "--q {q} disagrees with --p {p} --m {m}"
                )));
            }
            (p, m)
        }
        (None, None) => {
            return Err(Failure::Usage(
                "a field is required: --q Q or --p P [--m M]".into(),
            ))
        }
    };
    Ok(FieldSpec::new(p, m, modulus.as_deref())?)
}

fn run(cli: &Cli, sink: &mut dyn Write) -> Result<(), Failure> {
    let field = field_from_args(&cli.field)?;
    let fmt = Format {
        json: matches!(cli.format, FormatArg::Json),
        pretty: cli.pretty,
    };
    match &cli.command {
        Command::Analyze { poly } => {
            let f = Poly::parse(&field, poly)?;
            let doc = output::analyze(&f, cli.seed, cli.cap, cli.threads as usize)?;
            fmt.emit_analyze(&doc, sink)?;
        }
        Command::Cycles { poly } => {
            let f = Poly::parse(&field, poly)?;
            let doc = output::cycles(&f, cli.cap, cli.threads as usize)?;
            fmt.emit_cycles(&doc, sink)?;
        }
        Command::Exists(tg) => {
            let report = biperiod::exists_with_witness(&field, tg.r, tg.t)?;
            let pretty = report.witness.as_ref().map(Poly::to_string);
            fmt.emit_exists(&report.to_json(), pretty.as_deref(), sink)?;
            if !report.exists {
                return Err(Failure::NotConstructible);
            }
        }
        Command::Construct(tg) => {
            let f = biperiod::construct_biperiodic(&field, tg.r, tg.t)?;
            fmt.emit_polys(&output::poly_list(&field, tg.r, tg.t, &[f]), sink)?;
        }
        Command::Enumerate(tg) => {
            let fs = biperiod::enumerate_biperiodic_with_cap(&field, tg.r, tg.t, cli.cap)?;
            fmt.emit_polys(&output::poly_list(&field, tg.r, tg.t, &fs), sink)?;
        }
        Command::Catalog { r, t } => {
            let cells = (r.end().saturating_sub(*r.start()) as u64 + 1)
                .saturating_mul(t.end().saturating_sub(*t.start()) + 1);
            if !r.is_empty() && !t.is_empty() && cells > cli.cap {
                return Err(Error::CapExceeded {
                    needed: cells,
                    cap: cli.cap,
                }
                .into());
            }
            let records = catalog::catalog_records(&field, r.clone(), t.clone())?;
            for rec in &records {
                serde_json::to_writer(&mut *sink, rec).map_err(io::Error::from)?;
                sink.write_all(b"\n")?;
            }
            let n = records.len();
            if let Some(path) = &cli.out {
                eprintln!("wrote {n} records to {}", path.display());
            }
        }
    }
    sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(file) => run(&cli, &mut BufWriter::new(file)),
            Err(e) => Err(Failure::Io(e)),
        },
        None => run(&cli, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(fail) => {
            match &fail {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: i/o: {e}"),
                Failure::NotConstructible => {}
            }
            ExitCode::from(fail.exit_code())
        }
    }
}
