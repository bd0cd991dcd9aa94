//! Command-line front end for `minfact`.
//!
//! [`run`] takes the full argument list and two output streams and returns
//! the process exit status: 0 on success, 1 when the library rejects the
//! input (or `verify` finds a failure), 2 on usage errors.

use std::collections::BTreeSet;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use minfact::action::{apply_permutation, braid_step, GeneratorIndex};
use minfact::geodesic::{enumerate_sigma_capped, involute, Chain, DEFAULT_ENUMERATION_CAP};
use minfact::parking::{park_traced, CarTrace, ParkingInput, ParkingOutcome};
use minfact::perm::Permutation;
use minfact::surjection::{count_formula, fiber, gamma, section, verify_capped, PairAB};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "minfact",
    version,
    about = "Minimal transposition factorisations of the long cycle"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every member of Σ_n(k) in lexicographic order.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        /// Refuse to enumerate more than this many chains.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Print |Σ_n(k)| from the closed formula.
    Count {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Check the counts and the fibres of the map for every k < n.
    Verify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Report whether a chain is geodesic, below the long cycle, and sorted.
    Validate(ChainArgs),
    /// Map a pair (A, B) to its chain.
    Map(PairArgs),
    /// The residue-1 preimage of a chain.
    Section(ChainArgs),
    /// All n preimages of a chain.
    Fiber(ChainArgs),
    /// Park A into B on the circular lot.
    Park {
        #[command(flatten)]
        pair: PairArgs,
        /// Print each car's probes.
        #[arg(long)]
        trace: bool,
    },
    /// Act on a chain by one braid generator or by a permutation of S_k.
    Act {
        #[command(flatten)]
        chain: ChainArgs,
        /// Generator index l, 1 ≤ l < k.
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        generator: Option<usize>,
        /// Use the inverse generator.
        #[arg(long, requires = "generator")]
        inverse: bool,
        /// Permutation of S_k in cycle or one-line notation.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Apply the reflection involution to a chain.
    Involute(ChainArgs),
}

#[derive(Args, Debug)]
struct ChainArgs {
    /// Size of the ground set; not needed when --chain is JSON.
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Chain as "(3 8)(5 7)" or as JSON.
    #[arg(long, allow_hyphen_values = true)]
    chain: String,
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Size of the ground set; not needed when --pair is JSON.
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Comma-separated sequence A; may be empty.
    #[arg(long = "a", requires = "b")]
    a: Option<String>,
    /// Comma-separated set B with |B| = |A| + 1.
    #[arg(long = "b", requires = "n", conflicts_with = "pair")]
    b: Option<String>,
    /// Pair as JSON or as "A=(3,5,1,3) B={1,3,5,7,8}".
    #[arg(long, required_unless_present = "b")]
    pair: Option<String>,
}

enum Failure {
    Usage(String),
    Domain(minfact::Error),
    /// Output was written; only the status is non-zero.
    Reported,
}

impl From<minfact::Error> for Failure {
    fn from(e: minfact::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, cli.format, out) {
        Ok(()) => 0,
        Err(Failure::Reported) => 1,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, format: Format, out: &mut impl Write) -> Outcome {
    match command {
        Command::Enumerate { n, k, cap } => {
            for c in enumerate_sigma_capped(n, k, cap)? {
                emit(out, format, &c, &c)?;
            }
            Ok(())
        }
        Command::Count { n, k } => {
            let count = count_formula(n, k);
            match format {
                Format::Text => writeln!(out, "{count}")?,
                Format::Json => {
                    let value = match u64::try_from(&count) {
                        Ok(v) => json!(v),
                        Err(_) => json!(count.to_string()),
                    };
                    writeln!(out, "{}", json!({ "n": n, "k": k, "count": value }))?
                }
            }
            Ok(())
        }
        Command::Verify { n, cap } => {
            let report = verify_capped(n, cap)?;
            match format {
                Format::Json => writeln!(out, "{}", to_json(&report))?,
                Format::Text => {
                    writeln!(
                        out,
                        "{:>3} {:>12} {:>12} {:>10} {:>8}  status",
                        "k", "formula", "enumerated", "surjective", "fibres"
                    )?;
                    for row in &report.rows {
                        writeln!(
                            out,
                            "{:>3} {:>12} {:>12} {:>10} {:>8}  {}",
                            row.k,
                            row.formula,
                            row.enumerated,
                            yes_no(row.surjective),
                            yes_no(row.fibres_ok),
                            pass_fail(row.passed())
                        )?;
                    }
                    writeln!(out, "{}", pass_fail(report.passed()))?;
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Reported)
            }
        }
        Command::Validate(args) => {
            let c = args.parse()?;
            let report = c.validate();
            match format {
                Format::Json => writeln!(out, "{}", json!({ "chain": c, "report": report }))?,
                Format::Text => {
                    writeln!(out, "chain:          {c}")?;
                    writeln!(out, "geodesic:       {}", yes_no(report.is_geodesic))?;
                    writeln!(out, "below (1…n):    {}", yes_no(report.is_below))?;
                    writeln!(out, "member:         {}", yes_no(report.is_member))?;
                    writeln!(out, "non-decreasing: {}", yes_no(report.is_nondecreasing))?;
                }
            }
            Ok(())
        }
        Command::Map(args) => {
            let c = gamma(&args.parse()?)?;
            emit(out, format, &c, &c)
        }
        Command::Section(args) => {
            let p = section(&args.parse()?)?;
            emit(out, format, &p, &p)
        }
        Command::Fiber(args) => {
            for p in fiber(&args.parse()?)? {
                emit(out, format, &p, &p)?;
            }
            Ok(())
        }
        Command::Park { pair, trace } => {
            let p = pair.parse()?;
            let input = ParkingInput::new(p.n(), p.a().to_vec(), p.b().clone())?;
            let (outcome, cars) = park_traced(&input);
            write_parking(out, format, &outcome, trace.then_some(cars.as_slice()))
        }
        Command::Act {
            chain,
            generator,
            inverse,
            perm,
        } => {
            let c = chain.parse()?;
            let moved = match (generator, perm) {
                (Some(l), _) => braid_step(&c, GeneratorIndex::new(l, c.len())?, inverse)?,
                (None, Some(text)) => apply_permutation(&c, &Permutation::parse(&text, c.len())?)?,
                (None, None) => {
                    return Err(Failure::Usage("--generator or --perm is required".into()))
                }
            };
            emit(out, format, &moved, &moved)
        }
        Command::Involute(args) => {
            let c = involute(&args.parse()?)?;
            emit(out, format, &c, &c)
        }
    }
}

fn emit(
    out: &mut impl Write,
    format: Format,
    text: &impl std::fmt::Display,
    value: &impl Serialize,
) -> Outcome {
    match format {
        Format::Text => writeln!(out, "{text}")?,
        Format::Json => writeln!(out, "{}", to_json(value))?,
    }
    Ok(())
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("library types serialise")
}

fn write_parking(
    out: &mut impl Write,
    format: Format,
    outcome: &ParkingOutcome,
    cars: Option<&[CarTrace]>,
) -> Outcome {
    if format == Format::Json {
        let mut value = json!(outcome);
        if let Some(cars) = cars {
            value["trace"] = json!(cars);
        }
        writeln!(out, "{value}")?;
        return Ok(());
    }
    for car in cars.unwrap_or_default() {
        writeln!(
            out,
            "car {}: enters at {}, probes {}, parks at {}",
            car.car,
            car.entry,
            join(&car.probed),
            car.space
        )?;
    }
    writeln!(out, "spaces: {}", join(&outcome.spaces))?;
    writeln!(out, "residue: {}", outcome.residue)?;
    Ok(())
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

impl ChainArgs {
    fn parse(&self) -> Result<Chain, Failure> {
        let text = self.chain.trim();
        if text.starts_with('{') {
            let c: Chain =
                serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--chain: {e}")))?;
            if let Some(n) = self.n.filter(|&n| n != c.n()) {
                return Err(Failure::Usage(format!(
                    "-n {n} disagrees with --chain, which has n = {}",
                    c.n()
                )));
            }
            return Ok(c);
        }
        let n = self
            .n
            .ok_or_else(|| Failure::Usage("-n is required with a text --chain".into()))?;
        Ok(Chain::parse(text, n)?)
    }
}

impl PairArgs {
    fn parse(&self) -> Result<PairAB, Failure> {
        if let Some(text) = &self.pair {
            return parse_pair(text.trim(), self.n);
        }
        let (Some(n), Some(b)) = (self.n, &self.b) else {
            return Err(Failure::Usage(
                "either --pair or -n with --b is required".into(),
            ));
        };
        let a = list("--a", self.a.as_deref().unwrap_or(""))?;
        let b = list("--b", b)?;
        Ok(PairAB::from_lists(n, a, &b)?)
    }
}

fn list(flag: &str, text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("{flag}: {t:?} is not a positive integer")))
        })
        .collect()
}

/// Accepts the JSON form or the display form `A=(3,5,1,3) B={1,3,5,7,8}`,
/// which needs `n` from the command line.
fn parse_pair(text: &str, n: Option<usize>) -> Result<PairAB, Failure> {
    if text.starts_with('{') {
        let p: PairAB =
            serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--pair: {e}")))?;
        if let Some(n) = n.filter(|&n| n != p.n()) {
            return Err(Failure::Usage(format!(
                "-n {n} disagrees with --pair, which has n = {}",
                p.n()
            )));
        }
        return Ok(p);
    }
    let n = n.ok_or_else(|| Failure::Usage("-n is required with a text --pair".into()))?;
    let malformed = || Failure::Usage(format!("--pair: cannot read {text:?}"));
    let rest = text.strip_prefix("A=(").ok_or_else(malformed)?;
    let (a, rest) = rest.split_once(')').ok_or_else(malformed)?;
    let b = rest
        .trim()
        .strip_prefix("B={")
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(malformed)?;
    let a = list("--pair", a)?;
    let b: BTreeSet<usize> = list("--pair", b)?.into_iter().collect();
    Ok(PairAB::new(n, a, b)?)
}
