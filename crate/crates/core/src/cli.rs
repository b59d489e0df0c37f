//! The `primeperm` command line.
//!
//! Exit codes:
//!
//! | code | meaning                                            |
//! |------|----------------------------------------------------|
//! | 0    | success; for `verify`, every sum is prime          |
//! | 1    | internal error                                     |
//! | 2    | `verify`: a permutation, but some sum is composite |
//! | 3    | `verify`: input is not a permutation               |
//! | 64   | bad usage or unparsable input                      |
//! | 65   | size exceeds a method or memory cap                |

use std::ffi::OsString;
use std::io::{self, BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construct::{construct_prime_sum_permutation, validate_image};
use crate::count::{
    count_solutions, enumerate_solutions, sequence_row, CountConfig, Method, SolutionCount,
};
use crate::error::Error;
use crate::permutation::{parse_one_line, Permutation, RawPermutation};
use crate::primes::PrimeSieve;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_COMPOSITE: i32 = 2;
pub const EXIT_NOT_PERMUTATION: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_CAP: i32 = 65;

/// Largest `n` accepted by `enumerate`; the search keeps an `n × n` bit matrix.
pub const ENUMERATE_CAP: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "primeperm",
    version,
    about = "Permutations of 1..n whose sums k + π(k) are all prime"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    /// `index value` lines; only for sequence output.
    Bfile,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the block-reversal witness for n.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check a permutation given as `1,5,4,3,2` or as JSON. Reads stdin when
    /// --perm is absent or `-`.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        perm: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Count all solutions for n exactly.
    Count {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        counting: CountingArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print every solution for n in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Solution counts and primes below 2n for n = 1..=max.
    Table {
        #[arg(long = "max")]
        max_n: usize,
        #[command(flatten)]
        counting: CountingArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Debug, Args)]
struct CountingArgs {
    /// naive, dp, ryser or auto (naive for n <= 8, dp beyond).
    #[arg(long, default_value = "auto")]
    method: Method,
    /// Naive method walks all n! permutations (n <= 10) instead of
    /// backtracking.
    #[arg(long)]
    strict_paper: bool,
    /// Largest n accepted by dp (default 26).
    #[arg(long)]
    dp_cap: Option<usize>,
    /// Largest n accepted by ryser (default 24).
    #[arg(long)]
    ryser_cap: Option<usize>,
}

impl CountingArgs {
    fn config(&self) -> CountConfig {
        let mut config = CountConfig {
            strict_all_permutations: self.strict_paper,
            ..CountConfig::default()
        };
        if let Some(cap) = self.dp_cap {
            config.dp_cap = cap;
        }
        if let Some(cap) = self.ryser_cap {
            config.ryser_cap = cap;
        }
        config
    }
}

/// Everything a command can fail with, already tied to an exit code.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::SieveTooLarge { .. } => EXIT_CAP,
        Error::Parse(_) => EXIT_USAGE,
        Error::MalformedPermutation(_) => EXIT_NOT_PERMUTATION,
        Error::OutOfRange { .. } | Error::BertrandViolation { .. } => EXIT_INTERNAL,
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INTERNAL
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Construct { n, format } => cmd_construct(n, format, out),
        Command::Verify { perm, format } => {
            let text = match perm.as_deref() {
                None | Some("-") => {
                    let mut buf = String::new();
                    stdin.read_to_string(&mut buf)?;
                    buf
                }
                Some(t) => t.to_owned(),
            };
            cmd_verify(&text, format, out)
        }
        Command::Count {
            n,
            counting,
            format,
        } => cmd_count(n, &counting, format, out),
        Command::Enumerate { n, limit, format } => cmd_enumerate(n, limit, format, out),
        Command::Table {
            max_n,
            counting,
            format,
        } => cmd_table(max_n, &counting, format, out),
    }
}

fn reject_bfile(format: OutputFormat, command: &str) -> Result<(), Failure> {
    if format == OutputFormat::Bfile {
        return Err(Failure::Usage(format!(
            "--format bfile is only available for `table`, not `{command}`"
        )));
    }
    Ok(())
}

fn cmd_construct(n: usize, format: OutputFormat, out: &mut dyn Write) -> Result<i32, Failure> {
    reject_bfile(format, "construct")?;
    let sieve = PrimeSieve::for_problem_size(n)?;
    let perm = construct_prime_sum_permutation(n, &sieve)?;
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&perm)?)?,
        _ => write!(out, "{}", render_rounds(perm.image(), None))?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    n: usize,
    image: &'a [usize],
    sums: Vec<usize>,
    prime: Vec<bool>,
    valid: bool,
}

/// Reads either one-line text or `{"n":..,"image":[..]}`.
fn parse_candidate(text: &str) -> Result<Vec<usize>, Failure> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let raw: RawPermutation = serde_json::from_str(trimmed)
            .map_err(|e| Failure::Usage(format!("invalid permutation JSON: {e}")))?;
        if raw.n != raw.image.len() {
            return Err(Error::MalformedPermutation(format!(
                "n = {} but image has {} entries",
                raw.n,
                raw.image.len()
            ))
            .into());
        }
        Ok(raw.image)
    } else {
        Ok(parse_one_line(trimmed)?)
    }
}

fn cmd_verify(text: &str, format: OutputFormat, out: &mut dyn Write) -> Result<i32, Failure> {
    reject_bfile(format, "verify")?;
    let image = parse_candidate(text)?;
    let sieve = PrimeSieve::for_problem_size(image.len())?;
    let valid = validate_image(&image, &sieve)?;
    let sums: Vec<usize> = image.iter().enumerate().map(|(i, v)| i + 1 + v).collect();
    let prime: Vec<bool> = sums
        .iter()
        .map(|&s| sieve.is_prime(s))
        .collect::<Result<_, _>>()?;
    match format {
        OutputFormat::Json => {
            let report = VerifyReport {
                n: image.len(),
                image: &image,
                sums,
                prime,
                valid,
            };
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        }
        _ => {
            write!(out, "{}", render_rounds(&image, Some(&prime)))?;
            if valid {
                writeln!(out, "valid: all {} sums are prime", image.len())?;
            } else {
                let bad: Vec<String> = (1..=image.len())
                    .filter(|&k| !prime[k - 1])
                    .map(|k| format!("{k} (sum {})", sums[k - 1]))
                    .collect();
                writeln!(out, "invalid: composite at positions {}", bad.join(", "))?;
            }
        }
    }
    Ok(if valid { EXIT_OK } else { EXIT_COMPOSITE })
}

#[derive(Serialize)]
struct CountReport<'a> {
    n: usize,
    count: &'a SolutionCount,
    method: &'static str,
}

fn cmd_count(
    n: usize,
    counting: &CountingArgs,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    reject_bfile(format, "count")?;
    let config = counting.config();
    let method = config.resolve(counting.method, n)?;
    let sieve = PrimeSieve::for_problem_size(n)?;
    let count = count_solutions(n, method, &sieve, &config)?;
    match format {
        OutputFormat::Json => {
            let report = CountReport {
                n,
                count: &count,
                method: method.name(),
            };
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        }
        _ => writeln!(out, "{count}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(
    n: usize,
    limit: Option<usize>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    reject_bfile(format, "enumerate")?;
    if n == 0 {
        return Err(Failure::Usage("enumerate needs --n >= 1".into()));
    }
    if n > ENUMERATE_CAP {
        return Err(Error::CapExceeded {
            method: "enumerate",
            n,
            cap: ENUMERATE_CAP,
        }
        .into());
    }
    let sieve = PrimeSieve::for_problem_size(n)?;
    for perm in enumerate_solutions(n, &sieve, limit)? {
        match format {
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&perm)?)?,
            _ => writeln!(out, "{perm}")?,
        }
        out.flush()?;
    }
    Ok(EXIT_OK)
}

fn cmd_table(
    max_n: usize,
    counting: &CountingArgs,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if max_n == 0 {
        return Err(Failure::Usage("table needs --max >= 1".into()));
    }
    let config = counting.config();
    config.resolve(counting.method, max_n)?;
    let sieve = PrimeSieve::for_problem_size(max_n)?;
    if format == OutputFormat::Text {
        writeln!(out, "{:>4} | {:>20} | {:>9}", "n", "count", "primes<2n")?;
    }
    for n in 1..=max_n {
        let row = sequence_row(n, counting.method, &sieve, &config)?;
        match format {
            OutputFormat::Text => writeln!(
                out,
                "{:>4} | {:>20} | {:>9}",
                row.n, row.count, row.primes_below_2n
            )?,
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
            OutputFormat::Bfile => writeln!(out, "{} {}", row.n, row.count)?,
        }
        out.flush()?;
    }
    Ok(EXIT_OK)
}

/// Two-round score table: positions, images, sums, and optionally a primality
/// row. Columns are right-aligned to their widest cell.
pub fn render_rounds(image: &[usize], prime: Option<&[bool]>) -> String {
    let mut rows: Vec<(&str, Vec<String>)> = vec![
        (
            "Round 1",
            (1..=image.len()).map(|k| k.to_string()).collect(),
        ),
        ("Round 2", image.iter().map(|v| v.to_string()).collect()),
        (
            "Total",
            image
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1 + v).to_string())
                .collect(),
        ),
    ];
    if let Some(flags) = prime {
        rows.push((
            "Prime",
            flags
                .iter()
                .map(|&p| if p { "yes" } else { "no" }.to_string())
                .collect(),
        ));
    }
    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..image.len())
        .map(|c| {
            rows.iter()
                .map(|(_, cells)| cells[c].len())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut text = String::new();
    for (label, cells) in &rows {
        text.push_str(&format!("{label:<label_width$}"));
        for (cell, w) in cells.iter().zip(&widths) {
            text.push_str(&format!(" | {cell:>w$}"));
        }
        text.push('\n');
    }
    text
}

/// Parses a permutation the way `verify` does; exposed for callers that want
/// the same input rules.
pub fn parse_permutation_input(text: &str) -> Result<Permutation, Error> {
    match parse_candidate(text) {
        Ok(image) => Permutation::new(image),
        Err(Failure::Lib(e)) => Err(e),
        Err(Failure::Usage(msg)) => Err(Error::Parse(msg)),
        Err(Failure::Io(e)) => Err(Error::Parse(e.to_string())),
    }
}
