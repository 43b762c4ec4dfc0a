//! Command-line front end. The binary only forwards `std::env::args` here, so
//! everything below is testable in-process.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 success, 1 a
//! verification mismatch, 2 bad input.

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{euler_numbers_with, peak_set_count, Limits, MAX_N_ENV};
use crate::matchings::{count_matchings_with_closers, enumerate_matchings_with_closers};
use crate::oracle::{
    peak_set_census, verify_bijections, verify_cycle_updown, verify_lemma,
    verify_odd_factorization, verify_theorem,
};
use crate::perm::{PeakSet, Permutation};
use crate::render::{ascii_arc_diagram, ascii_matching, dot_arc_diagram, trace};
use crate::Label;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "peakmatch",
    version,
    about = "Alternating permutations by peak set, and their matching-pair encodings"
)]
pub struct Cli {
    /// Worker threads for census and verification (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler numbers E_0..=E_max_n.
    Euler {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Closed-form number of alternating permutations of [n] with a peak set.
    Count {
        #[arg(long)]
        n: usize,
        /// Comma-separated peak values, e.g. 4,5,7,8.
        #[arg(long)]
        peaks: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Brute-force census of alternating permutations of [n] by peak set.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the verification harness.
    Verify {
        /// Peak-set formulas against the census.
        #[arg(long)]
        theorem: bool,
        /// Closer-set matching counts.
        #[arg(long)]
        lemma: bool,
        /// Encode/decode roundtrips and images.
        #[arg(long)]
        bijections: bool,
        /// tau onto cycle up-down permutations with even cycles.
        #[arg(long)]
        cycles: bool,
        /// Odd-case above/below factorization.
        #[arg(long)]
        odd_pairs: bool,
        /// n or an inclusive range a..b (theorem, bijections, odd-pairs).
        #[arg(long, default_value = "2..9")]
        n: String,
        /// k or an inclusive range a..b (lemma, cycles).
        #[arg(long, default_value = "1..5")]
        k: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Trace an alternating permutation through the bijection chain.
    Map {
        /// The word, space separated (one argument or several).
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        /// Append an ASCII arc diagram to the text trace.
        #[arg(long)]
        ascii: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate matchings of [n] with a given closer set.
    Matchings {
        #[arg(long)]
        n: usize,
        /// Comma-separated closers, e.g. 3,4.
        #[arg(long)]
        closers: String,
        /// Print the formula value and the enumerated count only.
        #[arg(long)]
        count_only: bool,
        /// Draw each matching as ASCII arcs.
        #[arg(long)]
        ascii: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parses `7`, `4..9` or `4..=9` into an inclusive range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(Error::Parse(format!("empty range {s:?}")));
            }
            Ok(a..=b)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

enum Failure {
    Input(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("json error: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run_with_args<I, T>(
    args: I,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(err, "{}", e.render());
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_INPUT;
        }
    };
    let result = pool.install(|| dispatch(cli.command, out, err));
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn dispatch(
    command: Command,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> CmdResult {
    match command {
        Command::Euler { max_n, format } => cmd_euler(max_n, format, out),
        Command::Count { n, peaks, format } => cmd_count(n, &peaks, format, out),
        Command::Census { n, format } => cmd_census(n, format, out),
        Command::Verify {
            theorem,
            lemma,
            bijections,
            cycles,
            odd_pairs,
            n,
            k,
            format,
        } => {
            let checks = Checks {
                theorem,
                lemma,
                bijections,
                cycles,
                odd_pairs,
            };
            cmd_verify(checks, &n, &k, format, out, err)
        }
        Command::Map {
            word,
            ascii,
            format,
        } => cmd_map(&word.join(" "), ascii, format, out),
        Command::Matchings {
            n,
            closers,
            count_only,
            ascii,
            format,
        } => cmd_matchings(n, &closers, count_only, ascii, format, out),
    }
}

fn json_line(out: &mut (dyn Write + Send), value: &impl Serialize) -> CmdResult {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn no_dot(cmd: &str) -> Failure {
    Failure::Input(format!("`{cmd}` has no dot output; use text or json"))
}

fn cmd_euler(max_n: usize, format: Format, out: &mut (dyn Write + Send)) -> CmdResult {
    let table = euler_numbers_with(max_n, Limits::from_env()?).map_err(|e| match e {
        Error::CapExceeded { .. } => Failure::Input(format!("{e} (raise it with {MAX_N_ENV})")),
        e => e.into(),
    })?;
    match format {
        Format::Text => {
            for (n, e) in table.iter().enumerate() {
                writeln!(out, "{n} {e}")?;
            }
        }
        Format::Json => json_line(out, &table)?,
        Format::Dot => return Err(no_dot("euler")),
    }
    Ok(())
}

fn cmd_count(n: usize, peaks: &str, format: Format, out: &mut (dyn Write + Send)) -> CmdResult {
    let peaks: PeakSet = peaks.parse()?;
    let report = peak_set_count(&peaks, n)?;
    match format {
        Format::Text => {
            writeln!(out, "n = {n}, peak set {}", report.peak_set)?;
            let pairs: Vec<String> = report
                .factors
                .chunks(2)
                .map(|c| format!("({})({})", c[0], c[1]))
                .collect();
            let shown = if pairs.is_empty() {
                "(empty product)".to_string()
            } else {
                pairs.join(" ")
            };
            writeln!(out, "factors = {shown}")?;
            if report.factors.iter().any(|&f| f <= 0) {
                writeln!(
                    out,
                    "a factor is not positive; no permutation has this peak set"
                )?;
            }
            writeln!(out, "count = {}", report.formula_count)?;
        }
        Format::Json => json_line(out, &report)?,
        Format::Dot => return Err(no_dot("count")),
    }
    Ok(())
}

fn cmd_census(n: usize, format: Format, out: &mut (dyn Write + Send)) -> CmdResult {
    check_desk_scale(n)?;
    let census = peak_set_census(n);
    match format {
        Format::Text => {
            for (peaks, count) in &census.entries {
                writeln!(out, "{peaks} {count}")?;
            }
            writeln!(out, "total {}", census.total())?;
        }
        Format::Json => json_line(out, &census)?,
        Format::Dot => return Err(no_dot("census")),
    }
    Ok(())
}

/// Largest `n` the exhaustive commands accept.
pub const DESK_SCALE_N: usize = 14;

fn check_desk_scale(n: usize) -> std::result::Result<(), Failure> {
    if n > DESK_SCALE_N {
        return Err(Failure::Input(format!(
            "n = {n} is beyond exhaustive reach (max {DESK_SCALE_N})"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
struct Checks {
    theorem: bool,
    lemma: bool,
    bijections: bool,
    cycles: bool,
    odd_pairs: bool,
}

#[derive(Serialize)]
struct VerifyLine {
    check: &'static str,
    size: usize,
    passed: bool,
    summary: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    problems: Vec<String>,
}

fn cmd_verify(
    mut checks: Checks,
    n: &str,
    k: &str,
    format: Format,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> CmdResult {
    if !(checks.theorem || checks.lemma || checks.bijections || checks.cycles || checks.odd_pairs) {
        checks = Checks {
            theorem: true,
            lemma: true,
            bijections: true,
            cycles: true,
            odd_pairs: true,
        };
    }
    let n_range = parse_range(n)?;
    let k_range = parse_range(k)?;
    check_desk_scale(*n_range.end())?;
    check_desk_scale(2 * *k_range.end())?;

    let mut jobs: Vec<(&'static str, usize)> = Vec::new();
    if checks.theorem {
        jobs.extend(n_range.clone().map(|n| ("theorem", n)));
    }
    if checks.lemma {
        jobs.extend(k_range.clone().map(|k| ("lemma", k)));
    }
    if checks.bijections {
        jobs.extend(n_range.clone().map(|n| ("bijections", n)));
    }
    if checks.cycles {
        jobs.extend(k_range.clone().map(|k| ("cycles", k)));
    }
    if checks.odd_pairs {
        jobs.extend(
            n_range
                .clone()
                .filter(|n| n % 2 == 1)
                .map(|n| ("odd-pairs", n)),
        );
    }

    let lines: Vec<Result<VerifyLine>> = jobs
        .par_iter()
        .map(|&(check, size)| run_check(check, size))
        .collect();

    let mut all_passed = true;
    for line in lines {
        let line = line?;
        all_passed &= line.passed;
        match format {
            Format::Text => {
                let status = if line.passed { "ok" } else { "FAILED" };
                writeln!(
                    out,
                    "{} {}={}: {status} ({})",
                    line.check,
                    size_name(line.check),
                    line.size,
                    line.summary
                )?;
                for p in line.problems.iter().take(20) {
                    writeln!(err, "  {p}")?;
                }
            }
            Format::Json => json_line(out, &line)?,
            Format::Dot => return Err(no_dot("verify")),
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn size_name(check: &str) -> &'static str {
    match check {
        "lemma" | "cycles" => "k",
        _ => "n",
    }
}

fn debug_strings<T: std::fmt::Debug>(items: &[T]) -> Vec<String> {
    items.iter().map(|m| format!("{m:?}")).collect()
}

fn run_check(check: &'static str, size: usize) -> Result<VerifyLine> {
    let line = |passed, summary: String, problems| VerifyLine {
        check,
        size,
        passed,
        summary,
        problems,
    };
    Ok(match check {
        "theorem" => {
            let r = verify_theorem(size)?;
            line(
                r.passed(),
                format!(
                    "{} peak sets, census total {}, E_n {}",
                    r.rows.len(),
                    r.census_total,
                    r.euler
                ),
                debug_strings(&r.mismatches),
            )
        }
        "lemma" => {
            let r = verify_lemma(size)?;
            line(
                r.passed(),
                format!(
                    "{} closer sets, {} matchings, (2k-1)!! {}",
                    r.rows.len(),
                    r.total,
                    r.double_factorial
                ),
                debug_strings(&r.mismatches),
            )
        }
        "bijections" => {
            let r = verify_bijections(size)?;
            line(
                r.passed(),
                format!(
                    "{} roundtrips over {} closer sets",
                    r.roundtrips,
                    r.images.len()
                ),
                debug_strings(&r.failures),
            )
        }
        "cycles" => {
            let r = verify_cycle_updown(size)?;
            line(
                r.passed(),
                format!(
                    "{} up-down words, {} generated, E_2k {}",
                    r.up_down_words, r.generated, r.euler
                ),
                r.failures.clone(),
            )
        }
        "odd-pairs" => {
            let r = verify_odd_factorization(size)?;
            line(
                r.passed(),
                format!(
                    "{} closer sets, {} single-circle pairs",
                    r.rows.len(),
                    r.rows.iter().map(|row| row.constructed).sum::<u128>()
                ),
                debug_strings(&r.mismatches),
            )
        }
        other => unreachable!("unknown check {other}"),
    })
}

fn cmd_map(word: &str, ascii: bool, format: Format, out: &mut (dyn Write + Send)) -> CmdResult {
    let sigma: Permutation = word.parse()?;
    let t = trace(&sigma)?;
    match format {
        Format::Text => {
            write!(out, "{}", t.to_text())?;
            if ascii {
                writeln!(out)?;
                write!(out, "{}", ascii_arc_diagram(&t.pair))?;
            }
        }
        Format::Json => json_line(out, &t)?,
        Format::Dot => write!(out, "{}", dot_arc_diagram(&t.pair))?,
    }
    Ok(())
}

fn cmd_matchings(
    n: usize,
    closers: &str,
    count_only: bool,
    ascii: bool,
    format: Format,
    out: &mut (dyn Write + Send),
) -> CmdResult {
    if !n.is_multiple_of(2) {
        return Err(Failure::Input(format!("n = {n} must be even")));
    }
    let closers: PeakSet = closers.parse()?;
    let formula = count_matchings_with_closers(&closers, n / 2)?;
    let labels: Vec<Label> = (1..=n as Label).collect();
    let stream = enumerate_matchings_with_closers(&closers, &labels)?;
    if count_only {
        let enumerated = stream.count() as u128;
        match format {
            Format::Text => writeln!(out, "formula = {formula}, enumerated = {enumerated}")?,
            Format::Json => json_line(
                out,
                &serde_json::json!({ "formula": formula, "enumerated": enumerated }),
            )?,
            Format::Dot => return Err(no_dot("matchings")),
        }
        return if formula == enumerated {
            Ok(())
        } else {
            Err(Failure::Mismatch)
        };
    }
    for m in stream {
        match format {
            Format::Text if ascii => writeln!(out, "{}", ascii_matching(&m))?,
            Format::Text => writeln!(out, "{m}")?,
            Format::Json => json_line(out, &m)?,
            Format::Dot => return Err(no_dot("matchings")),
        }
    }
    Ok(())
}
