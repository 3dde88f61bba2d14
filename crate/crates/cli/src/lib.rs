//! Argument parsing and command execution for the `chandas` binary.
//!
//! [`run`] takes the full argument vector and two output streams and returns
//! the process exit code:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 2    | usage error or invalid input              |
//! | 3    | enumeration guard exceeded                |
//! | 4    | `--verify` found a disagreement           |

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use chandas::oracle;
use chandas::{EnumerationGuard, Natural, Notation};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub mod render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum NotationArg {
    #[default]
    Gl,
    Binary,
}

impl From<NotationArg> for Notation {
    fn from(n: NotationArg) -> Notation {
        match n {
            NotationArg::Gl => Notation::Gl,
            NotationArg::Binary => Notation::Binary01,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum PrastaraMethod {
    #[default]
    Pingala,
    Kedara,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum BinomialMethod {
    Kedara,
    #[default]
    Meru,
    Bhaskara,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum SankhyaMethod {
    #[default]
    Pingala,
    Lagakriya,
    Uddishta,
}

#[derive(Debug, Parser)]
#[command(
    name = "chandas",
    version,
    about = "Binary enumeration, ranking and binomial constructions of classical prosody"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Notation for sequences on input and output.
    #[arg(long, global = true, value_enum, default_value_t)]
    pub notation: NotationArg,
    /// Largest n for which a full table is materialized.
    #[arg(long, global = true, default_value_t = chandas::DEFAULT_GUARD)]
    pub guard: u32,
    /// Recompute the result with a modern reference method and compare.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All 2^n rows of n syllables.
    Prastara {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        method: PrastaraMethod,
        /// Write rows as they are generated; the guard does not apply.
        #[arg(long)]
        stream: bool,
        /// Prefix each text row with its 1-based row number.
        #[arg(long)]
        numbered: bool,
    },
    /// The row at a given 1-based position.
    Nashtam {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        row: String,
    },
    /// The 1-based position of a row.
    Uddishtam {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t)]
        method: PrastaraMethod,
    },
    /// Position of a numeral in the place-value enumeration starting at 0.
    Rank {
        #[arg(long)]
        digits: String,
        #[arg(long)]
        base: u32,
    },
    /// C(n, 0), ..., C(n, n) with the construction table.
    Lagakriya {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        method: BinomialMethod,
    },
    /// A single binomial coefficient.
    Ncr {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// 2^n, the number of rows.
    Sankhya {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        method: SankhyaMethod,
        /// Print the reduction and replay tables (binary method only).
        #[arg(long)]
        trace: bool,
    },
    /// 2 + 4 + ... + 2^n.
    Adhvayoga {
        #[arg(long)]
        n: u64,
    },
    /// Row positions grouped by number of laghus.
    Pataka {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        column: Option<u32>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Guard(String),
    Disagree(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Guard(_) => EXIT_GUARD,
            CliError::Disagree(_) => EXIT_DISAGREE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Guard(m) | CliError::Disagree(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<chandas::Error> for CliError {
    fn from(e: chandas::Error) -> CliError {
        match e {
            chandas::Error::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Io(e)
    }
}

/// Result of an oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub oracle: &'static str,
    pub agree: bool,
}

/// Buffered output of a command plus the optional verification verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub check: Option<Check>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli, out) {
        Ok(Some(outcome)) => finish(outcome, out, err),
        Ok(None) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Writes a buffered outcome. A disagreement suppresses stdout entirely.
pub fn finish(outcome: Outcome, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(check) = &outcome.check {
        if !check.agree {
            let _ = writeln!(err, "verify: DISAGREE with {}", check.oracle);
            return EXIT_DISAGREE;
        }
    }
    if let Err(e) = out.write_all(outcome.stdout.as_bytes()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if let Some(check) = outcome.check {
        let _ = writeln!(err, "verify: agree with {}", check.oracle);
    }
    EXIT_OK
}

fn check(cli: &Cli, oracle: &'static str, agree: impl FnOnce() -> bool) -> Option<Check> {
    cli.verify.then(|| Check {
        oracle,
        agree: agree(),
    })
}

/// Runs a parsed command. Streaming output is written directly and yields
/// `None`; everything else is buffered into an [`Outcome`].
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Option<Outcome>, CliError> {
    let guard = EnumerationGuard::new(cli.guard);
    let notation = Notation::from(cli.notation);
    let fmt = cli.format;
    let outcome = match &cli.command {
        Command::Prastara {
            n,
            method,
            stream,
            numbered,
        } => {
            if *stream {
                stream_prastara(cli, *n as usize, *numbered, out)?;
                return Ok(None);
            }
            let table = match method {
                PrastaraMethod::Pingala => chandas::pingala_prastara(*n, guard)?,
                PrastaraMethod::Kedara => chandas::kedara_prastara(*n, guard)?,
            };
            let rows: Vec<String> = table
                .rows()
                .map(|r| chandas::render_syllables(r, notation))
                .collect();
            let verdict = check(cli, "binary counting", || {
                table.rows().zip(1u64..).all(|(row, k)| {
                    oracle::counting_row(&k.into(), *n as usize).is_ok_and(|s| s.as_slice() == row)
                })
            });
            let stdout = match fmt {
                OutputFormat::Text => rows
                    .iter()
                    .zip(1u64..)
                    .map(|(r, k)| text_row(r, k, *numbered))
                    .collect(),
                OutputFormat::Json => json_line(&json!(rows)),
                OutputFormat::Csv => rows.iter().map(|r| csv_row(r)).collect(),
            };
            Outcome {
                stdout,
                check: verdict,
            }
        }
        Command::Nashtam { n, row } => {
            let k: chandas::RowIndex = row.parse()?;
            let s = chandas::nashtam(&k, *n)?;
            let text = s.render(notation);
            let verdict = check(cli, "binary counting", || {
                oracle::counting_row(&k, *n).is_ok_and(|o| o == s)
            });
            let stdout = match fmt {
                OutputFormat::Text => format!("{text}\n"),
                OutputFormat::Json => json_line(&json!({
                    "n": n,
                    "row": render::number(k.value()),
                    "sequence": text,
                })),
                OutputFormat::Csv => format!("n,row,sequence\n{n},{k},{text}\n"),
            };
            Outcome {
                stdout,
                check: verdict,
            }
        }
        Command::Uddishtam { seq, method } => {
            let s = chandas::parse_sequence(seq, notation)?;
            let (k, name) = match method {
                PrastaraMethod::Pingala => (chandas::uddishtam_pingala(&s), "pingala"),
                PrastaraMethod::Kedara => (chandas::uddishtam_kedara(&s), "kedara"),
            };
            let verdict = check(cli, "mirrored binary value", || {
                oracle::counting_rank(&s) == k
            });
            let text = s.render(notation);
            let stdout = match fmt {
                OutputFormat::Text => format!("{k}\n"),
                OutputFormat::Json => json_line(&json!({
                    "sequence": text,
                    "method": name,
                    "row": render::number(k.value()),
                })),
                OutputFormat::Csv => format!("sequence,method,row\n{text},{name},{k}\n"),
            };
            Outcome {
                stdout,
                check: verdict,
            }
        }
        Command::Rank { digits, base } => {
            let num = chandas::BaseBNumeral::parse(digits, *base)?;
            let rank = chandas::rank_base_b(&num);
            let verdict = check(cli, "positional value plus one", || {
                oracle::positional_value(&num) + 1u32 == rank
            });
            let stdout = match fmt {
                OutputFormat::Text => format!("{rank}\n"),
                OutputFormat::Json => json_line(&json!({
                    "digits": num.to_string(),
                    "base": base,
                    "rank": render::number(&rank),
                })),
                OutputFormat::Csv => format!("digits,base,rank\n{num},{base},{rank}\n"),
            };
            Outcome {
                stdout,
                check: verdict,
            }
        }
        Command::Lagakriya { n, method } => lagakriya(cli, *n, *method)?,
        Command::Ncr { n, r } => {
            let c = chandas::bhaskara_ncr(*n, *r)?;
            let verdict = check(cli, "factorial formula", || {
                oracle::ncr_factorial(*n, *r).is_ok_and(|o| o == c)
            });
            let stdout = match fmt {
                OutputFormat::Text => format!("{c}\n"),
                OutputFormat::Json => json_line(&json!({
                    "n": n,
                    "r": r,
                    "ncr": render::number(&c),
                })),
                OutputFormat::Csv => format!("n,r,ncr\n{n},{r},{c}\n"),
            };
            Outcome {
                stdout,
                check: verdict,
            }
        }
        Command::Sankhya { n, method, trace } => sankhya(cli, *n, *method, *trace)?,
        Command::Adhvayoga { n } => {
            let total = chandas::adhvayoga(*n)?;
            let verdict = check(cli, "term-by-term sum", || {
                oracle::geometric_sum(*n) == total
            });
            let stdout = match fmt {
                OutputFormat::Text => format!("{total}\n"),
                OutputFormat::Json => json_line(&json!({
                    "n": n,
                    "adhvayoga": render::number(&total),
                })),
                OutputFormat::Csv => format!("n,adhvayoga\n{n},{total}\n"),
            };
            Outcome {
                stdout,
                check: verdict,
            }
        }
        Command::Pataka { n, column } => pataka(cli, *n, *column)?,
    };
    Ok(Some(outcome))
}

fn text_row(row: &str, k: u64, numbered: bool) -> String {
    if numbered {
        format!("{k} {row}\n")
    } else {
        format!("{row}\n")
    }
}

fn csv_row(row: &str) -> String {
    let cells: Vec<String> = row.chars().map(String::from).collect();
    format!("{}\n", cells.join(","))
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn stream_prastara(
    cli: &Cli,
    n: usize,
    numbered: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let notation = Notation::from(cli.notation);
    if cli.format == OutputFormat::Json {
        out.write_all(b"[")?;
    }
    for (s, k) in chandas::prastara_stream(n).zip(1u64..) {
        if cli.verify && oracle::counting_row(&k.into(), n).map_or(true, |o| o != s) {
            return Err(CliError::Disagree(format!(
                "verify: row {k} disagrees with binary counting"
            )));
        }
        let row = s.render(notation);
        match cli.format {
            OutputFormat::Text => out.write_all(text_row(&row, k, numbered).as_bytes())?,
            OutputFormat::Csv => out.write_all(csv_row(&row).as_bytes())?,
            OutputFormat::Json => {
                if k > 1 {
                    out.write_all(b",")?;
                }
                write!(out, "{}", Value::String(row))?;
            }
        }
    }
    if cli.format == OutputFormat::Json {
        out.write_all(b"]\n")?;
    }
    out.flush()?;
    Ok(())
}

fn lagakriya(cli: &Cli, n: u32, method: BinomialMethod) -> Result<Outcome, CliError> {
    let (table, coefficients) = match method {
        BinomialMethod::Kedara => {
            let t = chandas::LagakriyaTable::build(n)?;
            let c = t.terminals();
            (Some(t.rows().to_vec()), c)
        }
        BinomialMethod::Meru => {
            let m = chandas::meru(n as usize + 1)?;
            let c = m.row(n as usize).expect("depth n + 1").to_vec();
            (Some(m.rows().to_vec()), c)
        }
        BinomialMethod::Bhaskara => {
            if n == 0 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            (None, chandas::bhaskara_row(n as u64))
        }
    };
    let verdict = check(cli, "factorial formula", || {
        coefficients
            .iter()
            .zip(0u64..)
            .all(|(c, r)| oracle::ncr_factorial(n as u64, r).is_ok_and(|o| o == *c))
    });
    let stdout = match (cli.format, &table) {
        (OutputFormat::Text, Some(rows)) if method == BinomialMethod::Meru => render::pyramid(rows),
        (OutputFormat::Text, Some(rows)) => render::staircase(rows),
        (OutputFormat::Text, None) => format!("{}\n", render::joined(&coefficients, " ")),
        (OutputFormat::Json, Some(rows)) => json_line(&Value::Array(
            rows.iter().map(|r| render::numbers(r)).collect(),
        )),
        (OutputFormat::Json, None) => json_line(&render::numbers(&coefficients)),
        (OutputFormat::Csv, Some(rows)) => rows
            .iter()
            .map(|r| format!("{}\n", render::joined(r, ",")))
            .collect(),
        (OutputFormat::Csv, None) => format!("{}\n", render::joined(&coefficients, ",")),
    };
    Ok(Outcome {
        stdout,
        check: verdict,
    })
}

fn small_n(n: u64) -> Result<u32, CliError> {
    u32::try_from(n).map_err(|_| CliError::Usage(format!("n = {n} is too large for this method")))
}

fn sankhya(cli: &Cli, n: u64, method: SankhyaMethod, trace: bool) -> Result<Outcome, CliError> {
    if trace && method != SankhyaMethod::Pingala {
        return Err(CliError::Usage(
            "--trace applies only to --method pingala".into(),
        ));
    }
    let (name, result, details) = match method {
        SankhyaMethod::Pingala => {
            let t = chandas::sankhya_pingala(n);
            ("pingala", t.result.clone(), Some(t))
        }
        SankhyaMethod::Lagakriya => (
            "lagakriya",
            chandas::sankhya_kedara_lagakriya(small_n(n)?)?,
            None,
        ),
        SankhyaMethod::Uddishta => (
            "uddishta",
            chandas::sankhya_kedara_uddishta(small_n(n)?)?,
            None,
        ),
    };
    let verdict = check(cli, "repeated doubling", || {
        oracle::pow2_doubling(n) == result
    });
    let shown = details.filter(|_| trace);
    let stdout = match (cli.format, &shown) {
        (OutputFormat::Text, Some(t)) => render::sankhya_trace(t),
        (OutputFormat::Text, None) => format!("{result}\n"),
        (OutputFormat::Json, Some(t)) => json_line(&json!({
            "n": n,
            "method": name,
            "result": render::number(&result),
            "tokens": t.tokens.iter().map(|k| k.symbol().to_digit(10)).collect::<Vec<_>>(),
            "reductions": t.reductions,
            "replay": render::numbers(&t.replay),
        })),
        (OutputFormat::Json, None) => json_line(&json!({
            "n": n,
            "method": name,
            "result": render::number(&result),
        })),
        (OutputFormat::Csv, Some(t)) => {
            let mut s = String::from("phase,token,value\n");
            for (token, rem) in t.tokens.iter().zip(&t.reductions) {
                s.push_str(&format!("reduce,{token},{rem}\n"));
            }
            for (token, v) in t.tokens.iter().rev().zip(&t.replay) {
                s.push_str(&format!("replay,{token},{v}\n"));
            }
            s
        }
        (OutputFormat::Csv, None) => format!("n,method,result\n{n},{name},{result}\n"),
    };
    Ok(Outcome {
        stdout,
        check: verdict,
    })
}

fn pataka(cli: &Cli, n: u32, column: Option<u32>) -> Result<Outcome, CliError> {
    let guard = EnumerationGuard::new(cli.guard);
    let matches_brute = |r: u32, col: &[chandas::RowIndex]| {
        let mut got = col.to_vec();
        got.sort();
        got == oracle::brute_positions(n as usize, r as usize)
    };
    if let Some(r) = column {
        let col = chandas::pataka_column(n, r, guard)?;
        let verdict = check(cli, "brute-force scan", || matches_brute(r, &col));
        let values: Vec<Natural> = col.iter().map(|k| k.value().clone()).collect();
        let stdout = match cli.format {
            OutputFormat::Text | OutputFormat::Csv => {
                values.iter().map(|v| format!("{v}\n")).collect()
            }
            OutputFormat::Json => json_line(&render::numbers(&values)),
        };
        return Ok(Outcome {
            stdout,
            check: verdict,
        });
    }
    let p = chandas::pataka(n, guard)?;
    let verdict = check(cli, "brute-force scan", || {
        p.columns()
            .iter()
            .zip(0u32..)
            .all(|(col, r)| matches_brute(r, col))
    });
    let stdout = match cli.format {
        OutputFormat::Text => render::pataka_table(&p),
        OutputFormat::Json => json_line(&Value::Array(
            p.columns()
                .iter()
                .map(|c| Value::Array(c.iter().map(|k| render::number(k.value())).collect()))
                .collect(),
        )),
        OutputFormat::Csv => {
            let cols = p.columns();
            let height = cols.iter().map(Vec::len).max().unwrap_or(0);
            (0..height)
                .map(|i| {
                    let cells: Vec<String> = cols
                        .iter()
                        .map(|c| c.get(i).map(ToString::to_string).unwrap_or_default())
                        .collect();
                    format!("{}\n", cells.join(","))
                })
                .collect()
        }
    };
    Ok(Outcome {
        stdout,
        check: verdict,
    })
}
