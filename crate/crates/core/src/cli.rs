//! Command-line front end.
//!
//! `translit [OPTIONS] [IN]` streams IN (or stdin) line by line to OUT (or
//! stdout). `translit check CORPUS` runs a gold-pair corpus.
//!
//! Exit codes: 0 success, 1 corpus failures, 2 input/output errors,
//! 3 rule-file errors, 4 unmatched character under `--strict`.

use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::check_corpus;
use crate::engine::{
    transliterate_text, transliterate_text_strict, DigitMode, EngineConfig, PunctMode,
};
use crate::ruleset::{default_rules, parse_rules, RuleSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RULES: i32 = 3;
pub const EXIT_STRICT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "translit",
    version,
    about = "Transliterate Kurdish Hawar Latin text into Sorani Persian-Arabic script",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    engine: EngineArgs,

    /// Fail on the first in-word character no rule matches
    #[arg(long)]
    strict: bool,

    /// Output file (default: stdout)
    #[arg(short = 'o', long = "output", value_name = "OUT")]
    output: Option<PathBuf>,

    /// Input file (default: stdin)
    #[arg(value_name = "IN")]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a `latin TAB arabic` corpus against the current rules
    Check {
        #[command(flatten)]
        engine: EngineArgs,

        #[arg(value_name = "CORPUS")]
        corpus: PathBuf,
    },
}

#[derive(Args, Debug)]
struct EngineArgs {
    /// Rule file to use instead of the built-in table
    #[arg(long, value_name = "FILE")]
    rules: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Digits::Keep)]
    digits: Digits,

    #[arg(long, value_enum, default_value_t = Punct::Arabic)]
    punct: Punct,

    /// Append a right-to-left mark after a full stop that ends a line
    #[arg(long)]
    rlm: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Digits {
    Keep,
    Arabic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Punct {
    Keep,
    Arabic,
}

impl EngineArgs {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            digit_mode: match self.digits {
                Digits::Keep => DigitMode::Keep,
                Digits::Arabic => DigitMode::ArabicIndic,
            },
            punct_mode: match self.punct {
                Punct::Keep => PunctMode::Keep,
                Punct::Arabic => PunctMode::ArabicScript,
            },
            emit_rlm: self.rlm,
            ..EngineConfig::default()
        }
    }

    fn rules(&self, stderr: &mut dyn Write) -> Result<RuleSet, i32> {
        let Some(path) = &self.rules else {
            return Ok(default_rules());
        };
        let text = fs::read_to_string(path).map_err(|e| {
            let _ = writeln!(stderr, "translit: {}: {e}", path.display());
            EXIT_RULES
        })?;
        let rs = parse_rules(&text).map_err(|e| {
            let _ = writeln!(stderr, "translit: {}: {e}", path.display());
            EXIT_RULES
        })?;
        let gaps = rs.coverage_gaps();
        if !gaps.unmapped_letters.is_empty() {
            let letters: String = gaps.unmapped_letters.iter().collect();
            let _ = writeln!(
                stderr,
                "translit: warning: {}: no context-free rule for: {letters}",
                path.display()
            );
        }
        Ok(rs)
    }
}

/// Run with explicit streams; returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };

    match &cli.command {
        Some(Command::Check { engine, corpus }) => run_check(engine, corpus, stdout, stderr),
        None => run_convert(&cli, stdin, stdout, stderr),
    }
}

fn run_check(
    engine: &EngineArgs,
    corpus: &PathBuf,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let rs = match engine.rules(stderr) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let report = match check_corpus(corpus, &rs, &engine.config()) {
        Ok(report) => report,
        Err(e) => {
            let _ = writeln!(stderr, "translit: {}: {e}", corpus.display());
            return EXIT_INPUT;
        }
    };
    for f in &report.failures {
        let _ = writeln!(
            stdout,
            "FAIL line {}: {}\n  expected: {}\n  actual:   {}",
            f.line, f.latin, f.expected, f.actual
        );
    }
    let _ = writeln!(
        stdout,
        "{}/{} pairs passed (rules {})",
        report.passed,
        report.total,
        rs.version()
    );
    if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn run_convert(
    cli: &Cli,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let rs = match cli.engine.rules(stderr) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let cfg = cli.engine.config();

    let mut file_reader;
    let reader: &mut dyn BufRead = match &cli.input {
        Some(path) => match File::open(path) {
            Ok(f) => {
                file_reader = BufReader::with_capacity(1 << 16, f);
                &mut file_reader
            }
            Err(e) => {
                let _ = writeln!(stderr, "translit: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        },
        None => stdin,
    };

    let mut file_writer;
    let writer: &mut dyn Write = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file_writer = BufWriter::with_capacity(1 << 16, f);
                &mut file_writer
            }
            Err(e) => {
                let _ = writeln!(stderr, "translit: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        },
        None => stdout,
    };

    let result = stream(reader, writer, &rs, &cfg, cli.strict).and_then(|()| {
        writer.flush().map_err(StreamError::Write)?;
        Ok(())
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "translit: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum StreamError {
    #[error("read error: {0}")]
    Read(io::Error),
    #[error("write error: {0}")]
    Write(io::Error),
    #[error("invalid UTF-8 at byte {offset}")]
    InvalidUtf8 { offset: u64 },
    #[error("{line}:{column}: no rule matches {ch:?} (U+{:04X})", *ch as u32)]
    Unmatched { line: u64, column: usize, ch: char },
}

impl StreamError {
    fn exit_code(&self) -> i32 {
        match self {
            StreamError::Unmatched { .. } => EXIT_STRICT,
            _ => EXIT_INPUT,
        }
    }
}

// Rule contexts never cross a newline, so converting line by line gives
// the same bytes as converting the whole input at once.
fn stream(
    reader: &mut dyn BufRead,
    writer: &mut dyn Write,
    rs: &RuleSet,
    cfg: &EngineConfig,
    strict: bool,
) -> Result<(), StreamError> {
    let mut buf = Vec::new();
    let mut offset: u64 = 0;
    let mut line_no: u64 = 0;
    loop {
        buf.clear();
        let n = reader
            .read_until(b'\n', &mut buf)
            .map_err(StreamError::Read)?;
        if n == 0 {
            return Ok(());
        }
        line_no += 1;
        let mut bytes = &buf[..];
        let mut skipped = 0;
        if offset == 0 {
            if let Some(rest) = bytes.strip_prefix(b"\xEF\xBB\xBF") {
                bytes = rest;
                skipped = 3;
            }
        }
        let line = std::str::from_utf8(bytes).map_err(|e| StreamError::InvalidUtf8 {
            offset: offset + skipped + e.valid_up_to() as u64,
        })?;
        let converted = if strict {
            transliterate_text_strict(line, rs, cfg).map_err(|u| StreamError::Unmatched {
                line: line_no,
                column: line[..u.offset].chars().count() + 1,
                ch: u.ch,
            })?
        } else {
            transliterate_text(line, rs, cfg)
        };
        writer
            .write_all(converted.as_bytes())
            .map_err(StreamError::Write)?;
        offset += n as u64;
    }
}
