//! Gold-pair regression checks.
//!
//! A corpus file holds one `latin TAB arabic` pair per line. Blank lines and
//! lines starting with `#` are skipped.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::engine::{transliterate_text, EngineConfig};
use crate::ruleset::RuleSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusPair {
    pub latin: String,
    pub arabic_expected: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub line: usize,
    pub latin: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<CheckFailure>,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(
        "line {line}: MalformedPairLine: expected `latin TAB arabic` with both fields non-empty"
    )]
    MalformedPairLine { line: usize },
    #[error("cannot read corpus: {0}")]
    Io(#[from] io::Error),
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusPair>, CorpusError> {
    let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let mut fields = raw.split('\t');
        let (Some(latin), Some(arabic), None) = (fields.next(), fields.next(), fields.next())
        else {
            return Err(CorpusError::MalformedPairLine { line });
        };
        if latin.is_empty() || arabic.is_empty() {
            return Err(CorpusError::MalformedPairLine { line });
        }
        pairs.push(CorpusPair {
            latin: latin.nfc().collect(),
            arabic_expected: arabic.nfc().collect(),
            line,
        });
    }
    Ok(pairs)
}

pub fn check_pairs(pairs: &[CorpusPair], rs: &RuleSet, cfg: &EngineConfig) -> CheckReport {
    let mut report = CheckReport::default();
    for pair in pairs {
        report.total += 1;
        let actual: String = transliterate_text(&pair.latin, rs, cfg).nfc().collect();
        if actual == pair.arabic_expected {
            report.passed += 1;
        } else {
            report.failures.push(CheckFailure {
                line: pair.line,
                latin: pair.latin.clone(),
                expected: pair.arabic_expected.clone(),
                actual,
            });
        }
    }
    report
}

pub fn check_corpus(
    path: impl AsRef<Path>,
    rs: &RuleSet,
    cfg: &EngineConfig,
) -> Result<CheckReport, CorpusError> {
    let text = fs::read_to_string(path)?;
    Ok(check_pairs(&parse_corpus(&text)?, rs, cfg))
}
