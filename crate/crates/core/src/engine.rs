//! Applies a [`RuleSet`] to text.

use thiserror::Error;
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::{is_nfc_quick, IsNormalized, UnicodeNormalization};

use crate::alphabet::{self, APOSTROPHE};
use crate::ruleset::{MatchContext, RuleSet};
use crate::scanner::{segment, TokenKind};

pub const RLM: char = '\u{200F}';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DigitMode {
    #[default]
    Keep,
    ArabicIndic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PunctMode {
    Keep,
    #[default]
    ArabicScript,
}

/// One table serves Kurmanji and Sorani Latin input alike.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dialect {
    #[default]
    Unified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EngineConfig {
    pub digit_mode: DigitMode,
    pub punct_mode: PunctMode,
    /// Append U+200F after a '.' that ends a line.
    pub emit_rlm: bool,
    pub dialect: Dialect,
}

/// A character inside a word that no rule matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no rule matches {ch:?} (U+{:04X}) at byte {offset}", *ch as u32)]
pub struct Unmatched {
    /// Byte offset into the text passed to the engine.
    pub offset: usize,
    pub ch: char,
}

/// NFC, lowercase, canonical apostrophe.
pub fn fold_word(word: &str) -> String {
    word.nfc()
        .flat_map(char::to_lowercase)
        .map(|ch| {
            if alphabet::is_apostrophe(ch) {
                APOSTROPHE
            } else {
                ch
            }
        })
        .nfc()
        .collect()
}

pub fn transliterate_word(word: &str, rs: &RuleSet, cfg: &EngineConfig) -> String {
    let mut out = String::new();
    let _ = word_into(word, rs, cfg, &mut out, &mut |_, _| Ok::<(), ()>(()));
    out
}

// Folds cluster by cluster so every folded char keeps the byte offset of
// the original character it came from.
fn fold_with_offsets(word: &str, folded: &mut Vec<(char, usize)>) {
    folded.clear();
    let mut chars = word.char_indices().peekable();
    while let Some((start, ch)) = chars.next() {
        let single = chars
            .peek()
            .is_none_or(|&(_, next)| !is_combining_mark(next));
        if single && is_nfc_quick(std::iter::once(ch)) == IsNormalized::Yes {
            let mut lower = ch.to_lowercase();
            if let (Some(low), None) = (lower.next(), lower.next()) {
                let low = if alphabet::is_apostrophe(low) {
                    APOSTROPHE
                } else {
                    low
                };
                folded.push((low, start));
                continue;
            }
        }
        let mut end = start + ch.len_utf8();
        while let Some(&(i, next)) = chars.peek() {
            if !is_combining_mark(next) {
                break;
            }
            end = i + next.len_utf8();
            chars.next();
        }
        folded.extend(fold_word(&word[start..end]).chars().map(|c| (c, start)));
    }
}

// `on_unmatched` receives the byte offset of the offending character in `word`.
fn word_into<E>(
    word: &str,
    rs: &RuleSet,
    _cfg: &EngineConfig,
    out: &mut String,
    on_unmatched: &mut impl FnMut(usize, char) -> Result<(), E>,
) -> Result<(), E> {
    let mut folded = Vec::with_capacity(word.len());
    fold_with_offsets(word, &mut folded);
    let chars: Vec<char> = folded.iter().map(|&(ch, _)| ch).collect();
    if rs.has_exception_len(chars.len()) {
        let key: String = chars.iter().collect();
        if let Some(exception) = rs.exception(&key) {
            out.push_str(exception);
            return Ok(());
        }
    }
    let mut pos = 0;
    while pos < chars.len() {
        let at = MatchContext {
            word_initial: pos == 0,
            after_vowel: pos > 0 && rs.is_vowel(chars[pos - 1]),
        };
        match rs.lookup(&chars, pos, at) {
            Some(m) => {
                out.push_str(&m.rule.output);
                pos += m.consumed;
            }
            None => {
                on_unmatched(folded[pos].1, chars[pos])?;
                out.push(chars[pos]);
                pos += 1;
            }
        }
    }
    Ok(())
}

pub fn map_symbols(text: &str, cfg: &EngineConfig) -> String {
    let mut out = String::with_capacity(text.len());
    symbols_into(text, cfg, &mut out);
    out
}

fn symbols_into(text: &str, cfg: &EngineConfig, out: &mut String) {
    out.extend(text.chars().map(|ch| map_symbol(ch, cfg)));
}

fn map_symbol(ch: char, cfg: &EngineConfig) -> char {
    match (ch, cfg.punct_mode, cfg.digit_mode) {
        (',', PunctMode::ArabicScript, _) => '،',
        (';', PunctMode::ArabicScript, _) => '؛',
        ('?', PunctMode::ArabicScript, _) => '؟',
        ('0'..='9', _, DigitMode::ArabicIndic) => {
            char::from_u32('٠' as u32 + (ch as u32 - '0' as u32)).unwrap_or(ch)
        }
        _ => ch,
    }
}

pub fn transliterate_text(text: &str, rs: &RuleSet, cfg: &EngineConfig) -> String {
    let mut out = String::with_capacity(text.len() * 2);
    let _ = text_into(text, rs, cfg, &mut out, &mut |_| Ok::<(), ()>(()));
    out
}

/// Like [`transliterate_text`], but fails on the first in-word character no rule matches.
pub fn transliterate_text_strict(
    text: &str,
    rs: &RuleSet,
    cfg: &EngineConfig,
) -> Result<String, Unmatched> {
    let mut out = String::with_capacity(text.len() * 2);
    text_into(text, rs, cfg, &mut out, &mut Err)?;
    Ok(out)
}

fn text_into<E>(
    text: &str,
    rs: &RuleSet,
    cfg: &EngineConfig,
    out: &mut String,
    on_unmatched: &mut impl FnMut(Unmatched) -> Result<(), E>,
) -> Result<(), E> {
    for token in segment(text) {
        match token.kind {
            TokenKind::Word => word_into(token.text, rs, cfg, out, &mut |offset, ch| {
                on_unmatched(Unmatched {
                    offset: token.start + offset,
                    ch,
                })
            })?,
            TokenKind::Symbols | TokenKind::Space => symbols_into(token.text, cfg, out),
        }
    }
    if cfg.emit_rlm {
        mark_line_final_stops(out);
    }
    Ok(())
}

/// Insert U+200F after every '.' that ends a line, including the last line.
fn mark_line_final_stops(out: &mut String) {
    if !out.contains('.') {
        return;
    }
    let mut marked = String::with_capacity(out.len() + 8);
    for line in out.split_inclusive('\n') {
        let body = line.strip_suffix('\n').unwrap_or(line);
        let body = body.strip_suffix('\r').unwrap_or(body);
        if body.ends_with('.') {
            marked.push_str(body);
            marked.push(RLM);
            marked.push_str(&line[body.len()..]);
        } else {
            marked.push_str(line);
        }
    }
    *out = marked;
}
