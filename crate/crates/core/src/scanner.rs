//! Splits text into word, symbol and whitespace tokens.

use unicode_normalization::char::is_combining_mark;

use crate::alphabet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharClass {
    KurdishLatinLetter,
    Apostrophe,
    Digit,
    Punctuation,
    Whitespace,
    Other,
}

pub fn classify_char(ch: char) -> CharClass {
    if alphabet::is_kurdish_latin(ch) {
        CharClass::KurdishLatinLetter
    } else if alphabet::is_apostrophe(ch) {
        CharClass::Apostrophe
    } else if ch.is_ascii_digit() {
        CharClass::Digit
    } else if ch.is_whitespace() {
        CharClass::Whitespace
    } else if is_punctuation(ch) {
        CharClass::Punctuation
    } else {
        CharClass::Other
    }
}

fn is_punctuation(ch: char) -> bool {
    ch.is_ascii_punctuation()
        || matches!(
            ch,
            '،' | '؛'
                | '؟'
                | '«'
                | '»'
                | '‹'
                | '›'
                | '“'
                | '”'
                | '„'
                | '‘'
                | '…'
                | '–'
                | '—'
                | '٪'
                | '٫'
                | '٬'
                | '۔'
        )
        || ('\u{2010}'..='\u{2027}').contains(&ch)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    Symbols,
    Space,
}

/// A non-empty slice of the input. `start` is a byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    pub start: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Run {
    // letters and apostrophes; `has_letter` decides Word vs Symbols
    Wordish { has_letter: bool },
    Space,
    Symbols,
}

impl Run {
    fn kind(self) -> TokenKind {
        match self {
            Run::Wordish { has_letter: true } => TokenKind::Word,
            Run::Wordish { has_letter: false } | Run::Symbols => TokenKind::Symbols,
            Run::Space => TokenKind::Space,
        }
    }
}

/// Maximal-run tokenization. Apostrophes join the letter run they touch,
/// and combining marks stay with the run they follow, so decomposed
/// letters remain inside their word.
pub fn segment(text: &str) -> Vec<Token<'_>> {
    let mut tokens: Vec<Token<'_>> = Vec::new();
    let mut run: Option<(Run, usize)> = None;

    for (i, ch) in text.char_indices() {
        let next = match (classify_char(ch), run) {
            (_, Some((current, _))) if current != Run::Space && is_combining_mark(ch) => current,
            (CharClass::KurdishLatinLetter, _) => Run::Wordish { has_letter: true },
            (CharClass::Apostrophe, Some((Run::Wordish { has_letter }, _))) => {
                Run::Wordish { has_letter }
            }
            (CharClass::Apostrophe, _) => Run::Wordish { has_letter: false },
            (CharClass::Whitespace, _) => Run::Space,
            _ => Run::Symbols,
        };
        run = match run {
            Some((Run::Wordish { .. }, start)) if matches!(next, Run::Wordish { .. }) => {
                let has_letter = matches!(next, Run::Wordish { has_letter: true })
                    || matches!(run, Some((Run::Wordish { has_letter: true }, _)));
                Some((Run::Wordish { has_letter }, start))
            }
            Some((current, start)) if current == next => Some((current, start)),
            Some((current, start)) => {
                close(text, &mut tokens, current, start, i);
                Some((next, i))
            }
            None => Some((next, i)),
        };
    }
    if let Some((current, start)) = run {
        close(text, &mut tokens, current, start, text.len());
    }
    tokens
}

fn close<'a>(text: &'a str, tokens: &mut Vec<Token<'a>>, run: Run, start: usize, end: usize) {
    let kind = run.kind();
    match tokens.last_mut() {
        // an apostrophe-only run merges into neighbouring symbols
        Some(prev) if prev.kind == TokenKind::Symbols && kind == TokenKind::Symbols => {
            prev.text = &text[prev.start..end];
        }
        _ => tokens.push(Token {
            kind,
            text: &text[start..end],
            start,
        }),
    }
}
