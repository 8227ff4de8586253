//! Rule data model, the plain-text rule-file format and longest-match lookup.
//!
//! A rule file is UTF-8 text with one entry per line. Columns are
//! separated by a single TAB (shown here as wide gaps):
//!
//! ```text
//! # comment
//! @version    hawar-sorani/1
//! @vowels     a e ê i î o u û
//! ll          any           ڵ
//! i           any           ∅
//! î           after-vowel   ئی
//! @except     û             و
//! ```
//!
//! Rule lines carry three TAB-separated fields: a Latin pattern of one to
//! three letters, a context (`any`, `initial`, `after-vowel`, `final`) and
//! an Arabic-script output of at most three letters. An empty output is
//! spelled `∅`. Lines starting with `@` are directives.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::alphabet::{self, APOSTROPHE, DEFAULT_VOWELS, EXTRA_LETTERS, HAWAR_LETTERS};

/// Longest pattern or output a rule may carry, in characters.
pub const MAX_RULE_LEN: usize = 3;

/// Literal used in rule files for an empty output.
pub const EMPTY_OUTPUT: &str = "∅";

const DEFAULT_TABLE: &str = include_str!("../data/hawar-sorani.rules");

/// Where in a word a rule may fire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Context {
    Any,
    WordInitial,
    /// The preceding Latin character is a vowel, whether or not it produced output.
    AfterVowel,
    /// The match ends at the last character of the word.
    WordFinal,
}

impl Context {
    pub fn as_str(self) -> &'static str {
        match self {
            Context::Any => "any",
            Context::WordInitial => "initial",
            Context::AfterVowel => "after-vowel",
            Context::WordFinal => "final",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "any" => Context::Any,
            "initial" => Context::WordInitial,
            "after-vowel" => Context::AfterVowel,
            "final" => Context::WordFinal,
            _ => return None,
        })
    }

    pub fn is_specific(self) -> bool {
        self != Context::Any
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSource {
    BuiltIn,
    UserFile,
}

/// Which side of a rule an offending character was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Pattern,
    Output,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Pattern => "pattern",
            Side::Output => "output",
        })
    }
}

/// One Latin pattern to Arabic-script output mapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub pattern: String,
    pub context: Context,
    pub output: String,
    pub source: RuleSource,
}

impl Rule {
    pub fn pattern_len(&self) -> usize {
        self.pattern.chars().count()
    }

    pub fn output_len(&self) -> usize {
        self.output.chars().count()
    }
}

/// The rule chosen at a position and how many Latin characters it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleMatch<'a> {
    pub rule: &'a Rule,
    pub consumed: usize,
}

/// Positional facts about the character being matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatchContext {
    pub word_initial: bool,
    pub after_vowel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("line {line}: MalformedLine: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error(
        "line {line}: DuplicateRule: pattern {pattern:?} with context {context} is already defined"
    )]
    DuplicateRule {
        line: usize,
        pattern: String,
        context: Context,
    },
    #[error("line {line}: DuplicateException: word {word:?} is already defined")]
    DuplicateException { line: usize, word: String },
    #[error("line {line}: IllegalCharacter: {ch:?} (U+{:04X}) is not allowed in the {side}", *ch as u32)]
    IllegalCharacter { line: usize, ch: char, side: Side },
    #[error("line {line}: PatternTooLong: {pattern:?} has {len} letters, the maximum is 3")]
    PatternTooLong {
        line: usize,
        pattern: String,
        len: usize,
    },
    #[error("line {line}: OutputTooLong: {output:?} has {len} letters, the maximum is 3")]
    OutputTooLong {
        line: usize,
        output: String,
        len: usize,
    },
}

/// An ordered, validated rule table plus a whole-word exception lexicon.
///
/// Immutable once built; lookups only borrow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<Rule>,
    exceptions: BTreeMap<String, String>,
    latin_vowels: BTreeSet<char>,
    version: String,
    // first pattern char -> entries, longest pattern first, then table order
    index: HashMap<char, Vec<IndexEntry>>,
    max_pattern_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct IndexEntry {
    pattern: Box<[char]>,
    rule: usize,
}

/// Gaps found by [`RuleSet::coverage_gaps`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoverageGaps {
    /// Latin letters (plus apostrophe) with no context-free rule.
    pub unmapped_letters: Vec<char>,
    /// Of ح, ع, غ, those no rule emits.
    pub missing_outputs: Vec<char>,
}

impl CoverageGaps {
    pub fn is_empty(&self) -> bool {
        self.unmapped_letters.is_empty() && self.missing_outputs.is_empty()
    }
}

impl RuleSet {
    /// Build from parts, checking each rule against the alphabets and bounds.
    pub fn new(
        rules: Vec<Rule>,
        exceptions: BTreeMap<String, String>,
        latin_vowels: BTreeSet<char>,
        version: impl Into<String>,
    ) -> Result<Self, RuleError> {
        let mut builder = Builder::new(RuleSource::UserFile);
        builder.version = version.into();
        builder.vowels = Some(latin_vowels);
        for (i, rule) in rules.into_iter().enumerate() {
            builder.source = rule.source;
            builder.push_rule(i + 1, &rule.pattern, rule.context, &rule.output)?;
        }
        for (word, output) in exceptions {
            builder.push_exception(0, &word, &output)?;
        }
        Ok(builder.finish())
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn exceptions(&self) -> &BTreeMap<String, String> {
        &self.exceptions
    }

    pub fn exception(&self, folded_word: &str) -> Option<&str> {
        self.exceptions.get(folded_word).map(String::as_str)
    }

    /// Whether some exception word has exactly `chars` characters.
    pub fn has_exception_len(&self, chars: usize) -> bool {
        self.exceptions.keys().any(|w| w.chars().count() == chars)
    }

    pub fn latin_vowels(&self) -> &BTreeSet<char> {
        &self.latin_vowels
    }

    pub fn is_vowel(&self, ch: char) -> bool {
        self.latin_vowels.contains(&ch)
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn max_pattern_len(&self) -> usize {
        self.max_pattern_len
    }

    /// Pick the rule that applies at `word[pos]`.
    ///
    /// Longer patterns win; at equal length a context-specific rule whose
    /// condition holds beats `Any`; remaining ties go to table order. A
    /// length whose only rules have failing conditions falls through to
    /// shorter patterns.
    pub fn lookup(&self, word: &[char], pos: usize, at: MatchContext) -> Option<RuleMatch<'_>> {
        let rest = word.get(pos..)?;
        let candidates = self.index.get(rest.first()?)?;
        let mut fallback: Option<(&Rule, usize)> = None;
        // candidates run longest first, table order within a length
        for entry in candidates {
            let len = entry.pattern.len();
            if let Some((rule, consumed)) = fallback {
                if len < consumed {
                    return Some(RuleMatch { rule, consumed });
                }
            }
            if len > rest.len() || rest[..len] != entry.pattern[..] {
                continue;
            }
            let rule = &self.rules[entry.rule];
            let holds = match rule.context {
                Context::Any => {
                    fallback.get_or_insert((rule, len));
                    continue;
                }
                Context::WordInitial => at.word_initial,
                Context::AfterVowel => at.after_vowel,
                Context::WordFinal => len == rest.len(),
            };
            if holds {
                return Some(RuleMatch {
                    rule,
                    consumed: len,
                });
            }
        }
        fallback.map(|(rule, consumed)| RuleMatch { rule, consumed })
    }

    /// Report Latin letters without a context-free rule and missing ح/ع/غ outputs.
    pub fn coverage_gaps(&self) -> CoverageGaps {
        let single = |ch: char, ctx: Context| {
            self.index.get(&ch).is_some_and(|entries| {
                entries
                    .iter()
                    .any(|e| e.pattern.len() == 1 && self.rules[e.rule].context == ctx)
            })
        };
        let unmapped_letters = HAWAR_LETTERS
            .iter()
            .chain(EXTRA_LETTERS.iter())
            .chain(std::iter::once(&APOSTROPHE))
            .copied()
            .filter(|&ch| !single(ch, Context::Any))
            .collect();
        let missing_outputs = ['ح', 'ع', 'غ']
            .into_iter()
            .filter(|&ch| !self.rules.iter().any(|r| r.output.contains(ch)))
            .collect();
        CoverageGaps {
            unmapped_letters,
            missing_outputs,
        }
    }

    /// Render in the rule-file format; [`parse_rules`] reads it back unchanged.
    pub fn to_rules_file(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("@version\t{}\n", self.version));
        let vowels: Vec<String> = self.latin_vowels.iter().map(char::to_string).collect();
        out.push_str(&format!("@vowels\t{}\n", vowels.join(" ")));
        for rule in &self.rules {
            let output = if rule.output.is_empty() {
                EMPTY_OUTPUT
            } else {
                &rule.output
            };
            out.push_str(&format!("{}\t{}\t{}\n", rule.pattern, rule.context, output));
        }
        for (word, output) in &self.exceptions {
            out.push_str(&format!("@except\t{word}\t{output}\n"));
        }
        out
    }
}

/// Parse a user rule file. Rules keep file order.
pub fn parse_rules(text: &str) -> Result<RuleSet, RuleError> {
    parse_with_source(text, RuleSource::UserFile)
}

/// The built-in Hawar to Sorani table.
pub fn default_rules() -> RuleSet {
    parse_with_source(DEFAULT_TABLE, RuleSource::BuiltIn).expect("built-in rule table is valid")
}

/// Text of the built-in table as shipped.
pub fn default_rules_text() -> &'static str {
    DEFAULT_TABLE
}

fn parse_with_source(text: &str, source: RuleSource) -> Result<RuleSet, RuleError> {
    let mut builder = Builder::new(source);
    let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let malformed = |reason: &str| RuleError::MalformedLine {
            line: line_no,
            reason: reason.to_string(),
        };
        if let Some(directive) = fields[0].strip_prefix('@') {
            match (directive, fields.len()) {
                ("version", 2) => {
                    let v = fields[1].trim();
                    if v.is_empty() {
                        return Err(malformed("empty version tag"));
                    }
                    builder.version = v.to_string();
                }
                ("vowels", 2) => {
                    let mut set = BTreeSet::new();
                    for tok in fields[1].split_whitespace() {
                        let tok: String = tok.nfc().collect();
                        let mut chars = tok.chars();
                        let (Some(ch), None) = (chars.next(), chars.next()) else {
                            return Err(malformed("vowels must be single letters"));
                        };
                        if !alphabet::is_latin_letter(ch) {
                            return Err(RuleError::IllegalCharacter {
                                line: line_no,
                                ch,
                                side: Side::Pattern,
                            });
                        }
                        set.insert(ch);
                    }
                    builder.vowels = Some(set);
                }
                ("except", 3) => builder.push_exception(line_no, fields[1], fields[2])?,
                ("version" | "vowels" | "except", _) => {
                    return Err(malformed("wrong number of TAB-separated fields"))
                }
                _ => return Err(malformed("unknown directive")),
            }
            continue;
        }
        if fields.len() != 3 {
            return Err(malformed("expected pattern TAB context TAB output"));
        }
        let context = Context::parse(fields[1]).ok_or_else(|| malformed("unknown context"))?;
        let output = if fields[2] == EMPTY_OUTPUT {
            ""
        } else if fields[2].is_empty() {
            return Err(malformed("empty output must be written as ∅"));
        } else {
            fields[2]
        };
        builder.push_rule(line_no, fields[0], context, output)?;
    }
    Ok(builder.finish())
}

struct Builder {
    source: RuleSource,
    rules: Vec<Rule>,
    exceptions: BTreeMap<String, String>,
    vowels: Option<BTreeSet<char>>,
    version: String,
}

impl Builder {
    fn new(source: RuleSource) -> Self {
        Self {
            source,
            rules: Vec::new(),
            exceptions: BTreeMap::new(),
            vowels: None,
            version: "unversioned".to_string(),
        }
    }

    fn push_rule(
        &mut self,
        line: usize,
        pattern: &str,
        context: Context,
        output: &str,
    ) -> Result<(), RuleError> {
        let pattern = normalize_latin(line, pattern)?;
        let len = pattern.chars().count();
        if len == 0 {
            return Err(RuleError::MalformedLine {
                line,
                reason: "empty pattern".to_string(),
            });
        }
        if len > MAX_RULE_LEN {
            return Err(RuleError::PatternTooLong { line, pattern, len });
        }
        let output = normalize_arabic(line, output)?;
        let out_len = output.chars().count();
        if out_len > MAX_RULE_LEN {
            return Err(RuleError::OutputTooLong {
                line,
                output,
                len: out_len,
            });
        }
        if self
            .rules
            .iter()
            .any(|r| r.pattern == pattern && r.context == context)
        {
            return Err(RuleError::DuplicateRule {
                line,
                pattern,
                context,
            });
        }
        self.rules.push(Rule {
            pattern,
            context,
            output,
            source: self.source,
        });
        Ok(())
    }

    fn push_exception(&mut self, line: usize, word: &str, output: &str) -> Result<(), RuleError> {
        let word = normalize_latin(line, word)?;
        let output = normalize_arabic(line, output)?;
        if word.is_empty() || output.is_empty() {
            return Err(RuleError::MalformedLine {
                line,
                reason: "exception word and output must be non-empty".to_string(),
            });
        }
        if self.exceptions.contains_key(&word) {
            return Err(RuleError::DuplicateException { line, word });
        }
        self.exceptions.insert(word, output);
        Ok(())
    }

    fn finish(self) -> RuleSet {
        let mut index: HashMap<char, Vec<IndexEntry>> = HashMap::new();
        let mut max_pattern_len = 0;
        for (i, rule) in self.rules.iter().enumerate() {
            let pattern: Box<[char]> = rule.pattern.chars().collect();
            max_pattern_len = max_pattern_len.max(pattern.len());
            index
                .entry(pattern[0])
                .or_default()
                .push(IndexEntry { pattern, rule: i });
        }
        for entries in index.values_mut() {
            entries.sort_by_key(|e| std::cmp::Reverse(e.pattern.len()));
        }
        RuleSet {
            rules: self.rules,
            exceptions: self.exceptions,
            latin_vowels: self
                .vowels
                .unwrap_or_else(|| DEFAULT_VOWELS.into_iter().collect()),
            version: self.version,
            index,
            max_pattern_len,
        }
    }
}

fn normalize_latin(line: usize, s: &str) -> Result<String, RuleError> {
    s.nfc()
        .map(|ch| {
            let ch = if alphabet::is_apostrophe(ch) {
                APOSTROPHE
            } else {
                ch
            };
            if alphabet::is_pattern_char(ch) {
                Ok(ch)
            } else {
                Err(RuleError::IllegalCharacter {
                    line,
                    ch,
                    side: Side::Pattern,
                })
            }
        })
        .collect()
}

fn normalize_arabic(line: usize, s: &str) -> Result<String, RuleError> {
    s.nfc()
        .map(|ch| {
            if alphabet::is_output_char(ch) {
                Ok(ch)
            } else {
                Err(RuleError::IllegalCharacter {
                    line,
                    ch,
                    side: Side::Output,
                })
            }
        })
        .collect()
}
