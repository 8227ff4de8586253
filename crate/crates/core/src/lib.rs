//! Rule-based transliteration of Kurdish text from Hawar Latin script into
//! Sorani Persian-Arabic script.
//!
//! ```
//! use kurdish_translit::{default_rules, transliterate_text, EngineConfig};
//!
//! let rules = default_rules();
//! let out = transliterate_text("min û tu", &rules, &EngineConfig::default());
//! assert_eq!(out, "من و تو");
//! ```

pub mod alphabet;
pub mod cli;
pub mod corpus;
pub mod engine;
pub mod ruleset;
pub mod scanner;

pub use corpus::{check_corpus, check_pairs, parse_corpus, CheckReport, CorpusError, CorpusPair};
pub use engine::{
    fold_word, map_symbols, transliterate_text, transliterate_text_strict, transliterate_word,
    Dialect, DigitMode, EngineConfig, PunctMode, Unmatched,
};
pub use ruleset::{
    default_rules, parse_rules, Context, MatchContext, Rule, RuleError, RuleMatch, RuleSet,
    RuleSource,
};
pub use scanner::{classify_char, segment, CharClass, Token, TokenKind};
