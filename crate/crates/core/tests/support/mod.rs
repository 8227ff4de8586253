//! Reference matchers that share no code with the engine's lookup path.

#![allow(dead_code)]

use std::cmp::Reverse;

use kurdish_translit::{Context, Rule, RuleSet};

/// Precedence key: longer first, then context-specific, then earlier.
pub type Key = (usize, bool, Reverse<usize>);

fn applies(rule: &Rule, word: &[char], pos: usize, vowels: &dyn Fn(char) -> bool) -> bool {
    let pattern: Vec<char> = rule.pattern.chars().collect();
    if pos + pattern.len() > word.len() || word[pos..pos + pattern.len()] != pattern[..] {
        return false;
    }
    match rule.context {
        Context::Any => true,
        Context::WordInitial => pos == 0,
        Context::AfterVowel => pos > 0 && vowels(word[pos - 1]),
        Context::WordFinal => pos + pattern.len() == word.len(),
    }
}

/// Every rule applicable at `pos`, with its precedence key.
pub fn candidates<'a>(rs: &'a RuleSet, word: &[char], pos: usize) -> Vec<(Key, &'a Rule)> {
    let vowels = |c: char| rs.latin_vowels().contains(&c);
    rs.rules()
        .iter()
        .enumerate()
        .filter(|(_, r)| applies(r, word, pos, &vowels))
        .map(|(i, r)| {
            (
                (
                    r.pattern.chars().count(),
                    r.context != Context::Any,
                    Reverse(i),
                ),
                r,
            )
        })
        .collect()
}

/// Linear scan over the whole table for the maximum key.
pub fn naive_lookup<'a>(rs: &'a RuleSet, word: &[char], pos: usize) -> Option<&'a Rule> {
    candidates(rs, word, pos)
        .into_iter()
        .max_by_key(|(k, _)| *k)
        .map(|(_, r)| r)
}

/// All ways to cover `word` with applicable rules. Characters with no
/// applicable rule are copied through as single steps.
pub fn all_parses(rs: &RuleSet, word: &[char]) -> Vec<(Vec<Option<Key>>, String)> {
    fn go(
        rs: &RuleSet,
        word: &[char],
        pos: usize,
        keys: &mut Vec<Option<Key>>,
        out: &mut String,
        acc: &mut Vec<(Vec<Option<Key>>, String)>,
    ) {
        if pos == word.len() {
            acc.push((keys.clone(), out.clone()));
            return;
        }
        let cands = candidates(rs, word, pos);
        if cands.is_empty() {
            keys.push(None);
            out.push(word[pos]);
            go(rs, word, pos + 1, keys, out, acc);
            out.pop();
            keys.pop();
            return;
        }
        for (key, rule) in cands {
            let len = out.len();
            keys.push(Some(key));
            out.push_str(&rule.output);
            go(rs, word, pos + key.0, keys, out, acc);
            out.truncate(len);
            keys.pop();
        }
    }
    let mut acc = Vec::new();
    go(rs, word, 0, &mut Vec::new(), &mut String::new(), &mut acc);
    acc
}

/// The parse whose key sequence is lexicographically greatest: the greedy one.
pub fn oracle_transliterate(rs: &RuleSet, word: &str) -> String {
    if let Some(exc) = rs.exceptions().get(word) {
        return exc.clone();
    }
    let chars: Vec<char> = word.chars().collect();
    all_parses(rs, &chars)
        .into_iter()
        .max_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, out)| out)
        .unwrap_or_default()
}

/// Hawar to Sorani letter correspondence, written out independently of the
/// shipped rule file. `None` marks the unwritten short vowel.
pub const CORRESPONDENCE: &[(&str, Option<&str>)] = &[
    ("a", Some("ا")),
    ("b", Some("ب")),
    ("c", Some("ج")),
    ("ç", Some("چ")),
    ("d", Some("د")),
    ("e", Some("ە")),
    ("ê", Some("ێ")),
    ("f", Some("ف")),
    ("g", Some("گ")),
    ("h", Some("ه")),
    ("ḧ", Some("ح")),
    ("i", None),
    ("î", Some("ی")),
    ("j", Some("ژ")),
    ("k", Some("ک")),
    ("l", Some("ل")),
    ("ll", Some("ڵ")),
    ("m", Some("م")),
    ("n", Some("ن")),
    ("o", Some("ۆ")),
    ("p", Some("پ")),
    ("q", Some("ق")),
    ("r", Some("ر")),
    ("rr", Some("ڕ")),
    ("s", Some("س")),
    ("ş", Some("ش")),
    ("t", Some("ت")),
    ("u", Some("و")),
    ("û", Some("وو")),
    ("v", Some("ڤ")),
    ("w", Some("و")),
    ("x", Some("خ")),
    ("ẍ", Some("غ")),
    ("y", Some("ی")),
    ("z", Some("ز")),
    ("'", Some("ع")),
];

/// Hawar letters plus apostrophe, lowercase.
pub const LETTERS: &[char] = &[
    'a', 'b', 'c', 'ç', 'd', 'e', 'ê', 'f', 'g', 'h', 'ḧ', 'i', 'î', 'j', 'k', 'l', 'm', 'n', 'o',
    'p', 'q', 'r', 's', 'ş', 't', 'u', 'û', 'v', 'w', 'x', 'ẍ', 'y', 'z', '\'',
];

/// The sub-alphabet used for exhaustive greedy-vs-oracle runs.
pub const GREEDY_ALPHABET: [char; 8] = ['l', 'r', 'i', 'î', 'a', 'm', 'n', '\''];

/// Call `f` on every word of length 1..=max_len over `alphabet`.
pub fn for_each_word(alphabet: &[char], max_len: usize, mut f: impl FnMut(&str)) {
    let mut buf = String::new();
    for len in 1..=max_len {
        let mut idx = vec![0usize; len];
        'odometer: loop {
            buf.clear();
            buf.extend(idx.iter().map(|&i| alphabet[i]));
            f(&buf);
            for k in (0..len).rev() {
                idx[k] += 1;
                if idx[k] < alphabet.len() {
                    continue 'odometer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
}
