//! Engine and lookup checked against brute-force reference matchers.

mod support;

use kurdish_translit::{
    default_rules, fold_word, parse_rules, transliterate_word, Context, EngineConfig, MatchContext,
    RuleSet,
};
use support::{
    for_each_word, naive_lookup, oracle_transliterate, CORRESPONDENCE, GREEDY_ALPHABET, LETTERS,
};

fn assert_lookup_matches_naive(rs: &RuleSet, word: &str) {
    let chars: Vec<char> = word.chars().collect();
    for pos in 0..chars.len() {
        let at = MatchContext {
            word_initial: pos == 0,
            after_vowel: pos > 0 && rs.is_vowel(chars[pos - 1]),
        };
        let fast = rs.lookup(&chars, pos, at);
        let slow = naive_lookup(rs, &chars, pos);
        assert_eq!(
            fast.map(|m| m.rule as *const _),
            slow.map(|r| r as *const _),
            "{word:?} at {pos}"
        );
        if let Some(m) = fast {
            assert_eq!(m.consumed, m.rule.pattern_len());
        }
    }
}

#[test]
fn enumerator_counts() {
    let mut n = 0;
    for_each_word(&GREEDY_ALPHABET, 3, |_| n += 1);
    assert_eq!(n, 8 + 64 + 512);
}

#[test]
fn lookup_equals_naive_scan_on_default() {
    let rs = default_rules();
    for_each_word(&GREEDY_ALPHABET, 4, |w| assert_lookup_matches_naive(&rs, w));
    for_each_word(&['l', 'r', 'û', 'e', 'u'], 4, |w| {
        assert_lookup_matches_naive(&rs, w)
    });
}

// A table that exercises every context and the length-3 bound.
const SYNTHETIC: &str = "\
a\tany\tا
a\tinitial\tئا
a\tafter-vowel\tئا
n\tany\tن
n\tfinal\tنن
an\tany\tان
an\tfinal\tانە
ana\tany\tەنە
ana\tinitial\tئەن
nn\tafter-vowel\tڵ
i\tany\t∅
i\tafter-vowel\tئ
";

#[test]
fn lookup_equals_naive_scan_on_synthetic() {
    let rs = parse_rules(SYNTHETIC).unwrap();
    for_each_word(&['a', 'n', 'i', 'm'], 6, |w| {
        assert_lookup_matches_naive(&rs, w)
    });
}

#[test]
fn greedy_equals_oracle_exhaustive() {
    let rs = default_rules();
    let cfg = EngineConfig::default();
    let mut checked = 0;
    for_each_word(&GREEDY_ALPHABET, 5, |w| {
        assert_eq!(
            transliterate_word(w, &rs, &cfg),
            oracle_transliterate(&rs, w),
            "{w:?}"
        );
        checked += 1;
    });
    assert_eq!(checked, 8 + 64 + 512 + 4096 + 32768);
}

#[test]
fn greedy_equals_oracle_synthetic() {
    let rs = parse_rules(SYNTHETIC).unwrap();
    let cfg = EngineConfig::default();
    for_each_word(&['a', 'n', 'i'], 7, |w| {
        assert_eq!(
            transliterate_word(w, &rs, &cfg),
            oracle_transliterate(&rs, w),
            "{w:?}"
        );
    });
}

#[test]
fn default_table_agrees_with_reference_correspondence() {
    let rs = default_rules();
    for (latin, arabic) in CORRESPONDENCE {
        let rule = rs
            .rules()
            .iter()
            .find(|r| r.pattern == *latin && r.context == Context::Any)
            .unwrap_or_else(|| panic!("no context-free rule for {latin}"));
        assert_eq!(rule.output, arabic.unwrap_or(""), "{latin}");
    }
    for rule in rs.rules().iter().filter(|r| r.context == Context::Any) {
        assert!(
            CORRESPONDENCE.iter().any(|(l, _)| *l == rule.pattern),
            "{} is not in the reference",
            rule.pattern
        );
    }
    // positional variants are the carrier plus the plain vowel
    for rule in rs.rules().iter().filter(|r| r.context != Context::Any) {
        let (_, plain) = CORRESPONDENCE
            .iter()
            .find(|(l, _)| *l == rule.pattern)
            .unwrap();
        assert_eq!(
            rule.output,
            format!("ئ{}", plain.unwrap_or("")),
            "{}",
            rule.pattern
        );
    }
}

#[test]
fn worked_words_match_oracle() {
    let rs = default_rules();
    let cfg = EngineConfig::default();
    let cases = [
        ("min", "من"),
        ("diînine", "دئیننە"),
        ("se'îd", "سەعید"),
        ("kurdistan", "کوردستان"),
        ("tu", "تو"),
        ("û", "و"),
        ("şemdînanî", "شەمدینانی"),
        ("dillop", "دڵۆپ"),
    ];
    for (latin, arabic) in cases {
        assert_eq!(
            oracle_transliterate(&rs, &fold_word(latin)),
            arabic,
            "oracle {latin}"
        );
        assert_eq!(
            transliterate_word(latin, &rs, &cfg),
            arabic,
            "engine {latin}"
        );
    }
}

#[test]
fn every_letter_has_a_single_letter_match() {
    let rs = default_rules();
    for &ch in LETTERS {
        for word_initial in [false, true] {
            for after_vowel in [false, true] {
                let at = MatchContext {
                    word_initial,
                    after_vowel,
                };
                let m = rs.lookup(&[ch], 0, at).expect("match");
                assert_eq!(m.consumed, 1);
            }
        }
    }
}
