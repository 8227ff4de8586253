//! Character inventories for both sides of the mapping.

/// Canonical apostrophe used in folded words and rule patterns.
pub const APOSTROPHE: char = '\'';

/// The Hawar base letters in alphabetical order, lowercase.
pub const HAWAR_LETTERS: [char; 31] = [
    'a', 'b', 'c', 'ç', 'd', 'e', 'ê', 'f', 'g', 'h', 'i', 'î', 'j', 'k', 'l', 'm', 'n', 'o', 'p',
    'q', 'r', 's', 'ş', 't', 'u', 'û', 'v', 'w', 'x', 'y', 'z',
];

/// Letters outside the base Hawar set that Kurmanji texts use for ح and غ.
pub const EXTRA_LETTERS: [char; 2] = ['ḧ', 'ẍ'];

/// Vowel letters used for the after-vowel context when a rule file declares none.
pub const DEFAULT_VOWELS: [char; 8] = ['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];

/// Letters a Sorani rule may emit.
pub const ARABIC_LETTERS: &str = concat!(
    // Sorani alphabet
    "ئابپتجچحخدرڕزژسشعغفڤقکگلڵمنهەوۆیێ",
    // Arabic letters kept for loanword spellings
    "ءآأإةثذصضطظكيىھ",
);

/// Any apostrophe-like character that real texts use in place of U+0027.
pub fn is_apostrophe(ch: char) -> bool {
    matches!(ch, '\'' | '\u{2019}' | '\u{02BC}')
}

/// Lowercase Kurdish Latin letter accepted in rule patterns.
pub fn is_latin_letter(ch: char) -> bool {
    HAWAR_LETTERS.contains(&ch) || EXTRA_LETTERS.contains(&ch)
}

/// Character allowed on the Latin side of a rule.
pub fn is_pattern_char(ch: char) -> bool {
    is_latin_letter(ch) || ch == APOSTROPHE
}

/// Character allowed on the Arabic side of a rule.
pub fn is_output_char(ch: char) -> bool {
    ARABIC_LETTERS.contains(ch)
}

/// Kurdish Latin letter in either case.
pub fn is_kurdish_latin(ch: char) -> bool {
    ch.is_ascii_alphabetic()
        || matches!(
            ch,
            'ç' | 'Ç' | 'ê' | 'Ê' | 'î' | 'Î' | 'ş' | 'Ş' | 'û' | 'Û' | 'ḧ' | 'Ḧ' | 'ẍ' | 'Ẍ'
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_lowercase_letter_is_kurdish_latin() {
        for ch in HAWAR_LETTERS.iter().chain(EXTRA_LETTERS.iter()) {
            assert!(is_kurdish_latin(*ch), "{ch}");
            for upper in ch.to_uppercase() {
                assert!(is_kurdish_latin(upper), "{upper}");
            }
        }
    }

    #[test]
    fn hawar_covers_ascii() {
        for ch in 'a'..='z' {
            assert!(HAWAR_LETTERS.contains(&ch));
        }
    }

    #[test]
    fn output_alphabet() {
        assert!(is_output_char('ڵ'));
        assert!(is_output_char('ئ'));
        assert!(!is_output_char('a'));
        assert!(!is_output_char(' '));
    }
}
