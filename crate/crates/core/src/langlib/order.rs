//! Subsequence order, minimal words, growth and word stretching.

use crate::langlib::{Language, Word};

/// True iff `u` is obtained from `v` by deleting symbols.
pub fn is_subsequence(u: &Word, v: &Word) -> bool {
    let mut it = v.as_bytes().iter();
    u.as_bytes().iter().all(|c| it.any(|d| d == c))
}

/// Words of `lang` that have no other word of `lang` as a subsequence.
pub fn minimal_words(lang: &Language) -> Language {
    let words = lang.words();
    let minimal = words
        .iter()
        .enumerate()
        .filter(|&(i, w)| !words.iter().enumerate().any(|(j, v)| j != i && v.len() < w.len() && is_subsequence(v, w)))
        .map(|(_, w)| w.clone())
        .collect();
    Language::new(minimal).expect("subset of a language has no duplicates")
}

/// Number of words of length at most `n`.
pub fn growth(lang: &Language, n: usize) -> usize {
    lang.iter().filter(|w| w.len() <= n).count()
}

/// Word stretching: every symbol of `w` is preceded by a copy of `pattern`.
///
/// Unfolds `st(Λ, p) = Λ`, `st(w a, p) = st(w, p) p a`.
pub fn stretch(w: &Word, pattern: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len() * (pattern.len() + 1));
    for &a in w.as_bytes() {
        out.extend_from_slice(pattern.as_bytes());
        out.push(a);
    }
    Word::from_valid_bytes(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lang(ws: &[&str]) -> Language {
        Language::new(ws.iter().map(|s| w(s)).collect()).unwrap()
    }

    #[test]
    fn subsequence_examples() {
        assert!(is_subsequence(&Word::empty(), &w("abc")));
        assert!(is_subsequence(&w("0"), &w("01")));
        assert!(!is_subsequence(&w("011"), &w("101")));
        assert!(!is_subsequence(&w("ab"), &w("ba")));
    }

    #[test]
    fn subsequence_11_in_101() {
        // "101" has two 1s, so "11" embeds.
        assert!(is_subsequence(&w("11"), &w("101")));
        assert!(!is_subsequence(&w("111"), &w("101")));
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(minimal_words(&lang(&["0", "01", "11"])), lang(&["0", "11"]));
        assert_eq!(minimal_words(&lang(&["a"])), lang(&["a"]));
        assert_eq!(minimal_words(&lang(&["<eps>", "a", "b"])), lang(&["<eps>"]));
    }

    #[test]
    fn growth_examples() {
        let l = lang(&["<eps>", "0", "00"]);
        assert_eq!(growth(&l, 1), 2);
        assert_eq!(growth(&l, 0), 1);
        assert_eq!(growth(&lang(&["0"]), 0), 0);
    }

    #[test]
    fn stretch_examples() {
        assert_eq!(stretch(&Word::empty(), &w("xy")), Word::empty());
        assert_eq!(stretch(&w("ab"), &w("xy")), w("xyaxyb"));
        assert_eq!(stretch(&w("01"), &w("1110111")).len(), 16);
    }
}
