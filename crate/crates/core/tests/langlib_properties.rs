use levisom::constructs::theorem6_language;
use levisom::constructs::TruncationSpec;
use levisom::editdist::{hamming, lev, Weights};
use levisom::langlib::{growth, is_subsequence, minimal_words, stretch, Language, Word};
use levisom::Rat;
use proptest::prelude::*;

fn word(max_len: usize, alphabet: &'static str) -> impl Strategy<Value = Word> {
    proptest::collection::vec(proptest::sample::select(alphabet.as_bytes().to_vec()), 0..=max_len).prop_map(|bytes| {
        if bytes.is_empty() {
            Word::empty()
        } else {
            Word::parse(std::str::from_utf8(&bytes).unwrap()).unwrap()
        }
    })
}

/// Subsequence test by trying every subset of positions of `v`.
fn subsequence_by_subsets(u: &Word, v: &Word) -> bool {
    let (u, v) = (u.as_bytes(), v.as_bytes());
    (0u32..1 << v.len()).any(|mask| {
        let picked: Vec<u8> = v.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &b)| b).collect();
        picked == u
    })
}

#[test]
fn reference_values() {
    let w = |s: &str| Word::parse(s).unwrap();
    assert!(is_subsequence(&Word::empty(), &w("abc")));
    assert!(is_subsequence(&w("0"), &w("01")));
    assert!(is_subsequence(&w("11"), &w("101")));
    assert_eq!(stretch(&w("ab"), &w("xy")), w("xyaxyb"));
    assert_eq!(stretch(&Word::empty(), &w("xy")), Word::empty());
    assert_eq!(stretch(&w("01"), &w("1110111")).len(), 16);
    let l = Language::parse("0\n01\n11\n").unwrap();
    assert_eq!(minimal_words(&l).words(), &[w("0"), w("11")]);
    assert_eq!(growth(&Language::parse("<eps>\n0\n00\n").unwrap(), 1), 2);
}

#[test]
fn marker_layers_minimal_words_and_growth() {
    let l = theorem6_language(TruncationSpec::new(3).unwrap()).unwrap();
    let m = minimal_words(&l);
    assert_eq!(m.len(), 2);
    assert!(m.iter().all(|w| w.len() == 6));
    assert_eq!(growth(&l, 12), 6);
    assert_eq!(growth(&l, 0), 0);
}

#[test]
fn language_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lang.txt");
    let l = Language::parse("# header\n<eps>\n0\n1  # trailing comment\n").unwrap();
    l.save(&path, Some("sample")).unwrap();
    assert_eq!(Language::load(&path).unwrap(), l);
    assert!(Language::parse("0\n\n1\n").is_err());
    assert!(Language::parse("0\n0\n").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn greedy_matches_subset_search(u in word(4, "01"), v in word(7, "01")) {
        prop_assert_eq!(is_subsequence(&u, &v), subsequence_by_subsets(&u, &v));
    }

    #[test]
    fn subsequence_is_a_partial_order(u in word(5, "ab"), v in word(5, "ab"), x in word(5, "ab")) {
        prop_assert!(is_subsequence(&u, &u));
        if is_subsequence(&u, &v) && is_subsequence(&v, &u) {
            prop_assert_eq!(&u, &v);
        }
        if is_subsequence(&u, &v) && is_subsequence(&v, &x) {
            prop_assert!(is_subsequence(&u, &x));
        }
    }

    #[test]
    fn stretch_length_law(w in word(8, "012"), p in word(6, "ab")) {
        prop_assert_eq!(stretch(&w, &p).len(), w.len() * (p.len() + 1));
    }

    /// With pattern `a^k b a^k`, `k > h`, the stretched distance is `theta * h`.
    #[test]
    fn stretched_distance_is_theta_times_hamming(
        pair in (0usize..=5).prop_flat_map(|n| (proptest::collection::vec(0u8..3, n), proptest::collection::vec(0u8..3, n))),
        extra in 1usize..3,
        theta_idx in 0usize..4,
        ab in (0u8..3, 1u8..3),
    ) {
        let to_word = |d: &[u8]| {
            let s: String = d.iter().map(|&x| (b'0' + x) as char).collect();
            if s.is_empty() { Word::empty() } else { Word::parse(&s).unwrap() }
        };
        let (w1, w2) = (to_word(&pair.0), to_word(&pair.1));
        let h = hamming(&w1, &w2).unwrap();
        let (a, b) = ((b'0' + ab.0) as char, (b'0' + (ab.0 + ab.1) % 3) as char);
        let k = h + extra;
        let pattern = Word::parse(&format!("{}{b}{}", a.to_string().repeat(k), a.to_string().repeat(k))).unwrap();
        let theta = [Rat::new(1, 2), Rat::one(), Rat::new(3, 2), Rat::from_integer(2)][theta_idx].clone();
        let d = lev(&stretch(&w1, &pattern), &stretch(&w2, &pattern), &Weights::unit_gamma(theta.clone()).unwrap());
        prop_assert_eq!(d, theta.scale(h as i64));
    }
}
