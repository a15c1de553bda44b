use levisom::editdist::{distance_matrix_of, hamming, lev, lev_oracle, normalize, Weights};
use levisom::langlib::{is_subsequence, Word};
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

fn rat(max_num: i64, max_den: i64) -> impl Strategy<Value = Rat> {
    (1..=max_num, 1..=max_den).prop_map(|(p, q)| Rat::new(p, q))
}

/// Weights with `theta / gamma <= 2`.
fn capped_weights() -> impl Strategy<Value = Weights> {
    (rat(4, 3), (1i64..=6).prop_flat_map(|q| (1..=2 * q, Just(q))))
        .prop_map(|(g, (p, q))| Weights::new(g.clone(), &g * &Rat::new(p, q)).unwrap())
}

fn any_weights() -> impl Strategy<Value = Weights> {
    (rat(5, 4), rat(12, 4)).prop_map(|(g, t)| Weights::new(g, t).unwrap())
}

fn all_words(alphabet: &[u8], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier.iter().flat_map(|s| alphabet.iter().map(move |&c| format!("{s}{}", c as char))).collect();
        out.extend(frontier.iter().map(|s| Word::parse(s).unwrap()));
    }
    out
}

#[test]
fn dynamic_program_matches_exhaustive_oracle_on_ternary_words() {
    let words = all_words(b"abc", 3);
    for w in [
        Weights::classical(),
        Weights::new(Rat::new(2, 3), Rat::new(5, 7)).unwrap(),
        Weights::unit_gamma(Rat::from_integer(3)).unwrap(),
    ] {
        for u in &words {
            for v in &words {
                assert_eq!(lev(u, v, &w), lev_oracle(u, v, &w).unwrap(), "{u} {v} {w:?}");
            }
        }
    }
}

#[test]
fn oracle_refuses_long_words() {
    let long = Word::parse("01010101").unwrap();
    assert!(lev_oracle(&long, &long, &Weights::classical()).is_err());
}

#[test]
fn reference_values() {
    let w = |s: &str| Word::parse(s).unwrap();
    let c = Weights::classical();
    assert_eq!(lev(&w("<eps>"), &w("011"), &c), Rat::from_integer(3));
    assert_eq!(lev(&w("kitten"), &w("sitting"), &c), Rat::from_integer(3));
    assert_eq!(lev(&w("01"), &w("10"), &Weights::unit_gamma(Rat::from_integer(2)).unwrap()), Rat::from_integer(2));
    assert_eq!(lev(&w("0"), &w("1"), &Weights::unit_gamma(Rat::new(1, 2)).unwrap()), Rat::new(1, 2));
    assert_eq!(hamming(&w("110010"), &w("010110")).unwrap(), 2);
    let n = normalize(&Weights::new(Rat::from_integer(3), Rat::from_integer(4)).unwrap());
    assert_eq!((n.theta_prime, n.scale), (Rat::new(4, 3), Rat::from_integer(3)));
}

#[test]
fn matrix_rejects_duplicates() {
    let w = Word::parse("01").unwrap();
    assert!(distance_matrix_of(&[w.clone(), w], &Weights::classical()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn agrees_with_oracle(u in word(6, "01"), v in word(6, "01"), w in any_weights()) {
        prop_assert_eq!(lev(&u, &v, &w), lev_oracle(&u, &v, &w).unwrap());
    }

    #[test]
    fn metric_axioms(u in word(8, "abc"), v in word(8, "abc"), x in word(8, "abc"), w in any_weights()) {
        let uv = lev(&u, &v, &w);
        prop_assert!(lev(&u, &u, &w).is_zero());
        prop_assert_eq!(uv.is_zero(), u == v);
        prop_assert_eq!(&uv, &lev(&v, &u, &w));
        prop_assert!(lev(&u, &x, &w) <= &uv + &lev(&v, &x, &w));
    }

    #[test]
    fn context_and_reversal_invariance(
        u in word(7, "01"), v in word(7, "01"), p in word(4, "01"), s in word(4, "01"), w in any_weights()
    ) {
        let d = lev(&u, &v, &w);
        prop_assert_eq!(&lev(&p.concat(&u).concat(&s), &p.concat(&v).concat(&s), &w), &d);
        prop_assert_eq!(&lev(&u.reversed(), &v.reversed(), &w), &d);
    }

    #[test]
    fn bounds_and_equality_case(u in word(9, "01"), v in word(9, "01"), w in capped_weights()) {
        let d = lev(&u, &v, &w);
        let (lo, hi) = (u.len().min(v.len()) as i64, u.len().max(v.len()) as i64);
        let upper = &(w.theta() - w.gamma()).scale(lo) + &w.gamma().scale(hi);
        let lower = w.gamma().scale(hi - lo);
        prop_assert!(d <= upper);
        prop_assert!(d >= lower);
        let (short, long) = if u.len() <= v.len() { (&u, &v) } else { (&v, &u) };
        prop_assert_eq!(d == lower, is_subsequence(short, long));
    }

    #[test]
    fn homothety(u in word(8, "01"), v in word(8, "01"), w in any_weights()) {
        let n = normalize(&w);
        prop_assert!(n.theta_prime <= Rat::from_integer(2));
        prop_assert_eq!(lev(&u, &v, &w), &n.scale * &lev(&u, &v, &n.weights()));
    }

    #[test]
    fn equal_length_distance_at_most_theta_times_hamming(u in word(8, "01"), w in capped_weights(), flips in proptest::collection::vec(any::<bool>(), 8)) {
        let flipped: String = u.as_bytes().iter().zip(&flips).map(|(&b, &f)| if f { (b ^ 1) as char } else { b as char }).collect();
        let v = if flipped.is_empty() { Word::empty() } else { Word::parse(&flipped).unwrap() };
        let h = hamming(&u, &v).unwrap() as i64;
        prop_assert!(lev(&u, &v, &w) <= w.theta().scale(h));
    }
}
