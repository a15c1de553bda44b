//! Generalized Levenshtein distances with exact rational weights.
//!
//! `lev(u, v, w)` is the least value of `gamma * (insertions + deletions) +
//! theta * (substitutions)` over all edit scripts turning `u` into `v`.
//! The dynamic program runs on integers: both weights are rescaled by the
//! least common denominator, so the result is exact.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::langlib::{Language, Word};
use crate::rat::Rat;

/// Longest word accepted by [`lev_oracle`].
pub const ORACLE_MAX_LEN: usize = 7;

/// Insertion/deletion weight `gamma` and substitution weight `theta`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Weights {
    gamma: Rat,
    theta: Rat,
}

impl Weights {
    pub fn new(gamma: Rat, theta: Rat) -> Result<Self> {
        if !gamma.is_positive() || !theta.is_positive() {
            return Err(Error::InvalidWeights(format!("gamma={gamma}, theta={theta}; both must be > 0")));
        }
        Ok(Weights { gamma, theta })
    }

    /// The classical metric, `gamma = theta = 1`.
    pub fn classical() -> Self {
        Weights { gamma: Rat::one(), theta: Rat::one() }
    }

    /// `gamma = 1` with the given substitution weight.
    pub fn unit_gamma(theta: Rat) -> Result<Self> {
        Weights::new(Rat::one(), theta)
    }

    pub fn gamma(&self) -> &Rat {
        &self.gamma
    }

    pub fn theta(&self) -> &Rat {
        &self.theta
    }
}

/// Weights `(1, theta_prime)` plus the homothety factor back to the original.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NormalizedWeights {
    pub theta_prime: Rat,
    pub scale: Rat,
}

impl NormalizedWeights {
    pub fn weights(&self) -> Weights {
        Weights::unit_gamma(self.theta_prime.clone()).expect("theta_prime > 0")
    }
}

/// `theta' = min(theta / gamma, 2)`, `scale = gamma`.
pub fn normalize(w: &Weights) -> NormalizedWeights {
    let ratio = w.theta.inner() / w.gamma.inner();
    let ratio = Rat::from_big(ratio.numer().clone(), ratio.denom().clone());
    NormalizedWeights { theta_prime: std::cmp::min(ratio, Rat::from_integer(2)), scale: w.gamma.clone() }
}

/// Integer-scaled weights: `gamma = g / unit`, `theta = t / unit`.
struct Scaled {
    g: BigInt,
    t: BigInt,
    unit: BigInt,
}

fn scaled(w: &Weights) -> Scaled {
    let unit = w.gamma.denom().lcm(w.theta.denom());
    let g = w.gamma.numer() * (&unit / w.gamma.denom());
    let t = w.theta.numer() * (&unit / w.theta.denom());
    Scaled { g, t, unit }
}

/// Two-row Wagner–Fischer table over any ordered additive cost type.
fn wagner_fischer<C>(a: &[u8], b: &[u8], g: C, t: C) -> C
where
    C: Clone + Ord + Zero + std::ops::Add<Output = C>,
{
    let mut prev: Vec<C> = Vec::with_capacity(b.len() + 1);
    let mut acc = C::zero();
    prev.push(acc.clone());
    for _ in b {
        acc = acc + g.clone();
        prev.push(acc.clone());
    }
    let mut cur = prev.clone();
    let mut row_start = C::zero();
    for &ca in a {
        row_start = row_start + g.clone();
        cur[0] = row_start.clone();
        for (j, &cb) in b.iter().enumerate() {
            let diag = if ca == cb { prev[j].clone() } else { prev[j].clone() + t.clone() };
            let del = prev[j + 1].clone() + g.clone();
            let ins = cur[j].clone() + g.clone();
            cur[j + 1] = diag.min(del).min(ins);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()].clone()
}

/// Exact generalized Levenshtein distance.
pub fn lev(u: &Word, v: &Word, w: &Weights) -> Rat {
    let s = scaled(w);
    let (a, b) = (u.as_bytes(), v.as_bytes());
    let steps = (a.len() + b.len()) as i128 + 1;
    let fast = match (s.g.to_i128(), s.t.to_i128()) {
        (Some(g), Some(t)) if g.checked_mul(steps).is_some() && t.checked_mul(steps).is_some() => {
            Some(BigInt::from(wagner_fischer(a, b, g, t)))
        }
        _ => None,
    };
    let cost = fast.unwrap_or_else(|| wagner_fischer(a, b, s.g.clone(), s.t.clone()));
    Rat::from_big(cost, s.unit)
}

/// Exhaustive edit-script search, independent of the dynamic program.
///
/// Every script is walked explicitly (keep or substitute, delete, insert at
/// each step). Scripts are summarized by their `(indels, substitutions)`
/// counts and the weighted minimum is taken at the end.
pub fn lev_oracle(u: &Word, v: &Word, w: &Weights) -> Result<Rat> {
    for x in [u, v] {
        if x.len() > ORACLE_MAX_LEN {
            return Err(Error::InputTooLong { len: x.len(), max: ORACLE_MAX_LEN });
        }
    }
    let mut outcomes = BTreeSet::new();
    explore(u.as_bytes(), v.as_bytes(), 0, 0, &mut outcomes);
    Ok(outcomes
        .into_iter()
        .map(|(n, m)| w.gamma.scale(n) + w.theta.scale(m))
        .min()
        .expect("at least one script exists"))
}

fn explore(a: &[u8], b: &[u8], indels: i64, subs: i64, out: &mut BTreeSet<(i64, i64)>) {
    match (a.split_first(), b.split_first()) {
        (None, _) | (_, None) => {
            out.insert((indels + (a.len() + b.len()) as i64, subs));
        }
        (Some((x, ar)), Some((y, br))) => {
            explore(ar, br, indels, subs + i64::from(x != y), out);
            explore(ar, b, indels + 1, subs, out);
            explore(a, br, indels + 1, subs, out);
        }
    }
}

/// Number of positions where two equal-length words differ.
pub fn hamming(u: &Word, v: &Word) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    Ok(u.as_bytes().iter().zip(v.as_bytes()).filter(|(a, b)| a != b).count())
}

/// Symmetric matrix of pairwise distances of a finite language.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DistanceMatrix {
    labels: Vec<Word>,
    entries: Vec<Vec<Rat>>,
}

/// One failed metric axiom, with the offending indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MetricViolation {
    NotSquare,
    NonZeroDiagonal(usize),
    NonPositive(usize, usize),
    Asymmetric(usize, usize),
    Triangle(usize, usize, usize),
}

impl DistanceMatrix {
    /// Builds a matrix from raw entries and checks the metric axioms.
    pub fn from_entries(labels: Vec<Word>, entries: Vec<Vec<Rat>>) -> std::result::Result<Self, MetricViolation> {
        let m = DistanceMatrix { labels, entries };
        if m.entries.len() != m.labels.len() || m.entries.iter().any(|r| r.len() != m.labels.len()) {
            return Err(MetricViolation::NotSquare);
        }
        m.check_metric().map(|()| m)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Word] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    /// Zero diagonal, positive symmetric off-diagonal, triangle inequality.
    pub fn check_metric(&self) -> std::result::Result<(), MetricViolation> {
        let n = self.n();
        for i in 0..n {
            if !self.entries[i][i].is_zero() {
                return Err(MetricViolation::NonZeroDiagonal(i));
            }
            for j in 0..n {
                if i != j && !self.entries[i][j].is_positive() {
                    return Err(MetricViolation::NonPositive(i, j));
                }
                if self.entries[i][j] != self.entries[j][i] {
                    return Err(MetricViolation::Asymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.entries[i][k] > &self.entries[i][j] + &self.entries[j][k] {
                        return Err(MetricViolation::Triangle(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Sorted distinct values, used as the colour palette by the solver.
    pub fn distinct_values(&self) -> Vec<Rat> {
        let set: BTreeSet<&Rat> = self.entries.iter().flatten().collect();
        set.into_iter().cloned().collect()
    }
}

/// Pairwise distances of `lang` in its own order. Entries are computed in
/// parallel; the result does not depend on scheduling.
pub fn distance_matrix(lang: &Language, w: &Weights) -> DistanceMatrix {
    let words = lang.words();
    let n = words.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let values: Vec<Rat> = pairs.par_iter().map(|&(i, j)| lev(&words[i], &words[j], w)).collect();
    let mut entries = vec![vec![Rat::zero(); n]; n];
    for ((i, j), d) in pairs.into_iter().zip(values) {
        entries[i][j] = d.clone();
        entries[j][i] = d;
    }
    DistanceMatrix { labels: words.to_vec(), entries }
}

/// Like [`distance_matrix`] for an arbitrary word list, rejecting repeats.
pub fn distance_matrix_of(words: &[Word], w: &Weights) -> Result<DistanceMatrix> {
    let lang = Language::new(words.to_vec())?;
    Ok(distance_matrix(&lang, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn wt(g: (i64, i64), t: (i64, i64)) -> Weights {
        Weights::new(Rat::new(g.0, g.1), Rat::new(t.0, t.1)).unwrap()
    }

    #[test]
    fn lev_examples() {
        let c = Weights::classical();
        assert_eq!(lev(&Word::empty(), &w("011"), &c), Rat::from_integer(3));
        assert_eq!(lev(&w("0101"), &w("0101"), &wt((7, 3), (5, 2))), Rat::zero());
        assert_eq!(lev(&w("kitten"), &w("sitting"), &c), Rat::from_integer(3));
        assert_eq!(lev(&w("01"), &w("10"), &wt((1, 1), (2, 1))), Rat::from_integer(2));
    }

    #[test]
    fn substitution_never_costs_more_than_two_indels() {
        assert_eq!(lev(&w("0"), &w("1"), &wt((1, 1), (5, 1))), Rat::from_integer(2));
        assert_eq!(lev(&w("0"), &w("1"), &wt((1, 1), (1, 2))), Rat::new(1, 2));
    }

    #[test]
    fn huge_weights_take_the_bigint_path() {
        let big = Rat::from_big(BigInt::from(10).pow(40), BigInt::from(3));
        let ws = Weights::new(big.clone(), big.clone()).unwrap();
        assert_eq!(lev(&w("abc"), &w("abd"), &ws), big);
    }

    #[test]
    fn oracle_examples() {
        let c = Weights::classical();
        assert_eq!(lev_oracle(&w("0"), &w("1"), &c).unwrap(), Rat::one());
        assert_eq!(lev_oracle(&Word::empty(), &Word::empty(), &wt((3, 1), (1, 7))).unwrap(), Rat::zero());
        assert_eq!(lev_oracle(&w("01"), &w("10"), &c).unwrap(), Rat::from_integer(2));
        assert!(matches!(lev_oracle(&w("01234567"), &w("0"), &c), Err(Error::InputTooLong { len: 8, max: 7 })));
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(&w("000"), &w("011")).unwrap(), 2);
        assert_eq!(hamming(&w("abc"), &w("abc")).unwrap(), 0);
        assert_eq!(hamming(&w("110010"), &w("010110")).unwrap(), 2);
        assert!(matches!(hamming(&w("0"), &w("01")), Err(Error::LengthMismatch { left: 1, right: 2 })));
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(&wt((3, 1), (4, 1)));
        assert_eq!((n.theta_prime, n.scale), (Rat::new(4, 3), Rat::from_integer(3)));
        let n = normalize(&wt((1, 1), (5, 1)));
        assert_eq!((n.theta_prime, n.scale), (Rat::from_integer(2), Rat::one()));
        let n = normalize(&Weights::classical());
        assert_eq!((n.theta_prime, n.scale), (Rat::one(), Rat::one()));
    }

    #[test]
    fn invalid_weights() {
        assert!(Weights::new(Rat::zero(), Rat::one()).is_err());
        assert!(Weights::new(Rat::one(), Rat::new(-1, 2)).is_err());
    }

    #[test]
    fn matrix_examples() {
        let single = Language::new(vec![Word::empty()]).unwrap();
        let m = distance_matrix(&single, &Weights::classical());
        assert_eq!(m.entries(), &[vec![Rat::zero()]]);

        let zeros_ones: Vec<Word> = ["0", "00", "000", "1", "11"].iter().map(|s| w(s)).collect();
        let m = distance_matrix_of(&zeros_ones, &wt((1, 1), (2, 1))).unwrap();
        for i in 0..3 {
            for j in 3..5 {
                let expect = zeros_ones[i].len() + zeros_ones[j].len();
                assert_eq!(m.get(i, j), &Rat::from(expect));
            }
        }
        assert!(m.check_metric().is_ok());

        let dup = [w("0"), w("0")];
        assert!(matches!(distance_matrix_of(&dup, &Weights::classical()), Err(Error::DuplicateWord(_))));
    }

    #[test]
    fn from_entries_rejects_non_metrics() {
        let labels = vec![w("a"), w("b"), w("c")];
        let r = |x: i64| Rat::from_integer(x);
        let bad = vec![vec![r(0), r(1), r(5)], vec![r(1), r(0), r(1)], vec![r(5), r(1), r(0)]];
        assert_eq!(DistanceMatrix::from_entries(labels.clone(), bad), Err(MetricViolation::Triangle(0, 1, 2)));
        let asym = vec![vec![r(0), r(1), r(1)], vec![r(2), r(0), r(1)], vec![r(1), r(1), r(0)]];
        assert!(DistanceMatrix::from_entries(labels, asym).is_err());
    }
}
