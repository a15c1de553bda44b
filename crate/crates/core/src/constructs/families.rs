//! Generators for the layered language families.
//!
//! Infinite families are produced as finite truncations whose size is set by
//! a [`TruncationSpec`]. Every generator returns words in a fixed order:
//! layers by increasing length, and a deterministic order inside a layer.

use crate::constructs::SimpleGraph;
use crate::error::{Error, Result};
use crate::langlib::{stretch, Language, Word};

/// Number of layers (or the largest star exponent) to materialize.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TruncationSpec {
    depth: usize,
}

impl TruncationSpec {
    pub fn new(depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidParameter("truncation depth must be at least 1".into()));
        }
        Ok(TruncationSpec { depth })
    }

    pub fn depth(self) -> usize {
        self.depth
    }
}

fn word(bytes: Vec<u8>) -> Word {
    Word::from_valid_bytes(bytes)
}

fn zero_one_power(n: usize) -> Word {
    word(b"01".repeat(n))
}

/// One word per vertex; bit `j` is set iff the vertex lies on edge `j`
/// (edges in sorted order). Adjacent vertices end up at Hamming distance 4,
/// non-adjacent ones at 6.
pub fn encode_cubic_graph(g: &SimpleGraph) -> Result<Language> {
    g.check_cubic()?;
    let words = (0..g.n())
        .map(|v| word(g.edges().iter().map(|&(a, b)| if a == v || b == v { b'1' } else { b'0' }).collect()))
        .collect();
    Language::new(words)
}

/// Stretching pattern `1^7 0 1^7` for the graph encodings.
pub fn graph_stretch_pattern() -> Word {
    let mut p = vec![b'1'; 15];
    p[7] = b'0';
    word(p)
}

/// The graph encoding with every word stretched by `1^7 0 1^7`; words have
/// length `16 |E|`.
pub fn theorem2_language(g: &SimpleGraph) -> Result<Language> {
    let base = encode_cubic_graph(g)?;
    let pattern = graph_stretch_pattern();
    Language::new(base.iter().map(|w| stretch(w, &pattern)).collect())
}

/// `{Λ} ∪ L'_1 ∪ … ∪ L'_depth`, where `L'_{n+1}` prefixes `(01)^(l_n + 7)`
/// to the stretched encoding of `graphs[n]` and `l_n` is the word length of
/// the previous layer.
pub fn theorem3_language(graphs: &[SimpleGraph], t: TruncationSpec) -> Result<Language> {
    if t.depth() > graphs.len() {
        return Err(Error::DepthExceedsGraphs { depth: t.depth(), graphs: graphs.len() });
    }
    let mut words = vec![Word::empty()];
    let mut prev_len = 0;
    for g in &graphs[..t.depth()] {
        let layer = theorem2_language(g)?;
        let prefix = zero_one_power(prev_len + 7);
        let layer: Vec<Word> = layer.iter().map(|w| prefix.concat(w)).collect();
        prev_len = layer[0].len();
        words.extend(layer);
    }
    Language::new(words)
}

/// Largest depth accepted for each alphabet size `k`.
fn theorem4_max_depth(k: usize) -> Option<usize> {
    match k {
        2 => Some(3),
        3 => Some(2),
        4 => Some(1),
        _ => None,
    }
}

/// Word lengths of layers `1..=depth`, from the literal recursion
/// `l_n = k * l_(n-1) + k^n (2 k^(n+1) + 2)`.
pub fn theorem4_layer_lengths(k: usize, depth: usize) -> Vec<u128> {
    let k = k as u128;
    let mut prev = 0u128;
    (1..=depth as u32)
        .map(|n| {
            prev = k * prev + k.pow(n) * (2 * k.pow(n + 1) + 2);
            prev
        })
        .collect()
}

/// Lengths from the closed form `l(k, n) = l(k, n-1) + 2 k^n (k^(n+1) + 2)`,
/// kept for comparison; they differ from the constructed lengths.
pub fn theorem4_stated_lengths(k: usize, depth: usize) -> Vec<u128> {
    let k = k as u128;
    let mut prev = 0u128;
    (1..=depth as u32)
        .map(|n| {
            prev += 2 * k.pow(n) * (k.pow(n + 1) + 2);
            prev
        })
        .collect()
}

/// `{Λ} ∪ L_1 ∪ … ∪ L_depth` over the alphabet `0..k`, with
/// `L_n = (0 1 … k-1)^(l_(n-1)) · st(A^(k^n), 0^(k^(n+1)) 1 0^(k^(n+1)))`.
pub fn theorem4_language(k: usize, t: TruncationSpec) -> Result<Language> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("alphabet size k={k} must be at least 2")));
    }
    let max = theorem4_max_depth(k)
        .ok_or_else(|| Error::ParametersTooLarge(format!("alphabet size k={k}; supported k is 2..=4")))?;
    if t.depth() > max {
        return Err(Error::ParametersTooLarge(format!("depth {} for k={k}; at most {max}", t.depth())));
    }
    let alphabet: Vec<u8> = (0..k as u8).map(|d| b'0' + d).collect();
    let block = word(alphabet.clone());
    let mut words = vec![Word::empty()];
    let mut prev_len = 0;
    for n in 1..=t.depth() as u32 {
        let len = k.pow(n);
        let pad = k.pow(n + 1);
        let mut pattern = vec![b'0'; 2 * pad + 1];
        pattern[pad] = b'1';
        let pattern = word(pattern);
        let prefix = block.power(prev_len);
        let count = k.pow(len as u32);
        let mut digits = vec![0usize; len];
        let mut layer = Vec::with_capacity(count);
        for _ in 0..count {
            let w = word(digits.iter().map(|&d| alphabet[d]).collect());
            layer.push(prefix.concat(&stretch(&w, &pattern)));
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < k {
                    break;
                }
                *d = 0;
            }
        }
        prev_len = layer[0].len();
        words.extend(layer);
    }
    Language::new(words)
}

/// `L1 ∪ { (01)^(n+m) v (01)^(m p) : v ∈ L2, 0 ≤ p ≤ depth }` where `L1`,
/// `L2` are the stretched encodings of `g1`, `g2` with word lengths `n`, `m`.
pub fn theorem5_language(g1: &SimpleGraph, g2: &SimpleGraph, t: TruncationSpec) -> Result<Language> {
    let l1 = theorem2_language(g1)?;
    let l2 = theorem2_language(g2)?;
    let n = l1.words()[0].len();
    let m = l2.words()[0].len();
    let prefix = zero_one_power(n + m);
    let mut words = l1.into_words();
    for p in 0..=t.depth() {
        let suffix = zero_one_power(m * p);
        words.extend(l2.iter().map(|v| prefix.concat(v).concat(&suffix)));
    }
    Language::new(words)
}

/// `{ u (01)^(n p) : u ∈ L, 0 ≤ p ≤ depth }` for a language of uniform
/// word length `n`, layer by layer.
pub fn lemma5_language(lang: &Language, t: TruncationSpec) -> Result<Language> {
    let n = uniform_length(lang)?;
    let mut words = Vec::with_capacity(lang.len() * (t.depth() + 1));
    for p in 0..=t.depth() {
        let suffix = zero_one_power(n * p);
        words.extend(lang.iter().map(|u| u.concat(&suffix)));
    }
    Language::new(words)
}

/// Common word length, or `NonUniformLength`.
pub fn uniform_length(lang: &Language) -> Result<usize> {
    let mut lens = lang.iter().map(Word::len);
    let first = lens.next().ok_or(Error::NonUniformLength)?;
    if lens.all(|l| l == first) {
        Ok(first)
    } else {
        Err(Error::NonUniformLength)
    }
}

/// Words `(010)^a 110 (010)^b` of length `6i`, `1 ≤ i ≤ depth`; layer `i`
/// holds the `2i` choices of `a`.
pub fn theorem6_language(t: TruncationSpec) -> Result<Language> {
    let mut words = Vec::new();
    for i in 1..=t.depth() {
        let blocks = 2 * i - 1;
        for a in 0..=blocks {
            let mut w = b"010".repeat(a);
            w.extend_from_slice(b"110");
            w.extend_from_slice(&b"010".repeat(blocks - a));
            words.push(word(w));
        }
    }
    Language::new(words)
}

/// `{ a^n : n ∈ lengths }`, sorted by length.
pub fn unary_language(lengths: &[usize]) -> Result<Language> {
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    Language::new(sorted.into_iter().map(|n| word(vec![b'a'; n])).collect())
}

/// `{Λ} ∪ {0^n : 1 ≤ n ≤ N} ∪ {1^n : 1 ≤ n ≤ N}`.
pub fn prop4_language(n: usize) -> Result<Language> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let mut words = vec![Word::empty()];
    words.extend((1..=n).map(|i| word(vec![b'0'; i])));
    words.extend((1..=n).map(|i| word(vec![b'1'; i])));
    Language::new(words)
}
