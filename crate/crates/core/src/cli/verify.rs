//! Claim checkers behind `levisom verify`.
//!
//! Each checker builds the relevant language or random sample, evaluates the
//! claimed equalities exactly, and returns a [`VerificationReport`] listing
//! every violated instance.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cli::report::VerificationReport;
use crate::constructs::{
    encode_cubic_graph, lemma5_language, prop4_language, theorem2_language, theorem3_language, theorem4_language,
    theorem4_layer_lengths, theorem4_stated_lengths, theorem5_language, theorem6_language, unary_language,
    uniform_length, SimpleGraph, TruncationSpec,
};
use crate::editdist::{distance_matrix, hamming, lev, normalize, DistanceMatrix, Weights};
use crate::error::{Error, Result};
use crate::isomgroup::{graph_automorphisms, isometries, preserves, Permutation};
use crate::langlib::{growth, is_subsequence, stretch, theorem1_audit, Language, Word};
use crate::rat::Rat;

/// Sample count, word-length cap and seed for randomized claims.
#[derive(Clone, Copy, Debug)]
pub struct RandomOpts {
    pub samples: usize,
    pub max_len: usize,
    pub seed: u64,
}

/// A graph with a display name and, for catalog graphs, its known
/// automorphism group order.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: SimpleGraph,
    pub known_aut_order: Option<u64>,
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &[u8], max_len: usize) -> Word {
    let n = rng.random_range(0..=max_len);
    word_of_len(rng, alphabet, n)
}

fn word_of_len(rng: &mut ChaCha8Rng, alphabet: &[u8], n: usize) -> Word {
    let s: String = (0..n).map(|_| alphabet[rng.random_range(0..alphabet.len())] as char).collect();
    Word::parse(if s.is_empty() { "<eps>" } else { &s }).expect("alphabet symbols are valid")
}

fn random_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    Rat::new(rng.random_range(1..=max_num), rng.random_range(1..=max_den))
}

/// Weights with `theta / gamma` in `(0, max_ratio]`.
fn random_weights(rng: &mut ChaCha8Rng, max_ratio: i64) -> Weights {
    let gamma = random_rat(rng, 4, 3);
    let q = rng.random_range(1..=6);
    let ratio = Rat::new(rng.random_range(1..=max_ratio * q), q);
    let theta = &gamma * &ratio;
    Weights::new(gamma, theta).expect("positive")
}

fn alphabet_for(i: usize) -> &'static [u8] {
    if i.is_multiple_of(2) {
        b"01"
    } else {
        b"abc"
    }
}

fn fmt_weights(w: &Weights) -> String {
    format!("gamma={}, theta={}", w.gamma(), w.theta())
}

/// Metric axioms plus context and reversal invariance on random samples.
pub fn verify_metric(opts: &RandomOpts) -> VerificationReport {
    let mut r = VerificationReport::new("metric");
    r.param("samples", opts.samples).param("max_len", opts.max_len).param("seed", opts.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..opts.samples {
        let a = alphabet_for(i);
        let w = random_weights(&mut rng, 2);
        let u = random_word(&mut rng, a, opts.max_len);
        let v = if rng.random_bool(0.1) { u.clone() } else { random_word(&mut rng, a, opts.max_len) };
        let x = random_word(&mut rng, a, opts.max_len);
        let (uv, vu, vx, ux) = (lev(&u, &v, &w), lev(&v, &u, &w), lev(&v, &x, &w), lev(&u, &x, &w));
        let ws = fmt_weights(&w);
        r.check(lev(&u, &u, &w).is_zero(), || format!("lev({u}, {u}) != 0 [{ws}]"));
        r.check(uv.is_zero() == (u == v), || format!("lev({u}, {v}) = {uv} [{ws}]"));
        r.check(uv == vu, || format!("lev({u}, {v}) = {uv} but lev({v}, {u}) = {vu} [{ws}]"));
        r.check(ux <= &uv + &vx, || format!("triangle: lev({u},{x}) = {ux} > {uv} + {vx} [{ws}]"));
        let pre = random_word(&mut rng, a, 4);
        let suf = random_word(&mut rng, a, 4);
        let ctx = lev(&pre.concat(&u).concat(&suf), &pre.concat(&v).concat(&suf), &w);
        r.check(ctx == uv, || format!("context: lev({pre}·{u}·{suf}, {pre}·{v}·{suf}) = {ctx} != {uv} [{ws}]"));
        let rev = lev(&u.reversed(), &v.reversed(), &w);
        r.check(rev == uv, || format!("reversal: lev(rev {u}, rev {v}) = {rev} != {uv} [{ws}]"));
    }
    r.finish()
}

/// Upper bound, lower bound, and the subsequence equality case.
pub fn verify_bounds(opts: &RandomOpts) -> VerificationReport {
    let mut r = VerificationReport::new("bounds");
    r.param("samples", opts.samples).param("max_len", opts.max_len).param("seed", opts.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut equality_cases = 0usize;
    for i in 0..opts.samples {
        let a = alphabet_for(i);
        let w = random_weights(&mut rng, 2);
        let u = random_word(&mut rng, a, opts.max_len);
        // a third of the samples are supersequences of u, to hit the equality case
        let v = match i % 3 {
            0 => {
                let mut bytes = u.as_bytes().to_vec();
                for _ in 0..rng.random_range(0..=3) {
                    let pos = rng.random_range(0..=bytes.len());
                    bytes.insert(pos, a[rng.random_range(0..a.len())]);
                }
                Word::parse(&String::from_utf8(bytes).expect("ascii")).unwrap_or_default()
            }
            _ => random_word(&mut rng, a, opts.max_len),
        };
        let d = lev(&u, &v, &w);
        let (lo, hi) = (u.len().min(v.len()), u.len().max(v.len()));
        let (gamma, theta) = (w.gamma(), w.theta());
        let upper = &(theta - gamma).scale(lo as i64) + &gamma.scale(hi as i64);
        let lower = gamma.scale((hi - lo) as i64);
        let ws = fmt_weights(&w);
        r.check(d <= upper, || format!("upper: lev({u}, {v}) = {d} > {upper} [{ws}]"));
        r.check(d >= lower, || format!("lower: lev({u}, {v}) = {d} < {lower} [{ws}]"));
        let (short, long) = if u.len() <= v.len() { (&u, &v) } else { (&v, &u) };
        let sub = is_subsequence(short, long);
        equality_cases += usize::from(sub);
        r.check((d == lower) == sub, || {
            format!("equality: lev({u}, {v}) = {d}, gamma*|len diff| = {lower}, subsequence = {sub} [{ws}]")
        });
    }
    r.stat("subsequence_cases", equality_cases);
    r.finish()
}

/// Rescaling to `(1, theta')` scales every distance by `gamma`.
pub fn verify_homothety(opts: &RandomOpts) -> VerificationReport {
    let mut r = VerificationReport::new("homothety");
    r.param("samples", opts.samples).param("max_len", opts.max_len).param("seed", opts.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut capped = 0usize;
    for i in 0..opts.samples {
        let a = alphabet_for(i);
        let w = random_weights(&mut rng, if i % 2 == 0 { 2 } else { 6 });
        let nw = normalize(&w);
        if w.theta() > &w.gamma().scale(2) {
            capped += 1;
        }
        let u = random_word(&mut rng, a, opts.max_len);
        let v = random_word(&mut rng, a, opts.max_len);
        let d = lev(&u, &v, &w);
        let scaled = &nw.scale * &lev(&u, &v, &nw.weights());
        r.check(d == scaled, || {
            format!(
                "lev({u}, {v}) = {d} but {} * lev_(1,{}) = {scaled} [{}]",
                nw.scale,
                nw.theta_prime,
                fmt_weights(&w)
            )
        });
    }
    r.stat("samples_with_theta_over_2gamma", capped);
    r.finish()
}

/// Unary languages: the isometry group has order 1 or 2, and order 2 exactly
/// when the length set is symmetric about its midpoint.
pub fn verify_prop3(samples: usize, max_size: usize, theta: &Rat, seed: u64) -> Result<VerificationReport> {
    let w = Weights::unit_gamma(theta.clone())?;
    let mut r = VerificationReport::new("prop3");
    r.param("samples", samples).param("max_size", max_size).param("theta", theta).param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    let mut progressions = 0usize;
    for i in 0..samples {
        let size = rng.random_range(1..=max_size.max(1));
        let lengths: Vec<usize> = match i % 3 {
            0 => {
                let mut set = std::collections::BTreeSet::new();
                while set.len() < size {
                    set.insert(rng.random_range(0..=3 * max_size));
                }
                set.into_iter().collect()
            }
            1 => {
                let start = rng.random_range(0..=5);
                let step = rng.random_range(1..=4);
                (0..size.max(2)).map(|j| start + j * step).collect()
            }
            _ => {
                let mut set = std::collections::BTreeSet::new();
                let span = 3 * max_size;
                while set.len() < size {
                    let x = rng.random_range(0..=span);
                    set.insert(x);
                    set.insert(span - x);
                }
                set.into_iter().collect()
            }
        };
        let lang = unary_language(&lengths)?;
        let order = isometries(&distance_matrix(&lang, &w)).order();
        *histogram.entry(order.to_string()).or_default() += 1;
        let (lo, hi) = (lengths[0], *lengths.last().expect("non-empty"));
        let symmetric = lengths.len() >= 2 && lengths.iter().all(|x| lengths.contains(&(lo + hi - x)));
        let expect = BigUint::from(if symmetric { 2u32 } else { 1 });
        r.check(order == BigUint::one() || order == BigUint::from(2u32), || {
            format!("lengths {lengths:?}: group order {order}")
        });
        r.check(order == expect, || format!("lengths {lengths:?}: group order {order}, expected {expect}"));
        if i % 3 == 1 {
            progressions += 1;
            r.check(order == BigUint::from(2u32), || {
                format!("arithmetic progression {lengths:?}: group order {order}, expected 2")
            });
        }
    }
    r.stat("order_histogram", format!("{histogram:?}"));
    r.stat("arithmetic_progressions", progressions);
    Ok(r.finish())
}

/// `lev(0^a, 1^b) = a + b`, `lev(x^a, x^b) = |a - b|`, and the truncated
/// group has order 2.
pub fn verify_prop4(n: usize, w: &Weights) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("prop4");
    r.param("n", n).param("gamma", w.gamma()).param("theta", w.theta());
    let zeros = |a: usize| Word::parse(&if a == 0 { "<eps>".into() } else { "0".repeat(a) }).expect("valid");
    let ones = |a: usize| Word::parse(&if a == 0 { "<eps>".into() } else { "1".repeat(a) }).expect("valid");
    let g = w.gamma();
    for a in 0..=n {
        for b in 0..=n {
            let d = lev(&zeros(a), &ones(b), w);
            let want = g.scale((a + b) as i64);
            r.check(d == want, || format!("lev(0^{a}, 1^{b}) = {d}, expected {want}"));
            let d = lev(&zeros(a), &zeros(b), w);
            let want = g.scale(a.abs_diff(b) as i64);
            r.check(d == want, || format!("lev(0^{a}, 0^{b}) = {d}, expected {want}"));
            let d = lev(&ones(a), &ones(b), w);
            r.check(d == want, || format!("lev(1^{a}, 1^{b}) = {d}, expected {want}"));
        }
    }
    let lang = prop4_language(n)?;
    let group = isometries(&distance_matrix(&lang, w));
    let order = group.order();
    r.check(order == BigUint::from(2u32), || format!("truncated group order {order}, expected 2"));
    r.stat("group_order", &order);
    let audit = match theorem1_audit(&lang, &group, w) {
        Ok(a) => format!("m = {}, pass = {}", a.m, a.pass),
        Err(e) => format!("refused: {e}"),
    };
    r.stat("length_bound_audit", audit);
    Ok(r.finish())
}

/// Length-change audit for a language file.
pub fn verify_theorem1(lang: &Language, w: &Weights) -> Result<VerificationReport> {
    let d = distance_matrix(lang, w);
    let group = isometries(&d);
    let audit = theorem1_audit(lang, &group, w)?;
    let mut r = VerificationReport::new("theorem1");
    r.param("words", lang.len()).param("gamma", w.gamma()).param("theta", w.theta());
    r.param("theta_prime", normalize(w).theta_prime);
    r.stat("group_order", group.order());
    r.stat("orbit_sizes", format!("{:?}", group.orbits().sizes()));
    r.stat("minimal_words", audit.minimal_words.len());
    r.stat("m", audit.m);
    for (u, v) in &audit.witnesses {
        let m = audit.m;
        r.check(false, || format!("{u} (length {}) maps to {v} (length {}), bound m = {m}", u.len(), v.len()));
    }
    if audit.witnesses.is_empty() {
        r.check(true, String::new);
    }
    Ok(r.finish())
}

/// Stretching with `a^k b a^k`, `k > h`, turns Hamming distance `h` into
/// edit distance: the stated value is `h`. The report also counts how
/// often the distance equals `theta * h`.
pub fn verify_lemma3(opts: &RandomOpts, thetas: &[Rat]) -> Result<VerificationReport> {
    if thetas.is_empty() {
        return Err(Error::InvalidParameter("at least one theta is required".into()));
    }
    let mut r = VerificationReport::new("lemma3");
    r.param("samples", opts.samples).param("max_len", opts.max_len).param("seed", opts.seed);
    r.param("thetas", thetas.iter().map(Rat::to_string).collect::<Vec<_>>().join(","));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let alphabet = b"012";
    let mut scaled_matches = 0usize;
    for i in 0..opts.samples {
        let theta = &thetas[i % thetas.len()];
        let w = Weights::unit_gamma(theta.clone())?;
        let n = rng.random_range(0..=opts.max_len);
        let w1 = word_of_len(&mut rng, alphabet, n);
        let w2 = word_of_len(&mut rng, alphabet, n);
        let h = hamming(&w1, &w2)?;
        let ai = rng.random_range(0..alphabet.len());
        let bi = (ai + rng.random_range(1..alphabet.len())) % alphabet.len();
        let (a, b) = (alphabet[ai] as char, alphabet[bi] as char);
        let k = h + 1 + rng.random_range(0..=2);
        let pattern = Word::parse(&format!("{}{b}{}", a.to_string().repeat(k), a.to_string().repeat(k)))?;
        let d = lev(&stretch(&w1, &pattern), &stretch(&w2, &pattern), &w);
        if d == theta.scale(h as i64) {
            scaled_matches += 1;
        }
        let hr = Rat::from(h);
        r.check(d == hr, || format!("w1={w1} w2={w2} a={a} b={b} k={k} theta={theta}: lev = {d}, h = {h}"));
    }
    r.stat("samples_equal_to_theta_times_h", format!("{scaled_matches}/{}", opts.samples));
    Ok(r.finish())
}

/// Graph encodings: word length `|E|`, Hamming 4 on edges and 6 otherwise.
pub fn verify_lemma4(graphs: &[NamedGraph]) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("lemma4");
    r.param("graphs", graphs.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(","));
    for ng in graphs {
        let g = &ng.graph;
        let l = encode_cubic_graph(g)?;
        for (u, wu) in l.iter().enumerate() {
            r.check(wu.len() == g.edges().len(), || format!("{}: word {u} has length {}", ng.name, wu.len()));
            for (v, wv) in l.iter().enumerate().skip(u + 1) {
                let h = hamming(wu, wv)?;
                let want = if g.adjacent(u, v) { 4 } else { 6 };
                r.check(h == want, || format!("{}: h(w_{u}, w_{v}) = {h}, expected {want}", ng.name));
            }
        }
    }
    Ok(r.finish())
}

/// Stretched graph encodings: distances in {4, 6} following adjacency,
/// length `16|E| = 24|V|`, isometry group equal to the graph automorphisms.
pub fn verify_theorem2(graphs: &[NamedGraph], w: &Weights) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("theorem2");
    r.param("graphs", graphs.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(","));
    r.param("gamma", w.gamma()).param("theta", w.theta());
    for ng in graphs {
        let g = &ng.graph;
        let l = theorem2_language(g)?;
        let len = 16 * g.edges().len();
        r.check(l.iter().all(|x| x.len() == len) && len == 24 * g.n(), || {
            format!("{}: word length {} vs 16|E| = {len}, 24|V| = {}", ng.name, l.words()[0].len(), 24 * g.n())
        });
        let d = distance_matrix(&l, w);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let want = Rat::from_integer(if g.adjacent(u, v) { 4 } else { 6 });
                let got = d.get(u, v);
                r.check(got == &want, || format!("{}: d(w_{u}, w_{v}) = {got}, expected {want}", ng.name));
            }
        }
        let group = isometries(&d);
        let aut = graph_automorphisms(g);
        r.check(group.same_group(&aut)?, || format!("{}: isometry group differs from Aut(graph)", ng.name));
        if let Some(known) = ng.known_aut_order {
            let order = group.order();
            r.check(order == BigUint::from(known), || format!("{}: group order {order}, expected {known}", ng.name));
        }
        r.stat(&format!("{}_group_order", ng.name), group.order());
    }
    Ok(r.finish())
}

/// Splits a language into layers of equal word length, by ascending length.
fn layers(lang: &Language) -> Vec<Vec<usize>> {
    let mut by_len: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, w) in lang.iter().enumerate() {
        by_len.entry(w.len()).or_default().push(i);
    }
    by_len.into_values().collect()
}

fn layer_of(layers: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for (li, l) in layers.iter().enumerate() {
        for &i in l {
            out[i] = li;
        }
    }
    out
}

/// Checks that points in different layers are at distance equal to the
/// length difference (the shorter word is a subsequence of the longer), and
/// records the layer-separation margin.
fn check_cross_layer(r: &mut VerificationReport, lang: &Language, d: &DistanceMatrix, w: &Weights) {
    let ls = layers(lang);
    let layer = layer_of(&ls, lang.len());
    let words = lang.words();
    let mut max_within = Rat::zero();
    let mut min_cross: Option<Rat> = None;
    for i in 0..lang.len() {
        for j in i + 1..lang.len() {
            let dij = d.get(i, j);
            if layer[i] == layer[j] {
                max_within = std::cmp::max(max_within, dij.clone());
            } else {
                let want = w.gamma().scale(words[i].len().abs_diff(words[j].len()) as i64);
                r.check(dij == &want, || {
                    format!("d({}, {}) = {dij}, expected length difference {want}", words[i], words[j])
                });
                min_cross = Some(min_cross.map_or(dij.clone(), |m| std::cmp::min(m, dij.clone())));
            }
        }
    }
    if let Some(mc) = min_cross {
        r.stat("max_within_layer_distance", &max_within);
        r.stat("min_cross_layer_distance", &mc);
    }
}

/// Layered graph languages with a `(01)^(l+7)` prefix per layer.
pub fn verify_theorem3(graphs: &[NamedGraph], depth: usize, w: &Weights) -> Result<VerificationReport> {
    let plain: Vec<SimpleGraph> = graphs.iter().map(|g| g.graph.clone()).collect();
    let lang = theorem3_language(&plain, TruncationSpec::new(depth)?)?;
    let mut r = VerificationReport::new("theorem3");
    r.param("graphs", graphs.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(","));
    r.param("depth", depth).param("gamma", w.gamma()).param("theta", w.theta());
    let d = distance_matrix(&lang, w);
    check_cross_layer(&mut r, &lang, &d, w);

    // inside a layer the shared prefix is irrelevant
    let mut offset = 1;
    let mut expected_order = BigUint::one();
    let mut expected_blocks: Vec<Vec<usize>> = vec![vec![0]];
    for ng in &graphs[..depth] {
        let inner = distance_matrix(&theorem2_language(&ng.graph)?, w);
        let n = ng.graph.n();
        for u in 0..n {
            for v in u + 1..n {
                let (got, want) = (d.get(offset + u, offset + v), inner.get(u, v));
                r.check(got == want, || format!("{}: layer distance {got} != {want}", ng.name));
            }
        }
        let aut = graph_automorphisms(&ng.graph);
        expected_order *= aut.order();
        expected_blocks.extend(aut.orbits().blocks.into_iter().map(|b| b.into_iter().map(|x| x + offset).collect()));
        offset += n;
    }
    let group = isometries(&d);
    let order = group.order();
    r.check(order == expected_order, || format!("group order {order}, expected {expected_order}"));
    let mut got_blocks = group.orbits().blocks;
    got_blocks.sort();
    expected_blocks.sort();
    r.check(got_blocks == expected_blocks, || format!("orbits {got_blocks:?}, expected {expected_blocks:?}"));
    r.stat("group_order", &order);
    r.stat("orbit_sizes", format!("{:?}", group.orbits().sorted_sizes()));
    r.stat("layer_lengths", format!("{:?}", lang.lengths()));

    let max_len = lang.lengths().into_iter().max().unwrap_or(0);
    for n in 0..=max_len {
        let gr = growth(&lang, n);
        r.check(24 * gr <= 24 + n, || format!("growth({n}) = {gr} > 1 + {n}/24"));
    }
    Ok(r.finish())
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Order of `S_k^(k^n) × S_(k^n)` and of `S_k^(k^n) × S_(2^n)`.
pub fn theorem4_readings(k: u64, n: u32) -> (BigUint, BigUint) {
    let kn = k.pow(n);
    let wreath_base = factorial(k).pow(kn as u32);
    (&wreath_base * factorial(kn), &wreath_base * factorial(2u64.pow(n)))
}

/// Recovers the stretched symbols: every `(plen+1)`-th symbol after the prefix.
fn unstretch(w: &Word, prefix_len: usize, pattern_len: usize) -> Word {
    let body = &w.as_bytes()[prefix_len..];
    let s: String = body.iter().skip(pattern_len).step_by(pattern_len + 1).map(|&b| b as char).collect();
    Word::parse(if s.is_empty() { "<eps>" } else { &s }).expect("valid symbols")
}

/// Hamming-cube layers over `k` letters.
pub fn verify_theorem4(k: usize, depth: usize, w: &Weights) -> Result<VerificationReport> {
    let lang = theorem4_language(k, TruncationSpec::new(depth)?)?;
    let mut r = VerificationReport::new("theorem4");
    r.param("k", k).param("depth", depth).param("gamma", w.gamma()).param("theta", w.theta());
    let d = distance_matrix(&lang, w);
    check_cross_layer(&mut r, &lang, &d, w);

    let measured: Vec<u128> = layers(&lang)[1..].iter().map(|l| lang.words()[l[0]].len() as u128).collect();
    let literal = theorem4_layer_lengths(k, depth);
    let stated = theorem4_stated_lengths(k, depth);
    r.check(measured == literal, || format!("layer lengths {measured:?}, recursion gives {literal:?}"));
    r.stat("layer_lengths", format!("{measured:?}"));
    r.stat("closed_form_lengths", format!("{stated:?}"));
    r.stat("closed_form_matches", measured == stated);

    let ls = layers(&lang);
    let mut product = BigUint::one();
    let mut prev_len = 0;
    for (n, layer) in ls.iter().enumerate().skip(1) {
        let words: Vec<Word> = layer.iter().map(|&i| lang.words()[i].clone()).collect();
        let pad = k.pow(n as u32 + 1);
        let prefix_len = k * prev_len;
        prev_len = words[0].len();
        let base: Vec<Word> = words.iter().map(|x| unstretch(x, prefix_len, 2 * pad + 1)).collect();
        for a in 0..words.len() {
            for b in a + 1..words.len() {
                let h = Rat::from(hamming(&base[a], &base[b])?);
                let got = d.get(layer[a], layer[b]);
                r.check(got == &h, || format!("layer {n}: d({}, {}) = {got}, Hamming {h}", base[a], base[b]));
            }
        }
        let sub = Language::new(words)?;
        let order = isometries(&distance_matrix(&sub, w)).order();
        let (full, two_power) = theorem4_readings(k as u64, n as u32);
        r.stat(&format!("layer{n}_group_order"), &order);
        r.stat(&format!("layer{n}_matches_S_k^(k^n)_x_S_(k^n)"), format!("{full} ({})", order == full));
        r.stat(&format!("layer{n}_matches_S_k^(k^n)_x_S_(2^n)"), format!("{two_power} ({})", order == two_power));
        r.check(order == full || order == two_power, || {
            format!("layer {n}: order {order} matches neither {full} nor {two_power}")
        });
        product *= order;
    }
    let total = isometries(&d).order();
    r.check(total == product, || format!("whole group order {total}, product of layers {product}"));
    r.stat("group_order", &total);
    Ok(r.finish())
}

/// `L ((01)^n)^*` truncated at `depth`: the distance formula and the claimed
/// group `Isom(L)^(depth+1)`.
pub fn verify_lemma5(base: &Language, depth: usize, w: &Weights) -> Result<VerificationReport> {
    let n = uniform_length(base)?;
    let lang = lemma5_language(base, TruncationSpec::new(depth)?)?;
    let mut r = VerificationReport::new("lemma5");
    r.param("base", base.iter().map(Word::to_string).collect::<Vec<_>>().join(","));
    r.param("depth", depth).param("gamma", w.gamma()).param("theta", w.theta());
    let d = distance_matrix(&lang, w);
    let inner = distance_matrix(base, w);
    let b = base.len();
    for x in 0..lang.len() {
        for y in x + 1..lang.len() {
            let (p, q) = (x / b, y / b);
            let want =
                if p == q { inner.get(x % b, y % b).clone() } else { w.gamma().scale((2 * n * p.abs_diff(q)) as i64) };
            let got = d.get(x, y);
            r.check(got == &want, || format!("d({}, {}) = {got}, expected {want}", lang.words()[x], lang.words()[y]));
        }
    }
    let base_order = isometries(&inner).order();
    let expected = base_order.pow(depth as u32 + 1);
    let group = isometries(&d);
    let order = group.order();
    // p ↦ depth - p on layers, identity inside each layer
    let reflection = Permutation::from_images((0..lang.len()).map(|x| (depth - x / b) * b + x % b).collect())?;
    let reflects = preserves(&d, &reflection);
    r.stat("group_order", &order);
    r.stat("layer_reflection_is_isometry", reflects);
    r.check(order == expected, || {
        format!(
            "group order {order}, expected |Isom(L)|^{} = {expected}{}",
            depth + 1,
            if reflects { "; the layer reflection p -> depth-p is an extra isometry" } else { "" }
        )
    });
    Ok(r.finish())
}

/// `L1 ∪ (01)^(n+m) L2 ((01)^m)^*` truncated at `depth`.
pub fn verify_theorem5(g1: &NamedGraph, g2: &NamedGraph, depth: usize, w: &Weights) -> Result<VerificationReport> {
    let lang = theorem5_language(&g1.graph, &g2.graph, TruncationSpec::new(depth)?)?;
    let mut r = VerificationReport::new("theorem5");
    r.param("graph1", &g1.name).param("graph2", &g2.name).param("depth", depth);
    r.param("gamma", w.gamma()).param("theta", w.theta());
    let l1 = theorem2_language(&g1.graph)?;
    let l2 = theorem2_language(&g2.graph)?;
    let (n, m) = (l1.words()[0].len(), l2.words()[0].len());
    let d = distance_matrix(&lang, w);
    let inner = distance_matrix(&l2, w);
    let (a, b) = (l1.len(), l2.len());
    for x in a..lang.len() {
        for y in x + 1..lang.len() {
            let (p, q) = ((x - a) / b, (y - a) / b);
            let want = if p == q {
                inner.get((x - a) % b, (y - a) % b).clone()
            } else {
                w.gamma().scale((2 * m * p.abs_diff(q)) as i64)
            };
            let got = d.get(x, y);
            r.check(got == &want, || format!("L2 part: d(#{x}, #{y}) = {got}, expected {want} (p={p}, q={q})"));
        }
    }
    check_cross_layer(&mut r, &lang, &d, w);
    for k in 0..=depth {
        let measured = n + 3 * m + 2 * m * k;
        let stated = 2 * (n + (k + 2) * m);
        r.stat(&format!("L1_to_layer{k}_distance"), format!("{measured} (closed form 2(n+(k+2)m) gives {stated})"));
    }
    let (o1, o2) = (graph_automorphisms(&g1.graph).order(), graph_automorphisms(&g2.graph).order());
    let expected = &o1 * o2.pow(depth as u32 + 1);
    let order = isometries(&d).order();
    r.check(order == expected, || format!("group order {order}, expected {o1} * {o2}^{} = {expected}", depth + 1));
    r.stat("group_order", &order);
    Ok(r.finish())
}

/// Layers of `(010)^* 110 (010)^*` with lengths divisible by 6.
pub fn verify_theorem6(layers_t: usize, w: &Weights) -> Result<VerificationReport> {
    let lang = theorem6_language(TruncationSpec::new(layers_t)?)?;
    let mut r = VerificationReport::new("theorem6");
    r.param("layers", layers_t).param("gamma", w.gamma()).param("theta", w.theta());
    let d = distance_matrix(&lang, w);
    let words = lang.words();
    let mut within: std::collections::BTreeSet<Rat> = std::collections::BTreeSet::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let want = Rat::from(words[i].len().abs_diff(words[j].len()).max(2));
            let got = d.get(i, j);
            if words[i].len() == words[j].len() {
                within.insert(got.clone());
            }
            r.check(got == &want, || format!("d({}, {}) = {got}, expected {want}", words[i], words[j]));
        }
    }
    r.stat("within_layer_distances", format!("{within:?}"));
    let group = isometries(&d);
    let order = group.order();
    let expected = (1..=layers_t as u64).fold(BigUint::one(), |acc, i| acc * factorial(2 * i));
    r.check(order == expected, || format!("group order {order}, expected {expected}"));
    let sizes = group.orbits().sorted_sizes();
    let want: Vec<usize> = (1..=layers_t).map(|i| 2 * i).collect();
    r.check(sizes == want, || format!("orbit sizes {sizes:?}, expected {want:?}"));
    r.stat("group_order", &order);
    r.stat("orbit_sizes", format!("{sizes:?}"));
    Ok(r.finish())
}
