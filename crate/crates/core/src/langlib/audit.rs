use serde::Serialize;

use crate::editdist::{normalize, Weights};
use crate::error::{Error, Result};
use crate::isomgroup::PermutationGroup;
use crate::langlib::{minimal_words, Language, Word};
use crate::rat::Rat;

/// Result of the bounded-length-change audit.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    /// Largest length change of a minimal word under the group.
    pub m: usize,
    pub minimal_words: Vec<Word>,
    pub pass: bool,
    /// `(w, image)` pairs whose length change exceeds `m`.
    pub witnesses: Vec<(Word, Word)>,
}

fn length_gap(a: &Word, b: &Word) -> usize {
    a.len().abs_diff(b.len())
}

/// Checks that every isometry in `group` changes word lengths by at most
/// `m`, where `m` is the largest change it makes on minimal words.
///
/// Works orbit by orbit: the images of `w` under the group are exactly its
/// orbit. Requires the normalized substitution weight to be below 2.
pub fn theorem1_audit(lang: &Language, group: &PermutationGroup, w: &Weights) -> Result<AuditReport> {
    let theta_prime = normalize(w).theta_prime;
    if theta_prime >= Rat::from_integer(2) {
        return Err(Error::HypothesisViolated(format!(
            "normalized substitution weight is {theta_prime}; the length bound needs it below 2"
        )));
    }
    if group.degree() != lang.len() {
        return Err(Error::DegreeMismatch { left: lang.len(), right: group.degree() });
    }
    let words = lang.words();
    let orbits = group.orbits();
    let minimal = minimal_words(lang);

    let spread = |i: usize| -> usize {
        orbits
            .block_of(i)
            .expect("every point lies in an orbit")
            .iter()
            .map(|&j| length_gap(&words[i], &words[j]))
            .max()
            .unwrap_or(0)
    };
    let m = (0..words.len()).filter(|&i| minimal.contains(&words[i])).map(spread).max().unwrap_or(0);

    let mut witnesses = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for &j in orbits.block_of(i).expect("every point lies in an orbit") {
            if length_gap(w, &words[j]) > m {
                witnesses.push((w.clone(), words[j].clone()));
            }
        }
    }
    Ok(AuditReport { m, minimal_words: minimal.into_words(), pass: witnesses.is_empty(), witnesses })
}
