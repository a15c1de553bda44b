use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 0..{n}")));
            }
        }
        Ok(Permutation(images.into_iter().map(|i| i as u32).collect()))
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidPermutation(format!("point {x} out of range for degree {n}")));
                }
                img[x] = c[(k + 1) % c.len()];
            }
        }
        Permutation::from_images(img)
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i as u32 == x)
        });
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i)
    }

    /// Order of the permutation as an element of the symmetric group.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut ord: u64 = 1;
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the one-line image array `[i0, i1, ..., i(n-1)]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPermutation(format!("cannot parse `{s}`"));
        let body = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        if body.trim().is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let images =
            body.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[2, 3]]).unwrap();
        let ab = a.then(&b);
        assert_eq!(ab.apply(1), 3);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.order(), 3);
        assert_eq!(ab.order(), 4);
    }

    #[test]
    fn text_round_trip() {
        let p: Permutation = "[2, 0, 1]".parse().unwrap();
        assert_eq!(p.to_string(), "[2, 0, 1]");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,0,1]");
        assert!("[0, 0]".parse::<Permutation>().is_err());
        assert!("0, 1".parse::<Permutation>().is_err());
        assert_eq!("[]".parse::<Permutation>().unwrap().degree(), 0);
    }
}
