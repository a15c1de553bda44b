use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`. Edges are stored as sorted
/// pairs `(u, v)` with `u < v`, in ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("repeated edge ({a}, {b})")));
            }
        }
        Ok(SimpleGraph { n, edges: set.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Fails with the first vertex whose degree is not 3.
    pub fn check_cubic(&self) -> Result<()> {
        match (0..self.n).map(|v| (v, self.degree(v))).find(|&(_, d)| d != 3) {
            Some((vertex, degree)) => Err(Error::NotCubic { vertex, degree }),
            None => Ok(()),
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.check_cubic().is_ok()
    }

    /// Parses the DIMACS-like edge format: `c` comment lines, one
    /// `p <n> <m>` line (`p edge <n> <m>` is accepted too), then `m` lines
    /// `e <u> <v>` with 1-indexed vertices.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| Error::Parse { line, message };
            let toks: Vec<&str> = raw.split_whitespace().collect();
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(format!("expected a number, got `{t}`")));
            match toks.as_slice() {
                [] => continue,
                ["c", ..] => continue,
                ["p", rest @ ..] => {
                    if header.is_some() {
                        return Err(err("second `p` line".into()));
                    }
                    let (n, m) = match rest {
                        [n, m] => (num(n)?, num(m)?),
                        [_, n, m] => (num(n)?, num(m)?),
                        _ => return Err(err("expected `p <n> <m>`".into())),
                    };
                    header = Some((n, m));
                }
                ["e", u, v] => {
                    let (n, _) = header.ok_or_else(|| err("edge before `p` line".into()))?;
                    let (u, v) = (num(u)?, num(v)?);
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(err(format!("vertex out of range 1..={n}")));
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(err(format!("unrecognized line `{raw}`"))),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse { line: 0, message: "missing `p` line".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        SimpleGraph::new(n, edges)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        SimpleGraph::from_dimacs(&text)
    }

    pub fn to_dimacs(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for l in c.lines() {
                let _ = writeln!(out, "c {l}");
            }
        }
        let _ = writeln!(out, "p {} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let g = SimpleGraph::from_dimacs("c triangle\np 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(g.adjacent(2, 0));
        assert_eq!(SimpleGraph::from_dimacs(&g.to_dimacs(Some("x"))).unwrap(), g);
        let h = SimpleGraph::from_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "e 1 2\n",
            "p 2 1\ne 1 3\n",
            "p 2 1\ne 1 1\n",
            "p 2 2\ne 1 2\ne 2 1\n",
            "p 3 2\ne 1 2\n",
            "p 2 1\nx 1 2\n",
            "p 2 1\ne 0 1\n",
        ] {
            assert!(SimpleGraph::from_dimacs(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn cubic_check() {
        let tri = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(tri.check_cubic(), Err(Error::NotCubic { vertex: 0, degree: 2 })));
    }
}
