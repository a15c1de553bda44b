//! Isometry groups of finite metric spaces.
//!
//! A metric on `n` points is treated as an edge-coloured complete graph
//! (one colour per distinct distance). The solver combines colour
//! refinement with individualization and backtracking, and assembles a
//! generating set level by level along a fixed base: at each level it finds
//! one isometry per reachable image of the base point, skipping images
//! already covered by the generators found so far.

use std::collections::HashSet;

use crate::constructs::SimpleGraph;
use crate::editdist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::isomgroup::group::PermutationGroup;
use crate::isomgroup::perm::Permutation;

/// Largest degree accepted by [`isometries_brute`].
pub const BRUTE_MAX_DEGREE: usize = 9;

/// Symmetric matrix of small integer colours with a zero-coloured diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorMatrix {
    n: usize,
    colors: Vec<u32>,
}

impl ColorMatrix {
    pub fn from_distances(d: &DistanceMatrix) -> Self {
        let palette = d.distinct_values();
        let n = d.n();
        let mut colors = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                colors.push(palette.binary_search(d.get(i, j)).expect("value in palette") as u32);
            }
        }
        ColorMatrix { n, colors }
    }

    /// Colour 1 for edges, 2 for non-adjacent pairs, 0 on the diagonal.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let n = g.n();
        let mut colors = vec![2u32; n * n];
        for i in 0..n {
            colors[i * n + i] = 0;
        }
        for &(u, v) in g.edges() {
            colors[u * n + v] = 1;
            colors[v * n + u] = 1;
        }
        ColorMatrix { n, colors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u32 {
        self.colors[i * self.n + j]
    }

    pub fn preserved_by(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|i| (0..self.n).all(|j| self.at(p.apply(i), p.apply(j)) == self.at(i, j)))
    }
}

/// True iff `p` preserves every entry of `d`.
pub fn preserves(d: &DistanceMatrix, p: &Permutation) -> bool {
    p.degree() == d.n() && (0..d.n()).all(|i| (0..d.n()).all(|j| d.get(p.apply(i), p.apply(j)) == d.get(i, j)))
}

/// Ordered partition of the points.
#[derive(Clone, Debug)]
struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { cells: if n == 0 { vec![] } else { vec![(0..n).collect()] }, cell_of: vec![0; n] }
    }

    fn from_cells(cells: Vec<Vec<usize>>, n: usize) -> Self {
        let mut cell_of = vec![0; n];
        for (ci, c) in cells.iter().enumerate() {
            for &x in c {
                cell_of[x] = ci;
            }
        }
        Partition { cells, cell_of }
    }

    fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    fn first_nontrivial(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.len() > 1)
    }

    /// Splits `x` off cell `ci`, placing the singleton first.
    fn individualize(&self, ci: usize, x: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..ci]);
        cells.push(vec![x]);
        cells.push(self.cells[ci].iter().copied().filter(|&y| y != x).collect());
        cells.extend_from_slice(&self.cells[ci + 1..]);
        Partition::from_cells(cells, self.cell_of.len())
    }
}

/// Per-point signature: own cell, then sorted (colour, partner cell) pairs.
type Signature = (usize, Vec<(u32, usize)>);

/// Sequence of (signature, multiplicity) lists, one per refinement round.
/// Two nodes can correspond under an isometry only if their traces agree.
type Trace = Vec<Vec<(Signature, usize)>>;

fn refine(m: &ColorMatrix, start: Partition) -> (Partition, Trace) {
    let n = m.n();
    let mut part = start;
    let mut trace = Trace::new();
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|p| {
                let mut s: Vec<(u32, usize)> =
                    (0..n).filter(|&q| q != p).map(|q| (m.at(p, q), part.cell_of[q])).collect();
                s.sort_unstable();
                (part.cell_of[p], s)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut round: Vec<(Signature, usize)> = Vec::new();
        for &p in &order {
            match round.last_mut() {
                Some((s, count)) if *s == sigs[p] => {
                    *count += 1;
                    cells.last_mut().expect("paired with round").push(p);
                }
                _ => {
                    round.push((sigs[p].clone(), 1));
                    cells.push(vec![p]);
                }
            }
        }
        let stable = cells.len() == part.cells.len();
        trace.push(round);
        part = Partition::from_cells(cells, n);
        if stable {
            return (part, trace);
        }
    }
}

struct Node {
    part: Partition,
    trace: Trace,
}

struct Search<'a> {
    m: &'a ColorMatrix,
    /// Leftmost path: `path[d]` is the node after individualizing `base[..d]`.
    path: Vec<Node>,
    /// `(cell index, point)` individualized at each depth of the path.
    base: Vec<(usize, usize)>,
}

impl<'a> Search<'a> {
    fn new(m: &'a ColorMatrix) -> Self {
        let (part, trace) = refine(m, Partition::unit(m.n()));
        let mut path = vec![Node { part, trace }];
        let mut base = Vec::new();
        while let Some(ci) = path.last().expect("non-empty").part.first_nontrivial() {
            let node = path.last().expect("non-empty");
            let x = node.part.cells[ci][0];
            let (part, trace) = refine(m, node.part.individualize(ci, x));
            base.push((ci, x));
            path.push(Node { part, trace });
        }
        Search { m, path, base }
    }

    /// Looks for an isometry that fixes `base[..level]` and sends the
    /// base point of `level` to `target`.
    fn map_base_point(&self, level: usize, target: usize) -> Option<Permutation> {
        let (ci, _) = self.base[level];
        let (part, trace) = refine(self.m, self.path[level].part.individualize(ci, target));
        if trace != self.path[level + 1].trace {
            return None;
        }
        self.extend(level + 1, &part)
    }

    fn extend(&self, depth: usize, right: &Partition) -> Option<Permutation> {
        if depth == self.base.len() {
            debug_assert!(right.is_discrete());
            let left = &self.path[depth].part;
            let mut img = vec![0u32; self.m.n()];
            for (l, r) in left.cells.iter().zip(&right.cells) {
                img[l[0]] = r[0] as u32;
            }
            let g = Permutation::from_raw(img);
            return self.m.preserved_by(&g).then_some(g);
        }
        let (ci, _) = self.base[depth];
        if right.cells.get(ci).map(Vec::len) != Some(self.path[depth].part.cells[ci].len()) {
            return None;
        }
        for &y in &right.cells[ci] {
            let (part, trace) = refine(self.m, right.individualize(ci, y));
            if trace == self.path[depth + 1].trace {
                if let Some(g) = self.extend(depth + 1, &part) {
                    return Some(g);
                }
            }
        }
        None
    }
}

fn orbit_of(x: usize, gens: &[Permutation], n: usize) -> HashSet<usize> {
    let mut seen = HashSet::from([x]);
    let mut stack = vec![x];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.apply(p);
            if seen.insert(q) {
                stack.push(q);
            }
        }
    }
    debug_assert!(seen.iter().all(|&p| p < n));
    seen
}

/// Generators of the full automorphism group of a colour matrix.
pub fn automorphisms(m: &ColorMatrix) -> PermutationGroup {
    let n = m.n();
    let search = Search::new(m);
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..search.base.len()).rev() {
        let (ci, b) = search.base[level];
        let below = gens.len();
        let mut orbit = orbit_of(b, &gens, n);
        let mut unreachable: HashSet<usize> = HashSet::new();
        for &c in &search.path[level].part.cells[ci] {
            if orbit.contains(&c) || unreachable.contains(&c) {
                continue;
            }
            match search.map_base_point(level, c) {
                Some(g) => {
                    gens.push(g);
                    orbit = orbit_of(b, &gens, n);
                }
                // anything the deeper stabilizer moves c to is unreachable too
                None => unreachable.extend(orbit_of(c, &gens[..below], n)),
            }
        }
    }
    PermutationGroup::new(n, gens).expect("generators have the matrix degree")
}

/// The isometry group of a finite metric space.
pub fn isometries(d: &DistanceMatrix) -> PermutationGroup {
    automorphisms(&ColorMatrix::from_distances(d))
}

/// Automorphism group of a simple graph, via its two-coloured matrix.
pub fn graph_automorphisms(g: &SimpleGraph) -> PermutationGroup {
    automorphisms(&ColorMatrix::from_graph(g))
}

/// Exhaustive oracle: tests all `n!` permutations and returns every
/// matrix-preserving one as a generator.
pub fn isometries_brute(d: &DistanceMatrix) -> Result<PermutationGroup> {
    let n = d.n();
    if n > BRUTE_MAX_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n, max: BRUTE_MAX_DEGREE });
    }
    let m = ColorMatrix::from_distances(d);
    let mut found = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let p = Permutation::from_images(perm.clone()).expect("permutation");
        if m.preserved_by(&p) {
            found.push(p);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    PermutationGroup::new(n, found)
}

/// Lexicographic successor; false once the last permutation is reached.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
