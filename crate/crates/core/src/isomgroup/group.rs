//! Finitely generated permutation groups backed by a stabilizer chain.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::isomgroup::perm::Permutation;

/// One level of a stabilizer chain: the orbit of `base` under the stabilizer
/// of the earlier base points, with coset representatives.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    orbit: Vec<usize>,
    /// `reps[beta] = Some((u, u^-1))` with `u(base) = beta`.
    reps: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut reps = vec![None; degree];
        let id = Permutation::identity(degree);
        reps[base] = Some((id.clone(), id));
        Level { base, orbit: vec![base], reps }
    }
}

/// Base and strong generating set, built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct StabChain {
    levels: Vec<Level>,
    strong: Vec<Permutation>,
}

impl StabChain {
    fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut chain = StabChain { levels: Vec::new(), strong: Vec::new() };
        for s in &strong {
            if chain.levels.iter().all(|l| s.apply(l.base) == l.base) {
                let b = s.first_moved().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        chain.strong = strong;
        let mut checked: Vec<HashSet<(usize, usize)>> = vec![HashSet::new(); chain.levels.len()];
        for l in 0..chain.levels.len() {
            chain.extend_orbit(l);
        }

        let mut i = chain.levels.len();
        while i > 0 {
            let l = i - 1;
            let gens = chain.gens_at(l);
            let mut found = None;
            'search: for oi in 0..chain.levels[l].orbit.len() {
                let beta = chain.levels[l].orbit[oi];
                for &si in &gens {
                    if !checked[l].insert((beta, si)) {
                        continue;
                    }
                    let s = &chain.strong[si];
                    let gamma = s.apply(beta);
                    let (u_beta, _) = chain.levels[l].reps[beta].as_ref().expect("orbit point");
                    let (_, u_gamma_inv) = chain.levels[l].reps[gamma].as_ref().expect("orbit closed");
                    let schreier = u_beta.then(s).then(u_gamma_inv);
                    let (h, fail) = chain.sift(schreier, l + 1);
                    if !h.is_identity() {
                        found = Some((h, fail));
                        break 'search;
                    }
                }
            }
            match found {
                None => i -= 1,
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        let b = h.first_moved().expect("non-identity");
                        chain.levels.push(Level::new(b, degree));
                        checked.push(HashSet::new());
                    }
                    chain.strong.push(h);
                    for lvl in 0..=j {
                        chain.extend_orbit(lvl);
                    }
                    i = j + 1;
                }
            }
        }
        chain
    }

    /// Indices of strong generators fixing the first `l` base points.
    fn gens_at(&self, l: usize) -> Vec<usize> {
        let prefix: Vec<usize> = self.levels[..l].iter().map(|lv| lv.base).collect();
        (0..self.strong.len()).filter(|&i| prefix.iter().all(|&b| self.strong[i].apply(b) == b)).collect()
    }

    fn extend_orbit(&mut self, l: usize) {
        let gens = self.gens_at(l);
        let level = &mut self.levels[l];
        let mut queue: VecDeque<usize> = level.orbit.iter().copied().collect();
        while let Some(p) = queue.pop_front() {
            for &si in &gens {
                let s = &self.strong[si];
                let q = s.apply(p);
                if level.reps[q].is_none() {
                    let u = level.reps[p].as_ref().expect("orbit point").0.then(s);
                    let inv = u.inverse();
                    level.reps[q] = Some((u, inv));
                    level.orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
    }

    /// Strips `g` through levels `from..`. Returns the residue and the level
    /// where stripping stopped (`levels.len()` if it went all the way).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base);
            match &level.reps[beta] {
                None => return (g, l),
                Some((_, u_inv)) => g = g.then(u_inv),
            }
        }
        (g, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.sift(p.clone(), 0).0.is_identity()
    }
}

/// A permutation group given by generators.
///
/// The stabilizer chain is built lazily on first use and cached; the cache is
/// a `OnceLock`, so a shared group can be queried from several threads.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup").field("degree", &self.degree).field("generators", &self.generators).finish()
    }
}

/// Orbits of a group action, each sorted, ordered by least element.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Sizes sorted ascending, convenient for comparing against a multiset.
    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.sizes();
        s.sort_unstable();
        s
    }

    pub fn block_of(&self, x: usize) -> Option<&[usize]> {
        self.blocks.iter().find(|b| b.contains(&x)).map(Vec::as_slice)
    }
}

/// JSON shape of a group: `{degree, order, generators, orbit_sizes}`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: String,
    pub generators: Vec<Permutation>,
    pub orbit_sizes: Vec<usize>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
        Ok(PermutationGroup { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    /// The full symmetric group on `n` points, from a transposition and an n-cycle.
    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return PermutationGroup::trivial(n);
        }
        let t = Permutation::from_cycles(n, &[&[0, 1]]).expect("valid");
        let cycle: Vec<usize> = (0..n).collect();
        let c = Permutation::from_cycles(n, &[&cycle]).expect("valid");
        PermutationGroup::new(n, vec![t, c]).expect("same degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        Ok(self.chain().contains(p))
    }

    /// Equality as permutation groups: mutual generator membership.
    pub fn same_group(&self, other: &PermutationGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(self.generators.iter().all(|g| other.chain().contains(g))
            && other.generators.iter().all(|g| self.chain().contains(g)))
    }

    pub fn orbits(&self) -> OrbitPartition {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for g in &self.generators {
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index_of_root = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index_of_root[r]].push(x);
        }
        OrbitPartition { blocks }
    }

    /// Every element, by breadth-first closure from the identity.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::GroupTooLarge { order: order.to_string(), cap });
        }
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            for g in &self.generators {
                let next = out[k].then(g);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
            k += 1;
        }
        Ok(out)
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            degree: self.degree,
            order: self.order().to_string(),
            generators: self.generators.clone(),
            orbit_sizes: self.orbits().sizes(),
        }
    }
}
