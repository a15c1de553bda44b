//! Permutation groups and isometry groups of finite metric spaces.

mod abstract_iso;
mod group;
mod perm;
mod solver;

pub use abstract_iso::{abstract_isomorphic, DEFAULT_ISO_CAP};
pub use group::{GroupSummary, OrbitPartition, PermutationGroup, StabChain};
pub use perm::Permutation;
pub use solver::{
    automorphisms, graph_automorphisms, isometries, isometries_brute, preserves, ColorMatrix, BRUTE_MAX_DEGREE,
};

use num_bigint::BigUint;

use crate::error::Result;

pub fn group_order(g: &PermutationGroup) -> BigUint {
    g.order()
}

pub fn contains(g: &PermutationGroup, p: &Permutation) -> Result<bool> {
    g.contains(p)
}

pub fn same_group(g: &PermutationGroup, h: &PermutationGroup) -> Result<bool> {
    g.same_group(h)
}

pub fn orbits(g: &PermutationGroup) -> OrbitPartition {
    g.orbits()
}

pub fn elements(g: &PermutationGroup, cap: usize) -> Result<Vec<Permutation>> {
    g.elements(cap)
}
