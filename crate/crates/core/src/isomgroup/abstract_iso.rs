//! Abstract isomorphism of small permutation groups by backtracking over
//! generator images.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::isomgroup::group::PermutationGroup;
use crate::isomgroup::perm::Permutation;

/// Default enumeration cap for [`abstract_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 2000;

/// Enumerated group with a multiplication oracle on element indices.
struct Table {
    elems: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    orders: Vec<u64>,
}

impl Table {
    fn new(g: &PermutationGroup, cap: usize) -> Result<Self> {
        let elems = g.elements(cap)?;
        let index = elems.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let orders = elems.iter().map(Permutation::order).collect();
        Ok(Table { elems, index, orders })
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elems[a].then(&self.elems[b])]
    }
}

/// Drops generators already in the span of the earlier ones.
fn irredundant(g: &PermutationGroup) -> Vec<Permutation> {
    let mut kept: Vec<Permutation> = Vec::new();
    for s in g.generators() {
        let sub = PermutationGroup::new(g.degree(), kept.clone()).expect("same degree");
        if !sub.contains(s).expect("same degree") {
            kept.push(s.clone());
        }
    }
    kept
}

/// Decides whether `g` and `h` are isomorphic as abstract groups.
///
/// Both groups are enumerated (each must have order at most `cap`). The
/// search fixes an irredundant generating set of `g` and tries images in `h`
/// of matching element order, growing the partial homomorphism over the
/// subgroup generated so far and abandoning a branch on the first
/// inconsistency or collision.
pub fn abstract_isomorphic(g: &PermutationGroup, h: &PermutationGroup, cap: usize) -> Result<bool> {
    for grp in [g, h] {
        let order = grp.order();
        if order > BigUint::from(cap) {
            return Err(Error::GroupTooLarge { order: order.to_string(), cap });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let tg = Table::new(g, cap)?;
    let th = Table::new(h, cap)?;
    let mut go: Vec<u64> = tg.orders.clone();
    let mut ho: Vec<u64> = th.orders.clone();
    go.sort_unstable();
    ho.sort_unstable();
    if go != ho {
        return Ok(false);
    }
    let gens: Vec<usize> = irredundant(g).iter().map(|s| tg.index[s]).collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(assign(&tg, &th, &gens, &mut images))
}

fn assign(tg: &Table, th: &Table, gens: &[usize], images: &mut Vec<usize>) -> bool {
    let k = images.len();
    if k == gens.len() {
        return extend_hom(tg, th, gens, images).is_some_and(|phi| phi.iter().all(Option::is_some));
    }
    let want = tg.orders[gens[k]];
    for cand in 0..th.elems.len() {
        if th.orders[cand] != want {
            continue;
        }
        images.push(cand);
        if extend_hom(tg, th, &gens[..=k], images).is_some() && assign(tg, th, gens, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] ↦ images[i]` over the generated subgroup. Returns `None`
/// if the map is not a well-defined injective homomorphism there.
fn extend_hom(tg: &Table, th: &Table, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let id_g = tg.index[&Permutation::identity(tg.elems[0].degree())];
    let id_h = th.index[&Permutation::identity(th.elems[0].degree())];
    let mut phi: Vec<Option<usize>> = vec![None; tg.elems.len()];
    let mut used = vec![false; th.elems.len()];
    phi[id_g] = Some(id_h);
    used[id_h] = true;
    let mut queue = vec![id_g];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        let fx = phi[x].expect("queued elements are mapped");
        for (&s, &t) in gens.iter().zip(images) {
            let y = tg.mul(x, s);
            let fy = th.mul(fx, t);
            match phi[y] {
                Some(prev) if prev != fy => return None,
                Some(_) => {}
                None => {
                    if std::mem::replace(&mut used[fy], true) {
                        return None;
                    }
                    phi[y] = Some(fy);
                    queue.push(y);
                }
            }
        }
        k += 1;
    }
    Some(phi)
}
