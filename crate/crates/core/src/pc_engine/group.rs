//! Explicit-set subgroup machinery over any small finite group.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use crate::abelian::AbelianType;
use crate::error::{Error, Result};

/// A finite group small enough to enumerate.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// A generating set for the whole group.
    fn generators(&self) -> Vec<Self::Elem>;

    /// `b a b⁻¹`, i.e. `a` acted on by `b` from the left.
    fn conj(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.op(&self.op(b, a), &self.inv(b))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    fn comm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.op(a, b);
        let ba = self.op(b, a);
        self.op(&self.inv(&ba), &ab)
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.op(&acc, &base);
            }
            base = self.op(&base, &base);
            n >>= 1;
        }
        acc
    }
}

/// A subgroup held as its sorted, deduplicated element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup<E> {
    generators: Vec<E>,
    elements: Vec<E>,
}

impl<E: Clone + Ord + Hash> Subgroup<E> {
    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }
}

/// Subgroup generated by `gens`, built by adding one generator at a time as a
/// union of right cosets of the previous subgroup. Redundant generators are
/// dropped, so the stored generating set is irredundant in the given order.
pub fn subgroup_closure<G: FiniteGroup>(group: &G, gens: &[G::Elem]) -> Subgroup<G::Elem> {
    let id = group.identity();
    let mut accepted: Vec<G::Elem> = Vec::new();
    let mut elements: Vec<G::Elem> = vec![id.clone()];
    let mut seen: HashSet<G::Elem> = HashSet::from([id.clone()]);
    for g in gens {
        if seen.contains(g) {
            continue;
        }
        accepted.push(g.clone());
        let base_len = elements.len();
        let mut reps = vec![id.clone()];
        let mut r = 0;
        while r < reps.len() {
            for s in &accepted {
                let x = group.op(&reps[r], s);
                if seen.contains(&x) {
                    continue;
                }
                for k in 0..base_len {
                    let y = group.op(&elements[k], &x);
                    seen.insert(y.clone());
                    elements.push(y);
                }
                reps.push(x);
            }
            r += 1;
        }
    }
    elements.sort();
    Subgroup {
        generators: accepted,
        elements,
    }
}

/// Smallest normal subgroup containing `gens`: keeps adding conjugates by the
/// group generators until the closure is stable under them.
pub fn normal_closure<G: FiniteGroup>(group: &G, gens: &[G::Elem]) -> Subgroup<G::Elem> {
    let group_gens = group.generators();
    let mut current: Vec<G::Elem> = gens.to_vec();
    loop {
        let sub = subgroup_closure(group, &current);
        let mut added = false;
        for x in sub.generators().to_vec() {
            for g in &group_gens {
                let y = group.conj(&x, g);
                if !sub.contains(&y) {
                    current.push(y);
                    added = true;
                }
            }
        }
        if !added {
            return sub;
        }
    }
}

pub fn is_normal<G: FiniteGroup>(group: &G, sub: &Subgroup<G::Elem>) -> Option<(G::Elem, G::Elem)> {
    for g in group.generators() {
        for x in sub.generators() {
            if !sub.contains(&group.conj(x, &g)) {
                return Some((x.clone(), g));
            }
        }
    }
    None
}

/// `G/N` as a concrete group on canonical coset representatives (the least
/// element of each coset).
#[derive(Debug)]
pub struct QuotientGroup<'a, G: FiniteGroup> {
    parent: &'a G,
    representatives: Vec<G::Elem>,
    rep_of: HashMap<G::Elem, usize>,
}

pub fn quotient<'a, G: FiniteGroup>(
    group: &'a G,
    all: &Subgroup<G::Elem>,
    normal: &Subgroup<G::Elem>,
) -> Result<QuotientGroup<'a, G>> {
    if let Some((x, g)) = is_normal(group, normal) {
        return Err(Error::NotNormal(format!("conjugate of {x:?} by {g:?} leaves the subgroup")));
    }
    let mut rep_of = HashMap::with_capacity(all.order());
    let mut representatives = Vec::with_capacity(all.order() / normal.order().max(1));
    // `all` is sorted, so the first unassigned element is its coset's minimum.
    for x in all.elements() {
        if rep_of.contains_key(x) {
            continue;
        }
        let idx = representatives.len();
        for n in normal.elements() {
            rep_of.insert(group.op(x, n), idx);
        }
        representatives.push(x.clone());
    }
    Ok(QuotientGroup {
        parent: group,
        representatives,
        rep_of,
    })
}

impl<G: FiniteGroup> QuotientGroup<'_, G> {
    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[G::Elem] {
        &self.representatives
    }

    pub fn canonical(&self, x: &G::Elem) -> G::Elem {
        self.representatives[self.rep_of[x]].clone()
    }

    /// Every coset as a subgroup of the quotient itself.
    pub fn as_subgroup(&self) -> Subgroup<G::Elem> {
        let mut elements = self.representatives.clone();
        elements.sort();
        Subgroup {
            generators: self.generators(),
            elements,
        }
    }
}

impl<G: FiniteGroup> FiniteGroup for QuotientGroup<'_, G> {
    type Elem = G::Elem;

    fn identity(&self) -> Self::Elem {
        self.canonical(&self.parent.identity())
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.canonical(&self.parent.op(a, b))
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.canonical(&self.parent.inv(a))
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let id = self.identity();
        let mut g: Vec<_> = self
            .parent
            .generators()
            .iter()
            .map(|x| self.canonical(x))
            .filter(|x| *x != id)
            .collect();
        g.sort();
        g.dedup();
        g
    }
}

/// Isomorphism type of an abelian subgroup by counting, for each `k`, the
/// elements killed by `p^k`.
pub fn abelian_invariants_of<G: FiniteGroup>(
    group: &G,
    sub: &Subgroup<G::Elem>,
    prime: u64,
) -> Result<AbelianType> {
    let gens = sub.generators();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if group.op(a, b) != group.op(b, a) {
                return Err(Error::NotAbelian(format!("{a:?} and {b:?} do not commute")));
            }
        }
    }
    let id = group.identity();
    let total = sub.order();
    let mut powers: Vec<G::Elem> = sub.elements().to_vec();
    let mut counts = vec![0u32];
    loop {
        powers = powers.iter().map(|x| group.pow(x, prime)).collect();
        let killed = powers.iter().filter(|x| **x == id).count();
        counts.push(log_exact(killed, prime)?);
        if killed == total {
            break;
        }
        if counts.len() > 64 {
            return Err(Error::NotAbelian("element orders are not powers of the prime".into()));
        }
    }
    AbelianType::from_killed_counts(&counts)
}

fn log_exact(n: usize, prime: u64) -> Result<u32> {
    let mut e = 0;
    let mut v = 1usize;
    while v < n {
        v *= prime as usize;
        e += 1;
    }
    if v == n {
        Ok(e)
    } else {
        Err(Error::NotAbelian(format!("{n} elements of p-power order is not a power of {prime}")))
    }
}
