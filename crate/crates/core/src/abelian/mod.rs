//! Finite abelian p-groups up to isomorphism, and the functors the tensor
//! square decomposition is built from.
//!
//! A type is stored as a partition: the non-increasing list of exponents
//! `λ₁ ≥ λ₂ ≥ … ≥ 1` of `Z_{p^λ₁} ⊕ Z_{p^λ₂} ⊕ …`. The prime itself is not
//! part of the value, which lets the summary tables stay symbolic in `p`.

mod abelianize;
mod snf;
mod text;

pub use abelianize::{ab_from_presentation, abelianization_matrix};
pub use snf::{IntegerMatrix, SnfScalar};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct AbelianType {
    exponents: Vec<u32>,
}

impl From<Vec<u32>> for AbelianType {
    fn from(exponents: Vec<u32>) -> Self {
        Self::new(exponents)
    }
}

impl From<AbelianType> for Vec<u32> {
    fn from(t: AbelianType) -> Self {
        t.exponents
    }
}

impl AbelianType {
    /// Canonicalizes an arbitrary exponent multiset. Zero exponents are
    /// trivial factors and are dropped.
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        let mut exponents: Vec<u32> = exponents.into_iter().filter(|&e| e > 0).collect();
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Self { exponents }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// `Z_{p^e}`.
    pub fn cyclic(e: u32) -> Self {
        Self::new([e])
    }

    /// `Z_{p^e}^{(rank)}`.
    pub fn homocyclic(e: u32, rank: usize) -> Self {
        Self::new(std::iter::repeat_n(e, rank))
    }

    /// `Z_p^{(rank)}`.
    pub fn elementary(rank: usize) -> Self {
        Self::homocyclic(1, rank)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// `log_p |A|`.
    pub fn log_order(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// `log_p exp(A)`; zero for the trivial group.
    pub fn log_exponent(&self) -> u32 {
        self.exponents.first().copied().unwrap_or(0)
    }

    pub fn is_elementary(&self) -> bool {
        self.log_exponent() <= 1
    }

    pub fn order(&self, prime: u64) -> BigUint {
        BigUint::from(prime).pow(self.log_order())
    }

    /// Number of cyclic factors of each exponent, as `(exponent, multiplicity)`
    /// pairs in decreasing exponent order.
    pub fn grouped(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &e in &self.exponents {
            match out.last_mut() {
                Some((last, n)) if *last == e => *n += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.exponents.iter().chain(&other.exponents).copied())
    }

    /// `A ⊗ B`, using `Z_{p^a} ⊗ Z_{p^b} = Z_{p^min(a,b)}` on every pair of
    /// cyclic factors.
    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(
            self.exponents
                .iter()
                .flat_map(|&a| other.exponents.iter().map(move |&b| a.min(b))),
        )
    }

    /// `A ∧ A`: one `Z_{p^min(λᵢ,λⱼ)}` per unordered pair of distinct factors.
    pub fn exterior_square(&self) -> Self {
        Self::new(self.pairwise_minima())
    }

    /// Whitehead's `Γ(A)` for odd order:
    /// `Γ(⊕ Z_{nᵢ}) = ⊕ Z_{nᵢ} ⊕ ⊕_{i<j} Z_{gcd(nᵢ,nⱼ)}`.
    pub fn gamma(&self, prime: u64) -> Result<Self> {
        if prime.is_multiple_of(2) && !self.is_trivial() {
            return Err(Error::EvenOrderUnsupported(prime));
        }
        Ok(Self::new(
            self.exponents.iter().copied().chain(self.pairwise_minima()),
        ))
    }

    fn pairwise_minima(&self) -> Vec<u32> {
        let e = &self.exponents;
        let mut out = Vec::with_capacity(e.len() * e.len().saturating_sub(1) / 2);
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                out.push(e[i].min(e[j]));
            }
        }
        out
    }

    /// `log_p #{x ∈ A : x^{p^k} = 1} = Σ min(λᵢ, k)`.
    pub fn log_count_killed_by(&self, k: u32) -> u32 {
        self.exponents.iter().map(|&e| e.min(k)).sum()
    }

    /// Inverse of [`Self::log_count_killed_by`]: rebuilds the partition from
    /// the cumulative counts `c_0 = 0, c_1, c_2, …` (all of them, up to the
    /// point where they stabilize).
    pub fn from_killed_counts(counts: &[u32]) -> Result<Self> {
        let mut at_least: Vec<u32> = Vec::new();
        let mut prev = 0u32;
        for &c in counts {
            if c < prev {
                return Err(Error::NotAbelian(format!(
                    "p-torsion counts are not monotone: {counts:?}"
                )));
            }
            at_least.push(c - prev);
            prev = c;
        }
        // at_least[k] = #factors with exponent >= k, for k >= 1.
        let mut exps = Vec::new();
        for k in 1..at_least.len() {
            let here = at_least[k];
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            if next > here {
                return Err(Error::NotAbelian(format!(
                    "p-torsion increments are not non-increasing: {counts:?}"
                )));
            }
            exps.extend(std::iter::repeat_n(k as u32, (here - next) as usize));
        }
        Ok(Self::new(exps))
    }
}
