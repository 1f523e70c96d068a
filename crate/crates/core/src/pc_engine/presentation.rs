//! Power-commutator presentations on five generators and collection.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::{subgroup_closure, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

pub const NGENS: usize = 5;

/// Normal form `g₁^e₁ ⋯ g₅^e₅` with every `eᵢ ∈ [0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element(pub [u8; NGENS]);

impl Element {
    pub const IDENTITY: Element = Element([0; NGENS]);

    /// `g_i` for a 1-based generator index.
    pub fn generator(i: usize) -> Self {
        assert!((1..=NGENS).contains(&i), "generator index {i} out of range");
        let mut e = [0; NGENS];
        e[i - 1] = 1;
        Element(e)
    }

    pub fn exps(&self) -> &[u8; NGENS] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [0; NGENS]
    }

    /// Lowest (1-based) generator index with a non-zero exponent.
    pub fn depth(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0).map(|i| i + 1)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "g{}", i + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A word: 1-based generator indices with signed exponents.
pub type Word = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcPresentation {
    prime: u32,
    /// `power_tails[i]` is the normal form of `g_{i+1}^p`.
    power_tails: [Element; NGENS],
    /// `comm_tails[j][i]` (j > i) is the normal form of `[g_{j+1}, g_{i+1}]`.
    comm_tails: [[Element; NGENS]; NGENS],
}

/// One failed associativity test from [`PcPresentation::consistency_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyFailure {
    pub test: String,
    pub left: Element,
    pub right: Element,
}

impl fmt::Display for ConsistencyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.test, self.left, self.right)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub tests_run: usize,
    pub failures: Vec<ConsistencyFailure>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PcPresentation {
    /// The elementary abelian presentation: every tail trivial.
    pub fn new(prime: u32) -> Result<Self> {
        if prime <= 3 || !is_prime(prime.into()) || prime > u8::MAX as u32 {
            return Err(Error::InvalidPrime(prime.into()));
        }
        Ok(Self {
            prime,
            power_tails: [Element::IDENTITY; NGENS],
            comm_tails: [[Element::IDENTITY; NGENS]; NGENS],
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    fn check_tail(&self, tail: &[u8; NGENS], above: usize, what: &str) -> Result<()> {
        for (idx, &e) in tail.iter().enumerate() {
            if u32::from(e) >= self.prime {
                return Err(Error::InvalidPresentation(format!(
                    "{what}: exponent {e} not reduced mod {}",
                    self.prime
                )));
            }
            if e != 0 && idx < above {
                return Err(Error::InvalidPresentation(format!(
                    "{what}: tail uses g{} but must lie above g{above}",
                    idx + 1
                )));
            }
        }
        Ok(())
    }

    /// Sets `g_i^p = tail` (1-based `i`).
    pub fn set_power(&mut self, i: usize, tail: [u8; NGENS]) -> Result<()> {
        self.check_index(i)?;
        self.check_tail(&tail, i, &format!("g{i}^p"))?;
        self.power_tails[i - 1] = Element(tail);
        Ok(())
    }

    /// Sets `[g_j, g_i] = tail` for `j > i` (1-based).
    pub fn set_commutator(&mut self, j: usize, i: usize, tail: [u8; NGENS]) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        if j <= i {
            return Err(Error::InvalidPresentation(format!(
                "commutator relations are stated as [g_j, g_i] with j > i, got [g{j}, g{i}]"
            )));
        }
        self.check_tail(&tail, j, &format!("[g{j},g{i}]"))?;
        self.comm_tails[j - 1][i - 1] = Element(tail);
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=NGENS).contains(&i) {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(format!("generator index {i} outside 1..={NGENS}")))
        }
    }

    pub fn power_tail(&self, i: usize) -> Element {
        self.power_tails[i - 1]
    }

    pub fn comm_tail(&self, j: usize, i: usize) -> Element {
        self.comm_tails[j - 1][i - 1]
    }

    /// Non-trivial relations, as printable strings like `[g3,g1] = g4 g5^2`.
    pub fn relations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 1..=NGENS {
            let t = self.power_tail(i);
            if !t.is_identity() {
                out.push(format!("g{i}^p = {t}"));
            }
        }
        for j in 1..=NGENS {
            for i in 1..j {
                let t = self.comm_tail(j, i);
                if !t.is_identity() {
                    out.push(format!("[g{j},g{i}] = {t}"));
                }
            }
        }
        out
    }

    /// Collection from the left. `pending` is a stack of `(0-based generator,
    /// positive count)` letters still to be multiplied onto `acc`; the top of
    /// the stack is the next letter.
    fn collect(&self, acc: &mut [u32; NGENS], pending: &mut Vec<(usize, u32)>) {
        let p = self.prime;
        while let Some((g, n)) = pending.pop() {
            if n == 0 {
                continue;
            }
            if acc[g + 1..].iter().all(|&e| e == 0) {
                // Nothing to move past: add exponents, spilling p-th powers.
                let s = acc[g] + n;
                acc[g] = s % p;
                for _ in 0..s / p {
                    push_word_reversed(pending, &self.power_tails[g]);
                }
                continue;
            }
            // acc = u · v with v on generators > g; u · v · g = u · g · v^g and
            // v^g = ∏_{j>g} (g_j [g_j, g])^{e_j}.
            pending.push((g, n - 1));
            // Pushed in reverse so the stack pops (g_j, [g_j, g] letters) in
            // increasing j.
            for j in (g + 1..NGENS).rev() {
                let e = std::mem::take(&mut acc[j]);
                let tail = &self.comm_tails[j][g];
                for _ in 0..e {
                    for k in (0..NGENS).rev() {
                        if tail.0[k] != 0 {
                            pending.push((k, u32::from(tail.0[k])));
                        }
                    }
                    pending.push((j, 1));
                }
            }
            pending.push((g, 1));
        }
    }

    fn from_acc(acc: [u32; NGENS]) -> Element {
        let mut e = [0u8; NGENS];
        for (dst, src) in e.iter_mut().zip(acc) {
            *dst = src as u8;
        }
        Element(e)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut acc = a.0.map(u32::from);
        let mut pending = Vec::with_capacity(32);
        push_word_reversed(&mut pending, b);
        self.collect(&mut acc, &mut pending);
        Self::from_acc(acc)
    }

    /// `g_i⁻¹ = g_i^{p-1} · (g_i^p)⁻¹`, where the tail lies strictly above `g_i`.
    pub fn generator_inverse(&self, i: usize) -> Element {
        let tail = self.power_tail(i);
        let mut head = [0u8; NGENS];
        head[i - 1] = (self.prime - 1) as u8;
        self.multiply(&Element(head), &self.inverse(&tail))
    }

    /// Solves `a · x = 1` one generator at a time: after step `i`, `a · x` has
    /// zero exponents on `g₁ … g_i`.
    pub fn inverse(&self, a: &Element) -> Element {
        let mut x = Element::IDENTITY;
        for i in 0..NGENS {
            let r = self.multiply(a, &x);
            let m = (self.prime - u32::from(r.0[i])) % self.prime;
            if m != 0 {
                let mut step = [0u8; NGENS];
                step[i] = m as u8;
                x = self.multiply(&x, &Element(step));
            }
        }
        x
    }

    /// `b a b⁻¹`.
    pub fn conjugate(&self, a: &Element, b: &Element) -> Element {
        self.multiply(&self.multiply(b, a), &self.inverse(b))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        let ab = self.multiply(a, b);
        let ba = self.multiply(b, a);
        self.multiply(&self.inverse(&ba), &ab)
    }

    pub fn power(&self, a: &Element, n: i64) -> Element {
        let base = if n < 0 { self.inverse(a) } else { *a };
        FiniteGroup::pow(self, &base, n.unsigned_abs())
    }

    /// Normal form of a word with arbitrary signed exponents.
    pub fn normalize(&self, word: &[(usize, i64)]) -> Element {
        let mut acc = Element::IDENTITY;
        for &(g, e) in word {
            assert!((1..=NGENS).contains(&g), "generator index {g} out of range");
            if e >= 0 {
                let mut a = acc.0.map(u32::from);
                let mut pending = Vec::new();
                let mut left = e as u64;
                // Chunk very large exponents so the counter stays in u32.
                while left > 0 {
                    let step = left.min(u32::MAX as u64 / 2) as u32;
                    pending.push((g - 1, step));
                    self.collect(&mut a, &mut pending);
                    left -= u64::from(step);
                }
                acc = Self::from_acc(a);
            } else {
                let inv = self.generator_inverse(g);
                acc = self.multiply(&acc, &FiniteGroup::pow(self, &inv, e.unsigned_abs()));
            }
        }
        acc
    }

    /// Order of `a` as a power of `p`: returns `k` with `|a| = p^k`.
    pub fn log_order_of(&self, a: &Element) -> u32 {
        let mut x = *a;
        let mut k = 0;
        while !x.is_identity() {
            x = FiniteGroup::pow(self, &x, self.prime.into());
            k += 1;
        }
        k
    }

    pub fn group_order(&self) -> usize {
        (self.prime as usize).pow(NGENS as u32)
    }

    /// All group elements, found as the closure of the generators. Anything
    /// other than `p⁵` elements means the presentation is inconsistent.
    pub fn enumerate(&self) -> Result<Subgroup<Element>> {
        let all = subgroup_closure(self, &self.generators());
        if all.order() != self.group_order() {
            return Err(Error::InconsistentPresentation(format!(
                "generators close to {} elements instead of {}",
                all.order(),
                self.group_order()
            )));
        }
        Ok(all)
    }

    /// Checks the standard overlaps:
    /// `(g_k g_j) g_i = g_k (g_j g_i)` for `k > j > i`,
    /// `(g_j^{p-1} g_j) g_i = g_j^{p-1} (g_j g_i)` for `j > i`,
    /// `g_j (g_i^{p-1} g_i) = (g_j g_i^{p-1}) g_i` for `j > i`, and
    /// `(g_i^{p-1} g_i) g_i = g_i (g_i^{p-1} g_i)`.
    pub fn consistency_check(&self) -> ConsistencyReport {
        let g = |i: usize| Element::generator(i);
        let head = |i: usize| {
            let mut e = [0u8; NGENS];
            e[i - 1] = (self.prime - 1) as u8;
            Element(e)
        };
        let mul = |a: &Element, b: &Element| self.multiply(a, b);
        let mut report = ConsistencyReport::default();
        let mut record = |test: String, left: Element, right: Element| {
            report.tests_run += 1;
            if left != right {
                report.failures.push(ConsistencyFailure { test, left, right });
            }
        };
        for k in 1..=NGENS {
            for j in 1..k {
                for i in 1..j {
                    record(
                        format!("(g{k} g{j}) g{i} = g{k} (g{j} g{i})"),
                        mul(&mul(&g(k), &g(j)), &g(i)),
                        mul(&g(k), &mul(&g(j), &g(i))),
                    );
                }
            }
        }
        for j in 1..=NGENS {
            for i in 1..j {
                record(
                    format!("(g{j}^p) g{i} = g{j}^(p-1) (g{j} g{i})"),
                    mul(&self.power_tail(j), &g(i)),
                    mul(&head(j), &mul(&g(j), &g(i))),
                );
                record(
                    format!("g{j} (g{i}^p) = (g{j} g{i}) g{i}^(p-1)"),
                    mul(&g(j), &self.power_tail(i)),
                    mul(&mul(&g(j), &g(i)), &head(i)),
                );
            }
        }
        for i in 1..=NGENS {
            record(
                format!("(g{i}^p) g{i} = g{i} (g{i}^p)"),
                mul(&self.power_tail(i), &g(i)),
                mul(&g(i), &self.power_tail(i)),
            );
        }
        report
    }

    /// Consistency check followed by enumeration; the error names the first
    /// failing overlap.
    pub fn validate(&self) -> Result<Subgroup<Element>> {
        let report = self.consistency_check();
        if let Some(first) = report.failures.first() {
            return Err(Error::InconsistentPresentation(format!(
                "{} of {} overlap tests fail; first: {first}",
                report.failures.len(),
                report.tests_run
            )));
        }
        self.enumerate()
    }
}

fn push_word_reversed(pending: &mut Vec<(usize, u32)>, w: &Element) {
    for (k, &e) in w.0.iter().enumerate().rev() {
        if e != 0 {
            pending.push((k, u32::from(e)));
        }
    }
}

impl FiniteGroup for PcPresentation {
    type Elem = Element;

    fn identity(&self) -> Element {
        Element::IDENTITY
    }

    fn op(&self, a: &Element, b: &Element) -> Element {
        self.multiply(a, b)
    }

    fn inv(&self, a: &Element) -> Element {
        self.inverse(a)
    }

    fn generators(&self) -> Vec<Element> {
        (1..=NGENS).map(Element::generator).collect()
    }
}
