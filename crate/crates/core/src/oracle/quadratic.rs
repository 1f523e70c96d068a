use num_integer::Integer;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::trial_rng;
use crate::abelian::IntegerMatrix;

/// `A = ⊕ Z_{nᵢ}` with the quadratic map `γ(x) = (xᵢ² mod nᵢ ; xᵢxⱼ mod gcd(nᵢ,nⱼ))`
/// into `⊕ Z_{nᵢ} ⊕ ⊕_{i<j} Z_{gcd(nᵢ,nⱼ)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticModel {
    moduli: Vec<u64>,
    value_moduli: Vec<u64>,
}

impl QuadraticModel {
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(moduli.iter().all(|&n| n >= 1), "moduli must be positive");
        let mut value_moduli = moduli.clone();
        for i in 0..moduli.len() {
            for j in i + 1..moduli.len() {
                value_moduli.push(moduli[i].gcd(&moduli[j]));
            }
        }
        Self {
            moduli,
            value_moduli,
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn value_moduli(&self) -> &[u64] {
        &self.value_moduli
    }

    pub fn order_of_domain(&self) -> u128 {
        self.moduli.iter().map(|&n| u128::from(n)).product()
    }

    pub fn order_of_values(&self) -> u128 {
        self.value_moduli.iter().map(|&n| u128::from(n)).product()
    }

    pub fn gamma(&self, x: &[u64]) -> Vec<u64> {
        let r = self.moduli.len();
        let mut out = Vec::with_capacity(self.value_moduli.len());
        out.extend(x.iter().zip(&self.moduli).map(|(v, n)| v * v % n));
        let mut k = r;
        for i in 0..r {
            for j in i + 1..r {
                out.push(x[i] * x[j] % self.value_moduli[k]);
                k += 1;
            }
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.moduli).map(|((a, b), n)| (a + b) % n).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter().zip(&self.moduli).map(|(a, n)| (n - a) % n).collect()
    }

    fn add_values(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.value_moduli).map(|((a, b), n)| (a + b) % n).collect()
    }

    fn random_element(&self, rng: &mut impl Rng) -> Vec<u64> {
        self.moduli.iter().map(|&n| rng.gen_range(0..n)).collect()
    }

    /// `γ(a⁻¹) = γ(a)`.
    pub fn relation_i(&self, a: &[u64]) -> bool {
        self.gamma(&self.neg(a)) == self.gamma(a)
    }

    /// `γ(abc)γ(a)γ(b)γ(c) = γ(ab)γ(bc)γ(ca)`, written additively.
    pub fn relation_ii(&self, a: &[u64], b: &[u64], c: &[u64]) -> bool {
        let ab = self.add(a, b);
        let bc = self.add(b, c);
        let ca = self.add(c, a);
        let abc = self.add(&ab, c);
        let lhs = [self.gamma(a), self.gamma(b), self.gamma(c)]
            .iter()
            .fold(self.gamma(&abc), |acc, v| self.add_values(&acc, v));
        let rhs = self.add_values(&self.add_values(&self.gamma(&ab), &self.gamma(&bc)), &self.gamma(&ca));
        lhs == rhs
    }

    /// Order of the subgroup of the value space generated by every `γ(x)`,
    /// as `|V| / |V/H|` with `V/H` from Smith normal form.
    pub fn generated_order(&self) -> u128 {
        let cols = self.value_moduli.len();
        if cols == 0 {
            return 1;
        }
        let mut m = IntegerMatrix::<i64>::zeros(0, cols);
        for (k, &n) in self.value_moduli.iter().enumerate() {
            let mut row = vec![0i64; cols];
            row[k] = n as i64;
            m.push_row(row);
        }
        for x in self.domain() {
            m.push_row(self.gamma(&x).into_iter().map(|v| v as i64).collect());
        }
        let cokernel: u128 = m.smith_diagonal().into_iter().map(|d| d as u128).product();
        self.order_of_values() / cokernel
    }

    fn domain(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &n in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |v| {
                        let mut x = prefix.clone();
                        x.push(v);
                        x
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub moduli: Vec<u64>,
    pub trials: u64,
    pub relation_i_failures: u64,
    pub relation_ii_failures: u64,
    /// Checked on the identity explicitly, outside the random trials.
    pub identity_ok: bool,
    pub generated_order: u128,
    /// `∏ nᵢ · ∏_{i<j} gcd(nᵢ, nⱼ)`.
    pub expected_order: u128,
}

impl GammaReport {
    pub fn passed(&self) -> bool {
        self.relation_i_failures == 0
            && self.relation_ii_failures == 0
            && self.identity_ok
            && self.generated_order == self.expected_order
    }
}

/// Both defining relations of `Γ` on `trials` random triples, plus the order
/// of the image.
pub fn gamma_relation_check(model: &QuadraticModel, trials: u64, seed: u64) -> GammaReport {
    assert!(model.moduli.iter().all(|n| n % 2 == 1), "the model needs odd moduli");
    let (f1, f2) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let a = model.random_element(&mut rng);
            let b = model.random_element(&mut rng);
            let c = model.random_element(&mut rng);
            (u64::from(!model.relation_i(&a)), u64::from(!model.relation_ii(&a, &b, &c)))
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    let zero = vec![0; model.moduli.len()];
    GammaReport {
        moduli: model.moduli.clone(),
        trials,
        relation_i_failures: f1,
        relation_ii_failures: f2,
        identity_ok: model.relation_ii(&zero, &zero, &zero) && model.gamma(&zero).iter().all(|&v| v == 0),
        generated_order: model.generated_order(),
        expected_order: model.order_of_values(),
    }
}
