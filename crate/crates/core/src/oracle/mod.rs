//! Brute-force checks of the abelian calculus by routes that share no code
//! with the closed-form rules: universal bilinear relations, a concrete
//! quadratic model of `Γ`, and element counting in explicit groups.

mod counting;
mod quadratic;

pub use counting::{counting_vs_snf, CountingReport, ResidueProduct};
pub use quadratic::{gamma_relation_check, GammaReport, QuadraticModel};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abelian::{AbelianType, IntegerMatrix};
use crate::error::Result;

/// Seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 0x5eed_0005;

/// Independent stream `stream` of the generator seeded by `seed`, so trials
/// can run in any order and still reproduce.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `A ⊗ B` as the cokernel of the universal bilinear relations: generators
/// `e_{ij}` for factor pairs, relations `nᵢ·e_{ij}` and `mⱼ·e_{ij}`.
pub fn bilinear_tensor_oracle(a: &AbelianType, b: &AbelianType, prime: u64) -> Result<AbelianType> {
    let (r, s) = (a.rank(), b.rank());
    if r == 0 || s == 0 {
        return Ok(AbelianType::trivial());
    }
    let n: Vec<i64> = a.exponents().iter().map(|&e| (prime as i64).pow(e)).collect();
    let m: Vec<i64> = b.exponents().iter().map(|&e| (prime as i64).pow(e)).collect();
    let cols = r * s;
    let mut mat = IntegerMatrix::<i64>::zeros(0, cols);
    for i in 0..r {
        for j in 0..s {
            for modulus in [n[i], m[j]] {
                let mut row = vec![0i64; cols];
                row[i * s + j] = modulus;
                mat.push_row(row);
            }
        }
    }
    mat.cokernel_type(prime)
}

/// Every partition with at most `max_parts` parts, each at most `max_exp`.
pub fn small_types(max_parts: usize, max_exp: u32) -> Vec<AbelianType> {
    fn go(prefix: &mut Vec<u32>, cap: u32, left: usize, out: &mut Vec<AbelianType>) {
        out.push(AbelianType::new(prefix.iter().copied()));
        if left == 0 {
            return;
        }
        for e in 1..=cap {
            prefix.push(e);
            go(prefix, e, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_exp, max_parts, &mut out);
    out
}

/// Pairs on which the bilinear oracle and the closed-form tensor disagree.
pub fn tensor_sweep(primes: &[u64], max_parts: usize, max_exp: u32) -> Result<(usize, Vec<String>)> {
    let types = small_types(max_parts, max_exp);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for &p in primes {
        for a in &types {
            for b in &types {
                checked += 1;
                let oracle = bilinear_tensor_oracle(a, b, p)?;
                let formula = a.tensor(b);
                if oracle != formula {
                    mismatches.push(format!("p={p}: ({a}) ⊗ ({b}) oracle {oracle}, formula {formula}"));
                }
            }
        }
    }
    Ok((checked, mismatches))
}
