use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::trial_rng;
use crate::abelian::{AbelianType, IntegerMatrix};
use crate::error::Result;
use crate::pc_engine::{abelian_invariants_of, quotient, subgroup_closure, FiniteGroup};

/// `Z_{m₁} × … × Z_{m_r}` on residue vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProduct(pub Vec<u64>);

impl FiniteGroup for ResidueProduct {
    type Elem = Vec<u64>;

    fn identity(&self) -> Vec<u64> {
        vec![0; self.0.len()]
    }

    fn op(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).zip(&self.0).map(|((x, y), m)| (x + y) % m).collect()
    }

    fn inv(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(&self.0).map(|(x, m)| (m - x) % m).collect()
    }

    fn generators(&self) -> Vec<Vec<u64>> {
        (0..self.0.len())
            .map(|i| (0..self.0.len()).map(|j| u64::from(i == j)).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub trials: u64,
    pub mismatches: Vec<String>,
}

impl CountingReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Shapes `(p, rank, e)` with `(p^e)^rank` small enough to enumerate.
const SHAPES: &[(u64, usize, u32)] = &[
    (3, 1, 3),
    (3, 2, 2),
    (3, 2, 3),
    (3, 3, 2),
    (5, 1, 3),
    (5, 2, 1),
    (5, 2, 2),
    (5, 3, 1),
    (7, 1, 3),
    (7, 2, 1),
    (7, 2, 2),
    (7, 3, 1),
];

/// One trial: `Z_{p^e}^rank` modulo a random subgroup, typed once by element
/// counting in the explicit quotient and once by Smith normal form.
fn one_trial(seed: u64, t: u64) -> Result<Option<String>> {
    let mut rng = trial_rng(seed, t);
    let (p, rank, e) = SHAPES[rng.gen_range(0..SHAPES.len())];
    let q = p.pow(e);
    let group = ResidueProduct(vec![q; rank]);
    let nrel = rng.gen_range(0..=rank + 1);
    let relations: Vec<Vec<u64>> = (0..nrel)
        .map(|_| (0..rank).map(|_| rng.gen_range(0..q)).collect())
        .collect();

    let all = subgroup_closure(&group, &group.generators());
    let sub = subgroup_closure(&group, &relations);
    let quo = quotient(&group, &all, &sub)?;
    let counted = abelian_invariants_of(&quo, &quo.as_subgroup(), p)?;

    let mut m = IntegerMatrix::<i64>::zeros(0, rank);
    for i in 0..rank {
        let mut row = vec![0i64; rank];
        row[i] = q as i64;
        m.push_row(row);
    }
    for r in &relations {
        m.push_row(r.iter().map(|&v| v as i64).collect());
    }
    let snf: AbelianType = m.cokernel_type(p)?;
    Ok((counted != snf).then(|| {
        format!("p={p}, Z_{q}^{rank} / <{relations:?}>: counting {counted}, snf {snf}")
    }))
}

/// Order counting against Smith normal form on `trials` random quotients of
/// small homocyclic groups, for `p ∈ {3, 5, 7}`.
pub fn counting_vs_snf(trials: u64, seed: u64) -> Result<CountingReport> {
    let results: Result<Vec<Option<String>>> =
        (0..trials).into_par_iter().map(|t| one_trial(seed, t)).collect();
    Ok(CountingReport {
        trials,
        mismatches: results?.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scrambled_elementary_basis() {
        // Z_5^2 / <(1,1)> ≅ Z_5 by both routes.
        let g = ResidueProduct(vec![5, 5]);
        let all = subgroup_closure(&g, &g.generators());
        let n = subgroup_closure(&g, &[vec![1, 1]]);
        let q = quotient(&g, &all, &n).unwrap();
        assert_eq!(abelian_invariants_of(&q, &q.as_subgroup(), 5).unwrap(), AbelianType::cyclic(1));
    }

    #[test]
    fn twenty_five_plus_five_by_census() {
        let g = ResidueProduct(vec![25, 5]);
        let all = subgroup_closure(&g, &[vec![3, 1], vec![1, 4]]);
        assert_eq!(all.order(), 125);
        assert_eq!(abelian_invariants_of(&g, &all, 5).unwrap(), AbelianType::new([2, 1]));
    }

    #[test]
    fn small_sweep_agrees() {
        let r = counting_vs_snf(50, 3).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
    }
}
