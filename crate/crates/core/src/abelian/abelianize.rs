use num_bigint::BigInt;

use super::{AbelianType, IntegerMatrix};
use crate::error::Result;
use crate::pc_engine::{PcPresentation, NGENS};

/// Relation matrix of `G^ab` on the generators `g₁ … g₅`: each power relation
/// `g_i^p = t` gives `p·e_i − t`, each commutator relation `[g_j, g_i] = t`
/// gives `t`.
pub fn abelianization_matrix(pc: &PcPresentation) -> IntegerMatrix<BigInt> {
    let p = i64::from(pc.prime());
    let mut m = IntegerMatrix::zeros(0, NGENS);
    for i in 1..=NGENS {
        let mut row: Vec<BigInt> = pc.power_tail(i).0.iter().map(|&e| -BigInt::from(e)).collect();
        row[i - 1] += p;
        m.push_row(row);
    }
    for j in 1..=NGENS {
        for i in 1..j {
            let tail = pc.comm_tail(j, i);
            if !tail.is_identity() {
                m.push_row(tail.0.iter().map(|&e| BigInt::from(e)).collect());
            }
        }
    }
    m
}

/// `G^ab` by Smith normal form of the abelianized relations.
pub fn ab_from_presentation(pc: &PcPresentation) -> Result<AbelianType> {
    abelianization_matrix(pc).cokernel_type(pc.prime().into())
}
