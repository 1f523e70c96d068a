//! Smith normal form over a generic integer scalar.
//!
//! `IntegerMatrix<BigInt>` is the default used by the invariant pipeline; the
//! machine-integer instantiations exist for the oracle sweeps, where the
//! entries are known to stay small.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

use super::AbelianType;
use crate::error::{Error, Result};

pub trait SnfScalar: Integer + Signed + Clone + FromPrimitive + Debug + Display {}

impl<T> SnfScalar for T where T: Integer + Signed + Clone + FromPrimitive + Debug + Display {}

/// Row-major relation matrix: each row is a relation among `cols` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: SnfScalar> IntegerMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged relation matrix");
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v).expect("entry fits scalar")).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols, "ragged relation matrix");
        self.data.extend(row);
        self.rows += 1;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &T) {
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * q.clone();
            let d = &mut self.data[dst * self.cols + j];
            *d = d.clone() - v;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &T) {
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * q.clone();
            let d = &mut self.data[i * self.cols + dst];
            *d = d.clone() - v;
        }
    }

    /// Diagonal of the Smith normal form: `min(rows, cols)` non-negative
    /// entries with `d₁ | d₂ | …`; zeros (if any) come last.
    pub fn smith_diagonal(&self) -> Vec<T> {
        let mut m = self.clone();
        let n = m.rows.min(m.cols);
        let mut diag = Vec::with_capacity(n);
        for t in 0..n {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m.rows {
                for j in t..m.cols {
                    let v = &m[(i, j)];
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(T::zero(), n - t));
                break;
            };
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..m.rows {
                    if m[(i, t)].is_zero() {
                        continue;
                    }
                    let q = m[(i, t)].div_floor(&m[(t, t)]);
                    m.row_axpy(i, t, &q);
                    if !m[(i, t)].is_zero() {
                        m.swap_rows(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..m.cols {
                    if m[(t, j)].is_zero() {
                        continue;
                    }
                    let q = m[(t, j)].div_floor(&m[(t, t)]);
                    m.col_axpy(j, t, &q);
                    if !m[(t, j)].is_zero() {
                        m.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let pivot = m[(t, t)].clone();
                let offender = (t + 1..m.rows)
                    .find(|&i| (t + 1..m.cols).any(|j| !m[(i, j)].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        let minus_one = T::zero() - T::one();
                        m.row_axpy(t, i, &minus_one);
                    }
                    None => break,
                }
            }
            diag.push(m[(t, t)].abs());
        }
        diag
    }

    /// Type of the cokernel `Z^cols / rowspace`, which must be a finite
    /// p-group.
    pub fn cokernel_type(&self, prime: u64) -> Result<AbelianType> {
        let diag = self.smith_diagonal();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        if nonzero < self.cols {
            return Err(Error::InfiniteCokernel(self.cols - nonzero));
        }
        let p = T::from_u64(prime).expect("prime fits scalar");
        let mut exps = Vec::with_capacity(nonzero);
        for d in diag.into_iter().filter(|d| !d.is_zero()) {
            let mut rest = d.clone();
            let mut e = 0u32;
            while rest.is_multiple_of(&p) {
                rest = rest / p.clone();
                e += 1;
            }
            if !rest.is_one() {
                return Err(Error::NotPrimePower {
                    factor: d.to_string(),
                    prime,
                });
            }
            exps.push(e);
        }
        Ok(AbelianType::new(exps))
    }
}

impl<T> std::ops::Index<(usize, usize)> for IntegerMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for IntegerMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn identity_has_trivial_cokernel() {
        let m = IntegerMatrix::<BigInt>::identity(3);
        assert!(m.cokernel_type(5).unwrap().is_trivial());
    }

    #[test]
    fn diagonal_input() {
        let m = IntegerMatrix::<i64>::from_i64_rows(&[vec![5, 0], vec![0, 25], vec![0, 0]], 2);
        assert_eq!(m.cokernel_type(5).unwrap(), AbelianType::new([1, 2]));
    }

    #[test]
    fn non_diagonal_needs_gcd_steps() {
        // Z^2 / <(2,4),(6,8)> has invariants 2, 4.
        let m = IntegerMatrix::<i64>::from_i64_rows(&[vec![2, 4], vec![6, 8]], 2);
        assert_eq!(m.smith_diagonal(), vec![2, 4]);
        assert_eq!(m.cokernel_type(2).unwrap(), AbelianType::new([1, 2]));
    }

    #[test]
    fn divisibility_fixup() {
        // diag(4, 6) is not in Smith form; the answer is diag(2, 12).
        let m = IntegerMatrix::<i64>::from_i64_rows(&[vec![4, 0], vec![0, 6]], 2);
        assert_eq!(m.smith_diagonal(), vec![2, 12]);
    }

    #[test]
    fn infinite_and_mixed_cokernels_are_rejected() {
        let m = IntegerMatrix::<i64>::from_i64_rows(&[vec![5, 0]], 2);
        assert_eq!(m.cokernel_type(5), Err(Error::InfiniteCokernel(1)));
        let m = IntegerMatrix::<i64>::from_i64_rows(&[vec![10]], 1);
        assert!(matches!(m.cokernel_type(5), Err(Error::NotPrimePower { .. })));
    }

    fn det2(m: &[Vec<i64>]) -> i64 {
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    proptest! {
        #[test]
        fn smith_chain_divides_and_preserves_determinant(
            a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30
        ) {
            let rows = vec![vec![a, b], vec![c, d]];
            let diag = IntegerMatrix::<i64>::from_i64_rows(&rows, 2).smith_diagonal();
            prop_assert_eq!(diag[0] * diag[1], det2(&rows).abs());
            if diag[0] != 0 {
                prop_assert_eq!(diag[1] % diag[0], 0);
            }
            let big = IntegerMatrix::<BigInt>::from_i64_rows(&rows, 2).smith_diagonal();
            prop_assert_eq!(big, diag.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        }
    }
}
