//! Null spaces via fraction-free (Bareiss) elimination.
//!
//! Each rational row is first scaled to an integer row.  The forward sweep
//! keeps every entry equal to a minor of the scaled input, so the division by
//! the previous pivot is exact and intermediate growth stays polynomial.  Kernel
//! vectors are recovered by back substitution and returned as primitive
//! integer vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{primitive, Rational};
use super::sparse::SparseMatrix;

/// Upper echelon form of an integer matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    /// Column of the pivot of each row.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn integer_row(row: &[(usize, Rational)], ncols: usize) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out = vec![BigInt::zero(); ncols];
    for (j, v) in row {
        out[*j] = v.numer() * (&lcm / v.denom());
    }
    out
}

/// Fraction-free forward elimination of `m`.
pub fn bareiss(m: &SparseMatrix) -> Echelon {
    let ncols = m.ncols();
    let mut a: Vec<Vec<BigInt>> = (0..m.nrows())
        .filter(|&i| !m.row(i).is_empty())
        .map(|i| integer_row(m.row(i), ncols))
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        let pivot = &prow[c];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let mut v = pivot * &row[j];
                if !factor.is_zero() && !prow[j].is_zero() {
                    v -= &factor * &prow[j];
                }
                if !v.is_zero() && !prev.is_one() {
                    let (q, rem) = v.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    v = q;
                }
                row[j] = v;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon {
        rows: a,
        pivots,
        ncols,
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    bareiss(m).rank()
}

/// Basis of `{ v : m v = 0 }`.  A matrix with no rows has the whole space as
/// its kernel.
pub fn mat_kernel(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    kernel_from_echelon(&bareiss(m))
}

pub fn kernel_from_echelon(e: &Echelon) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; e.ncols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    (0..e.ncols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = vec![Rational::zero(); e.ncols];
            x[free] = Rational::one();
            for (row, &c) in e.rows.iter().zip(&e.pivots).rev() {
                let mut s = Rational::zero();
                for j in c + 1..e.ncols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += &x[j] * Rational::from_integer(row[j].clone());
                    }
                }
                x[c] = -s / Rational::from_integer(row[c].clone());
            }
            primitive(&x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, rat};

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(mat_kernel(&SparseMatrix::identity(3)).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(mat_kernel(&SparseMatrix::zeros(2, 2)).len(), 2);
        assert_eq!(mat_kernel(&SparseMatrix::zeros(0, 4)).len(), 4);
    }

    #[test]
    fn rank_one_example() {
        let k = mat_kernel(&m(&[&[1, 1], &[2, 2]]));
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], rat(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn rational_entries() {
        let a = SparseMatrix::from_dense(&[
            vec![frac(1, 2), frac(1, 3), rat(1)],
            vec![rat(3), rat(2), rat(6)],
        ]);
        let k = mat_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn column_skipping_stays_exact() {
        // first column zero, later pivots need the previous-pivot division
        let a = m(&[&[0, 2, 4, 1], &[0, 3, 1, 5], &[0, 7, 9, 11], &[0, 1, 1, 1]]);
        let e = bareiss(&a);
        assert_eq!(e.pivots, vec![1, 2, 3]);
        let k = mat_kernel(&a);
        assert_eq!(k, vec![vec![rat(1), rat(0), rat(0), rat(0)]]);
    }
}
