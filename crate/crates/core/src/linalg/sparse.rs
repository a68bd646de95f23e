//! Row-compressed sparse matrices over the rationals.
//!
//! Generator matrices in Gelfand–Tsetlin bases have a handful of nonzero
//! entries per column, and their tensor products stay sparse, so every
//! operator in the crate is stored this way.  Each row keeps its entries
//! sorted by column with no explicit zeros.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        Self {
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| vec![(i, c.clone())]).collect(),
        }
    }

    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let n = diag.len();
        Self::from_triplets(n, n, diag.into_iter().enumerate().map(|(i, c)| (i, i, c)))
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zeros dropped.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) out of bounds");
            *acc[i].entry(j).or_insert_with(Rational::zero) += v;
        }
        Self {
            nrows,
            ncols,
            rows: acc
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(i, r)| {
                assert_eq!(r.len(), ncols, "ragged dense matrix");
                r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| {
                let mut out = vec![Rational::zero(); self.ncols];
                for (j, v) in r {
                    out[*j] = v.clone();
                }
                out
            })
            .collect()
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols, "matrix-vector size mismatch");
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .fold(Rational::zero(), |acc, (j, a)| acc + a * &v[*j])
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.ncols,
            self.nrows,
            self.triplets().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    /// Kronecker product; row index of `a ⊗ b` is `i_a * b.nrows + i_b`.
    pub fn kron(&self, other: &Self) -> Self {
        let nrows = self.nrows * other.nrows;
        let ncols = self.ncols * other.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * other.ncols + jb, a * b));
                    }
                }
                rows.push(row);
            }
        }
        Self { nrows, ncols, rows }
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack<'a>(ncols: usize, parts: impl IntoIterator<Item = &'a SparseMatrix>) -> Self {
        let mut rows = Vec::new();
        for p in parts {
            assert_eq!(p.ncols, ncols, "vstack column mismatch");
            rows.extend(p.rows.iter().cloned());
        }
        Self {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!(
            (self.nrows, self.ncols),
            (other.nrows, other.ncols),
            "matrix shape mismatch"
        );
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(ra, rb)| merge_rows(ra, rb, sign))
            .collect();
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }
}

fn merge_rows(a: &[(usize, Rational)], b: &[(usize, Rational)], add: bool) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() || ib < b.len() {
        let ja = a.get(ia).map_or(usize::MAX, |e| e.0);
        let jb = b.get(ib).map_or(usize::MAX, |e| e.0);
        if ja < jb {
            out.push(a[ia].clone());
            ia += 1;
        } else if jb < ja {
            let v = if add { b[ib].1.clone() } else { -&b[ib].1 };
            out.push((jb, v));
            ib += 1;
        } else {
            let v = if add { &a[ia].1 + &b[ib].1 } else { &a[ia].1 - &b[ib].1 };
            if !v.is_zero() {
                out.push((ja, v));
            }
            ia += 1;
            ib += 1;
        }
    }
    out
}

impl<'a> Add<&'a SparseMatrix> for &'a SparseMatrix {
    type Output = SparseMatrix;
    fn add(self, rhs: &SparseMatrix) -> SparseMatrix {
        self.combine(rhs, true)
    }
}

impl<'a> Sub<&'a SparseMatrix> for &'a SparseMatrix {
    type Output = SparseMatrix;
    fn sub(self, rhs: &SparseMatrix) -> SparseMatrix {
        self.combine(rhs, false)
    }
}

impl Neg for &SparseMatrix {
    type Output = SparseMatrix;
    fn neg(self) -> SparseMatrix {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a SparseMatrix> for &'a SparseMatrix {
    type Output = SparseMatrix;
    fn mul(self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "matrix product size mismatch");
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        let rows = self
            .rows
            .iter()
            .map(|ra| {
                acc.clear();
                for (k, a) in ra {
                    for (j, b) in &rhs.rows[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (*j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        }
    }
}
