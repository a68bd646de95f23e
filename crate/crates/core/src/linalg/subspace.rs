//! Subspaces kept in incremental echelon form, and the invariant-subspace
//! closure used for cyclic spans.

use num_traits::{One, Zero};

use super::scalar::{is_zero_vector, Rational};
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// A subspace of `Q^ambient`.
///
/// Basis vectors are stored with a unit pivot, and each vector vanishes at
/// the pivots of all earlier ones, so reducing against the basis in insertion
/// order clears every pivot position.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a Vec<Rational>>) -> Self {
        let mut s = Self::new(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Residual of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &r[p];
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.basis.push(r);
        self.pivots.push(p);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Smallest subspace of `Q^ambient` containing `seeds` and invariant under
/// every matrix in `ops`.
///
/// Breadth-first: each new basis vector is pushed through the operators in
/// declaration order and the images are row-reduced against the basis found
/// so far.  Terminates after at most `ambient` insertions.
pub fn span_closure(ambient: usize, seeds: &[Vec<Rational>], ops: &[SparseMatrix]) -> Result<Subspace> {
    for s in seeds {
        if s.len() != ambient {
            return Err(Error::SizeMismatch {
                expected: ambient,
                found: s.len(),
            });
        }
    }
    for op in ops {
        if op.nrows() != ambient || op.ncols() != ambient {
            return Err(Error::SizeMismatch {
                expected: ambient,
                found: if op.nrows() != ambient { op.nrows() } else { op.ncols() },
            });
        }
    }
    let mut space = Subspace::new(ambient);
    for s in seeds {
        space.insert(s);
    }
    let mut next = 0;
    while next < space.dim() && !space.is_full() {
        let v = space.basis[next].clone();
        next += 1;
        for op in ops {
            let w = op.mul_vec(&v);
            if !is_zero_vector(&w) {
                space.insert(&w);
                if space.is_full() {
                    break;
                }
            }
        }
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;

    fn e(i: usize, n: usize) -> Vec<Rational> {
        (0..n).map(|k| if k == i { rat(1) } else { rat(0) }).collect()
    }

    #[test]
    fn identity_adds_nothing() {
        let s = span_closure(3, &[e(0, 3)], &[SparseMatrix::identity(3)]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&e(0, 3)));
    }

    #[test]
    fn cycle_orbit_spans() {
        let cycle = SparseMatrix::from_triplets(3, 3, [(1, 0, rat(1)), (2, 1, rat(1)), (0, 2, rat(1))]);
        let s = span_closure(3, &[e(0, 3)], &[cycle]).unwrap();
        assert!(s.is_full());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(span_closure(3, &[e(0, 2)], &[]).is_err());
        assert!(span_closure(3, &[e(0, 3)], &[SparseMatrix::identity(2)]).is_err());
    }

    #[test]
    fn closure_is_idempotent() {
        let a = SparseMatrix::from_triplets(4, 4, [(1, 0, rat(2)), (2, 1, rat(-1)), (2, 0, rat(3))]);
        let s = span_closure(4, &[e(0, 4)], std::slice::from_ref(&a)).unwrap();
        assert_eq!(s.dim(), 3);
        let again = span_closure(4, s.basis(), &[a]).unwrap();
        assert!(again.same_as(&s));
    }

    #[test]
    fn membership() {
        let s = Subspace::spanned_by(3, &[vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(1)]]);
        assert!(s.contains(&[rat(1), rat(0), rat(-1)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
    }
}
