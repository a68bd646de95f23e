//! Square matrices whose entries are polynomials in one formal variable.
//!
//! Stored as the list of coefficient matrices (lowest degree first), which
//! is the same object as a grid of [`Poly`] entries but keeps sparsity.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::{rat, Rational};
use super::sparse::SparseMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    coeffs: Vec<SparseMatrix>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::constant(SparseMatrix::identity(dim))
    }

    pub fn constant(m: SparseMatrix) -> Self {
        Self::from_coeffs(m.nrows(), vec![m])
    }

    pub fn from_coeffs(dim: usize, mut coeffs: Vec<SparseMatrix>) -> Self {
        for c in &coeffs {
            assert!(c.nrows() == dim && c.ncols() == dim, "coefficient shape mismatch");
        }
        while coeffs.last().is_some_and(SparseMatrix::is_zero) {
            coeffs.pop();
        }
        Self { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[SparseMatrix] {
        &self.coeffs
    }

    /// Coefficient of `u^d`.
    pub fn coeff(&self, d: usize) -> SparseMatrix {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(self.dim, self.dim))
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.get(i, j)).collect())
    }

    pub fn eval(&self, x: &Rational) -> SparseMatrix {
        self.coeffs
            .iter()
            .rev()
            .fold(SparseMatrix::zeros(self.dim, self.dim), |acc, c| {
                &acc.scale(x) + c
            })
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.dim,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c.scale(&rat(d as i64)))
                .collect(),
        )
    }

    /// Substitutes `u ↦ u + c`.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let deg = self.coeffs.len();
        let mut out = vec![SparseMatrix::zeros(self.dim, self.dim); deg];
        // (u + c)^d = Σ_e binom(d, e) c^(d-e) u^e
        for (d, m) in self.coeffs.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let mut binom = Rational::one();
            let mut power = Rational::one();
            let mut terms = vec![Rational::zero(); d + 1];
            for k in 0..=d {
                // coefficient of u^(d-k) is binom(d, k) c^k
                terms[d - k] = &binom * &power;
                binom = binom * rat((d - k) as i64) / rat(k as i64 + 1);
                power *= c;
            }
            for (e, t) in terms.iter().enumerate() {
                if !t.is_zero() {
                    out[e] = &out[e] + &m.scale(t);
                }
            }
        }
        Self::from_coeffs(self.dim, out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.dim, self.coeffs.iter().map(|m| m.scale(c)).collect())
    }

    /// Multiplies by the scalar polynomial `p(u)`.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = vec![SparseMatrix::zeros(self.dim, self.dim); self.coeffs.len() + p.coeffs().len() - 1];
        for (d, m) in self.coeffs.iter().enumerate() {
            for (e, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out[d + e] = &out[d + e] + &m.scale(c);
                }
            }
        }
        Self::from_coeffs(self.dim, out)
    }

    /// Tensor product of operators, coefficients convolved.
    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        if self.is_zero() || other.is_zero() {
            return Self::zero(dim);
        }
        let mut out = vec![SparseMatrix::zeros(dim, dim); self.coeffs.len() + other.coeffs.len() - 1];
        for (d, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (e, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[d + e] = &out[d + e] + &a.kron(b);
                }
            }
        }
        Self::from_coeffs(dim, out)
    }
}

impl<'a> Add<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "poly-matrix dimension mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyMatrix::from_coeffs(self.dim, (0..n).map(|d| &self.coeff(d) + &rhs.coeff(d)).collect())
    }
}

impl<'a> Sub<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "poly-matrix dimension mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyMatrix::from_coeffs(self.dim, (0..n).map(|d| &self.coeff(d) - &rhs.coeff(d)).collect())
    }
}

impl<'a> Mul<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "poly-matrix dimension mismatch");
        if self.is_zero() || rhs.is_zero() {
            return PolyMatrix::zero(self.dim);
        }
        let mut out = vec![SparseMatrix::zeros(self.dim, self.dim); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (d, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (e, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[d + e] = &out[d + e] + &(a * b);
                }
            }
        }
        PolyMatrix::from_coeffs(self.dim, out)
    }
}
