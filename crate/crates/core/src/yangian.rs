//! The Yangian action on tensor products of evaluation modules.
//!
//! Everything is written with denominators cleared.  On a single factor
//! `L_a(λ)` the series `t_ij(u) = δ_ij + E_ij/(u - a)` becomes the linear
//! polynomial `T_ij(u) = δ_ij (u - a) + E_ij`; on a product of `k` factors the
//! coproduct `T_ij(u) = Σ T_{i c_1}(u) ⊗ T_{c_1 c_2}(u) ⊗ … ⊗ T_{c_{k-1} j}(u)`
//! is a polynomial of degree `k` in `u`, equal to `Π_p (u - a_p) · t_ij(u)`.
//! Quantum minors are formed from these `T`s, so each of the `r` factors of an
//! `r × r` minor contributes degree `k`.  For one factor at `a = 0` this is
//! exactly `u(u-1)…(u-r+1)` times the minor of the `t` series.
//!
//! Matrix indices `i, j` are 0-based throughout.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gt::{GlnModule, GtPattern};
use crate::linalg::scalar::{rat, Rational};
use crate::linalg::{Poly, PolyMatrix, SparseMatrix};
use crate::weight::{HighestWeight, WeightVector};

/// A tensor product `L_{a_1}(λ^(1)) ⊗ … ⊗ L_{a_k}(λ^(k))`.
///
/// Basis vectors are tuples of Gelfand–Tsetlin pattern indices, ordered
/// mixed-radix with the first factor most significant; index 0 is the tensor
/// product of the highest vectors.
#[derive(Clone, Debug)]
pub struct ModuleSpace {
    factors: Vec<(GlnModule, Rational)>,
    dim: usize,
    series: Vec<PolyMatrix>,
}

impl ModuleSpace {
    pub fn new(factors: Vec<(GlnModule, Rational)>) -> Result<Self> {
        let Some((first, _)) = factors.first() else {
            return Err(Error::NoFactors);
        };
        let n = first.n();
        for (m, _) in &factors {
            if m.n() != n {
                return Err(Error::SizeMismatch { expected: n, found: m.n() });
            }
        }
        let dim = factors.iter().map(|(m, _)| m.dim()).product();
        let mut series: Vec<PolyMatrix> = (0..n * n)
            .map(|ij| evaluation_operator(&factors[0].0, &factors[0].1, ij / n, ij % n))
            .collect();
        for (module, a) in &factors[1..] {
            let local: Vec<PolyMatrix> = (0..n * n)
                .map(|ij| evaluation_operator(module, a, ij / n, ij % n))
                .collect();
            series = (0..n * n)
                .map(|ij| {
                    let (i, j) = (ij / n, ij % n);
                    (0..n).fold(PolyMatrix::zero(series[0].dim() * module.dim()), |acc, c| {
                        &acc + &series[i * n + c].kron(&local[c * n + j])
                    })
                })
                .collect();
        }
        debug_assert!(series.iter().all(|s| s.dim() == dim));
        Ok(Self { factors, dim, series })
    }

    /// Builds the space from weights, each carrying its evaluation point.
    pub fn from_weights(ws: &[HighestWeight]) -> Result<Self> {
        Self::new(
            ws.iter()
                .map(|w| (GlnModule::new(w), w.eval_param().clone()))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.factors[0].0.n()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[(GlnModule, Rational)] {
        &self.factors
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|(m, _)| m.dim()).collect()
    }

    /// The sub-product made of a single factor.
    pub fn factor_space(&self, p: usize) -> Result<ModuleSpace> {
        let f = self.factors.get(p).ok_or(Error::IndexOutOfRange {
            what: "factor",
            index: p,
            bound: self.factors.len(),
        })?;
        ModuleSpace::new(vec![f.clone()])
    }

    /// Flat index of a tuple of per-factor pattern indices.
    pub fn basis_index(&self, parts: &[usize]) -> Result<usize> {
        if parts.len() != self.factors.len() {
            return Err(Error::SizeMismatch { expected: self.factors.len(), found: parts.len() });
        }
        let mut idx = 0;
        for (&k, (m, _)) in parts.iter().zip(&self.factors) {
            if k >= m.dim() {
                return Err(Error::IndexOutOfRange { what: "pattern", index: k, bound: m.dim() });
            }
            idx = idx * m.dim() + k;
        }
        Ok(idx)
    }

    pub fn basis_parts(&self, mut idx: usize) -> Vec<usize> {
        let mut parts = vec![0; self.factors.len()];
        for (slot, (m, _)) in parts.iter_mut().zip(&self.factors).rev() {
            *slot = idx % m.dim();
            idx /= m.dim();
        }
        parts
    }

    pub fn basis_vector(&self, idx: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[idx] = Rational::one();
        v
    }

    /// `gl_n` weight of every basis vector.
    pub fn basis_weights(&self) -> Vec<WeightVector> {
        let per_factor: Vec<Vec<WeightVector>> = self
            .factors
            .iter()
            .map(|(m, _)| m.patterns().iter().map(GtPattern::weight).collect())
            .collect();
        (0..self.dim)
            .map(|idx| {
                let mut total = vec![Rational::zero(); self.n()];
                for (k, ws) in self.basis_parts(idx).into_iter().zip(&per_factor) {
                    for (t, x) in total.iter_mut().zip(ws[k].coords()) {
                        *t += x;
                    }
                }
                WeightVector(total)
            })
            .collect()
    }

    /// Basis indices grouped by weight, groups ordered by first index.
    pub fn weight_blocks(&self) -> Vec<Vec<usize>> {
        let mut slot: HashMap<WeightVector, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (idx, w) in self.basis_weights().into_iter().enumerate() {
            let b = *slot.entry(w).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(idx);
        }
        blocks
    }

    /// `ζ`, the tensor product of the factor highest vectors.
    pub fn highest_vector(&self) -> Vec<Rational> {
        self.basis_vector(0)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange { what: "matrix", index: i, bound: self.n() });
        }
        Ok(())
    }

    /// `T_ij(u)` on the whole space.
    pub fn series(&self, i: usize, j: usize) -> &PolyMatrix {
        &self.series[i * self.n() + j]
    }

    /// `Π_p (u - a_p)`.
    pub fn clearing_polynomial(&self) -> Poly {
        let shifts: Vec<Rational> = self.factors.iter().map(|(_, a)| -a).collect();
        Poly::product_of_linear(&shifts)
    }

    /// The operator `t_ij^{(r)}`, the coefficient of `u^{-r}` in `t_ij(u)`.
    pub fn t_coefficient(&self, i: usize, j: usize, r: usize) -> Result<SparseMatrix> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.t_coefficients(i, j, r).pop().expect("r + 1 coefficients"))
    }

    /// `[t_ij^{(0)}, …, t_ij^{(r_max)}]`.
    ///
    /// From `T(u) = f(u) t(u)` with `f(u) = Σ_s f_s u^{k-s}`, `f_0 = 1`:
    /// `t^{(r)} = [u^{k-r}] T - Σ_{s=1}^{min(r,k)} f_s t^{(r-s)}`.
    pub fn t_coefficients(&self, i: usize, j: usize, r_max: usize) -> Vec<SparseMatrix> {
        let k = self.num_factors();
        let f = self.clearing_polynomial();
        let t_big = self.series(i, j);
        let mut out: Vec<SparseMatrix> = Vec::with_capacity(r_max + 1);
        out.push(if i == j {
            SparseMatrix::identity(self.dim)
        } else {
            SparseMatrix::zeros(self.dim, self.dim)
        });
        for r in 1..=r_max {
            let mut acc = if r <= k {
                t_big.coeff(k - r)
            } else {
                SparseMatrix::zeros(self.dim, self.dim)
            };
            for s in 1..=r.min(k) {
                let fs = f.coeff(k - s);
                if !fs.is_zero() {
                    acc = &acc - &out[r - s].scale(&fs);
                }
            }
            out.push(acc);
        }
        out
    }
}

/// `T_ij(u) = δ_ij (u - a) + E_ij` on one evaluation module.
pub fn evaluation_operator(module: &GlnModule, a: &Rational, i: usize, j: usize) -> PolyMatrix {
    let dim = module.dim();
    let e = module.generator(i, j).clone();
    if i == j {
        PolyMatrix::from_coeffs(
            dim,
            vec![&e - &SparseMatrix::scalar(dim, a.clone()), SparseMatrix::identity(dim)],
        )
    } else {
        PolyMatrix::constant(e)
    }
}

/// The coproduct image `T_ij(u)` on the whole tensor product.
pub fn tensor_operator(space: &ModuleSpace, i: usize, j: usize) -> Result<PolyMatrix> {
    space.check_index(i)?;
    space.check_index(j)?;
    Ok(space.series(i, j).clone())
}

/// Permutations of `0..r` with their signs.
pub(crate) fn signed_permutations(r: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        let r = used.len();
        if prefix.len() == r {
            let inversions = (0..r)
                .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            out.push((prefix.clone(), inversions % 2 == 0));
            return;
        }
        for x in 0..r {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(r), &mut vec![false; r], &mut out);
    out
}

fn check_minor_indices(space: &ModuleSpace, rows: &[usize], cols: &[usize]) -> Result<()> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch { expected: rows.len(), found: cols.len() });
    }
    for &x in rows.iter().chain(cols) {
        space.check_index(x)?;
    }
    Ok(())
}

fn has_repeat(xs: &[usize]) -> bool {
    xs.iter().enumerate().any(|(k, x)| xs[..k].contains(x))
}

/// Row-permuted expansion
/// `Σ_σ sgn σ · T_{a_σ(1) b_1}(u) T_{a_σ(2) b_2}(u-1) ⋯ T_{a_σ(r) b_r}(u-r+1)`
/// without any shortcut for repeated indices.
pub fn minor_row_expansion(space: &ModuleSpace, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
    check_minor_indices(space, rows, cols)?;
    let r = rows.len();
    let mut total = PolyMatrix::zero(space.dim());
    for (perm, even) in signed_permutations(r) {
        let term = (0..r).fold(PolyMatrix::identity(space.dim()), |acc, s| {
            &acc * &space.series(rows[perm[s]], cols[s]).shift(&rat(-(s as i64)))
        });
        total = if even { &total + &term } else { &total - &term };
    }
    Ok(total)
}

/// Column-permuted expansion
/// `Σ_σ sgn σ · T_{a_1 b_σ(1)}(u-r+1) ⋯ T_{a_r b_σ(r)}(u)`.
pub fn minor_column_expansion(space: &ModuleSpace, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
    check_minor_indices(space, rows, cols)?;
    let r = rows.len();
    let mut total = PolyMatrix::zero(space.dim());
    for (perm, even) in signed_permutations(r) {
        let term = (0..r).fold(PolyMatrix::identity(space.dim()), |acc, s| {
            let shift = -((r - 1 - s) as i64);
            &acc * &space.series(rows[s], cols[perm[s]]).shift(&rat(shift))
        });
        total = if even { &total + &term } else { &total - &term };
    }
    Ok(total)
}

/// The quantum minor `T^{rows}_{cols}(u)`.  Skew symmetry makes it vanish
/// when either index list repeats an entry.
pub fn quantum_minor(space: &ModuleSpace, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
    check_minor_indices(space, rows, cols)?;
    if has_repeat(rows) || has_repeat(cols) {
        return Ok(PolyMatrix::zero(space.dim()));
    }
    minor_row_expansion(space, rows, cols)
}

/// `A_m(u)`, `B_m(u)`, `C_m(u)` for a given size `m` (`1 ≤ m ≤ n`).
#[derive(Clone, Debug)]
pub struct DrinfeldGenerators {
    pub a: PolyMatrix,
    /// Absent for `m = n`.
    pub b: Option<PolyMatrix>,
    pub c: Option<PolyMatrix>,
}

/// Index sets of the Drinfeld generators of size `m`: `A_m` uses rows and
/// columns `0..m`, `B_m` replaces the last column by `m`, `C_m` the last row.
pub fn drinfeld_generators(space: &ModuleSpace, m: usize) -> Result<DrinfeldGenerators> {
    let n = space.n();
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange { what: "Drinfeld size", index: m, bound: n });
    }
    let head: Vec<usize> = (0..m).collect();
    let a = quantum_minor(space, &head, &head)?;
    let (b, c) = if m < n {
        let mut bent = head.clone();
        bent[m - 1] = m;
        (
            Some(quantum_minor(space, &head, &bent)?),
            Some(quantum_minor(space, &bent, &head)?),
        )
    } else {
        (None, None)
    };
    Ok(DrinfeldGenerators { a, b, c })
}

/// `τ_{ra}(v) = T^{a+1 … r}_{a … r-1}(v)` for `a < r`, the identity for
/// `r ≤ a`.
pub fn lowering_tau(space: &ModuleSpace, r: usize, a: usize) -> Result<PolyMatrix> {
    space.check_index(r)?;
    space.check_index(a)?;
    if r <= a {
        return Ok(PolyMatrix::identity(space.dim()));
    }
    let rows: Vec<usize> = (a + 1..=r).collect();
    let cols: Vec<usize> = (a..r).collect();
    quantum_minor(space, &rows, &cols)
}

/// `𝒯_{ra}(v, k) = τ_{ra}(v+k-1) ⋯ τ_{ra}(v+1) τ_{ra}(v)` as a polynomial
/// in `v`.
pub fn tau_product_poly(space: &ModuleSpace, r: usize, a: usize, k: usize) -> Result<PolyMatrix> {
    let tau = lowering_tau(space, r, a)?;
    Ok((0..k).rev().fold(PolyMatrix::identity(space.dim()), |acc, s| {
        &acc * &tau.shift(&rat(s as i64))
    }))
}

/// `𝒯_{ra}(v0, k)`, or its `v`-derivative at `v0` when `derivative` is set.
/// For `k = 0` the product is the identity (and its derivative zero).
pub fn tau_product(
    space: &ModuleSpace,
    r: usize,
    a: usize,
    v0: &Rational,
    k: usize,
    derivative: bool,
) -> Result<SparseMatrix> {
    let p = tau_product_poly(space, r, a, k)?;
    Ok(if derivative { p.derivative().eval(v0) } else { p.eval(v0) })
}
