//! Brute-force irreducibility test.
//!
//! A finite-dimensional module `V` of the Yangian is irreducible iff its
//! singular vectors (those killed by every `t_ij(u)` with `i < j`) form a
//! single line and that line generates `V`.  Any nonzero submodule contains a
//! singular vector: take a vector of maximal weight in it.  So if the only
//! singular line is `Cζ` and `ζ` is cyclic, every nonzero submodule contains
//! `ζ` and hence is `V`.  Conversely an irreducible `V` has `ζ` cyclic, and a
//! second singular line would generate a proper submodule.
//!
//! On a product of `k` evaluation modules the span of `t_ij^{(r)}` for
//! `r ≤ k` already contains every higher coefficient, so only those are used.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::scalar::{is_zero_vector, Rational};
use crate::linalg::{mat_kernel, span_closure, SparseMatrix, Subspace};
use crate::yangian::ModuleSpace;

/// Default bound on the dimension the oracle will attempt.
pub const DEFAULT_CAP: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub irreducible: bool,
    pub singular_dim: usize,
    pub cyclic: bool,
    pub dim: usize,
    /// Dimension of the submodule generated by `ζ`.
    pub cyclic_span_dim: usize,
}

/// `t_ij^{(r)}` for `i < j` and `1 ≤ r ≤ k`.
pub fn raising_coefficients(space: &ModuleSpace) -> Vec<SparseMatrix> {
    let (n, k) = (space.n(), space.num_factors());
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.extend(space.t_coefficients(i, j, k).into_iter().skip(1));
        }
    }
    out
}

/// `t_ij^{(r)}` for all `i, j` and `1 ≤ r ≤ k`; together with the identity
/// they span the image of the Yangian.
pub fn all_coefficients(space: &ModuleSpace) -> Vec<SparseMatrix> {
    let (n, k) = (space.n(), space.num_factors());
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.extend(
                space
                    .t_coefficients(i, j, k)
                    .into_iter()
                    .skip(1)
                    .filter(|m| !m.is_zero()),
            );
        }
    }
    out
}

/// Basis of the joint kernel of all raising coefficients.
///
/// Each coefficient shifts weights by a fixed root, so the kernel is the sum
/// of its intersections with the weight spaces, which are solved one at a
/// time.
pub fn singular_space(space: &ModuleSpace) -> Vec<Vec<Rational>> {
    let stacked = SparseMatrix::vstack(space.dim(), &raising_coefficients(space));
    let mut out = Vec::new();
    for block in space.weight_blocks() {
        let mut local = vec![usize::MAX; space.dim()];
        for (k, &idx) in block.iter().enumerate() {
            local[idx] = k;
        }
        let mut triplets = Vec::new();
        let mut nrows = 0;
        for i in 0..stacked.nrows() {
            let before = triplets.len();
            for (j, x) in stacked.row(i) {
                if local[*j] != usize::MAX {
                    triplets.push((nrows, local[*j], x.clone()));
                }
            }
            if triplets.len() > before {
                nrows += 1;
            }
        }
        let restricted = SparseMatrix::from_triplets(nrows, block.len(), triplets);
        for v in mat_kernel(&restricted) {
            let mut full = vec![Rational::zero(); space.dim()];
            for (x, &idx) in v.into_iter().zip(&block) {
                full[idx] = x;
            }
            out.push(full);
        }
    }
    out
}

/// The submodule generated by `v`.
pub fn cyclic_span(space: &ModuleSpace, v: &[Rational]) -> Result<Subspace> {
    if v.len() != space.dim() {
        return Err(Error::SizeMismatch { expected: space.dim(), found: v.len() });
    }
    if is_zero_vector(v) {
        return Err(Error::ZeroVector);
    }
    span_closure(space.dim(), &[v.to_vec()], &all_coefficients(space))
}

pub fn is_cyclic(space: &ModuleSpace, v: &[Rational]) -> Result<bool> {
    Ok(cyclic_span(space, v)?.is_full())
}

pub fn decide(space: &ModuleSpace) -> Verdict {
    let singular_dim = singular_space(space).len();
    let span = cyclic_span(space, &space.highest_vector()).expect("ζ is a nonzero vector of the space");
    let cyclic = span.is_full();
    Verdict {
        irreducible: singular_dim == 1 && cyclic,
        singular_dim,
        cyclic,
        dim: space.dim(),
        cyclic_span_dim: span.dim(),
    }
}

/// [`decide`], refusing spaces larger than `cap`.
pub fn decide_capped(space: &ModuleSpace, cap: usize) -> Result<Verdict> {
    check_cap(space.dim(), cap)?;
    Ok(decide(space))
}

pub(crate) fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::rat;
    use crate::weight::HighestWeight;

    fn space(ws: &[&[i64]]) -> ModuleSpace {
        ModuleSpace::from_weights(&ws.iter().map(|x| HighestWeight::from_ints(x).unwrap()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn single_factor_is_irreducible() {
        for w in [&[0i64, 0][..], &[1, 0], &[3, 1], &[2, 1, 0], &[2, 0, 0]] {
            let s = space(&[w]);
            let v = decide(&s);
            assert!(v.irreducible, "{w:?}");
            assert_eq!(v.singular_dim, 1);
            let sing = singular_space(&s);
            assert_eq!(sing[0][0], rat(1));
            assert!(sing[0][1..].iter().all(|x| x == &rat(0)));
        }
    }

    #[test]
    fn vector_squared_is_irreducible() {
        let s = space(&[&[1, 0], &[1, 0]]);
        assert_eq!(singular_space(&s).len(), 1);
        assert!(decide(&s).irreducible);
    }

    #[test]
    fn known_pairs() {
        let bad = decide(&space(&[&[1, 0], &[2, 1]]));
        assert!(!bad.irreducible);
        assert!(bad.singular_dim >= 2);
        assert!(decide(&space(&[&[1, 0], &[3, 2]])).irreducible);
    }

    #[test]
    fn blockwise_kernel_matches_full_kernel() {
        for ws in [&[&[1i64, 0][..], &[2, 1]][..], &[&[2, 0], &[1, 0], &[3, 3]], &[&[1, 0, 0], &[1, 1, 0]]] {
            let s = space(ws);
            let full = mat_kernel(&SparseMatrix::vstack(s.dim(), &raising_coefficients(&s)));
            let blocked = singular_space(&s);
            assert_eq!(full.len(), blocked.len());
            let a = Subspace::spanned_by(s.dim(), &full);
            assert!(Subspace::spanned_by(s.dim(), &blocked).same_as(&a));
        }
    }

    #[test]
    fn zero_vector_rejected() {
        let s = space(&[&[1, 0]]);
        assert_eq!(is_cyclic(&s, &[rat(0), rat(0)]), Err(Error::ZeroVector));
        assert!(is_cyclic(&s, &[rat(0), rat(1)]).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let s = space(&[&[1, 0], &[1, 0]]);
        assert_eq!(decide_capped(&s, 3), Err(Error::CapExceeded { dim: 4, cap: 3 }));
        assert!(decide_capped(&s, 4).is_ok());
    }
}
