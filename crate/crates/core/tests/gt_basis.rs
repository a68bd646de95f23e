use num_traits::Zero;

use yangian_core::gt::GlnModule;
use yangian_core::linalg::scalar::{frac, rat, to_i64};
use yangian_core::linalg::{Rational, SparseMatrix};
use yangian_core::yangian::{tau_product, ModuleSpace};
use yangian_core::{GtPattern, HighestWeight};

/// `ξ_Λ` built from the highest vector by products of lowering operators:
/// rows `r = n, n-1, …, 2` in turn, each applying
/// `𝒯_{r,i}(-λ_{r,i}, λ_{r,i} - λ_{r-1,i})` for every `i < r`.
fn lowered(space: &ModuleSpace, pattern: &GtPattern) -> Vec<Rational> {
    let n = space.n();
    let mut v = space.highest_vector();
    for r in (2..=n).rev() {
        let (upper, lower) = (pattern.row(r), pattern.row(r - 1));
        for i in 0..r - 1 {
            let k = to_i64(&(&upper[i] - &lower[i])).unwrap() as usize;
            let op = tau_product(space, r - 1, i, &-&upper[i], k, false).unwrap();
            v = op.mul_vec(&v);
        }
    }
    v
}

fn check(w: HighestWeight) {
    let module = GlnModule::new(&w);
    let space = ModuleSpace::from_weights(std::slice::from_ref(&w)).unwrap();
    for (idx, p) in module.patterns().iter().enumerate() {
        assert_eq!(lowered(&space, p), space.basis_vector(idx), "{w}: pattern {idx}");
    }
}

#[test]
fn lowering_products_reproduce_the_basis() {
    for xs in [&[2i64, 0][..], &[3, 1], &[2, 1, 0], &[3, 1, 0], &[2, 2, 0], &[1, 1, 0, 0], &[2, 1, 1, 0]] {
        check(HighestWeight::from_ints(xs).unwrap());
    }
}

#[test]
fn lowering_products_with_rational_top_row() {
    check(HighestWeight::from_ints(&[2, 1, 0]).unwrap().shifted(&frac(2, 3)));
}

#[test]
fn simple_generators_match_gt_formulas() {
    // E_{12} on L(1,0): ξ_1 ↦ ξ_0 with coefficient -(l_{21} - l_{11})(l_{22} - l_{11}) = -(1 - 0)(-1 - 0) = 1
    let m = GlnModule::new(&HighestWeight::from_ints(&[1, 0]).unwrap());
    assert_eq!(m.generator(0, 1), &SparseMatrix::from_triplets(2, 2, [(0, 1, rat(1))]));
    assert_eq!(m.generator(1, 0), &SparseMatrix::from_triplets(2, 2, [(1, 0, rat(1))]));
    // off-diagonal generators change the weight, so they have no diagonal entries
    let m = GlnModule::new(&HighestWeight::from_ints(&[2, 1, 0]).unwrap());
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let g = m.generator(i, j);
                assert!((0..g.nrows()).all(|k| g.get(k, k).is_zero()));
            }
        }
    }
}
