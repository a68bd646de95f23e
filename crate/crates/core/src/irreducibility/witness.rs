//! Explicit vectors exhibiting reducibility of `L(λ) ⊗ L(μ)`.
//!
//! The construction applies when the pairwise condition fails for the index
//! pair `(0, n-1)` and holds for every other pair.  After folding the
//! evaluation points, and swapping the factors if needed, the pair then
//! satisfies `m_{n-1} ∈ ⟨l_{n-1}, l_0⟩` and
//! `l_0 ∈ ⟨m_{n-1}, m_0⟩`.  With `p` the index such that
//! `m_{n-1} ∈ ⟨l_p, l_{p-1}⟩` and `k_a = l_a - m_{n-p+a}` for `a < p`, the
//! vector
//!
//! ```text
//! θ̃ = 𝒯_{n-p,0}(-λ_0, k_0) 𝒯'_{n-p+1,1}(-λ_1, k_1) ⋯ 𝒯'_{n-1,p-1}(-λ_{p-1}, k_{p-1}) ζ
//! ```
//!
//! is nonzero and generates a proper submodule.  Indices are 0-based.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::scalar::{is_zero_vector, to_i64, Rational};
use crate::linalg::span_closure;
use crate::weight::{violated_pairs, ContentSet, HighestWeight};
use crate::yangian::{tau_product, ModuleSpace};

use super::oracle::{all_coefficients, cyclic_span};

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    /// Whether the factors were swapped to reach the oriented form.
    pub swapped: bool,
    /// The oriented, normalized pair `(λ, μ)` actually used.
    #[serde(skip)]
    pub lam: HighestWeight,
    #[serde(skip)]
    pub mu: HighestWeight,
    pub p: usize,
    pub q: usize,
    pub k_list: Vec<usize>,
    #[serde(skip)]
    pub theta: Vec<Rational>,
    pub theta_nonzero: bool,
    pub theta_in_cyclic_span: bool,
    /// `ζ` is not in the submodule generated by `θ̃`.
    pub theta_closure_proper: bool,
    pub cyclic_span_dim: usize,
    pub theta_span_dim: usize,
    pub dim: usize,
}

/// Index `p ≥ 1` with `x ∈ ⟨c_p, c_{p-1}⟩`.
fn locate(c: &ContentSet, x: &Rational) -> Option<usize> {
    (1..c.len()).find(|&p| c.gap_contains(p - 1, p, x))
}

/// Which clause of the oriented precondition fails, if any.
fn orientation_failure(l: &ContentSet, m: &ContentSet) -> Option<String> {
    let n = l.len();
    let last = n - 1;
    if !l.gap_contains(0, last, &m.contents()[last]) {
        return Some("m_{n-1} is not in ⟨l_{n-1}, l_0⟩".into());
    }
    if !m.gap_contains(0, last, &l.contents()[0]) {
        return Some("l_0 is not in ⟨m_{n-1}, m_0⟩".into());
    }
    None
}

/// Builds `θ̃` for a reducible pair and checks it against the oracle.
pub fn build_witness(lam: &HighestWeight, mu: &HighestWeight) -> Result<WitnessReport> {
    if lam.n() != mu.n() {
        return Err(Error::SizeMismatch { expected: lam.n(), found: mu.n() });
    }
    if lam.n() < 2 {
        return Err(Error::WitnessPrecondition("gl_1 products are always irreducible".into()));
    }
    let violated = violated_pairs(lam, mu)?;
    if violated.is_empty() {
        return Err(Error::WitnessPrecondition("the pair satisfies the criterion".into()));
    }
    let outer = (0, lam.n() - 1);
    if violated != [outer] {
        let inner: Vec<String> = violated
            .iter()
            .filter(|&&ij| ij != outer)
            .map(|(i, j)| format!("({i}, {j})"))
            .collect();
        return Err(Error::WitnessPrecondition(format!(
            "the condition also fails for the inner index pairs {}",
            inner.join(", ")
        )));
    }
    let (a, b) = (lam.normalize_evaluation(), mu.normalize_evaluation());
    let (swapped, lam, mu) = match orientation_failure(&a.content_set(), &b.content_set()) {
        None => (false, a, b),
        Some(first) => match orientation_failure(&b.content_set(), &a.content_set()) {
            None => (true, b, a),
            Some(second) => {
                return Err(Error::WitnessPrecondition(format!(
                    "neither orientation applies: as given, {first}; swapped, {second}"
                )))
            }
        },
    };
    let n = lam.n();
    let (l, m) = (lam.content_set(), mu.content_set());
    let p = locate(&l, &m.contents()[n - 1])
        .ok_or_else(|| Error::WitnessPrecondition("m_{n-1} lies in no gap ⟨l_p, l_{p-1}⟩".into()))?;
    let q = locate(&m, &l.contents()[0])
        .ok_or_else(|| Error::WitnessPrecondition("l_0 lies in no gap ⟨m_q, m_{q-1}⟩".into()))?;
    let k_list = (0..p)
        .map(|a| {
            let k = &l.contents()[a] - &m.contents()[n - p + a];
            to_i64(&k)
                .filter(|k| *k > 0)
                .map(|k| k as usize)
                .ok_or_else(|| Error::WitnessPrecondition(format!("k_{a} = {k} is not a positive integer")))
        })
        .collect::<Result<Vec<_>>>()?;

    let space = ModuleSpace::from_weights(&[lam.clone(), mu.clone()])?;
    let mut theta = space.highest_vector();
    for a in (0..p).rev() {
        let v0 = -&lam.entries()[a];
        let op = tau_product(&space, n - p + a, a, &v0, k_list[a], a > 0)?;
        theta = op.mul_vec(&theta);
    }

    let zeta = space.highest_vector();
    let zeta_span = cyclic_span(&space, &zeta)?;
    let theta_nonzero = !is_zero_vector(&theta);
    let theta_span = span_closure(
        space.dim(),
        if theta_nonzero { std::slice::from_ref(&theta) } else { &[] },
        &all_coefficients(&space),
    )?;
    Ok(WitnessReport {
        swapped,
        p,
        q,
        k_list,
        theta_nonzero,
        theta_in_cyclic_span: zeta_span.contains(&theta),
        theta_closure_proper: !theta_span.contains(&zeta),
        cyclic_span_dim: zeta_span.dim(),
        theta_span_dim: theta_span.dim(),
        dim: space.dim(),
        theta,
        lam,
        mu,
    })
}

impl WitnessReport {
    /// All three properties a witness must have.
    pub fn is_coherent(&self) -> bool {
        self.theta_nonzero && self.theta_in_cyclic_span && self.theta_closure_proper
    }

    /// Nonzero coordinates of `θ̃` as `(basis index, value)`.
    pub fn theta_support(&self) -> Vec<(usize, Rational)> {
        self.theta
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect()
    }

    /// Whether `θ̃` is a scalar multiple of `v`.
    pub fn theta_proportional_to(&self, v: &[Rational]) -> bool {
        let Some(i) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let c = &self.theta[i] / &v[i];
        !c.is_zero() && self.theta.iter().zip(v).all(|(t, x)| *t == &c * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::oracle::decide;
    use crate::linalg::scalar::rat;

    fn w(xs: &[i64]) -> HighestWeight {
        HighestWeight::from_ints(xs).unwrap()
    }

    #[test]
    fn gl2_vector_pair() {
        let r = build_witness(&w(&[1, 0]), &w(&[2, 1])).unwrap();
        assert!(!r.swapped);
        assert_eq!((r.p, r.k_list.clone()), (1, vec![1]));
        assert!(r.is_coherent());
        // E21 ξ ⊗ ξ' - ξ ⊗ E21 ξ' with E21 ξ = ξ_1 on both factors
        let mut expected = vec![rat(0); 4];
        expected[2] = rat(1);
        expected[1] = rat(-1);
        assert!(r.theta_proportional_to(&expected));
    }

    #[test]
    fn swapped_orientation() {
        let r = build_witness(&w(&[2, 1]), &w(&[1, 0])).unwrap();
        assert!(r.swapped);
        assert!(r.is_coherent());
    }

    #[test]
    fn gl3_with_two_steps() {
        let r = build_witness(&w(&[2, 1, 0]), &w(&[3, 1, 1])).unwrap();
        assert_eq!(r.p, 2);
        assert_eq!(r.k_list, vec![2, 1]);
        assert!(r.is_coherent(), "{r:?}");
        let space = ModuleSpace::from_weights(&[w(&[2, 1, 0]), w(&[3, 1, 1])]).unwrap();
        assert!(!decide(&space).irreducible);
    }

    #[test]
    fn gl3_with_one_step() {
        let r = build_witness(&w(&[2, 1, 1]), &w(&[4, 4, 3])).unwrap();
        assert_eq!((r.p, r.k_list.clone()), (1, vec![1]));
        assert!(r.is_coherent(), "{r:?}");
    }

    #[test]
    fn irreducible_pairs_are_rejected() {
        assert!(matches!(
            build_witness(&w(&[1, 0]), &w(&[3, 2])),
            Err(Error::WitnessPrecondition(_))
        ));
        assert!(matches!(
            build_witness(&w(&[1, 0]), &w(&[1, 0])),
            Err(Error::WitnessPrecondition(_))
        ));
    }

    #[test]
    fn inner_violations_are_rejected() {
        // (0, 1) fails as well as (0, 2)
        let err = build_witness(&w(&[3, 2, 1]), &w(&[2, 1, 0])).unwrap_err();
        assert!(matches!(err, Error::WitnessPrecondition(ref m) if m.contains("(0, 1)")), "{err}");
    }

    #[test]
    fn evaluation_points_are_folded() {
        let mu = HighestWeight::with_eval(vec![rat(3), rat(2)], rat(1)).unwrap();
        let r = build_witness(&w(&[1, 0]), &mu).unwrap();
        assert!(r.is_coherent());
    }
}
