//! Highest weights, content sets and the irreducibility criterion.
//!
//! For a `gl_n` highest weight `λ` the content of position `i` (0-based) is
//! `l_i = λ_i - i`; dominance makes the contents strictly decreasing.  A pair
//! `L(λ) ⊗ L(μ)` is irreducible exactly when, for every `i < j`, either
//! neither of `m_i, m_j` lies in the gap `⟨l_j, l_i⟩` or neither of `l_i, l_j`
//! lies in `⟨m_j, m_i⟩`.  Here `⟨l_j, l_i⟩` is the integer chain from `l_j` to
//! `l_i` with all of `l_j, l_{j-1}, …, l_i` removed.  When every entry is an
//! integer this is equivalent to the set differences of the two content sets
//! being non-crossing, which [`crossing_form_irreducible`] checks independently.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::scalar::{format_rationals, is_integer, is_nonneg_integer_gap, rat, Rational};

/// A dominant `gl_n` weight together with the evaluation point of the
/// module `L_a(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    entries: Vec<Rational>,
    eval_param: Rational,
}

impl HighestWeight {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        Self::with_eval(entries, Rational::zero())
    }

    pub fn with_eval(entries: Vec<Rational>, eval_param: Rational) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NonDominant("()".into()));
        }
        if entries.windows(2).any(|w| !is_nonneg_integer_gap(&w[1], &w[0])) {
            return Err(Error::NonDominant(format!("({})", format_rationals(&entries).join(", "))));
        }
        Ok(Self { entries, eval_param })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn eval_param(&self) -> &Rational {
        &self.eval_param
    }

    /// `λ + c·I`, same evaluation point.
    pub fn shifted(&self, c: &Rational) -> Self {
        Self {
            entries: self.entries.iter().map(|x| x + c).collect(),
            eval_param: self.eval_param.clone(),
        }
    }

    /// Folds the evaluation point into the entries: `L_a(λ)` behaves like
    /// `L_0(λ - a·I)` for every irreducibility question.
    pub fn normalize_evaluation(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|x| x - &self.eval_param).collect(),
            eval_param: Rational::zero(),
        }
    }

    pub fn content_set(&self) -> ContentSet {
        ContentSet(
            self.entries
                .iter()
                .enumerate()
                .map(|(i, x)| x - rat(i as i64))
                .collect(),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(is_integer)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_rationals(&self.entries).join(", "))?;
        if !self.eval_param.is_zero() {
            write!(f, "@{}", self.eval_param)?;
        }
        Ok(())
    }
}

/// Contents `l_i = λ_i - i`, strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentSet(Vec<Rational>);

impl ContentSet {
    pub fn contents(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse of [`HighestWeight::content_set`].
    pub fn to_weight(&self) -> Result<HighestWeight> {
        HighestWeight::new(
            self.0
                .iter()
                .enumerate()
                .map(|(i, l)| l + rat(i as i64))
                .collect(),
        )
    }

    /// Whether `x ∈ ⟨l_j, l_i⟩` for `i < j`.
    pub fn gap_contains(&self, i: usize, j: usize, x: &Rational) -> bool {
        let (lo, hi) = (&self.0[j], &self.0[i]);
        is_integer(&(x - lo)) && x > lo && x < hi && !self.0[i + 1..j].contains(x)
    }

    /// The gap `⟨l_j, l_i⟩` for `i < j`: integer steps from `l_j` to `l_i`
    /// with every content `l_i, …, l_j` removed.
    pub fn gap(&self, i: usize, j: usize) -> Vec<Rational> {
        interval_set(&self.0[j], &self.0[i])
            .into_iter()
            .filter(|x| !self.0[i + 1..j].contains(x))
            .collect()
    }
}

/// Weight of a vector in the `ε` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// `self ⪯ other`: `other - self` is a non-negative integer combination of
    /// simple roots `ε_a - ε_{a+1}`, i.e. all proper partial sums of the
    /// difference are non-negative integers and the total is zero.
    pub fn precedes(&self, other: &WeightVector) -> bool {
        if self.0.len() != other.0.len() {
            return false;
        }
        let mut partial = Rational::zero();
        let n = self.0.len();
        for (k, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            partial += b - a;
            if k + 1 < n && !(is_integer(&partial) && !partial.is_negative()) {
                return false;
            }
        }
        partial.is_zero()
    }
}

/// Open integer chain strictly between `x` and `y`; empty unless `y - x` is
/// a non-negative integer.
pub fn interval_set(x: &Rational, y: &Rational) -> Vec<Rational> {
    if !is_nonneg_integer_gap(x, y) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut z = x + rat(1);
    while &z < y {
        out.push(z.clone());
        z += rat(1);
    }
    out
}

/// Two disjoint finite sets cross when some `a_1 < a_2` in `A` and
/// `b_1 < b_2` in `B` interleave as `a_1 < b_1 < a_2 < b_2` or
/// `b_1 < a_1 < b_2 < a_2`.
pub fn is_crossing(a: &[Rational], b: &[Rational]) -> Result<bool> {
    let sa: BTreeSet<&Rational> = a.iter().collect();
    let sb: BTreeSet<&Rational> = b.iter().collect();
    if sa.intersection(&sb).next().is_some() {
        return Err(Error::NotDisjoint);
    }
    // Walk the merged order: a crossing exists iff the A/B label sequence,
    // with runs collapsed, has length at least four.
    let mut merged: Vec<(&Rational, bool)> = sa.iter().map(|x| (*x, true)).chain(sb.iter().map(|x| (*x, false))).collect();
    merged.sort();
    let mut runs = 0;
    let mut last = None;
    for (_, side) in merged {
        if last != Some(side) {
            runs += 1;
            last = Some(side);
        }
    }
    Ok(runs >= 4)
}

fn check_pair(lam: &HighestWeight, mu: &HighestWeight) -> Result<()> {
    if lam.n() != mu.n() {
        return Err(Error::SizeMismatch {
            expected: lam.n(),
            found: mu.n(),
        });
    }
    Ok(())
}

/// The condition for the index pair `i < j` (0-based).
pub fn pairwise_condition(lam: &HighestWeight, mu: &HighestWeight, i: usize, j: usize) -> Result<bool> {
    check_pair(lam, mu)?;
    let n = lam.n();
    if j >= n {
        return Err(Error::IndexOutOfRange { what: "content", index: j, bound: n });
    }
    if i >= j {
        return Err(Error::IndexOutOfRange { what: "content", index: i, bound: j });
    }
    let l = lam.content_set();
    let m = mu.content_set();
    let mu_outside = !m.gap_contains_any(&l, i, j);
    let lam_outside = !l.gap_contains_any(&m, i, j);
    Ok(mu_outside || lam_outside)
}

impl ContentSet {
    /// Whether `self_i` or `self_j` lies in `other`'s gap `⟨·_j, ·_i⟩`.
    fn gap_contains_any(&self, other: &ContentSet, i: usize, j: usize) -> bool {
        other.gap_contains(i, j, &self.0[i]) || other.gap_contains(i, j, &self.0[j])
    }
}

/// Index pairs `(i, j)` at which [`pairwise_condition`] fails.
pub fn violated_pairs(lam: &HighestWeight, mu: &HighestWeight) -> Result<Vec<(usize, usize)>> {
    check_pair(lam, mu)?;
    let (lam, mu) = (lam.normalize_evaluation(), mu.normalize_evaluation());
    let n = lam.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !pairwise_condition(&lam, &mu, i, j)? {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Irreducibility of `L_a(λ) ⊗ L_b(μ)`.  Evaluation points are folded into
/// the entries first.
pub fn pair_irreducible(lam: &HighestWeight, mu: &HighestWeight) -> Result<bool> {
    Ok(violated_pairs(lam, mu)?.is_empty())
}

/// Set-difference form of the criterion: `A_λ ∖ A_μ` and `A_μ ∖ A_λ` are
/// non-crossing.  Only meaningful for integer weights (after folding the
/// evaluation points); other inputs are rejected.
pub fn crossing_form_irreducible(lam: &HighestWeight, mu: &HighestWeight) -> Result<bool> {
    check_pair(lam, mu)?;
    let (lam, mu) = (lam.normalize_evaluation(), mu.normalize_evaluation());
    if !lam.is_integral() || !mu.is_integral() {
        return Err(Error::NotIntegral("the set-difference criterion"));
    }
    let a = lam.content_set();
    let b = mu.content_set();
    let only_a: Vec<Rational> = a.0.iter().filter(|x| !b.0.contains(x)).cloned().collect();
    let only_b: Vec<Rational> = b.0.iter().filter(|x| !a.0.contains(x)).cloned().collect();
    Ok(!is_crossing(&only_a, &only_b)?)
}

fn check_factors(ws: &[HighestWeight]) -> Result<()> {
    let Some(first) = ws.first() else {
        return Err(Error::NoFactors);
    };
    for w in ws {
        if w.n() != first.n() {
            return Err(Error::SizeMismatch {
                expected: first.n(),
                found: w.n(),
            });
        }
    }
    Ok(())
}

/// Factor pairs `(p, q)`, `p < q`, whose two-fold product is reducible.
pub fn failing_factor_pairs(ws: &[HighestWeight]) -> Result<Vec<(usize, usize)>> {
    check_factors(ws)?;
    let normalized: Vec<HighestWeight> = ws.iter().map(HighestWeight::normalize_evaluation).collect();
    let mut out = Vec::new();
    for p in 0..normalized.len() {
        for q in p + 1..normalized.len() {
            if !pair_irreducible(&normalized[p], &normalized[q])? {
                out.push((p, q));
            }
        }
    }
    Ok(out)
}

/// Irreducibility of a tensor product of evaluation modules: all pairwise
/// products must be irreducible.
pub fn multi_irreducible(ws: &[HighestWeight]) -> Result<bool> {
    Ok(failing_factor_pairs(ws)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::frac;

    fn w(xs: &[i64]) -> HighestWeight {
        HighestWeight::from_ints(xs).unwrap()
    }

    fn r(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn dominance() {
        assert!(HighestWeight::from_ints(&[0, 1]).is_err());
        assert!(HighestWeight::new(vec![frac(1, 2), rat(0)]).is_err());
        assert!(HighestWeight::new(vec![frac(5, 2), frac(1, 2)]).is_ok());
        assert!(HighestWeight::new(vec![]).is_err());
    }

    #[test]
    fn content_sets() {
        assert_eq!(w(&[2, 1, 0]).content_set().contents(), &r(&[2, 0, -2])[..]);
        assert_eq!(w(&[0, 0]).content_set().contents(), &r(&[0, -1])[..]);
        let half = HighestWeight::new(vec![frac(5, 2), frac(1, 2)]).unwrap();
        assert_eq!(half.content_set().contents(), &[frac(5, 2), frac(-1, 2)][..]);
        assert_eq!(half.content_set().to_weight().unwrap(), half);
    }

    #[test]
    fn crossing_examples() {
        assert!(is_crossing(&r(&[1, 3]), &r(&[2, 4])).unwrap());
        assert!(!is_crossing(&[], &r(&[0, 7])).unwrap());
        assert!(!is_crossing(&r(&[5, 6]), &r(&[1, 9])).unwrap());
        assert!(is_crossing(&r(&[2, 4]), &r(&[1, 3])).unwrap());
        assert_eq!(is_crossing(&r(&[1, 2]), &r(&[2, 3])), Err(Error::NotDisjoint));
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval_set(&rat(-1), &rat(3)), r(&[0, 1, 2]));
        assert!(interval_set(&rat(3), &rat(3)).is_empty());
        assert!(interval_set(&rat(0), &frac(5, 2)).is_empty());
        assert!(interval_set(&rat(3), &rat(0)).is_empty());
    }

    #[test]
    fn gap_removes_inner_contents() {
        // l = (2, 1, 0): the chain from 0 to 2 is exhausted by contents
        let l = w(&[2, 2, 2]).content_set();
        assert!(l.gap(0, 2).is_empty());
        assert!(!l.gap_contains(0, 2, &rat(1)));
        let l = w(&[3, 0, 0]).content_set(); // (3, -1, -2)
        assert_eq!(l.gap(0, 2), r(&[0, 1, 2]));
        assert_eq!(l.gap(0, 1), r(&[0, 1, 2]));
        assert!(l.gap(1, 2).is_empty());
    }

    #[test]
    fn pairwise_examples() {
        assert!(!pairwise_condition(&w(&[1, 0]), &w(&[2, 1]), 0, 1).unwrap());
        let l = w(&[3, 1, 0]);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!(pairwise_condition(&l, &l, i, j).unwrap());
        }
        let half = HighestWeight::new(vec![frac(1, 2), frac(-1, 2)]).unwrap();
        assert!(pairwise_condition(&w(&[1, 0]), &half, 0, 1).unwrap());
        assert!(pairwise_condition(&w(&[1, 0]), &w(&[1, 0]), 1, 1).is_err());
        assert!(pairwise_condition(&w(&[1, 0]), &w(&[1, 0]), 0, 2).is_err());
        assert!(pairwise_condition(&w(&[1, 0]), &w(&[1, 0, 0]), 0, 1).is_err());
    }

    #[test]
    fn pair_examples() {
        assert!(pair_irreducible(&w(&[1, 0]), &w(&[1, 0])).unwrap());
        assert!(!pair_irreducible(&w(&[1, 0]), &w(&[2, 1])).unwrap());
        assert!(pair_irreducible(&w(&[1, 0]), &w(&[3, 2])).unwrap());
        // one-dimensional factors are always fine
        assert!(pair_irreducible(&w(&[2, 2, 2]), &w(&[3, 3, 3])).unwrap());
        assert!(pair_irreducible(&w(&[1, 0]), &w(&[1, 0, 0])).is_err());
    }

    #[test]
    fn normalization() {
        let a = HighestWeight::with_eval(r(&[1, 0]), rat(2)).unwrap();
        assert_eq!(a.normalize_evaluation(), w(&[-1, -2]));
        assert_eq!(w(&[1, 0]).normalize_evaluation(), w(&[1, 0]));
        let b = HighestWeight::with_eval(r(&[3, 1]), frac(1, 2)).unwrap();
        assert_eq!(
            b.normalize_evaluation(),
            HighestWeight::new(vec![frac(5, 2), frac(1, 2)]).unwrap()
        );
    }

    #[test]
    fn multi_examples() {
        assert!(multi_irreducible(&[w(&[2, 1])]).unwrap());
        assert!(multi_irreducible(&[w(&[1, 0]), w(&[1, 0]), w(&[1, 0])]).unwrap());
        let shifted = HighestWeight::with_eval(r(&[1, 0]), rat(1)).unwrap();
        let ws = [w(&[1, 0]), shifted, w(&[2, 1])];
        assert!(!multi_irreducible(&ws).unwrap());
        assert!(failing_factor_pairs(&ws).unwrap().contains(&(0, 2)));
        assert_eq!(multi_irreducible(&[]), Err(Error::NoFactors));
    }

    #[test]
    fn crossing_form_examples() {
        assert!(!crossing_form_irreducible(&w(&[1, 0]), &w(&[2, 1])).unwrap());
        assert!(crossing_form_irreducible(&w(&[1, 0]), &w(&[3, 2])).unwrap());
        let half = HighestWeight::new(vec![frac(1, 2), frac(-1, 2)]).unwrap();
        assert!(crossing_form_irreducible(&w(&[1, 0]), &half).is_err());
    }

    #[test]
    fn weight_order() {
        let top = WeightVector(r(&[2, 1, 0]));
        let lower = WeightVector(r(&[1, 1, 1]));
        assert!(lower.precedes(&top));
        assert!(!top.precedes(&lower));
        assert!(top.precedes(&top));
        assert!(!WeightVector(r(&[1, 2, 0])).precedes(&WeightVector(r(&[2, 0, 1]))));
    }
}
