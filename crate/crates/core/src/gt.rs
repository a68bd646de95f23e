//! Gelfand–Tsetlin bases of irreducible `gl_n` modules.
//!
//! Patterns are listed highest first (descending lexicographic order on the
//! rows read top to bottom), so index 0 is always the highest vector and the
//! last index the lowest.  All generator indices are 0-based: `E(i, j)` is the
//! matrix unit `E_{i+1, j+1}` in the usual 1-based notation.
//!
//! Row `r` of a pattern (counted from the bottom, length `r`) carries the
//! shifted entries `l_{r,i} = λ_{r,i} - i`.  The simple raising operators use
//!
//! ```text
//! E_{m,m+1} ξ_Λ = - Σ_j  Π_i (l_{m+1,i} - l_{m,j}) / Π_{i≠j} (l_{m,i} - l_{m,j})  ξ_{Λ+δ_{mj}}
//! ```
//!
//! and the lowering operators the mirrored formula with row `m-1` in place of
//! row `m+1` and `Λ-δ_{mj}`, without the sign.  Non-simple generators are
//! nested commutators of simple ones.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::scalar::{is_nonneg_integer_gap, rat, to_i64, Rational};
use crate::linalg::SparseMatrix;
use crate::weight::{HighestWeight, WeightVector};

/// A Gelfand–Tsetlin pattern.  `rows[0]` is the top row (the highest weight,
/// length `n`) and `rows[k]` has length `n - k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtPattern {
    rows: Vec<Vec<Rational>>,
}

impl GtPattern {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        Self { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Row of length `r` (`1 ≤ r ≤ n`).
    pub fn row(&self, r: usize) -> &[Rational] {
        &self.rows[self.n() - r]
    }

    fn row_mut(&mut self, r: usize) -> &mut Vec<Rational> {
        let n = self.n();
        &mut self.rows[n - r]
    }

    /// Shifted entries `λ_{r,i} - i` of the row of length `r`.
    pub fn contents(&self, r: usize) -> Vec<Rational> {
        self.row(r)
            .iter()
            .enumerate()
            .map(|(i, x)| x - rat(i as i64))
            .collect()
    }

    /// Betweenness: `λ_{r,i} - λ_{r-1,i}` and `λ_{r-1,i} - λ_{r,i+1}` are
    /// non-negative integers.
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() != n - k {
                return false;
            }
        }
        (2..=n).all(|r| {
            let upper = self.row(r);
            let lower = self.row(r - 1);
            lower.iter().enumerate().all(|(i, x)| {
                is_nonneg_integer_gap(x, &upper[i])
                    && is_nonneg_integer_gap(&upper[i + 1], x)
            })
        })
    }

    /// `w_k = Σ λ_{k,i} - Σ λ_{k-1,i}`.
    pub fn weight(&self) -> WeightVector {
        let sums: Vec<Rational> = (0..=self.n())
            .map(|r| {
                if r == 0 {
                    Rational::zero()
                } else {
                    self.row(r).iter().sum()
                }
            })
            .collect();
        WeightVector((1..=self.n()).map(|k| &sums[k] - &sums[k - 1]).collect())
    }

    /// `Λ ± δ_{r,j}`: entry `j` of the row of length `r` moved by `step`;
    /// `None` if the result is not a pattern.  The top row is fixed.
    pub fn moved(&self, r: usize, j: usize, step: i64) -> Option<GtPattern> {
        if r == 0 || r >= self.n() || j >= r {
            return None;
        }
        let mut p = self.clone();
        p.row_mut(r)[j] += rat(step);
        let upper = p.row(r + 1);
        let x = &p.row(r)[j];
        if !(x <= &upper[j] && x >= &upper[j + 1]) {
            return None;
        }
        if r > 1 {
            let lower = p.row(r - 1);
            if j < r - 1 && &lower[j] > x {
                return None;
            }
            if j > 0 && &lower[j - 1] < x {
                return None;
            }
        }
        Some(p)
    }
}

/// All patterns with top row `w`, highest first.
pub fn enumerate_patterns(w: &HighestWeight) -> Vec<GtPattern> {
    let mut out = Vec::new();
    let mut rows = vec![w.entries().to_vec()];
    extend_patterns(&mut rows, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn extend_patterns(rows: &mut Vec<Vec<Rational>>, out: &mut Vec<GtPattern>) {
    let upper = rows.last().expect("at least the top row").clone();
    if upper.len() == 1 {
        out.push(GtPattern::from_rows(rows.clone()));
        return;
    }
    let ranges: Vec<i64> = (0..upper.len() - 1)
        .map(|i| to_i64(&(&upper[i] - &upper[i + 1])).expect("dominant rows have integer gaps"))
        .collect();
    let mut offsets = vec![0i64; ranges.len()];
    loop {
        let row: Vec<Rational> = offsets
            .iter()
            .enumerate()
            .map(|(i, d)| &upper[i + 1] + rat(*d))
            .collect();
        rows.push(row);
        extend_patterns(rows, out);
        rows.pop();
        // odometer over the independent ranges
        let mut k = 0;
        loop {
            if k == offsets.len() {
                return;
            }
            if offsets[k] < ranges[k] {
                offsets[k] += 1;
                break;
            }
            offsets[k] = 0;
            k += 1;
        }
    }
}

/// `Π_{i<j} (l_i - l_j) / (j - i)`.
pub fn weyl_dimension(w: &HighestWeight) -> usize {
    let l = w.content_set();
    let l = l.contents();
    let mut num = Rational::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= (&l[i] - &l[j]) / rat((j - i) as i64);
        }
    }
    debug_assert!(num.is_integer());
    num.to_integer().to_usize().expect("dimension fits in usize")
}

/// `L(λ)` in its Gelfand–Tsetlin basis with every `E_{ij}` precomputed.
#[derive(Clone, Debug)]
pub struct GlnModule {
    weight: HighestWeight,
    patterns: Vec<GtPattern>,
    index: HashMap<GtPattern, usize>,
    generators: Vec<SparseMatrix>,
}

impl GlnModule {
    /// The evaluation point of `w` is ignored here; `ModuleSpace` carries it.
    pub fn new(w: &HighestWeight) -> Self {
        let weight = HighestWeight::new(w.entries().to_vec()).expect("already dominant");
        let patterns = enumerate_patterns(&weight);
        let index = patterns
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        let mut module = Self {
            weight,
            patterns,
            index,
            generators: Vec::new(),
        };
        module.generators = module.build_generators();
        module
    }

    fn build_generators(&self) -> Vec<SparseMatrix> {
        let n = self.n();
        let mut gens: Vec<Option<SparseMatrix>> = vec![None; n * n];
        for i in 0..n {
            gens[i * n + i] = Some(self.cartan_matrix(i));
        }
        for m in 0..n.saturating_sub(1) {
            gens[m * n + m + 1] = Some(self.raising_matrix(m));
            gens[(m + 1) * n + m] = Some(self.lowering_matrix(m));
        }
        for span in 2..n {
            for i in 0..n - span {
                let j = i + span;
                let up = SparseMatrix::commutator(
                    gens[i * n + j - 1].as_ref().unwrap(),
                    gens[(j - 1) * n + j].as_ref().unwrap(),
                );
                let down = SparseMatrix::commutator(
                    gens[j * n + j - 1].as_ref().unwrap(),
                    gens[(j - 1) * n + i].as_ref().unwrap(),
                );
                gens[i * n + j] = Some(up);
                gens[j * n + i] = Some(down);
            }
        }
        gens.into_iter().map(Option::unwrap).collect()
    }

    pub fn weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn n(&self) -> usize {
        self.weight.n()
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[GtPattern] {
        &self.patterns
    }

    pub fn index_of(&self, p: &GtPattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `E(i, j)`, 0-based.
    pub fn generator(&self, i: usize, j: usize) -> &SparseMatrix {
        &self.generators[i * self.n() + j]
    }

    pub fn checked_generator(&self, i: usize, j: usize) -> Result<&SparseMatrix> {
        let n = self.n();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { what: "generator", index: idx, bound: n });
            }
        }
        Ok(self.generator(i, j))
    }

    fn check_simple(&self, m: usize) -> Result<()> {
        if m + 1 >= self.n() {
            return Err(Error::IndexOutOfRange {
                what: "simple root",
                index: m,
                bound: self.n().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// `E(m, m+1)` built from the Gelfand–Tsetlin raising formula.
    pub fn raising(&self, m: usize) -> Result<SparseMatrix> {
        self.check_simple(m)?;
        Ok(self.raising_matrix(m))
    }

    /// `E(m+1, m)` built from the mirrored lowering formula.
    pub fn lowering(&self, m: usize) -> Result<SparseMatrix> {
        self.check_simple(m)?;
        Ok(self.lowering_matrix(m))
    }

    /// Diagonal `E(i, i)`.
    pub fn cartan(&self, i: usize) -> Result<SparseMatrix> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange { what: "generator", index: i, bound: self.n() });
        }
        Ok(self.cartan_matrix(i))
    }

    fn raising_matrix(&self, m: usize) -> SparseMatrix {
        // acts on the row of length r = m + 1, reading row r + 1
        let r = m + 1;
        let dim = self.dim();
        let mut triplets = Vec::new();
        for (col, p) in self.patterns.iter().enumerate() {
            let lr = p.contents(r);
            let lup = p.contents(r + 1);
            for j in 0..r {
                let Some(target) = p.moved(r, j, 1) else {
                    continue;
                };
                let num: Rational = lup.iter().map(|x| x - &lr[j]).product();
                let den: Rational = (0..r).filter(|&i| i != j).map(|i| &lr[i] - &lr[j]).product();
                let coeff = -(num / den);
                triplets.push((self.index[&target], col, coeff));
            }
        }
        SparseMatrix::from_triplets(dim, dim, triplets)
    }

    fn lowering_matrix(&self, m: usize) -> SparseMatrix {
        let r = m + 1;
        let dim = self.dim();
        let mut triplets = Vec::new();
        for (col, p) in self.patterns.iter().enumerate() {
            let lr = p.contents(r);
            let ldown = if r > 1 { p.contents(r - 1) } else { Vec::new() };
            for j in 0..r {
                let Some(target) = p.moved(r, j, -1) else {
                    continue;
                };
                let num: Rational = ldown.iter().map(|x| x - &lr[j]).product();
                let den: Rational = (0..r).filter(|&i| i != j).map(|i| &lr[i] - &lr[j]).product();
                triplets.push((self.index[&target], col, num / den));
            }
        }
        SparseMatrix::from_triplets(dim, dim, triplets)
    }

    fn cartan_matrix(&self, i: usize) -> SparseMatrix {
        SparseMatrix::diagonal(
            self.patterns
                .iter()
                .map(|p| p.weight().coords()[i].clone())
                .collect(),
        )
    }
}

/// Convenience wrappers mirroring the module methods.
pub fn raising_matrix(module: &GlnModule, m: usize) -> Result<SparseMatrix> {
    module.raising(m)
}

pub fn lowering_matrix(module: &GlnModule, m: usize) -> Result<SparseMatrix> {
    module.lowering(m)
}

pub fn cartan_matrix(module: &GlnModule, i: usize) -> Result<SparseMatrix> {
    module.cartan(i)
}

pub fn pattern_weight(p: &GtPattern) -> WeightVector {
    p.weight()
}
