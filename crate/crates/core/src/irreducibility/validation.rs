//! Grid cross-validation of the criterion against the oracle.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gt::weyl_dimension;
use crate::linalg::scalar::{format_rationals, format_rational, parse_rational, parse_rationals, rat, Rational};
use crate::weight::{multi_irreducible, HighestWeight};
use crate::yangian::ModuleSpace;

use super::oracle::{check_cap, decide, DEFAULT_CAP};

/// Which tensor products to test.
///
/// Factor weights come either from `weights` or from all dominant integer
/// weights with entries in `min_entry..=max_entry` (last entry pinned to
/// `last_entry` when given).  Every ordered `factors`-tuple of weights is
/// combined with every choice of evaluation point from `shifts` for the
/// factors after the first; the first factor is always evaluated at 0.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub n: usize,
    #[serde(default)]
    pub weights: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub min_entry: i64,
    #[serde(default)]
    pub max_entry: i64,
    #[serde(default)]
    pub last_entry: Option<i64>,
    #[serde(default = "default_shifts")]
    pub shifts: Vec<String>,
    #[serde(default = "default_factors")]
    pub factors: usize,
    /// Also compare the oracle on each tuple with the AND of the oracle on
    /// its factor pairs.
    #[serde(default)]
    pub check_binary: bool,
    /// Skip cases that agree with an earlier one after folding evaluation
    /// points and a common translation.
    #[serde(default = "default_true")]
    pub dedup_translations: bool,
}

fn default_shifts() -> Vec<String> {
    vec!["0".into()]
}

fn default_factors() -> usize {
    2
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub weights: Vec<Vec<String>>,
    pub shifts: Vec<String>,
    pub criterion: bool,
    pub oracle: bool,
    pub dims: Vec<usize>,
    pub dim: usize,
    pub singular_dim: usize,
    pub cyclic_span_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairwise_oracle: Option<bool>,
    pub timing_ms: f64,
}

impl CaseRecord {
    pub fn agrees(&self) -> bool {
        self.criterion == self.oracle
    }

    pub fn binary_holds(&self) -> bool {
        self.pairwise_oracle.is_none_or(|p| p == self.oracle)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub binary_exceptions: usize,
    pub irreducible: usize,
    pub reducible: usize,
    pub max_dim: usize,
    pub elapsed_ms: f64,
    pub mismatches: Vec<CaseRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub summary: Summary,
    pub records: Vec<CaseRecord>,
}

impl ValidationReport {
    pub fn success(&self) -> bool {
        self.summary.disagreements == 0 && self.summary.binary_exceptions == 0
    }
}

/// Dominant integer weights of length `n` with entries in `lo..=hi`,
/// highest first.
pub fn integer_weights(n: usize, lo: i64, hi: i64, last: Option<i64>) -> Vec<Vec<i64>> {
    fn go(prefix: &mut Vec<i64>, n: usize, lo: i64, hi: i64, last: Option<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.last().copied().unwrap_or(hi);
        let (bottom, top) = match last {
            Some(v) if prefix.len() + 1 == n => (v, top.min(v)),
            _ => (lo, top),
        };
        for x in (bottom..=top).rev() {
            prefix.push(x);
            go(prefix, n, lo, hi, last, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut Vec::new(), n, lo, hi, last, &mut out);
    }
    out
}

impl GridSpec {
    fn weight_list(&self) -> Result<Vec<Vec<Rational>>> {
        let list = match &self.weights {
            Some(ws) => ws.iter().map(|w| parse_rationals(w)).collect::<Result<Vec<_>>>()?,
            None => integer_weights(self.n, self.min_entry, self.max_entry, self.last_entry)
                .into_iter()
                .map(|w| w.into_iter().map(rat).collect())
                .collect(),
        };
        for w in &list {
            if w.len() != self.n {
                return Err(Error::SizeMismatch { expected: self.n, found: w.len() });
            }
        }
        Ok(list)
    }

    /// All cases of the grid, each a list of factor weights with their
    /// evaluation points.
    pub fn cases(&self) -> Result<Vec<Vec<HighestWeight>>> {
        if self.factors == 0 {
            return Err(Error::NoFactors);
        }
        let weights = self.weight_list()?;
        let shifts = self.shifts.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        if shifts.is_empty() {
            return Err(Error::Parse("shift list is empty".into()));
        }
        let mut tuples: Vec<Vec<HighestWeight>> = vec![Vec::new()];
        for slot in 0..self.factors {
            let evals: &[Rational] = if slot == 0 { &[] } else { &shifts };
            let mut next = Vec::new();
            for t in &tuples {
                for w in &weights {
                    if slot == 0 {
                        let mut t = t.clone();
                        t.push(HighestWeight::new(w.clone())?);
                        next.push(t);
                    } else {
                        for a in evals {
                            let mut t = t.clone();
                            t.push(HighestWeight::with_eval(w.clone(), a.clone())?);
                            next.push(t);
                        }
                    }
                }
            }
            tuples = next;
        }
        if self.dedup_translations {
            let mut seen = HashSet::new();
            tuples.retain(|t| seen.insert(translation_key(t)));
        }
        Ok(tuples)
    }
}

/// Folded entries of every factor, translated so that the last entry of the
/// first factor is 0.
fn translation_key(ws: &[HighestWeight]) -> Vec<Vec<Rational>> {
    let folded: Vec<HighestWeight> = ws.iter().map(HighestWeight::normalize_evaluation).collect();
    let c = -folded[0].entries().last().expect("non-empty weight").clone();
    folded.iter().map(|w| w.shifted(&c).entries().to_vec()).collect()
}

/// Runs criterion and oracle on one case.
pub fn run_case(ws: &[HighestWeight], check_binary: bool) -> Result<CaseRecord> {
    let start = Instant::now();
    let criterion = multi_irreducible(ws)?;
    let space = ModuleSpace::from_weights(ws)?;
    let verdict = decide(&space);
    let pairwise_oracle = if check_binary && ws.len() > 2 {
        let mut all = true;
        for p in 0..ws.len() {
            for q in p + 1..ws.len() {
                let pair = ModuleSpace::from_weights(&[ws[p].clone(), ws[q].clone()])?;
                all &= decide(&pair).irreducible;
            }
        }
        Some(all)
    } else {
        None
    };
    Ok(CaseRecord {
        weights: ws.iter().map(|w| format_rationals(w.entries())).collect(),
        shifts: ws.iter().map(|w| format_rational(w.eval_param())).collect(),
        criterion,
        oracle: verdict.irreducible,
        dims: space.factor_dims(),
        dim: space.dim(),
        singular_dim: verdict.singular_dim,
        cyclic_span_dim: verdict.cyclic_span_dim,
        pairwise_oracle,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs every case of `grid` on `workers` threads (all cores when `None`).
/// Refuses the whole grid if any tensor product exceeds `cap`.
pub fn cross_validate(grid: &GridSpec, cap: Option<usize>, workers: Option<usize>) -> Result<ValidationReport> {
    let start = Instant::now();
    let cases = grid.cases()?;
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let max_dim = cases
        .iter()
        .map(|ws| ws.iter().map(weyl_dimension).product::<usize>())
        .max()
        .unwrap_or(0);
    check_cap(max_dim, cap)?;

    let run = || -> Result<Vec<CaseRecord>> {
        cases.par_iter().map(|ws| run_case(ws, grid.check_binary)).collect()
    };
    let records = match workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Parse(format!("cannot start worker pool: {e}")))?
            .install(run)?,
        None => run()?,
    };

    let mismatches: Vec<CaseRecord> = records
        .iter()
        .filter(|r| !r.agrees() || !r.binary_holds())
        .cloned()
        .collect();
    let agreements = records.iter().filter(|r| r.agrees()).count();
    let irreducible = records.iter().filter(|r| r.oracle).count();
    let summary = Summary {
        cases: records.len(),
        agreements,
        disagreements: records.len() - agreements,
        binary_exceptions: records.iter().filter(|r| !r.binary_holds()).count(),
        irreducible,
        reducible: records.len() - irreducible,
        max_dim,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        mismatches,
    };
    Ok(ValidationReport { summary, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(json: &str) -> GridSpec {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(integer_weights(2, 0, 4, None).len(), 15);
        assert_eq!(integer_weights(3, 0, 2, Some(0)).len(), 6);
        assert_eq!(integer_weights(2, 0, 1, None), vec![vec![1, 1], vec![1, 0], vec![0, 0]]);
    }

    #[test]
    fn case_counts() {
        let g = grid(r#"{"n": 2, "max_entry": 4, "dedup_translations": false}"#);
        assert_eq!(g.cases().unwrap().len(), 225);
        let g = grid(r#"{"n": 2, "max_entry": 4}"#);
        assert!(g.cases().unwrap().len() < 225);
        let g = grid(
            r#"{"n": 2, "weights": [["0","0"],["1","0"],["2","0"],["2","1"]],
                "shifts": ["0","1"], "factors": 3, "dedup_translations": false}"#,
        );
        assert_eq!(g.cases().unwrap().len(), 4 * 8 * 8);
    }

    #[test]
    fn small_grid_agrees() {
        let g = grid(r#"{"n": 2, "max_entry": 2, "shifts": ["0", "1/2", "1"]}"#);
        let report = cross_validate(&g, None, Some(2)).unwrap();
        assert!(report.success(), "{:?}", report.summary.mismatches);
        assert!(report.summary.reducible > 0);
    }

    #[test]
    fn cap_refuses_grid() {
        let g = grid(r#"{"n": 2, "max_entry": 3}"#);
        assert!(matches!(cross_validate(&g, Some(10), None), Err(Error::CapExceeded { dim: 16, cap: 10 })));
    }

    #[test]
    fn bad_specs() {
        assert!(serde_json::from_str::<GridSpec>(r#"{"n": 2, "bogus": 1}"#).is_err());
        let g = grid(r#"{"n": 2, "weights": [["0","1"]]}"#);
        assert!(g.cases().is_err());
        let g = grid(r#"{"n": 2, "weights": [["1","0","0"]]}"#);
        assert!(g.cases().is_err());
    }
}
