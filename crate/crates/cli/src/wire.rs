//! JSON payloads.  Rationals travel as strings such as `"-3/2"`; matrix and
//! basis indices are 0-based integers.

use serde::Deserialize;
use yangian_core::linalg::scalar::{format_rational, parse_rational, parse_rationals};
use yangian_core::{HighestWeight, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Factor {
    /// Highest weight entries.
    pub w: Vec<String>,
    /// Evaluation point, 0 when absent.
    #[serde(default)]
    pub a: Option<String>,
}

impl Factor {
    pub fn weight(&self) -> yangian_core::Result<HighestWeight> {
        let entries = parse_rationals(&self.w)?;
        let a = match &self.a {
            Some(s) => parse_rational(s)?,
            None => Rational::from_integer(0.into()),
        };
        HighestWeight::with_eval(entries, a)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Factors {
    pub factors: Vec<Factor>,
}

impl Factors {
    pub fn weights(&self) -> yangian_core::Result<Vec<HighestWeight>> {
        self.factors.iter().map(Factor::weight).collect()
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GtInfo {
    pub w: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum Operator {
    /// `T_ij(u)`; the coefficient list when `u` is absent.
    T { i: usize, j: usize, u: Option<String> },
    /// `t_ij^{(r)}`.
    #[serde(rename = "t")]
    Coefficient { i: usize, j: usize, r: usize },
    A { m: usize, u: Option<String> },
    B { m: usize, u: Option<String> },
    C { m: usize, u: Option<String> },
    #[serde(rename = "minor")]
    Minor { rows: Vec<usize>, cols: Vec<usize>, u: Option<String> },
    /// `τ_{ra}(u)`.
    #[serde(rename = "tau")]
    Tau { r: usize, a: usize, u: Option<String> },
    /// `𝒯_{ra}(v, k)` or its derivative.
    #[serde(rename = "tau_product")]
    TauProduct {
        r: usize,
        a: usize,
        v: String,
        k: usize,
        #[serde(default)]
        derivative: bool,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum VectorSpec {
    Named(String),
    Basis {
        basis: usize,
    },
    Parts {
        parts: Vec<usize>,
    },
    Coords {
        coords: Vec<String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Act {
    pub factors: Vec<Factor>,
    pub operator: Operator,
    #[serde(default = "zeta")]
    pub vector: VectorSpec,
}

fn zeta() -> VectorSpec {
    VectorSpec::Named("zeta".into())
}

pub fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}
