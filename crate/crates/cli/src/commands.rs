use serde_json::{json, Value};

use yangian_core::gt::{weyl_dimension, GlnModule};
use yangian_core::irreducibility::{build_witness, cross_validate, decide_capped, GridSpec, ValidationReport};
use yangian_core::linalg::scalar::{format_rational, parse_rational, parse_rationals};
use yangian_core::linalg::{PolyMatrix, SparseMatrix};
use yangian_core::weight::failing_factor_pairs;
use yangian_core::yangian::{drinfeld_generators, lowering_tau, quantum_minor, tau_product};
use yangian_core::{Error, HighestWeight, ModuleSpace, Rational, Result};

use crate::wire::{rational_strings, Act, Factors, GtInfo, Operator, VectorSpec};

pub fn criterion(input: &Factors) -> Result<Value> {
    let failing = failing_factor_pairs(&input.weights()?)?;
    Ok(json!({
        "irreducible": failing.is_empty(),
        "failing_pairs": failing.iter().map(|&(p, q)| [p, q]).collect::<Vec<_>>(),
    }))
}

fn build_space(ws: &[HighestWeight], cap: usize) -> Result<ModuleSpace> {
    if ws.is_empty() {
        return Err(Error::NoFactors);
    }
    let dim: usize = ws.iter().map(weyl_dimension).product();
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    ModuleSpace::from_weights(ws)
}

pub fn oracle(input: &Factors, cap: usize) -> Result<Value> {
    let space = build_space(&input.weights()?, cap)?;
    let verdict = decide_capped(&space, cap)?;
    Ok(serde_json::to_value(verdict).expect("verdict serializes"))
}

pub fn witness(input: &Factors, cap: usize) -> Result<Value> {
    let ws = input.weights()?;
    let [lam, mu] = ws.as_slice() else {
        return Err(Error::SizeMismatch { expected: 2, found: ws.len() });
    };
    build_space(&ws, cap)?;
    let report = build_witness(lam, mu)?;
    let space = ModuleSpace::from_weights(&[report.lam.clone(), report.mu.clone()])?;
    let mut out = serde_json::to_value(&report).expect("report serializes");
    out["lam"] = json!(rational_strings(report.lam.entries()));
    out["mu"] = json!(rational_strings(report.mu.entries()));
    out["theta"] = json!(report
        .theta_support()
        .into_iter()
        .map(|(idx, x)| json!({"index": idx, "parts": space.basis_parts(idx), "value": format_rational(&x)}))
        .collect::<Vec<_>>());
    Ok(out)
}

fn sparse_entries(m: &SparseMatrix) -> Vec<Value> {
    m.triplets()
        .map(|(i, j, x)| json!([i, j, format_rational(x)]))
        .collect()
}

pub fn gt_info(input: &GtInfo, cap: usize) -> Result<Value> {
    let w = HighestWeight::new(parse_rationals(&input.w)?)?;
    let dim = weyl_dimension(&w);
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let module = GlnModule::new(&w);
    let n = module.n();
    let patterns: Vec<Vec<Vec<String>>> = module
        .patterns()
        .iter()
        .map(|p| p.rows().iter().map(|r| rational_strings(r)).collect())
        .collect();
    let mut generators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            generators.push(json!({"i": i, "j": j, "entries": sparse_entries(module.generator(i, j))}));
        }
    }
    Ok(json!({
        "dim": module.dim(),
        "patterns": patterns,
        "generators": generators,
    }))
}

fn vector(space: &ModuleSpace, spec: &VectorSpec) -> Result<Vec<Rational>> {
    match spec {
        VectorSpec::Named(name) if name == "zeta" => Ok(space.highest_vector()),
        VectorSpec::Named(name) => Err(Error::Parse(format!("unknown vector name {name:?}"))),
        VectorSpec::Basis { basis } if *basis < space.dim() => Ok(space.basis_vector(*basis)),
        VectorSpec::Basis { basis } => Err(Error::IndexOutOfRange { what: "basis", index: *basis, bound: space.dim() }),
        VectorSpec::Parts { parts } => Ok(space.basis_vector(space.basis_index(parts)?)),
        VectorSpec::Coords { coords } => {
            let v = parse_rationals(coords)?;
            if v.len() != space.dim() {
                return Err(Error::SizeMismatch { expected: space.dim(), found: v.len() });
            }
            Ok(v)
        }
    }
}

fn apply_poly(m: &PolyMatrix, u: &Option<String>, v: &[Rational]) -> Result<Value> {
    Ok(match u {
        Some(u) => json!({"result": rational_strings(&m.eval(&parse_rational(u)?).mul_vec(v))}),
        None => json!({
            "coefficients": m
                .coeffs()
                .iter()
                .map(|c| rational_strings(&c.mul_vec(v)))
                .collect::<Vec<_>>()
        }),
    })
}

fn missing(what: &str, m: usize) -> Error {
    Error::Parse(format!("{what}_{m} is not defined for m = n"))
}

pub fn act(input: &Act, cap: usize) -> Result<Value> {
    let ws = input.factors.iter().map(|f| f.weight()).collect::<Result<Vec<_>>>()?;
    let space = build_space(&ws, cap)?;
    let v = vector(&space, &input.vector)?;
    let check = |i: usize| -> Result<()> {
        if i >= space.n() {
            return Err(Error::IndexOutOfRange { what: "matrix", index: i, bound: space.n() });
        }
        Ok(())
    };
    let mut out = match &input.operator {
        Operator::T { i, j, u } => {
            check(*i)?;
            check(*j)?;
            apply_poly(space.series(*i, *j), u, &v)?
        }
        Operator::Coefficient { i, j, r } => {
            json!({"result": rational_strings(&space.t_coefficient(*i, *j, *r)?.mul_vec(&v))})
        }
        Operator::A { m, u } => apply_poly(&drinfeld_generators(&space, *m)?.a, u, &v)?,
        Operator::B { m, u } => {
            let b = drinfeld_generators(&space, *m)?.b.ok_or_else(|| missing("B", *m))?;
            apply_poly(&b, u, &v)?
        }
        Operator::C { m, u } => {
            let c = drinfeld_generators(&space, *m)?.c.ok_or_else(|| missing("C", *m))?;
            apply_poly(&c, u, &v)?
        }
        Operator::Minor { rows, cols, u } => apply_poly(&quantum_minor(&space, rows, cols)?, u, &v)?,
        Operator::Tau { r, a, u } => apply_poly(&lowering_tau(&space, *r, *a)?, u, &v)?,
        Operator::TauProduct { r, a, v: v0, k, derivative } => {
            let op = tau_product(&space, *r, *a, &parse_rational(v0)?, *k, *derivative)?;
            json!({"result": rational_strings(&op.mul_vec(&v))})
        }
    };
    out["dim"] = json!(space.dim());
    Ok(out)
}

pub fn validate(grid: &GridSpec, cap: usize, workers: Option<usize>) -> Result<ValidationReport> {
    cross_validate(grid, Some(cap), workers)
}
