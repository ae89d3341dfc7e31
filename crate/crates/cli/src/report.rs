//! Computation of a full report for one problem.

use ctgf::{
    almkvist_spec, coeff_z, cyclo_factor, pockets_spec, qp_eval, qp_leading, taylor, to_quasipoly,
    AsymptoticTerm, BigUint, CycloFactorization, Error, LaurentZ, ProductSpec, RatFunc, Rational,
    Result,
};
use num_traits::One;
use serde::Serialize;

/// What the user asked for, echoed back in the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Problem {
    Pockets {
        left: Vec<u64>,
        right: Vec<u64>,
        diff: i64,
    },
    Psi {
        n: u32,
    },
    Gf {
        numerator: String,
        left: Vec<u64>,
        right: Vec<u64>,
        diff: i64,
    },
}

impl Problem {
    pub fn spec(&self) -> Result<(ProductSpec, i64)> {
        match self {
            Problem::Pockets { left, right, diff } => Ok((pockets_spec(left, right), *diff)),
            Problem::Psi { n } => Ok((almkvist_spec(*n)?, 0)),
            Problem::Gf {
                numerator,
                left,
                right,
                diff,
            } => {
                if left.is_empty() && right.is_empty() {
                    return Err(Error::InvalidSpec(
                        "at least one factor exponent is required".into(),
                    ));
                }
                let p: LaurentZ = numerator.parse()?;
                let spec = ProductSpec::new(
                    p,
                    RatFunc::one(),
                    left.iter().copied(),
                    right.iter().copied(),
                )?;
                Ok((spec, *diff))
            }
        }
    }

    pub fn describe(&self) -> String {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Problem::Pockets { left, right, diff } => format!(
                "pockets left={{{}}} right={{{}}} diff={diff}",
                list(left),
                list(right)
            ),
            Problem::Psi { n } => format!("psi n={n}"),
            Problem::Gf {
                numerator,
                left,
                right,
                diff,
            } => format!(
                "gf numerator={numerator} A={{{}}} B={{{}}} diff={diff}",
                list(left),
                list(right)
            ),
        }
    }
}

/// Leading growth, or the reason no single coefficient describes it.
#[derive(Clone, Debug, PartialEq)]
pub enum Asymptotic {
    Term(AsymptoticTerm),
    Unavailable(Error),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub problem: Problem,
    pub gf: RatFunc,
    pub factorization: CycloFactorization,
    pub terms: Vec<Rational>,
    pub asymptotic: Asymptotic,
    pub evaluations: Vec<(BigUint, Rational)>,
}

/// Runs the pipeline: extraction, factorization, series, quasi-polynomial.
pub fn compute(problem: Problem, terms: usize, evals: &[BigUint]) -> Result<Report> {
    let (spec, m) = problem.spec()?;
    let gf = coeff_z(&spec, m)?;
    let factorization = cyclo_factor(gf.den())?;
    let series = if terms == 0 {
        Vec::new()
    } else {
        taylor(&gf, terms - 1)?
    };
    let qp = to_quasipoly(&gf)?;
    let asymptotic = match qp_leading(&qp) {
        Ok(t) => Asymptotic::Term(t),
        Err(e @ (Error::PeriodicLeadingTerm(_) | Error::NoLeadingTerm)) => {
            Asymptotic::Unavailable(e)
        }
        Err(e) => return Err(e),
    };
    let evaluations = evals.iter().map(|n| (n.clone(), qp_eval(&qp, n))).collect();
    Ok(Report {
        problem,
        gf,
        factorization,
        terms: series,
        asymptotic,
        evaluations,
    })
}

/// First `count` coefficients, or just `a(0)` when `count` is zero.
pub fn bfile_terms(problem: &Problem, count: usize) -> Result<Vec<Rational>> {
    let (spec, m) = problem.spec()?;
    let gf = coeff_z(&spec, m)?;
    taylor(&gf, count.max(1) - 1)
}
