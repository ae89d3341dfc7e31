//! Quasi-polynomial form of rational generating functions whose poles are
//! roots of unity.
//!
//! The denominator is split into cyclotomic factor powers `Φ_d^{e_d}`. Each
//! partial fraction `c_d/Φ_d^{e_d}` is rewritten over `(1 - t^d)^{e_d}`, whose
//! expansion is a polynomial in n on every residue class mod d. Components
//! stay keyed by d, so the period that matters is each d rather than their lcm.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::{cyclotomic, cyclotomic_mobius, totient};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::Rational;

/// `unit · ∏ Φ_d^{e_d}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloFactorization {
    unit: Rational,
    factors: BTreeMap<u64, u32>,
}

impl CycloFactorization {
    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    /// Order d ↦ multiplicity.
    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    /// Scalar in front when Φ_1 = t - 1 is written as `(1 - t)`.
    pub fn display_unit(&self) -> Rational {
        if self.multiplicity(1) % 2 == 1 {
            -self.unit.clone()
        } else {
            self.unit.clone()
        }
    }

    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (&d, &e)| {
                &acc * &cyclotomic(d).pow(e)
            })
    }
}

/// Divides out Φ_1, Φ_2, ... greedily; fails if a nonconstant residue is left.
pub fn cyclo_factor(p: &Poly) -> Result<CycloFactorization> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rest = p.clone();
    let mut factors = BTreeMap::new();
    let mut d = 1u64;
    loop {
        let deg = rest.degree().unwrap() as u64;
        // φ(d) >= sqrt(d/2), so Φ_d | rest forces d <= 2 deg^2
        if deg == 0 || d > 2 * deg * deg {
            break;
        }
        if totient(d) <= deg {
            let phi = Poly::from_ints(cyclotomic_mobius(d));
            loop {
                let (q, r) = rest.divrem(&phi)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                *factors.entry(d).or_insert(0) += 1;
            }
        }
        d += 1;
    }
    match rest.degree() {
        Some(0) => Ok(CycloFactorization {
            unit: rest.coeff(0),
            factors,
        }),
        Some(k) => Err(Error::NonCyclotomicDenominator(k)),
        None => unreachable!("quotients of a nonzero polynomial are nonzero"),
    }
}

/// Sum of period-d polynomial components plus finitely many corrections.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QuasiPolynomial {
    components: BTreeMap<u64, Vec<Poly>>,
    corrections: BTreeMap<u64, Rational>,
}

/// `a(n) = coefficient · n^degree + O(n^{degree-1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AsymptoticTerm {
    pub degree: u32,
    pub coefficient: Rational,
}

impl QuasiPolynomial {
    /// Period d ↦ residue polynomials in n, indexed by n mod d.
    pub fn components(&self) -> &BTreeMap<u64, Vec<Poly>> {
        &self.components
    }

    /// Index ↦ additive correction.
    pub fn corrections(&self) -> &BTreeMap<u64, Rational> {
        &self.corrections
    }

    pub fn periods(&self) -> Vec<u64> {
        self.components.keys().copied().collect()
    }

    /// Highest degree among the residue polynomials of period `d`.
    pub fn component_degree(&self, d: u64) -> Option<usize> {
        self.components
            .get(&d)?
            .iter()
            .filter_map(|p| p.degree())
            .max()
    }

    pub fn eval_u64(&self, n: u64) -> Rational {
        qp_eval(self, &BigUint::from(n))
    }
}

fn add_correction(corrections: &mut BTreeMap<u64, Rational>, q: &Poly) {
    for (i, c) in q.coeffs().iter().enumerate() {
        if !c.is_zero() {
            *corrections.entry(i as u64).or_insert_with(Rational::zero) += c;
        }
    }
}

/// `C((n - i)/d + e - 1, e - 1)` as a polynomial in n.
fn residue_weight(i: usize, d: u64, e: u32) -> Poly {
    let mut acc = Poly::one();
    let d = BigInt::from(d);
    for m in 1..e {
        let dm = &d * BigInt::from(m);
        let c0 = Rational::new(BigInt::from(m) * &d - BigInt::from(i), dm.clone());
        let c1 = Rational::new(BigInt::one(), dm);
        acc = &acc * &Poly::new(vec![c0, c1]);
    }
    acc
}

/// Converts `rf` into a sum of small-period quasi-polynomials.
pub fn to_quasipoly(rf: &RatFunc) -> Result<QuasiPolynomial> {
    let den = rf.den();
    if den.coeff(0).is_zero() {
        return Err(Error::PoleAtZero);
    }
    let cf = cyclo_factor(den)?;
    let mut corrections = BTreeMap::new();
    let (q, r) = rf.num().divrem(den)?;
    add_correction(&mut corrections, &q);
    let r = r.scale(&cf.unit().recip());

    let powers: Vec<(u64, u32, Poly)> = cf
        .factors()
        .iter()
        .map(|(&d, &e)| (d, e, cyclotomic(d).pow(e)))
        .collect();

    let mut components = BTreeMap::new();
    for (i, (d, e, f)) in powers.iter().enumerate() {
        let mut cof = Poly::one();
        for (j, (_, _, g)) in powers.iter().enumerate() {
            if i != j {
                cof = (&cof * g).rem(f)?;
            }
        }
        let inv = cof
            .inverse_mod(f)?
            .expect("distinct cyclotomic powers are coprime");
        let c = (&r * &inv).rem(f)?;

        // c/Φ_d^e = c·((1-t^d)/Φ_d)^e / (1-t^d)^e
        let one_minus = Poly::one_minus_x_pow(*d as usize);
        let lift = one_minus.exact_div(&cyclotomic(*d))?.pow(*e);
        let mut c = &c * &lift;
        let bound = *d as usize * *e as usize;
        if c.degree().is_some_and(|k| k >= bound) {
            let (q2, r2) = c.divrem(&one_minus.pow(*e))?;
            add_correction(&mut corrections, &q2);
            c = r2;
        }

        let mut residues = vec![Poly::zero(); *d as usize];
        for (idx, coef) in c.coeffs().iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let w = residue_weight(idx, *d, *e).scale(coef);
            let slot = &mut residues[idx % *d as usize];
            *slot = &*slot + &w;
        }
        components.insert(*d, residues);
    }
    corrections.retain(|_, v| !v.is_zero());
    Ok(QuasiPolynomial {
        components,
        corrections,
    })
}

/// Value of the quasi-polynomial at `n`.
pub fn qp_eval(qp: &QuasiPolynomial, n: &BigUint) -> Rational {
    let x = Rational::from_integer(BigInt::from(n.clone()));
    let mut acc = Rational::zero();
    for (&d, residues) in &qp.components {
        let r = (n % d).to_usize().expect("residue fits");
        acc += residues[r].eval(&x);
    }
    if let Some(c) = n.to_u64().and_then(|k| qp.corrections.get(&k)) {
        acc += c;
    }
    acc
}

/// Leading term `c · n^k`, defined when only the period-1 component reaches
/// the top degree.
pub fn qp_leading(qp: &QuasiPolynomial) -> Result<AsymptoticTerm> {
    let top = qp
        .components
        .keys()
        .filter_map(|&d| qp.component_degree(d))
        .max()
        .ok_or(Error::NoLeadingTerm)?;
    for &d in qp.components.keys() {
        if d > 1 && qp.component_degree(d) == Some(top) {
            return Err(Error::PeriodicLeadingTerm(d));
        }
    }
    let base = &qp.components[&1][0];
    Ok(AsymptoticTerm {
        degree: top as u32,
        coefficient: base.coeff(top),
    })
}

/// Leading term from `((1-t)^{e_1} rf)(1) / (e_1 - 1)!`, independent of the
/// quasi-polynomial expansion.
pub fn leading_via_limit(rf: &RatFunc) -> Result<AsymptoticTerm> {
    let cf = cyclo_factor(rf.den())?;
    let e1 = cf.multiplicity(1);
    if e1 == 0 || rf.num().is_zero() {
        return Err(Error::NoLeadingTerm);
    }
    if let Some((&d, _)) = cf.factors().iter().find(|(&d, &e)| d > 1 && e >= e1) {
        return Err(Error::PeriodicLeadingTerm(d));
    }
    let phi1 = cyclotomic(1).pow(e1);
    let rest = rf.den().exact_div(&phi1)?;
    let one = Rational::one();
    // (1-t)^{e1} = (-1)^{e1} Φ_1^{e1}
    let mut limit = rf.num().eval(&one) / rest.eval(&one);
    if e1 % 2 == 1 {
        limit = -limit;
    }
    let fact: BigInt = (1..e1 as u64).map(BigInt::from).product();
    Ok(AsymptoticTerm {
        degree: e1 - 1,
        coefficient: limit / Rational::from_integer(fact),
    })
}

/// True when `v` is an integer; counting sequences must land here.
pub fn is_integral(v: &Rational) -> bool {
    v.denom().is_one()
}

/// Integer value, or `None` when `v` is fractional.
pub fn to_integer(v: &Rational) -> Option<BigInt> {
    v.is_integer().then(|| v.to_integer())
}

/// `a(n)` as a nonnegative count, when it is one.
pub fn as_count(v: &Rational) -> Option<BigUint> {
    to_integer(v)
        .filter(|x| !x.is_negative())
        .and_then(|x| x.to_biguint())
}
