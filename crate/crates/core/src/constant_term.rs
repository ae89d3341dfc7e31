//! Coefficient extraction in z from bivariate rational products.
//!
//! A [`ProductSpec`] describes
//!
//! ```text
//!   scalar(t) · L(z) / ( ∏_a (1 - t z^a)^{e_a} · ∏_b (1 - t z^{-b})^{e_b} )
//! ```
//!
//! read as a power series in t whose coefficients are Laurent polynomials in
//! z. Clearing `z^{-b}` turns the B-factors into `(z^b - t)^{e_b}` and the whole
//! expression into `z^shift · N(z) / D(z)` over ℚ(t). Partial fractions in z
//! then isolate one numerator per factor power, and each piece expands in t
//! with closed-form binomial weights, so extracting `[z^m]` is a finite sum.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentZ;
use crate::poly::{DensePoly, Poly};
use crate::ratfunc::RatFunc;
use crate::Rational;

/// Polynomial in z with coefficients in ℚ(t).
pub type ZPoly = DensePoly<RatFunc>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductSpec {
    numerator: LaurentZ,
    scalar: RatFunc,
    factors_a: BTreeMap<u64, u32>,
    factors_b: BTreeMap<u64, u32>,
}

impl ProductSpec {
    /// Builds a spec from exponent lists. Repeated exponents become
    /// multiplicities; a zero exponent contributes `1/(1-t)` to the scalar.
    pub fn new(
        numerator: LaurentZ,
        scalar: RatFunc,
        a: impl IntoIterator<Item = u64>,
        b: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        let mut scalar = scalar;
        let inv_one_minus_t = RatFunc::new(Poly::one(), Poly::one_minus_x_pow(1))?;
        let mut collect = |it: &mut dyn Iterator<Item = u64>| {
            let mut map = BTreeMap::new();
            for e in it {
                if e == 0 {
                    scalar = &scalar * &inv_one_minus_t;
                } else {
                    *map.entry(e).or_insert(0u32) += 1;
                }
            }
            map
        };
        let factors_a = collect(&mut a.into_iter());
        let factors_b = collect(&mut b.into_iter());
        Self::from_parts(numerator, scalar, factors_a, factors_b)
    }

    pub fn from_parts(
        numerator: LaurentZ,
        scalar: RatFunc,
        factors_a: BTreeMap<u64, u32>,
        factors_b: BTreeMap<u64, u32>,
    ) -> Result<Self> {
        if numerator.is_zero() {
            return Err(Error::InvalidSpec("numerator is zero".into()));
        }
        if scalar.is_zero() {
            return Err(Error::InvalidSpec("scalar prefactor is zero".into()));
        }
        if scalar.den().coeff(0).is_zero() {
            return Err(Error::InvalidSpec(
                "scalar prefactor has a pole at t = 0".into(),
            ));
        }
        for (&k, &e) in factors_a.iter().chain(factors_b.iter()) {
            if k == 0 || e == 0 {
                return Err(Error::InvalidSpec(format!(
                    "exponent {k} with multiplicity {e}"
                )));
            }
        }
        Ok(ProductSpec {
            numerator,
            scalar,
            factors_a,
            factors_b,
        })
    }

    pub fn numerator(&self) -> &LaurentZ {
        &self.numerator
    }

    pub fn scalar(&self) -> &RatFunc {
        &self.scalar
    }

    /// Exponent `a` ↦ multiplicity of `(1 - t z^a)`.
    pub fn factors_a(&self) -> &BTreeMap<u64, u32> {
        &self.factors_a
    }

    /// Exponent `b` ↦ multiplicity of `(1 - t z^{-b})`.
    pub fn factors_b(&self) -> &BTreeMap<u64, u32> {
        &self.factors_b
    }

    /// Number of denominator factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.factors_a.values().chain(self.factors_b.values()).sum()
    }

    /// `z^shift · numerator / denominator`, all polynomial in z.
    pub fn cleared_fraction(&self) -> ClearedFraction {
        let b_shift: i64 = self
            .factors_b
            .iter()
            .map(|(&b, &e)| b as i64 * e as i64)
            .sum();
        let sigma = self.numerator.min_exp() + b_shift;
        let base: Vec<RatFunc> = self
            .numerator
            .coeffs()
            .iter()
            .map(|c| RatFunc::constant(c.clone()))
            .collect();
        let base = ZPoly::new(base);
        let (shift, numerator) = if sigma >= 0 {
            (0, base.shift(sigma as usize))
        } else {
            (sigma, base)
        };
        let denominator = self
            .factor_powers()
            .iter()
            .fold(ZPoly::one(), |acc, f| &acc * &f.poly);
        ClearedFraction {
            shift,
            numerator,
            denominator,
        }
    }

    fn factor_powers(&self) -> Vec<FactorPower> {
        let a = self.factors_a.iter().map(|(&a, &e)| FactorPower {
            side: Side::A,
            exponent: a,
            multiplicity: e,
            poly: a_factor(a).pow(e),
        });
        let b = self.factors_b.iter().map(|(&b, &e)| FactorPower {
            side: Side::B,
            exponent: b,
            multiplicity: e,
            poly: b_factor(b).pow(e),
        });
        a.chain(b).collect()
    }
}

/// The cleared form `z^shift · numerator / denominator` of a spec.
#[derive(Clone, PartialEq, Debug)]
pub struct ClearedFraction {
    pub shift: i64,
    pub numerator: ZPoly,
    pub denominator: ZPoly,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    A,
    B,
}

struct FactorPower {
    side: Side,
    exponent: u64,
    multiplicity: u32,
    poly: ZPoly,
}

impl FactorPower {
    fn label(&self) -> String {
        match self.side {
            Side::A => format!("(1-t*z^{})^{}", self.exponent, self.multiplicity),
            Side::B => format!("(z^{}-t)^{}", self.exponent, self.multiplicity),
        }
    }
}

/// `1 - t z^a`
fn a_factor(a: u64) -> ZPoly {
    let mut c = vec![RatFunc::zero(); a as usize + 1];
    c[0] = RatFunc::one();
    c[a as usize] = -RatFunc::t();
    ZPoly::new(c)
}

/// `z^b - t`
fn b_factor(b: u64) -> ZPoly {
    let mut c = vec![RatFunc::zero(); b as usize + 1];
    c[0] = -RatFunc::t();
    c[b as usize] = RatFunc::one();
    ZPoly::new(c)
}

/// Numerator over one factor power `(1 - t z^a)^e` or `(z^b - t)^e`.
#[derive(Clone, PartialEq, Debug)]
pub struct PfTerm {
    pub exponent: u64,
    pub multiplicity: u32,
    pub numerator: ZPoly,
}

/// Partial fractions in z of a cleared spec:
/// `z^shift · (poly_part + Σ_A N_a/(1-tz^a)^e + Σ_B N_b/(z^b-t)^e)`.
#[derive(Clone, PartialEq, Debug)]
pub struct PFDecompZ {
    pub shift: i64,
    pub poly_part: ZPoly,
    pub terms_a: Vec<PfTerm>,
    pub terms_b: Vec<PfTerm>,
}

impl PFDecompZ {
    fn term_denominators(&self) -> Vec<(ZPoly, &PfTerm)> {
        let a = self
            .terms_a
            .iter()
            .map(|t| (a_factor(t.exponent).pow(t.multiplicity), t));
        let b = self
            .terms_b
            .iter()
            .map(|t| (b_factor(t.exponent).pow(t.multiplicity), t));
        a.chain(b).collect()
    }

    /// Product of all factor powers.
    pub fn denominator(&self) -> ZPoly {
        self.term_denominators()
            .iter()
            .fold(ZPoly::one(), |acc, (d, _)| &acc * d)
    }

    /// Numerator of the decomposition brought back over [`Self::denominator`].
    pub fn recombine(&self) -> Result<ZPoly> {
        let dens = self.term_denominators();
        let full = self.denominator();
        let mut acc = &self.poly_part * &full;
        for (d, term) in &dens {
            let cofactor = full.exact_div(d)?;
            acc = &acc + &(&term.numerator * &cofactor);
        }
        Ok(acc)
    }
}

/// Left pocket coins give A-factors, right pocket coins give B-factors, so the
/// exponent of z tracks (left amount) − (right amount).
pub fn pockets_spec(left: &[u64], right: &[u64]) -> ProductSpec {
    ProductSpec::new(
        LaurentZ::one(),
        RatFunc::one(),
        left.iter().copied(),
        right.iter().copied(),
    )
    .expect("pocket spec is valid")
}

/// `(1+z)^2 / (2z ∏_{i=0}^{n} (1 - t z^{n-2i}))`, whose constant term in z is ψ_n.
///
/// The numerator is stored as `z^{-1}(1 + 2z + z^2)` and the 1/2 goes to the
/// scalar prefactor, together with `1/(1-t)` for the middle factor when `n` is even.
pub fn almkvist_spec(n: u32) -> Result<ProductSpec> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("almkvist index {n} < 2")));
    }
    let n = n as i64;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 0..=n {
        let e = n - 2 * i;
        match e.signum() {
            1 => a.push(e as u64),
            -1 => b.push((-e) as u64),
            _ => {
                a.push(0);
            }
        }
    }
    ProductSpec::new(
        LaurentZ::from_ints(-1, &[1, 2, 1]),
        RatFunc::constant(Rational::new(1.into(), 2.into())),
        a,
        b,
    )
}

/// How [`partial_fractions_z_with`] inverts each cofactor modulo its factor power.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PfMethod {
    /// Root substitution for simple factors, Euclid for repeated ones.
    #[default]
    Auto,
    /// Extended Euclidean algorithm over ℚ(t) for every factor.
    Euclid,
}

/// Partial fractions of the cleared spec over ℚ(t), one factor power at a time.
pub fn partial_fractions_z(spec: &ProductSpec) -> Result<PFDecompZ> {
    partial_fractions_z_with(spec, PfMethod::Auto)
}

/// For each factor power `F` with cofactor `G = D/F`, the numerator over `F` is
/// the unique polynomial of z-degree below `deg F` congruent to `N · G^{-1}`
/// modulo `F`.
///
/// With [`PfMethod::Euclid`] the inverse comes from the extended Euclidean
/// algorithm over ℚ(t), which fails exactly when `F` and `G` share a factor.
/// [`PfMethod::Auto`] substitutes the generic root of each multiplicity-one
/// factor instead, which avoids the remainder sequence entirely.
pub fn partial_fractions_z_with(spec: &ProductSpec, method: PfMethod) -> Result<PFDecompZ> {
    let cleared = spec.cleared_fraction();
    let factors = spec.factor_powers();
    let (poly_part, proper) = if cleared.numerator.degree() >= cleared.denominator.degree() {
        cleared.numerator.divrem(&cleared.denominator)?
    } else {
        (ZPoly::zero(), cleared.numerator.clone())
    };
    let plain_numerator: Vec<Rational> = cleared
        .numerator
        .coeffs()
        .iter()
        .map(|c| {
            c.as_constant()
                .expect("cleared numerator has rational coefficients")
        })
        .collect();

    let mut terms_a = Vec::new();
    let mut terms_b = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let numerator = if method == PfMethod::Auto && f.multiplicity == 1 {
            simple_factor_numerator(&plain_numerator, &factors, i)?
        } else {
            euclid_factor_numerator(&proper, &factors, i)?
        };
        let term = PfTerm {
            exponent: f.exponent,
            multiplicity: f.multiplicity,
            numerator,
        };
        match f.side {
            Side::A => terms_a.push(term),
            Side::B => terms_b.push(term),
        }
    }
    Ok(PFDecompZ {
        shift: cleared.shift,
        poly_part,
        terms_a,
        terms_b,
    })
}

fn euclid_factor_numerator(proper: &ZPoly, factors: &[FactorPower], i: usize) -> Result<ZPoly> {
    let f = &factors[i];
    let mut cofactor = ZPoly::one();
    for (j, g) in factors.iter().enumerate() {
        if i != j {
            cofactor = (&cofactor * &g.poly.rem(&f.poly)?).rem(&f.poly)?;
        }
    }
    let inv = cofactor.inverse_mod(&f.poly)?.ok_or_else(|| {
        let other = factors
            .iter()
            .enumerate()
            .find(|&(j, g)| {
                j != i
                    && g.poly
                        .inverse_mod(&f.poly)
                        .map(|r| r.is_none())
                        .unwrap_or(true)
            })
            .map(|(_, g)| g.label())
            .unwrap_or_else(|| "cofactor".into());
        Error::CoprimalityFailure(f.label(), other)
    })?;
    (&proper.rem(&f.poly)? * &inv).rem(&f.poly)
}

/// Multiply `p` by `1 - c·w^k` in place.
fn mul_binomial(p: &mut Vec<Rational>, c: &Rational, k: usize) {
    let n = p.len();
    p.resize(n + k, Rational::zero());
    for i in (k..n + k).rev() {
        if !p[i - k].is_zero() {
            let v = &p[i - k] * c;
            p[i] -= v;
        }
    }
}

/// Divide `p` by `1 - c·w^k` in place; the division must be exact.
fn div_binomial(p: &mut Vec<Rational>, c: &Rational, k: usize) {
    for i in k..p.len() {
        if !p[i - k].is_zero() {
            let v = &p[i - k] * c;
            p[i] += v;
        }
    }
    let n = p.len() - k;
    debug_assert!(p[n..].iter().all(|x| x.is_zero()));
    p.truncate(n);
}

/// Numerator over a multiplicity-one factor via its generic root.
///
/// Modulo `1 - t z^r` (resp. `z^r - t`) the field ℚ(t)[z]/(F) is ℚ(w) with
/// `z = w` and `t = w^{-r}` (resp. `t = w^r`), so `s = w^r` is `1/t` (resp. `t`).
/// Every other factor becomes `c·w^p·(1 - λ w^k)`, and
/// `1/(1 - λ w^k) = (1 + λw^k + … + (λw^k)^{m-1}) / (1 - λ^m s^{km/r})`
/// with `m = r/gcd(k, r)`. The numerator over `F` is then read off by
/// splitting `N(w)·∏(geometric sums)` into residue classes of exponents mod r.
fn simple_factor_numerator(
    numerator: &[Rational],
    factors: &[FactorPower],
    i: usize,
) -> Result<ZPoly> {
    let f = &factors[i];
    let r = f.exponent as i64;
    // w-exponent of t
    let tau = match f.side {
        Side::A => -r,
        Side::B => r,
    };
    let mut scalar = Rational::one();
    let mut w_power = 0i64;
    // (λ, k) per binomial, with multiplicity
    let mut binomials: Vec<(Rational, i64)> = Vec::new();
    for (j, g) in factors.iter().enumerate() {
        if j == i {
            continue;
        }
        let e = g.exponent as i64;
        // two monomials (z-exp, t-exp, coeff)
        let terms: [(i64, i64, i64); 2] = match g.side {
            Side::A => [(0, 0, 1), (e, 1, -1)],
            Side::B => [(e, 0, 1), (0, 1, -1)],
        };
        let (p1, c1) = (terms[0].0 + tau * terms[0].1, terms[0].2);
        let (p2, c2) = (terms[1].0 + tau * terms[1].1, terms[1].2);
        for _ in 0..g.multiplicity {
            if p1 == p2 {
                if c1 + c2 == 0 {
                    return Err(Error::CoprimalityFailure(f.label(), g.label()));
                }
                scalar *= Rational::from_integer((c1 + c2).into());
                w_power += p1;
                continue;
            }
            let ((lo, clo), (hi, chi)) = if p1 < p2 {
                ((p1, c1), (p2, c2))
            } else {
                ((p2, c2), (p1, c1))
            };
            scalar *= Rational::from_integer(clo.into());
            w_power += lo;
            binomials.push((Rational::new((-chi).into(), clo.into()), hi - lo));
        }
    }

    let mut u = numerator.to_vec();
    let mut den_s: Vec<Rational> = vec![Rational::one()];
    for (lambda, k) in &binomials {
        let m = r / gcd_i64(*k, r);
        let lambda_m = num_traits::pow(lambda.clone(), m as usize);
        mul_binomial(&mut u, &lambda_m, (k * m) as usize);
        div_binomial(&mut u, lambda, *k as usize);
        mul_binomial(&mut den_s, &lambda_m, (k * m / r) as usize);
    }

    // U(w)·w^{-w_power} / (scalar · den(s)); split exponents E = j + r·q
    let mut by_residue: Vec<BTreeMap<i64, Rational>> = vec![BTreeMap::new(); r as usize];
    for (idx, c) in u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exp = idx as i64 - w_power;
        let j = exp.rem_euclid(r);
        let q = exp.div_euclid(r);
        *by_residue[j as usize]
            .entry(q)
            .or_insert_with(Rational::zero) += c;
    }
    let inv_scalar = scalar.recip();
    let den_terms: BTreeMap<i64, Rational> = den_s
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(q, c)| (q as i64, c.clone()))
        .collect();
    let s_is_inverse_t = f.side == Side::A;
    let coeffs = by_residue
        .into_iter()
        .map(|num| {
            if num.is_empty() {
                return Ok(RatFunc::zero());
            }
            laurent_ratio_in_t(&num, &den_terms, s_is_inverse_t).map(|rf| rf.scale(&inv_scalar))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ZPoly::new(coeffs))
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `num(s)/den(s)` for Laurent polynomials given as exponent maps, with
/// `s = 1/t` or `s = t`, as a reduced rational function of t.
fn laurent_ratio_in_t(
    num: &BTreeMap<i64, Rational>,
    den: &BTreeMap<i64, Rational>,
    s_is_inverse_t: bool,
) -> Result<RatFunc> {
    let sign = if s_is_inverse_t { -1 } else { 1 };
    let lowest = num
        .keys()
        .chain(den.keys())
        .map(|&q| sign * q)
        .min()
        .unwrap_or(0);
    let to_poly = |m: &BTreeMap<i64, Rational>| {
        let hi = m.keys().map(|&q| sign * q - lowest).max().unwrap_or(0) as usize;
        let mut c = vec![Rational::zero(); hi + 1];
        for (&q, v) in m {
            c[(sign * q - lowest) as usize] += v;
        }
        Poly::new(c)
    };
    RatFunc::new(to_poly(num), to_poly(den))
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(k+e-1, e-1) · t^k · c`
fn weighted(c: &RatFunc, k: u64, e: u32) -> RatFunc {
    let w = Rational::from_integer(binomial(k + e as u64 - 1, e as u64 - 1));
    &RatFunc::monomial(w, k as usize) * c
}

/// Coefficient of z^M in the decomposition (ignoring shift and scalar).
fn extract(pf: &PFDecompZ, m: i64) -> RatFunc {
    let mut parts: Vec<RatFunc> = Vec::new();
    if m >= 0 {
        let c = pf.poly_part.coeff(m as usize);
        if !c.is_zero() {
            parts.push(c);
        }
    }
    // N_a(z) Σ_k C(k+e-1,e-1) t^k z^{ak}
    for term in &pf.terms_a {
        let Some(deg) = term.numerator.degree() else {
            continue;
        };
        let a = term.exponent as i64;
        let mut k = 0i64;
        while m - a * k >= 0 {
            let idx = m - a * k;
            if idx as usize <= deg {
                let c = &term.numerator.coeffs()[idx as usize];
                if !c.is_zero() {
                    parts.push(weighted(c, k as u64, term.multiplicity));
                }
            }
            k += 1;
        }
    }
    // N_b(z) z^{-be} Σ_k C(k+e-1,e-1) t^k z^{-bk}
    for term in &pf.terms_b {
        let Some(deg) = term.numerator.degree() else {
            continue;
        };
        let b = term.exponent as i64;
        let e = term.multiplicity as i64;
        let mut k = 0i64;
        loop {
            let idx = m + b * (k + e);
            if idx > deg as i64 {
                break;
            }
            if idx >= 0 {
                let c = &term.numerator.coeffs()[idx as usize];
                if !c.is_zero() {
                    parts.push(weighted(c, k as u64, term.multiplicity));
                }
            }
            k += 1;
        }
    }
    parts.iter().fold(RatFunc::zero(), |acc, p| &acc + p)
}

/// `[z^m]` of the spec as a reduced rational function in t.
pub fn coeff_z(spec: &ProductSpec, m: i64) -> Result<RatFunc> {
    let pf = partial_fractions_z(spec)?;
    Ok(coeff_z_from(spec, &pf, m))
}

/// Same as [`coeff_z`] with a decomposition computed earlier, so several
/// `m` can share one partial-fraction pass.
pub fn coeff_z_from(spec: &ProductSpec, pf: &PFDecompZ, m: i64) -> RatFunc {
    &extract(pf, m - pf.shift) * spec.scalar()
}

/// Coefficient of z^0 in `P(z) / (∏_{a∈A}(1 - z^a t) ∏_{b∈B}(1 - t/z^b))`.
pub fn gf_pab(p: &LaurentZ, a: &[u64], b: &[u64]) -> Result<RatFunc> {
    if a.is_empty() && b.is_empty() {
        return Err(Error::InvalidSpec("A and B are both empty".into()));
    }
    let spec = ProductSpec::new(
        p.clone(),
        RatFunc::one(),
        a.iter().copied(),
        b.iter().copied(),
    )?;
    coeff_z(&spec, 0)
}
