//! Dense univariate polynomials over a field.
//!
//! [`DensePoly`] stores coefficients in ascending order with no trailing zeros,
//! so the zero polynomial is the empty vector and `degree()` is `len - 1`.
//! The ℚ instantiation [`Poly`] additionally gets a modular gcd, integer
//! conversions and a text rendering.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gcd;
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly<K> {
    coeffs: Vec<K>,
}

/// Polynomial over ℚ.
pub type Poly = DensePoly<Rational>;

impl<K: Field> DensePoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: K, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x) + c.clone();
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let q = c.mul_ref(&lc_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] = rem[i + j].clone() - q.mul_ref(d);
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        if self.degree() < divisor.degree() && !divisor.is_zero() {
            return Ok(self.clone());
        }
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; the caller knows `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        Ok(q)
    }

    /// Monic gcd by the Euclidean algorithm over `K`.
    pub fn gcd_euclid(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Inverse of `self` modulo `modulus`, or `Ok(None)` when they share a
    /// nonconstant factor.
    ///
    /// Runs the extended Euclidean algorithm tracking only the cofactor of
    /// `self`.
    pub fn inverse_mod(&self, modulus: &Self) -> Result<Option<Self>> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus)?;
        let mut s0 = Self::zero();
        let mut s1 = Self::one();
        while !r1.is_zero() {
            // keep the remainder sequence monic to limit coefficient growth
            let lc = r1.leading().expect("nonzero").inv();
            r1 = r1.scale(&lc);
            s1 = s1.scale(&lc);
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Ok(None);
        }
        let c = r0.coeffs[0].inv();
        Ok(Some(s0.scale(&c).rem(modulus)?))
    }
}

impl<K: Field> Add for &DensePoly<K> {
    type Output = DensePoly<K>;

    fn add(self, rhs: Self) -> DensePoly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        DensePoly::new(out)
    }
}

impl<K: Field> Sub for &DensePoly<K> {
    type Output = DensePoly<K>;

    fn sub(self, rhs: Self) -> DensePoly<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Neg for &DensePoly<K> {
    type Output = DensePoly<K>;

    fn neg(self) -> DensePoly<K> {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<K: Field> Mul for &DensePoly<K> {
    type Output = DensePoly<K>;

    fn mul(self, rhs: Self) -> DensePoly<K> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.mul_ref(b);
                }
            }
        }
        DensePoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr for DensePoly<K> {
            type Output = DensePoly<K>;
            fn $m(self, rhs: Self) -> DensePoly<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<K: Field> Neg for DensePoly<K> {
    type Output = DensePoly<K>;
    fn neg(self) -> DensePoly<K> {
        -&self
    }
}

/// Quotient and remainder of `a` by `b`.
pub fn poly_divrem(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    a.divrem(b)
}

/// Monic gcd over ℚ.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.gcd(b)
}

impl DensePoly<Rational> {
    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// `1 - x^d`
    pub fn one_minus_x_pow(d: usize) -> Self {
        let mut c = vec![Rational::zero(); d + 1];
        c[0] = Rational::one();
        c[d] = -Rational::one();
        Self::new(c)
    }

    /// Monic gcd over ℚ, computed modulo word-size primes.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        Ok(gcd::gcd_rational(self, other))
    }

    /// `Some(c)` when every coefficient is an integer.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Renders in descending powers, e.g. `t^2-t+1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for DensePoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}
