//! Reduced rational functions in one variable over ℚ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::Rational;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// Canonical, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Canonical form of `num / den`.
pub fn ratfunc_reduce(num: Poly, den: Poly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::normalized(num, den))
    }

    /// Makes `den` monic; assumes the pair is already coprime.
    fn normalized(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c · t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        Self::from_poly(Poly::monomial(c, k))
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a rational number, if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        // coprime num and den stay coprime under powers
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::new(num, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return RatFunc {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd(&rhs.den).expect("nonzero denominators");
        if g.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                den: &self.den * &rhs.den,
            };
        }
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return Self::zero();
        }
        let den = &(&b1 * &d1) * &g;
        let h = num.gcd(&g).expect("nonzero");
        if h.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.exact_div(&h).expect("gcd divides"),
                den: den.exact_div(&h).expect("gcd divides"),
            }
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            if d.is_one() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d).expect("nonzero");
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFunc {
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
    }

    /// Formats as `(num)/(den)` in the variable `var`.
    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.display_in(var);
        }
        format!(
            "({})/({})",
            self.num.display_in(var),
            self.den.display_in(var)
        )
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> RatFunc {
        self.add_ref(rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> RatFunc {
        self.add_ref(&-rhs.clone())
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> RatFunc {
        self.mul_ref(rhs)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: Self) -> Self {
        self.mul_ref(&rhs.recip().expect("division by zero rational function"))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        self.recip().expect("inverse of zero rational function")
    }

    fn mul_ref(&self, other: &Self) -> Self {
        RatFunc::mul_ref(self, other)
    }
}
