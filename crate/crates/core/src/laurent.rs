//! Laurent polynomials in z with rational coefficients.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::Poly;
use crate::Rational;

/// `Σ coeffs[i] · z^(min_exp + i)`, trimmed at both ends.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentZ {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl LaurentZ {
    pub fn new(min_exp: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentZ {
            min_exp: min_exp + lead as i64,
            coeffs,
        }
    }

    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(
            min_exp,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        LaurentZ {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> Rational {
        let i = e - self.min_exp;
        if i < 0 {
            return Rational::zero();
        }
        self.coeffs
            .get(i as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// The polynomial `z^(-min_exp) · self`, whose constant term is nonzero.
    pub fn normalized_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// Image under z → 1/z.
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                LaurentZ::new(-hi, c)
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let p = &self.normalized_poly() * &other.normalized_poly();
        LaurentZ::new(self.min_exp + other.min_exp, p.into_coeffs())
    }

    pub fn sum(values: &[LaurentZ]) -> Self {
        let Some(lo) = values
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.min_exp)
            .min()
        else {
            return Self::zero();
        };
        let hi = values.iter().filter_map(|v| v.max_exp()).max().unwrap();
        let mut acc = vec![Rational::zero(); (hi - lo + 1) as usize];
        for v in values {
            for (e, c) in v.terms() {
                acc[(e - lo) as usize] += c;
            }
        }
        LaurentZ::new(lo, acc)
    }

    /// Sum of all coefficients (the value at z = 1).
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }
}

/// Parses `minExp:c0,c1,...` with integer or `p/q` coefficients.
impl FromStr for LaurentZ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected minExp:c0,c1,... in {s:?}")))?;
        let min_exp: i64 = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {head:?}")))?;
        let coeffs = body
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<Rational>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentZ::new(min_exp, coeffs))
    }
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}:{}", self.min_exp, body.join(","))
    }
}
