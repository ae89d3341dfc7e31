use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient field for [`DensePoly`](crate::poly::DensePoly).
///
/// Implemented for [`Rational`](crate::Rational) and for [`RatFunc`](crate::RatFunc),
/// so the same long division and Euclid code runs over both ℚ and ℚ(t).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
