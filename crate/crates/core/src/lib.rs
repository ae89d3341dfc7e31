//! Exact constant-term extraction for bivariate rational products.
//!
//! The pipeline takes a product such as
//! `1/((1-tz)(1-tz^5)(1-tz^10)(1-tz^25)(1-t/z)(1-t/z^5)(1-t/z^10)(1-t/z^25))`,
//! extracts the coefficient of `z^m` as a rational function of `t`
//! ([`constant_term`]), rewrites that generating function as a sum of
//! small-period quasi-polynomials ([`quasipoly`]) and evaluates it at
//! arbitrarily large indices. [`series`] holds the independent oracles
//! (Taylor recurrence, truncated bivariate expansion, brute-force counting).
//!
//! All arithmetic is exact.

pub mod constant_term;
pub mod cyclotomic;
pub mod error;
pub mod field;
mod gcd;
pub mod laurent;
pub mod poly;
pub mod quasipoly;
pub mod ratfunc;
pub mod series;

pub use num_bigint::{BigInt, BigUint};

/// Arbitrary-precision fraction in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub use constant_term::{
    almkvist_spec, coeff_z, coeff_z_from, gf_pab, partial_fractions_z, partial_fractions_z_with,
    pockets_spec, PFDecompZ, PfMethod, PfTerm, ProductSpec, ZPoly,
};
pub use cyclotomic::cyclotomic;
pub use error::{Error, Result};
pub use field::Field;
pub use laurent::LaurentZ;
pub use poly::{poly_divrem, poly_gcd, DensePoly, Poly};
pub use quasipoly::{
    cyclo_factor, leading_via_limit, qp_eval, qp_leading, to_quasipoly, AsymptoticTerm,
    CycloFactorization, QuasiPolynomial,
};
pub use ratfunc::{ratfunc_reduce, RatFunc};
pub use series::{bivariate_truncate, enumerate_pairs, taylor};
