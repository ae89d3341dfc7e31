//! Modular gcd for polynomials over ℚ.
//!
//! Inputs are cleared to primitive integer polynomials, the gcd is computed
//! modulo a sequence of 62-bit primes and lifted by CRT. A lifted candidate
//! is accepted once it stops changing between primes and divides both
//! inputs exactly over ℤ.

use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::Rational;

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

const PRIME_CEILING: u64 = 1 << 62;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `i`-th prime below 2^62, counting downward.
pub(crate) fn nth_prime(i: usize) -> u64 {
    let mut primes = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    while primes.len() <= i {
        let mut c = primes.last().copied().unwrap_or(PRIME_CEILING + 1) - 2;
        while !is_prime_u64(c) {
            c -= 2;
        }
        primes.push(c);
    }
    primes[i]
}

pub(crate) fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let mut r: u128 = 0;
    for d in x.magnitude().iter_u64_digits().rev() {
        r = ((r << 64) | d as u128) % p as u128;
    }
    let r = r as u64;
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

/// Clears denominators and content; the result has a positive leading coefficient.
pub(crate) fn primitive_integer(a: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in a.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = a
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
        if content.is_one() {
            break;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    if !content.is_one() {
        for c in &mut ints {
            *c = &*c / &content;
        }
    }
    ints
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let q = mul_mod(a[top], inv, p);
        if q != 0 {
            let off = top - db;
            for (j, &bj) in b.iter().enumerate() {
                a[off + j] = (a[off + j] + p - mul_mod(q, bj, p)) % p;
            }
        }
        a.pop();
        trim_mod(a);
    }
}

fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim_mod(&mut x);
    trim_mod(&mut y);
    while !y.is_empty() {
        rem_mod(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(&lc) = x.last() {
        let inv = inv_mod(lc, p);
        for c in &mut x {
            *c = mul_mod(*c, inv, p);
        }
    }
    x
}

/// Exact divisibility of integer polynomials (by trial division over ℤ).
pub(crate) fn int_divides(d: &[BigInt], a: &[BigInt]) -> bool {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return a.iter().all(|c| c.is_zero());
    }
    if !(a[a.len() - 1].is_multiple_of(&d[dd])) || !a[0].is_multiple_of(&d[0]) {
        return false;
    }
    let mut rem = a.to_vec();
    for i in (0..=a.len() - d.len()).rev() {
        let c = &rem[i + dd];
        if c.is_zero() {
            continue;
        }
        let (q, r) = c.div_rem(&d[dd]);
        if !r.is_zero() {
            return false;
        }
        for (j, dj) in d.iter().enumerate() {
            if !dj.is_zero() {
                rem[i + j] -= &q * dj;
            }
        }
    }
    rem.iter().all(|c| c.is_zero())
}

fn to_poly_monic(v: Vec<BigInt>, t_power: usize) -> Poly {
    let lc = v.last().cloned().expect("nonzero gcd");
    let coeffs = std::iter::repeat_n(Rational::zero(), t_power)
        .chain(v.into_iter().map(|c| Rational::new(c, lc.clone())))
        .collect();
    Poly::new(coeffs)
}

fn strip_low(a: &Poly, k: usize) -> Poly {
    Poly::new(a.coeffs()[k..].to_vec())
}

/// Monic gcd of two polynomials over ℚ, not both zero.
pub(crate) fn gcd_rational(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let va = a.valuation().unwrap();
    let vb = b.valuation().unwrap();
    let v = va.min(vb);
    let (a, b) = (strip_low(a, va), strip_low(b, vb));
    if a.is_constant() || b.is_constant() {
        return Poly::monomial(Rational::one(), v);
    }
    let ai = primitive_integer(&a);
    let bi = primitive_integer(&b);
    if ai == bi {
        return to_poly_monic(ai, v);
    }
    let lca = ai.last().unwrap();
    let lcb = bi.last().unwrap();
    let lcg = lca.gcd(lcb);

    let mut modulus = BigInt::one();
    let mut crt: Vec<BigInt> = Vec::new();
    let mut deg = usize::MAX;
    let mut last_lift: Option<Vec<BigInt>> = None;
    let mut i = 0;
    loop {
        let p = nth_prime(i);
        i += 1;
        if reduce_mod(lca, p) == 0 || reduce_mod(lcb, p) == 0 {
            continue;
        }
        let ap: Vec<u64> = ai.iter().map(|c| reduce_mod(c, p)).collect();
        let bp: Vec<u64> = bi.iter().map(|c| reduce_mod(c, p)).collect();
        let g = gcd_mod(&ap, &bp, p);
        let gdeg = g.len() - 1;
        if gdeg == 0 {
            return Poly::monomial(Rational::one(), v);
        }
        if gdeg > deg {
            continue;
        }
        let scale = reduce_mod(&lcg, p);
        let g: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        if gdeg < deg {
            deg = gdeg;
            modulus = BigInt::from(p);
            crt = g.iter().map(|&c| BigInt::from(c)).collect();
            last_lift = None;
            continue;
        }
        let m_inv = inv_mod(reduce_mod(&modulus, p), p);
        for (c, &r) in crt.iter_mut().zip(&g) {
            let cur = reduce_mod(c, p);
            let delta = mul_mod((r + p - cur) % p, m_inv, p);
            if delta != 0 {
                *c += &modulus * BigInt::from(delta);
            }
        }
        modulus *= BigInt::from(p);
        let half = &modulus >> 1;
        let lift: Vec<BigInt> = crt
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        if last_lift.as_ref() == Some(&lift) {
            let cand = primitive_integer(&Poly::from_bigints(lift.clone()));
            if int_divides(&cand, &ai) && int_divides(&cand, &bi) {
                return to_poly_monic(cand, v);
            }
        }
        last_lift = Some(lift);
    }
}
