//! Cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::poly::Poly;

fn divisors(d: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= d {
        if d.is_multiple_of(i) {
            small.push(i);
            if i * i != d {
                large.push(d / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            out.push(p);
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Euler's totient.
pub fn totient(d: u64) -> u64 {
    prime_factors(d)
        .into_iter()
        .fold(d, |acc, p| acc / p * (p - 1))
}

fn cache() -> &'static Mutex<HashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The monic `d`-th cyclotomic polynomial Φ_d, obtained by dividing
/// `t^d - 1` by Φ_c for every proper divisor `c` of `d`.
///
/// # Panics
/// If `d == 0`.
pub fn cyclotomic(d: u64) -> Poly {
    assert!(d >= 1, "cyclotomic order must be positive");
    if let Some(p) = cache().lock().unwrap_or_else(|e| e.into_inner()).get(&d) {
        return p.clone();
    }
    let mut acc = -&Poly::one_minus_x_pow(d as usize);
    for c in divisors(d) {
        if c < d {
            acc = acc
                .exact_div(&cyclotomic(c))
                .expect("cyclotomic divisor is nonzero");
        }
    }
    cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(d, acc.clone());
    acc
}

/// Integer coefficients of Φ_d from the Möbius product
/// Φ_d = ∏_{c | d} (t^c - 1)^{μ(d/c)}.
///
/// Used by the cyclotomic factorizer (which probes many orders) and as an
/// independent check on [`cyclotomic`].
pub fn cyclotomic_mobius(d: u64) -> Vec<i64> {
    assert!(d >= 1, "cyclotomic order must be positive");
    let primes = prime_factors(d);
    // squarefree divisors q of rad(d) give c = d / q with μ(q) = (-1)^{ω(q)}
    let mut up = Vec::new();
    let mut down = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let q: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .product();
        if mask.count_ones() % 2 == 0 {
            up.push(d / q);
        } else {
            down.push(d / q);
        }
    }
    let deg_up: u64 = up.iter().sum();
    let mut c = vec![0i64; deg_up as usize + 1];
    c[0] = 1;
    let mut len = 1usize;
    // multiply by (t^k - 1) = -(1 - t^k)
    for &k in &up {
        let k = k as usize;
        for i in (0..len + k).rev() {
            let shifted = if i >= k { c[i - k] } else { 0 };
            c[i] = shifted - c[i];
        }
        len += k;
    }
    // divide by (t^k - 1): q_i = q_{i-k} - a_i
    for &k in &down {
        let k = k as usize;
        let n = len - k;
        let mut q = vec![0i64; n];
        for i in 0..n {
            q[i] = if i >= k { q[i - k] } else { 0 } - c[i];
        }
        c[..n].copy_from_slice(&q);
        len = n;
    }
    c.truncate(len);
    if c.last().is_some_and(|&x| x < 0) {
        for x in &mut c {
            *x = -*x;
        }
    }
    c
}
