//! Series expansion and the independent oracles used to check extraction.

use num_traits::Zero;

use crate::constant_term::ProductSpec;
use crate::error::{Error, Result};
use crate::laurent::LaurentZ;
use crate::ratfunc::RatFunc;
use crate::Rational;

/// Largest total coin count [`enumerate_pairs`] accepts.
pub const ENUMERATION_LIMIT: usize = 14;

/// Taylor coefficients `c_0 ..= c_n` of `rf` at t = 0, by the recurrence
/// `d_0 c_k = p_k - Σ_{j≥1} d_j c_{k-j}`.
pub fn taylor(rf: &RatFunc, n: usize) -> Result<Vec<Rational>> {
    let den = rf.den().coeffs();
    let num = rf.num().coeffs();
    let d0 = den
        .first()
        .filter(|c| !c.is_zero())
        .ok_or(Error::PoleAtZero)?;
    let d0_inv = d0.recip();
    let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..den.len().min(k + 1) {
            if !den[j].is_zero() {
                acc -= &den[j] * &out[k - j];
            }
        }
        out.push(acc * &d0_inv);
    }
    Ok(out)
}

/// Truncated expansion of `spec` as a series in t: entry `k` is the full
/// Laurent polynomial in z multiplying `t^k`, for `k = 0 ..= n`.
///
/// Each factor `1/(1 - t z^c)` is applied as the in-place recurrence
/// `S_k += z^c S_{k-1}`, once per unit of multiplicity.
pub fn bivariate_truncate(spec: &ProductSpec, n: usize) -> Vec<LaurentZ> {
    let num = spec.numerator();
    let max_a = spec.factors_a().keys().max().copied().unwrap_or(0) as i64;
    let max_b = spec.factors_b().keys().max().copied().unwrap_or(0) as i64;
    let lo = num.min_exp() - n as i64 * max_b;
    let hi = num.max_exp().unwrap_or(0) + n as i64 * max_a;
    let width = (hi - lo + 1) as usize;

    let scalar = taylor(spec.scalar(), n).expect("spec scalar has no pole at t = 0");
    let mut rows: Vec<Vec<Rational>> = scalar
        .iter()
        .map(|s| {
            let mut row = vec![Rational::zero(); width];
            if !s.is_zero() {
                for (e, c) in num.terms() {
                    row[(e - lo) as usize] = c * s;
                }
            }
            row
        })
        .collect();

    let shifts = spec
        .factors_a()
        .iter()
        .map(|(&a, &e)| (a as i64, e))
        .chain(spec.factors_b().iter().map(|(&b, &e)| (-(b as i64), e)));
    for (c, mult) in shifts {
        for _ in 0..mult {
            for k in 1..=n {
                let (done, rest) = rows.split_at_mut(k);
                let prev = &done[k - 1];
                let cur = &mut rest[0];
                for (i, slot) in cur.iter_mut().enumerate() {
                    let src = i as i64 - c;
                    if src < 0 || src >= width as i64 {
                        continue;
                    }
                    let v = &prev[src as usize];
                    if !v.is_zero() {
                        *slot += v;
                    }
                }
            }
        }
    }
    rows.into_iter().map(|r| LaurentZ::new(lo, r)).collect()
}

fn multiset_values(kinds: &[u64], size: usize) -> Vec<i64> {
    fn go(kinds: &[u64], size: usize, acc: i64, out: &mut Vec<i64>) {
        match kinds.split_first() {
            None => {
                if size == 0 {
                    out.push(acc);
                }
            }
            Some((&v, rest)) => {
                for k in 0..=size {
                    go(rest, size - k, acc + k as i64 * v as i64, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(kinds, size, 0, &mut out);
    out
}

/// Counts ordered pairs (L, R) of coin multisets, L over the `left` kinds and
/// R over the `right` kinds, with `|L| + |R| = n` and `value(L) - value(R) = m`.
///
/// Each entry of `left`/`right` is a distinct coin kind, so a repeated value
/// means two distinguishable kinds of that value.
pub fn enumerate_pairs(left: &[u64], right: &[u64], n: usize, m: i64) -> Result<u64> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded {
            n,
            max: ENUMERATION_LIMIT,
        });
    }
    let mut count = 0u64;
    for l in 0..=n {
        let lv = multiset_values(left, l);
        let rv = multiset_values(right, n - l);
        for x in &lv {
            for y in &rv {
                if x - y == m {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
