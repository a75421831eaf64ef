//! Checked integer primitives: the geometric sums `s_k(a)`, the orbit
//! `t_k = θ^k(c)`, the affine map itself and a little modular arithmetic.
//!
//! Everything is computed in `u128`. Any intermediate that does not fit is
//! reported as [`Error::Overflow`]; nothing wraps.

use crate::error::{Error, Result};
use crate::params::Params;

pub fn gcd(mut x: u128, mut y: u128) -> u128 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// `s_k(a) = 1 + a + ... + a^(k-1)`, with `s_0(a) = 0`.
pub fn geometric_sum(a: u128, k: usize) -> Result<u128> {
    if a == 1 {
        return u128::try_from(k).map_err(|_| Error::Overflow("s_k(a)"));
    }
    let mut sum: u128 = 0;
    let mut power: u128 = 1;
    for i in 0..k {
        sum = sum.checked_add(power).ok_or(Error::Overflow("s_k(a)"))?;
        if i + 1 < k {
            power = power.checked_mul(a).ok_or(Error::Overflow("s_k(a)"))?;
        }
    }
    Ok(sum)
}

/// Largest `k` with `s_k(a) <= x`.
///
/// `s_k(a)` is strictly increasing in `k`, so this is the index of the
/// interval `[s_k(a), s_{k+1}(a))` holding `x`.
pub fn geometric_index(a: u128, x: u128) -> Result<usize> {
    assert!(a >= 1, "the multiplier must be positive");
    if a == 1 {
        return usize::try_from(x).map_err(|_| Error::TooLarge("index of s_k(1)"));
    }
    let mut k = 0usize;
    let mut sum: u128 = 0; // s_k
    let mut power: u128 = 1; // a^k
    loop {
        // s_{k+1} = s_k + a^k; once it leaves u128 it certainly exceeds x.
        match sum.checked_add(power) {
            Some(next) if next <= x => {
                sum = next;
                k += 1;
                power = match power.checked_mul(a) {
                    Some(p) => p,
                    None => return Ok(k),
                };
            }
            _ => return Ok(k),
        }
    }
}

/// `t_k(a, b, c) = a^k * c + b * s_k(a)`.
pub fn orbit(p: &Params, k: usize) -> Result<u128> {
    let scale = if p.a() == 1 {
        1
    } else {
        let exp = u32::try_from(k).map_err(|_| Error::Overflow("t_k(a,b,c)"))?;
        p.a()
            .checked_pow(exp)
            .ok_or(Error::Overflow("t_k(a,b,c)"))?
    };
    let offset = geometric_sum(p.a(), k)?
        .checked_mul(p.b())
        .ok_or(Error::Overflow("t_k(a,b,c)"))?;
    scale
        .checked_mul(p.c())
        .and_then(|v| v.checked_add(offset))
        .ok_or(Error::Overflow("t_k(a,b,c)"))
}

/// The affine map `x -> a*x + b`.
pub fn theta(p: &Params, x: u128) -> Result<u128> {
    x.checked_mul(p.a())
        .and_then(|v| v.checked_add(p.b()))
        .ok_or(Error::Overflow("a*x + b"))
}

/// `(x + y) mod m` for `x, y < m`, without intermediate overflow.
pub(crate) fn add_mod(x: u128, y: u128, m: u128) -> u128 {
    debug_assert!(x < m && y < m);
    if x >= m - y {
        x - (m - y)
    } else {
        x + y
    }
}

/// `(x * y) mod m`, by double-and-add so that it works on the full `u128` range.
pub(crate) fn mul_mod(x: u128, y: u128, m: u128) -> u128 {
    if let Some(prod) = x.checked_mul(y) {
        return prod % m;
    }
    let mut acc = 0;
    let mut base = x % m;
    let mut e = y;
    while e > 0 {
        if e & 1 == 1 {
            acc = add_mod(acc, base, m);
        }
        base = add_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `x` modulo `m` (extended Euclid with coefficients kept in
/// `[0, m)`), or `None` when `gcd(x, m) != 1`.
pub fn inverse_mod(x: u128, m: u128) -> Option<u128> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m, x % m);
    // Invariant: s_i * x ≡ r_i (mod m).
    let (mut s0, mut s1) = (0u128, 1u128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        let qs = mul_mod(q % m, s1, m);
        let next = add_mod(s0, (m - qs) % m, m);
        (s0, s1) = (s1, next);
    }
    (r0 == 1).then_some(s0)
}
