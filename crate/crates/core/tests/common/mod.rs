#![allow(dead_code)]

use thetasg::Params;

/// Every valid triple with a in [1,4], b in [1,9], c in [2,40].
pub fn sweep() -> Vec<Params> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in 1..=9 {
            for c in 2..=40 {
                if let Ok(p) = Params::new(a, b, c) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Plain loop, independent of the library.
pub fn s(a: u128, k: usize) -> u128 {
    (0..k).map(|i| a.pow(i as u32)).sum()
}

pub fn t(p: &Params, k: usize) -> u128 {
    p.a().pow(k as u32) * p.c() + p.b() * s(p.a(), k)
}

/// All a-reduced families `[0, j_1, ..., j_k]` with `1 <= k <= max_top`,
/// built straight from the definition (no trailing zeros).
pub fn reduced_families(a: u128, max_top: usize) -> Vec<Vec<u128>> {
    let mut out = Vec::new();
    for top in 1..=max_top {
        let mut cur = vec![0u128; top + 1];
        fill(a, top, top, false, &mut cur, &mut out);
    }
    out
}

// Chooses j_idx for idx = top, top-1, ..., 1. `forced_zero` is set once some
// higher coefficient equals a (then nothing below may be nonzero); a
// coefficient equal to a must itself sit above only zeros, which we check
// at the end.
fn fill(
    a: u128,
    top: usize,
    idx: usize,
    forced_zero: bool,
    cur: &mut Vec<u128>,
    out: &mut Vec<Vec<u128>>,
) {
    if idx == 0 {
        if valid(a, cur) {
            out.push(cur.clone());
        }
        return;
    }
    let lo = if idx == top { 1 } else { 0 };
    let hi = if forced_zero { 0 } else { a };
    for j in lo..=hi {
        cur[idx] = j;
        fill(a, top, idx - 1, forced_zero || j == a, cur, out);
    }
    cur[idx] = 0;
}

fn valid(a: u128, coeffs: &[u128]) -> bool {
    for k in 1..coeffs.len() {
        if coeffs[k] > a {
            return false;
        }
        if coeffs[k] == a && coeffs[1..k].iter().any(|&j| j != 0) {
            return false;
        }
    }
    coeffs.len() < 2 || *coeffs.last().unwrap() != 0
}

pub fn geometric_value(a: u128, coeffs: &[u128]) -> u128 {
    coeffs.iter().enumerate().map(|(i, &j)| j * s(a, i)).sum()
}

pub fn orbit_value(p: &Params, coeffs: &[u128]) -> u128 {
    coeffs.iter().enumerate().map(|(i, &j)| j * t(p, i)).sum()
}
