//! `a`-reduced coefficient families.
//!
//! A family `(j_0, j_1, ..., j_k)` is `a`-reduced when every `j_i` with
//! `i >= 1` lies in `[0, a]`, the top coefficient is nonzero, and a
//! coefficient equal to `a` at index `k >= 1` forces every `j_i` with
//! `1 <= i < k` to vanish. `j_0` is unconstrained.
//!
//! Such families give unique expansions `l = Σ j_i s_i(a)` ([`decompose`]),
//! every expansion `x = Σ j_i t_i(a,b,c)` can be rewritten into one
//! ([`reduce`]), and the order [`compare`] agrees with the size of both sums.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::arith::{geometric_index, geometric_sum, orbit};
use crate::error::{Error, Result};
use crate::params::Params;

/// Dense coefficient vector, index 0 first, with no trailing zeros above index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AReducedRepr {
    ambient: u128,
    coeffs: Vec<u128>,
}

impl AReducedRepr {
    /// Validates `coeffs` against `ambient` after stripping trailing zeros.
    pub fn new(ambient: u128, mut coeffs: Vec<u128>) -> Result<Self> {
        trim(&mut coeffs);
        check_reduced(ambient, &coeffs)?;
        Ok(Self { ambient, coeffs })
    }

    /// The multiplier `a` this family is reduced with respect to.
    pub fn ambient(&self) -> u128 {
        self.ambient
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    /// Coefficient at `index`, zero past the end.
    pub fn coeff(&self, index: usize) -> u128 {
        self.coeffs.get(index).copied().unwrap_or(0)
    }

    /// Highest index `>= 1` carrying a nonzero coefficient, or 0 if there is none.
    pub fn top_index(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Nonzero `(index, coefficient)` pairs with index `>= 1`, lowest index first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &j)| j != 0)
            .map(|(i, &j)| (i, j))
    }

    /// `Σ_{i>=1} j_i s_i(a)`.
    pub fn geometric_value(&self) -> Result<u128> {
        self.terms().try_fold(0u128, |acc, (i, j)| {
            geometric_sum(self.ambient, i)?
                .checked_mul(j)
                .and_then(|v| v.checked_add(acc))
                .ok_or(Error::Overflow("Σ j_i s_i(a)"))
        })
    }

    /// `Σ_{i>=0} j_i t_i(a,b,c)`, including the `j_0 * c` term.
    pub fn orbit_value(&self, p: &Params) -> Result<u128> {
        weighted_orbit_sum(p, &self.coeffs)
    }
}

/// `Σ j_i t_i(p)` over a raw coefficient slice.
pub fn weighted_orbit_sum(p: &Params, coeffs: &[u128]) -> Result<u128> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &j)| j != 0)
        .try_fold(0u128, |acc, (i, &j)| {
            orbit(p, i)?
                .checked_mul(j)
                .and_then(|v| v.checked_add(acc))
                .ok_or(Error::Overflow("Σ j_i t_i(a,b,c)"))
        })
}

fn trim(coeffs: &mut Vec<u128>) {
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        coeffs.push(0);
    }
}

fn check_reduced(a: u128, coeffs: &[u128]) -> Result<()> {
    let mut seen_nonzero = false;
    for &j in coeffs.iter().skip(1) {
        if j > a {
            return Err(Error::NotReduced {
                a,
                reason: "a coefficient above index 0 exceeds a",
            });
        }
        if j == a && seen_nonzero {
            return Err(Error::NotReduced {
                a,
                reason: "a coefficient equal to a has a nonzero coefficient below it",
            });
        }
        seen_nonzero |= j != 0;
    }
    Ok(())
}

/// Whether `coeffs` (trailing zeros ignored) is `a`-reduced.
pub fn is_a_reduced(a: u128, coeffs: &[u128]) -> bool {
    check_reduced(a, coeffs).is_ok()
}

/// Greedy expansion of `l` in the mixed radix `s_1(a), s_2(a), ...`.
///
/// Yields nonzero `(index, coefficient)` pairs from the highest index down.
/// Each step takes the `k` with `s_k(a) <= rest < s_{k+1}(a)` and the
/// quotient `rest / s_k(a)`, which never exceeds `a`.
pub fn decompose_terms(a: u128, l: u128) -> impl Iterator<Item = (usize, u128)> {
    assert!(a >= 1, "the multiplier must be positive");
    let mut rest = l;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        // rest >= 1 = s_1(a), so k >= 1 and s_k(a) <= rest fits.
        let k = geometric_index(a, rest).expect("index of a u128 value");
        let s = geometric_sum(a, k).expect("s_k(a) <= rest");
        let q = rest / s;
        rest -= q * s;
        Some((k, q))
    })
}

/// The unique `a`-reduced family with `j_0 = 0` and `Σ j_i s_i(a) = l`.
///
/// `l = 0` gives the empty family. The result is dense, so for `a = 1`
/// (where `s_k(1) = k` and the answer is `j_l = 1`) it has length `l + 1`;
/// use [`decompose_terms`] when only the nonzero terms are needed.
pub fn decompose(a: u128, l: u128) -> AReducedRepr {
    let mut terms = decompose_terms(a, l).peekable();
    let len = terms.peek().map_or(1, |&(k, _)| k + 1);
    let mut coeffs = vec![0; len];
    for (k, q) in terms {
        coeffs[k] = q;
    }
    AReducedRepr { ambient: a, coeffs }
}

/// The total order on `a`-reduced families: top index first, then the
/// coefficient at the highest index where the two differ.
///
/// Index 0 never takes part, so families differing only in `j_0` compare equal.
pub fn compare(lhs: &AReducedRepr, rhs: &AReducedRepr) -> Ordering {
    debug_assert_eq!(lhs.ambient, rhs.ambient);
    let top = lhs.top_index();
    top.cmp(&rhs.top_index()).then_with(|| {
        (1..=top)
            .rev()
            .map(|i| lhs.coeff(i).cmp(&rhs.coeff(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// One application of the exchange
/// `a * t_M + t_m = t_{M+1} + a * t_{m-1}` (`1 <= m <= M`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    /// Highest index whose coefficient is at least `a` (`M`).
    pub top: usize,
    /// Lowest index `>= 1` with a nonzero coefficient (`m`).
    pub bottom: usize,
    /// Coefficients after the exchange, trailing zeros stripped.
    pub coeffs: Vec<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: BTreeMap<usize, u128>,
    pub steps: Vec<ReductionStep>,
    pub result: AReducedRepr,
}

impl ReductionTrace {
    /// `Σ j_i t_i(p)` for the initial vector followed by every snapshot.
    pub fn weighted_sums(&self, p: &Params) -> Result<Vec<u128>> {
        let initial = dense(&self.initial);
        std::iter::once(initial.as_slice())
            .chain(self.steps.iter().map(|s| s.coeffs.as_slice()))
            .map(|c| weighted_orbit_sum(p, c))
            .collect()
    }
}

fn dense(raw: &BTreeMap<usize, u128>) -> Vec<u128> {
    let len = raw.keys().next_back().map_or(1, |&k| k + 1);
    let mut coeffs = vec![0; len];
    for (&i, &j) in raw {
        coeffs[i] = j;
    }
    trim(&mut coeffs);
    coeffs
}

fn exchange(a: u128, coeffs: &mut Vec<u128>) -> Result<(usize, usize)> {
    let top = (1..coeffs.len())
        .rev()
        .find(|&i| coeffs[i] >= a)
        .ok_or_else(|| Error::Inconsistent("unreduced family without a coefficient >= a".into()))?;
    let bottom = (1..coeffs.len())
        .find(|&i| coeffs[i] != 0)
        .expect("coefficient at top is nonzero");
    if top + 1 == coeffs.len() {
        coeffs.push(0);
    }
    coeffs[bottom - 1] = coeffs[bottom - 1]
        .checked_add(a)
        .ok_or(Error::Overflow("reduction coefficient"))?;
    coeffs[bottom] -= 1;
    coeffs[top] -= a;
    coeffs[top + 1] += 1;
    trim(coeffs);
    Ok((top, bottom))
}

/// Rewrites `Σ raw_i t_i(p)` into an `a`-reduced family with the same value,
/// recording every exchange.
///
/// Input that is already reduced (including input supported on index 0
/// alone) yields a trace with no steps.
pub fn reduce(p: &Params, raw: &BTreeMap<usize, u128>) -> Result<ReductionTrace> {
    let a = p.a();
    let mut coeffs = dense(raw);
    let mut steps = Vec::new();
    while !is_a_reduced(a, &coeffs) {
        let (top, bottom) = exchange(a, &mut coeffs)?;
        steps.push(ReductionStep {
            top,
            bottom,
            coeffs: coeffs.clone(),
        });
    }
    Ok(ReductionTrace {
        initial: raw.clone(),
        steps,
        result: AReducedRepr { ambient: a, coeffs },
    })
}

/// Same rewrite as [`reduce`] without keeping the intermediate snapshots.
pub fn reduce_to_repr(p: &Params, raw: &BTreeMap<usize, u128>) -> Result<AReducedRepr> {
    let a = p.a();
    let mut coeffs = dense(raw);
    while !is_a_reduced(a, &coeffs) {
        exchange(a, &mut coeffs)?;
    }
    Ok(AReducedRepr { ambient: a, coeffs })
}
