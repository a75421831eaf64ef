//! Brute-force construction of `G_{a,b}(c)` by fixpoint closure.
//!
//! Nothing here uses the closed forms: the member set is built from `{0, c}`
//! by adding pairwise sums and images under `x -> a*x + b` up to a bound,
//! and every invariant is then read off the explicit set. [`cross_check`]
//! compares the two routes.

use std::fmt;

use crate::arith::{orbit, theta};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::semigroup::{self, conductor_index};

/// Default ceiling on the size of the materialised interval `[0, bound)`.
pub const DEFAULT_BOUND_CAP: u128 = 50_000_000;

/// Explicit members of `G_{a,b}(c)` below `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSemigroup {
    params: Params,
    bound: usize,
    is_member: Vec<bool>,
    conductor_found: usize,
}

/// `t_k + 2c` for the least `k` with `s_k(a) >= c - 1`.
///
/// Every integer from `t_k` on is a member, so the top `c` integers below
/// this bound are members with a full `c` to spare.
pub fn default_bound(p: &Params) -> Result<u128> {
    let k = conductor_index(p)?;
    orbit(p, k)?
        .checked_add(p.c())
        .and_then(|v| v.checked_add(p.c()))
        .ok_or(Error::Overflow("oracle bound"))
}

pub fn build_oracle(p: &Params, bound_hint: Option<u128>) -> Result<OracleSemigroup> {
    build_oracle_capped(p, bound_hint, DEFAULT_BOUND_CAP)
}

pub fn build_oracle_capped(
    p: &Params,
    bound_hint: Option<u128>,
    cap: u128,
) -> Result<OracleSemigroup> {
    let bound = match bound_hint {
        Some(b) => b,
        None => default_bound(p)?,
    };
    if bound > cap {
        return Err(Error::OracleBoundTooLarge { bound, cap });
    }
    let size = usize::try_from(bound).map_err(|_| Error::TooLarge("oracle bound"))?;
    let c = usize::try_from(p.c()).map_err(|_| Error::TooLarge("oracle seed"))?;
    if size <= c {
        return Err(Error::OracleBoundTooSmall { bound, c: p.c() });
    }

    let mut is_member = vec![false; size];
    is_member[0] = true;
    is_member[c] = true;
    // Every way to produce n combines strictly smaller members (or is the
    // image of one), so one ascending pass reaches the fixpoint.
    let mut confirmed: Vec<usize> = Vec::new();
    for n in 0..size {
        if !is_member[n] {
            continue;
        }
        if n > 0 {
            if let Ok(image) = theta(p, n as u128) {
                if image < bound {
                    is_member[image as usize] = true;
                }
            }
            confirmed.push(n);
            for &m in &confirmed {
                match n.checked_add(m) {
                    Some(sum) if sum < size => is_member[sum] = true,
                    _ => break,
                }
            }
        }
    }

    let conductor_found = (0..size)
        .rev()
        .find(|&i| !is_member[i])
        .map_or(0, |gap| gap + 1);
    if size - conductor_found < c {
        return Err(Error::OracleBoundTooSmall { bound, c: p.c() });
    }
    Ok(OracleSemigroup {
        params: *p,
        bound: size,
        is_member,
        conductor_found,
    })
}

impl OracleSemigroup {
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Exclusive upper limit of the materialised interval.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Least `m` with `[m, bound)` inside the member set.
    pub fn conductor_found(&self) -> usize {
        self.conductor_found
    }

    /// Membership for `n < bound`; above the bound every integer is a member.
    pub fn is_member(&self, n: u128) -> bool {
        usize::try_from(n)
            .ok()
            .and_then(|i| self.is_member.get(i).copied())
            .unwrap_or(true)
    }

    pub fn members(&self) -> impl Iterator<Item = u128> + '_ {
        self.is_member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u128)
    }

    pub fn gaps(&self) -> Vec<u128> {
        self.is_member
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(i, _)| i as u128)
            .collect()
    }

    /// Checks closure under sums and under the affine map inside `[0, bound)`.
    pub fn is_closed(&self) -> bool {
        let members: Vec<usize> = self.members().map(|m| m as usize).collect();
        for &x in &members {
            if x > 0 {
                if let Ok(y) = theta(&self.params, x as u128) {
                    if y < self.bound as u128 && !self.is_member[y as usize] {
                        return false;
                    }
                }
            }
            for &y in &members {
                if x + y >= self.bound {
                    break;
                }
                if !self.is_member[x + y] {
                    return false;
                }
            }
        }
        true
    }
}

/// Largest non-member below the bound, or -1 when there is none.
pub fn oracle_frobenius(o: &OracleSemigroup) -> i128 {
    o.conductor_found as i128 - 1
}

/// Least member in each residue class, listed by `l` where the class is `b*l mod c`.
pub fn oracle_apery(o: &OracleSemigroup) -> Vec<u128> {
    let c = o.params.c() as usize;
    let mut least = vec![None; c];
    for m in o.members() {
        let slot = &mut least[m as usize % c];
        if slot.is_none() {
            *slot = Some(m);
        }
    }
    let b = (o.params.b() % o.params.c()) as usize;
    (0..c)
        .map(|l| least[b * l % c].expect("the top c integers below the bound are members"))
        .collect()
}

/// Nonzero members below `conductor_found + c` that are not the sum of two
/// smaller nonzero members.
pub fn oracle_minimal_generators(o: &OracleSemigroup) -> Vec<u128> {
    let limit = (o.conductor_found + o.params.c() as usize).min(o.bound);
    (1..limit)
        .filter(|&m| o.is_member[m])
        .filter(|&m| !(1..m).any(|x| o.is_member[x] && o.is_member[m - x]))
        .map(|m| m as u128)
        .collect()
}

/// Whether `target` is a non-negative integer combination of `gens`.
pub fn representable(target: u128, gens: &[u128]) -> bool {
    let target = usize::try_from(target).expect("target fits in memory");
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for n in 1..=target {
        reach[n] = gens
            .iter()
            .any(|&g| g as usize <= n && g > 0 && reach[n - g as usize]);
    }
    reach[target]
}

/// Membership table of the semigroup generated by `gens` on `[0, bound)`.
pub fn sieve_generated(gens: &[u128], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound];
    if bound > 0 {
        reach[0] = true;
    }
    for &g in gens {
        let Ok(g) = usize::try_from(g) else { continue };
        if g == 0 {
            continue;
        }
        for n in g..bound {
            if reach[n - g] {
                reach[n] = true;
            }
        }
    }
    reach
}

/// A disagreement between the closed forms and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub quantity: &'static str,
    pub closed_form: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: closed form {} vs oracle {}",
            self.quantity, self.closed_form, self.oracle
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub params: Params,
    pub bound: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares Frobenius number, genus, Apéry set, minimal generators and
/// membership on `[0, bound)` between the two routes.
pub fn cross_check(p: &Params, bound_cap: u128) -> Result<CrossCheck> {
    let profile = semigroup::profile(p)?;
    let oracle = build_oracle_capped(p, None, bound_cap)?;
    let mut mismatches = Vec::new();
    let mut check = |quantity, closed: String, brute: String| {
        if closed != brute {
            mismatches.push(Mismatch {
                quantity,
                closed_form: closed,
                oracle: brute,
            });
        }
    };

    check(
        "frobenius",
        profile.frobenius.to_string(),
        oracle_frobenius(&oracle).to_string(),
    );
    check(
        "genus",
        profile.genus.to_string(),
        oracle.gaps().len().to_string(),
    );
    check(
        "apery_set",
        format!("{:?}", profile.apery),
        format!("{:?}", oracle_apery(&oracle)),
    );
    check(
        "minimal_generators",
        format!("{:?}", profile.min_generators),
        format!("{:?}", oracle_minimal_generators(&oracle)),
    );
    if let Some(n) =
        (0..oracle.bound() as u128).find(|&n| semigroup::contains(p, n) != oracle.is_member(n))
    {
        check(
            "membership",
            format!("contains({n}) = {}", semigroup::contains(p, n)),
            format!("contains({n}) = {}", oracle.is_member(n)),
        );
    }
    Ok(CrossCheck {
        params: *p,
        bound: oracle.bound(),
        mismatches,
    })
}
