//! Closed forms for the invariants of `G_{a,b}(c)`.
//!
//! With `k̃ = min { k : s_k(a) > c - 1 }`, the semigroup is minimally generated
//! by `t_0, ..., t_{k̃-1}`. For each `l` in `[1, c)` the least element
//! congruent to `b*l` modulo `c` is `x_l = Σ j_i t_i`, where `(j_i)` is the
//! reduced expansion of `l` in the radix `s_i(a)`. The Apéry set, Frobenius
//! number, genus and a membership test all follow from the `x_l`.

use crate::arith::{geometric_index, geometric_sum, inverse_mod, mul_mod, orbit};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::repr::decompose_terms;

/// Default ceiling on the Frobenius number when listing gaps.
pub const DEFAULT_GAPS_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupProfile {
    pub params: Params,
    pub k_tilde: usize,
    pub min_generators: Vec<u128>,
    /// `x_0, ..., x_{c-1}`, indexed by `l` with `x_l ≡ b*l (mod c)`.
    pub apery: Vec<u128>,
    pub frobenius: u128,
    pub genus: u128,
    pub conductor: u128,
}

impl SemigroupProfile {
    pub fn embedding_dimension(&self) -> usize {
        self.min_generators.len()
    }
}

/// `min { k : s_k(a) > c - 1 }`; at least 2 since `s_1(a) = 1 <= c - 1`.
pub fn k_tilde(p: &Params) -> Result<usize> {
    Ok(geometric_index(p.a(), p.c() - 1)? + 1)
}

/// `min { k : s_k(a) >= c - 1 }`, the index from which `[t_k, ∞)` lies in
/// the semigroup. Equal to `k_tilde` or one less.
pub fn conductor_index(p: &Params) -> Result<usize> {
    let k = geometric_index(p.a(), p.c() - 1)?;
    if geometric_sum(p.a(), k)? == p.c() - 1 {
        Ok(k)
    } else {
        Ok(k + 1)
    }
}

/// `t_0 < t_1 < ... < t_{k̃-1}`.
pub fn minimal_generators(p: &Params) -> Result<Vec<u128>> {
    (0..k_tilde(p)?).map(|k| orbit(p, k)).collect()
}

pub fn embedding_dimension(p: &Params) -> Result<usize> {
    k_tilde(p)
}

/// `x_l`, the least element of the semigroup congruent to `b*l` mod `c`.
pub fn apery_element(p: &Params, l: u128) -> Result<u128> {
    if l >= p.c() {
        return Err(Error::ResidueOutOfRange { l, c: p.c() });
    }
    decompose_terms(p.a(), l).try_fold(0u128, |acc, (i, j)| {
        orbit(p, i)?
            .checked_mul(j)
            .and_then(|v| v.checked_add(acc))
            .ok_or(Error::Overflow("Apéry element"))
    })
}

/// `[x_0, ..., x_{c-1}]`.
pub fn apery_set(p: &Params) -> Result<Vec<u128>> {
    let len = usize::try_from(p.c()).map_err(|_| Error::TooLarge("Apéry set"))?;
    let mut out = Vec::new();
    out.try_reserve_exact(len)
        .map_err(|_| Error::TooLarge("Apéry set"))?;
    for l in 0..p.c() {
        out.push(apery_element(p, l)?);
    }
    Ok(out)
}

/// `x_{c-1} - c`.
pub fn frobenius(p: &Params) -> Result<u128> {
    let top = apery_element(p, p.c() - 1)?;
    top.checked_sub(p.c())
        .ok_or_else(|| Error::Inconsistent(format!("x_(c-1) = {top} is below c")))
}

/// Genus from an Apéry set with respect to `c`: `(Σ x_l)/c - (c-1)/2`,
/// evaluated as `(2 Σ x_l - c(c-1)) / 2c`, which must be exact.
pub fn genus_from_apery(c: u128, apery: &[u128]) -> Result<u128> {
    let overflow = || Error::Overflow("genus");
    let total = apery
        .iter()
        .try_fold(0u128, |acc, &x| acc.checked_add(x))
        .ok_or_else(overflow)?;
    let twice = total.checked_mul(2).ok_or_else(overflow)?;
    let shift = c.checked_mul(c - 1).ok_or_else(overflow)?;
    let denom = c.checked_mul(2).ok_or_else(overflow)?;
    let num = twice
        .checked_sub(shift)
        .ok_or_else(|| Error::Inconsistent("Apéry sum below c(c-1)/2".into()))?;
    if num % denom != 0 {
        return Err(Error::Inconsistent(format!(
            "genus formula is not an integer: ({num}) / ({denom})"
        )));
    }
    Ok(num / denom)
}

pub fn genus(p: &Params) -> Result<u128> {
    genus_from_apery(p.c(), &apery_set(p)?)
}

/// The class `l` in `[0, c)` with `b*l ≡ n (mod c)`.
pub fn residue_class(p: &Params, n: u128) -> u128 {
    let inv = inverse_mod(p.b(), p.c()).expect("gcd(b, c) = 1");
    mul_mod(n % p.c(), inv, p.c())
}

/// A membership verdict together with the data that decided it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    pub n: u128,
    pub class: u128,
    /// `x_class`, or `None` when it exceeds `u128` (then `n` is certainly below it).
    pub apery: Option<u128>,
    pub member: bool,
}

pub fn membership(p: &Params, n: u128) -> Membership {
    let class = residue_class(p, n);
    let apery = match apery_element(p, class) {
        Ok(x) => Some(x),
        Err(Error::Overflow(_)) => None,
        Err(e) => unreachable!("class is in range: {e}"),
    };
    Membership {
        n,
        class,
        apery,
        member: apery.is_some_and(|x| n >= x),
    }
}

/// `n` lies in the semigroup iff `n >= x_l` for its class `l`.
pub fn contains(p: &Params, n: u128) -> bool {
    membership(p, n).member
}

/// Every gap, ascending. Refuses when the Frobenius number exceeds `cap`.
pub fn gaps(p: &Params, cap: u128) -> Result<Vec<u128>> {
    let f = frobenius(p)?;
    if f > cap {
        return Err(Error::GapsCapExceeded { frobenius: f, cap });
    }
    // Gaps in the class of x are x - c, x - 2c, ... down to 1.
    let mut out: Vec<u128> = apery_set(p)?
        .into_iter()
        .flat_map(|x| {
            (1..=x / p.c())
                .map(move |q| x - q * p.c())
                .filter(|&g| g > 0)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

pub fn profile(p: &Params) -> Result<SemigroupProfile> {
    let k_tilde = k_tilde(p)?;
    let min_generators = minimal_generators(p)?;
    let apery = apery_set(p)?;
    let top = *apery.last().expect("c >= 2");
    let max = *apery.iter().max().expect("c >= 2");
    if top != max || max == 0 {
        return Err(Error::Inconsistent(format!(
            "x_(c-1) = {top} is not the positive maximum {max} of the Apéry set"
        )));
    }
    let frobenius = top - p.c();
    let genus = genus_from_apery(p.c(), &apery)?;
    Ok(SemigroupProfile {
        params: *p,
        k_tilde,
        min_generators,
        apery,
        frobenius,
        genus,
        conductor: frobenius + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u128, b: u128, c: u128) -> Params {
        Params::new(a, b, c).unwrap()
    }

    #[test]
    fn k_tilde_examples() {
        assert_eq!(k_tilde(&p(3, 1, 3)).unwrap(), 2);
        assert_eq!(k_tilde(&p(3, 1, 5)).unwrap(), 3);
        assert_eq!(k_tilde(&p(2, 3, 4)).unwrap(), 3);
        for c in 2..20 {
            assert_eq!(k_tilde(&p(1, 1, c)).unwrap(), c as usize);
        }
    }

    #[test]
    fn thresholds_differ_exactly_when_c_minus_1_is_a_geometric_sum() {
        // s_2(3) = 4 = c - 1 for c = 5
        assert_eq!(conductor_index(&p(3, 1, 5)).unwrap(), 2);
        assert_eq!(k_tilde(&p(3, 1, 5)).unwrap(), 3);
        assert_eq!(conductor_index(&p(3, 1, 3)).unwrap(), 2);
        assert_eq!(k_tilde(&p(3, 1, 3)).unwrap(), 2);
    }

    #[test]
    fn generators_examples() {
        assert_eq!(minimal_generators(&p(3, 1, 3)).unwrap(), vec![3, 10]);
        assert_eq!(minimal_generators(&p(3, 1, 5)).unwrap(), vec![5, 16, 49]);
        assert_eq!(minimal_generators(&p(2, 3, 4)).unwrap(), vec![4, 11, 25]);
        assert_eq!(embedding_dimension(&p(3, 1, 3)).unwrap(), 2);
        assert_eq!(embedding_dimension(&p(2, 3, 4)).unwrap(), 3);
    }

    #[test]
    fn apery_examples() {
        assert_eq!(apery_element(&p(3, 1, 5), 4).unwrap(), 49);
        assert_eq!(apery_element(&p(2, 3, 4), 3).unwrap(), 25);
        assert_eq!(apery_element(&p(2, 3, 4), 0).unwrap(), 0);
        assert!(matches!(
            apery_element(&p(2, 3, 4), 4),
            Err(Error::ResidueOutOfRange { l: 4, c: 4 })
        ));
        assert_eq!(apery_set(&p(3, 1, 3)).unwrap(), vec![0, 10, 20]);
        assert_eq!(apery_set(&p(3, 1, 5)).unwrap(), vec![0, 16, 32, 48, 49]);
        assert_eq!(apery_set(&p(2, 3, 4)).unwrap(), vec![0, 11, 22, 25]);
    }

    #[test]
    fn frobenius_and_genus_examples() {
        for (q, f, g) in [
            (p(3, 1, 3), 17, 9),
            (p(3, 1, 5), 44, 27),
            (p(2, 3, 4), 21, 13),
        ] {
            assert_eq!(frobenius(&q).unwrap(), f);
            assert_eq!(genus(&q).unwrap(), g);
        }
    }

    #[test]
    fn genus_formula_rejects_non_integers() {
        assert!(matches!(
            genus_from_apery(3, &[0, 10, 21]),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let q = p(3, 1, 3);
        assert!(contains(&q, 13));
        assert!(!contains(&q, 7));
        assert!(contains(&q, 0));
        let m = membership(&q, 16);
        assert_eq!((m.class, m.apery, m.member), (1, Some(10), true));
        assert!(!contains(&q, 17));
        // classes use the inverse of b: for (2,3,4), 25 ≡ 1 ≡ 3*3
        assert_eq!(residue_class(&p(2, 3, 4), 25), 3);
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(
            gaps(&p(3, 1, 3), DEFAULT_GAPS_CAP).unwrap(),
            vec![1, 2, 4, 5, 7, 8, 11, 14, 17]
        );
        assert_eq!(gaps(&p(2, 3, 4), DEFAULT_GAPS_CAP).unwrap().len(), 13);
        assert!(matches!(
            gaps(&p(3, 1, 3), 16),
            Err(Error::GapsCapExceeded {
                frobenius: 17,
                cap: 16
            })
        ));
    }

    #[test]
    fn profile_examples() {
        let pr = profile(&p(3, 1, 3)).unwrap();
        assert_eq!(pr.k_tilde, 2);
        assert_eq!(pr.min_generators, vec![3, 10]);
        assert_eq!(pr.apery, vec![0, 10, 20]);
        assert_eq!((pr.frobenius, pr.genus, pr.conductor), (17, 9, 18));

        let pr = profile(&p(2, 3, 4)).unwrap();
        assert_eq!(pr.k_tilde, 3);
        assert_eq!(pr.min_generators, vec![4, 11, 25]);
        assert_eq!(pr.apery, vec![0, 11, 22, 25]);
        assert_eq!((pr.frobenius, pr.genus, pr.conductor), (21, 13, 22));

        let pr = profile(&p(2, 1, 2)).unwrap();
        assert_eq!(pr.k_tilde, 2);
        assert_eq!(pr.min_generators, vec![2, 5]);
        assert_eq!(pr.apery, vec![0, 5]);
        assert_eq!((pr.frobenius, pr.genus), (3, 2));
    }

    #[test]
    fn wide_values_do_not_wrap() {
        let q = p(10, 1, 1_000_000);
        assert_eq!(k_tilde(&q).unwrap(), 7);
        // c - 1 = 999999 = 9 * s_6(10)
        assert_eq!(geometric_sum(10, 6).unwrap() * 9, 999_999);
        let expected = 9 * (10u128.pow(12) + 111_111);
        assert_eq!(apery_element(&q, 999_999).unwrap(), expected);
        assert_eq!(frobenius(&q).unwrap(), expected - 1_000_000);

        let huge = p(1 << 127, 1, 2);
        assert_eq!(
            minimal_generators(&huge),
            Err(Error::Overflow("t_k(a,b,c)"))
        );
        assert!(profile(&huge).is_err());
        // membership stays total: x_1 does not fit, so nothing odd is a member
        assert!(!contains(&huge, u128::MAX));
        assert!(contains(&huge, u128::MAX - 1));
    }
}
