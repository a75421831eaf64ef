//! Exhaustive and randomised checks of the `a`-reduced machinery.

mod common;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use proptest::prelude::*;
use thetasg::repr::{compare, decompose, is_a_reduced, reduce, AReducedRepr};
use thetasg::{arith, Params};

#[test]
fn decompose_round_trip_and_uniqueness() {
    for a in 1..=6u128 {
        // largest top index any l <= 200 can need
        let max_top = (1..)
            .take_while(|&k| common::s(a, k) <= 200)
            .last()
            .unwrap();
        let mut by_value: HashMap<u128, Vec<Vec<u128>>> = HashMap::new();
        for f in common::reduced_families(a, max_top) {
            let v = common::geometric_value(a, &f);
            if v <= 200 {
                by_value.entry(v).or_default().push(f);
            }
        }
        for l in 1..=200u128 {
            let r = decompose(a, l);
            assert!(is_a_reduced(a, r.coeffs()), "a={a} l={l}");
            assert_eq!(r.coeff(0), 0);
            assert_eq!(r.geometric_value().unwrap(), l);
            let candidates: Vec<_> = by_value[&l]
                .iter()
                .filter(|f| f.len() - 1 <= r.top_index())
                .collect();
            assert_eq!(candidates, vec![&r.coeffs().to_vec()], "a={a} l={l}");
        }
    }
}

#[test]
fn decompose_unit_multiplier_is_single_coefficient() {
    for l in 1..=200u128 {
        let r = decompose(1, l);
        assert_eq!(r.top_index(), l as usize);
        assert_eq!(r.terms().collect::<Vec<_>>(), vec![(l as usize, 1)]);
    }
}

#[test]
fn order_is_monotone_in_both_sums() {
    for a in 1..=4u128 {
        let families: Vec<AReducedRepr> = common::reduced_families(a, 4)
            .into_iter()
            .map(|f| AReducedRepr::new(a, f).unwrap())
            .collect();
        let params: Vec<Params> = [(1, 2), (3, 7), (5, 9)]
            .into_iter()
            .filter_map(|(b, c)| Params::new(a, b, c).ok())
            .collect();
        let s_vals: Vec<u128> = families
            .iter()
            .map(|f| common::geometric_value(a, f.coeffs()))
            .collect();
        let t_vals: Vec<Vec<u128>> = params
            .iter()
            .map(|p| {
                families
                    .iter()
                    .map(|f| common::orbit_value(p, f.coeffs()))
                    .collect()
            })
            .collect();
        for i in 0..families.len() {
            for j in 0..families.len() {
                if i == j {
                    continue;
                }
                let ord = compare(&families[i], &families[j]);
                assert_ne!(ord, Ordering::Equal);
                assert_eq!(
                    ord,
                    s_vals[i].cmp(&s_vals[j]),
                    "{:?} {:?}",
                    families[i],
                    families[j]
                );
                for t in &t_vals {
                    assert_eq!(ord, t[i].cmp(&t[j]));
                }
            }
        }
    }
}

#[test]
fn reduced_sums_stay_below_next_term() {
    for a in 1..=4u128 {
        for f in common::reduced_families(a, 5) {
            let k = f.len() - 1;
            assert!(common::geometric_value(a, &f) < common::s(a, k + 1));
            for (b, c) in [(1, 2), (1, 3), (2, 5), (7, 4)] {
                if let Ok(p) = Params::new(a, b, c) {
                    assert!(
                        common::orbit_value(&p, &f) < common::t(&p, k + 1),
                        "{p} {f:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn library_sequences_match_plain_loops() {
    for p in common::sweep() {
        for k in 0..12 {
            assert_eq!(arith::geometric_sum(p.a(), k).unwrap(), common::s(p.a(), k));
            assert_eq!(arith::orbit(&p, k).unwrap(), common::t(&p, k));
        }
    }
}

fn valid_params() -> impl Strategy<Value = Params> {
    (1u128..6, 1u128..12, 2u128..30)
        .prop_filter_map("gcd(b, c) = 1", |(a, b, c)| Params::new(a, b, c).ok())
}

proptest! {
    #[test]
    fn reduce_preserves_value(p in valid_params(), raw in prop::collection::btree_map(0usize..7, 0u128..25, 1..6)) {
        let raw: BTreeMap<usize, u128> = raw;
        let trace = reduce(&p, &raw).unwrap();
        let sums = trace.weighted_sums(&p).unwrap();
        let initial = common::orbit_value(&p, &{
            let mut v = vec![0; 8];
            for (&i, &j) in &raw { v[i] = j; }
            v
        });
        prop_assert!(sums.iter().all(|&s| s == initial));
        prop_assert!(is_a_reduced(p.a(), trace.result.coeffs()));
        prop_assert_eq!(trace.result.orbit_value(&p).unwrap(), initial);
        for step in &trace.steps {
            prop_assert!(step.bottom >= 1 && step.bottom <= step.top);
        }
    }

    #[test]
    fn decompose_large_values(a in 2u128..1000, l in 1u128..u64::MAX as u128) {
        let r = decompose(a, l);
        prop_assert!(is_a_reduced(a, r.coeffs()));
        prop_assert_eq!(r.geometric_value().unwrap(), l);
    }
}
