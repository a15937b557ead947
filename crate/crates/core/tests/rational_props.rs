use std::collections::HashMap;

use farey_core::{
    cf_eval, cf_expand, convergents, det, ContinuedFraction, ExtendedRational, MobiusMap,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn unit_interval(max_q: i64) -> impl Iterator<Item = ExtendedRational> {
    (1..=max_q).flat_map(|q| {
        (0..q)
            .filter(move |p| p.gcd(&q) == 1)
            .map(move |p| ExtendedRational::new(p, q).unwrap())
    })
}

#[test]
fn expand_then_eval_roundtrips_up_to_500() {
    for x in unit_interval(500) {
        let cf = cf_expand(&x).unwrap();
        assert_eq!(cf_eval(&cf), x, "{x} -> {cf}");
    }
}

#[test]
fn canonical_forms_are_injective_up_to_200() {
    let mut seen: HashMap<ExtendedRational, ContinuedFraction> = HashMap::new();
    for x in unit_interval(200) {
        let cf = cf_expand(&x).unwrap();
        if cf.len() >= 2 {
            assert!(!cf.entries().last().unwrap().is_one(), "{x} -> {cf} ends in 1");
        }
        let value = cf_eval(&cf);
        if let Some(prev) = seen.insert(value.clone(), cf.clone()) {
            panic!("{prev} and {cf} both evaluate to {value}");
        }
    }
}

#[test]
fn consecutive_convergents_are_adjacent() {
    for x in unit_interval(150) {
        let conv = convergents(&cf_expand(&x).unwrap());
        let mut chain = vec![ExtendedRational::infinity(), ExtendedRational::zero()];
        chain.extend(conv);
        for w in chain.windows(2) {
            assert!(det(&w[0], &w[1]).abs().is_one(), "{} {}", w[0], w[1]);
        }
    }
}

fn generator() -> impl Strategy<Value = MobiusMap> {
    prop_oneof![
        Just(MobiusMap::new(0, -1, 1, 0).unwrap()),
        Just(MobiusMap::new(1, 1, 0, 1).unwrap()),
        Just(MobiusMap::new(1, -1, 0, 1).unwrap()),
        Just(MobiusMap::new(-1, 0, 0, 1).unwrap()),
    ]
}

fn unimodular() -> impl Strategy<Value = MobiusMap> {
    prop::collection::vec(generator(), 0..24)
        .prop_map(|gens| gens.iter().fold(MobiusMap::identity(), |acc, g| acc.compose(g)))
}

fn slope() -> impl Strategy<Value = ExtendedRational> {
    (-300i64..300, 0i64..300)
        .prop_filter("not 0/0", |&(p, q)| p != 0 || q != 0)
        .prop_map(|(p, q)| ExtendedRational::new(p, q).unwrap())
}

proptest! {
    #[test]
    fn unimodular_maps_preserve_adjacency(m in unimodular(), x in slope(), k in -20i64..20) {
        // x and (r0 + k p)/(s0 + k q) are adjacent for every k.
        let (p, q) = (x.numer().clone(), x.denom().clone());
        let e = p.extended_gcd(&q);
        let (s0, r0) = (e.x * &e.gcd, -e.y * &e.gcd);
        let y = ExtendedRational::new(&r0 + &p * k, &s0 + &q * k).unwrap();
        prop_assert!(x.is_adjacent(&y));
        prop_assert!(m.apply(&x).is_adjacent(&m.apply(&y)));
        prop_assert!(m.det().abs().is_one());
    }

    #[test]
    fn unimodular_maps_preserve_det_magnitude(m in unimodular(), x in slope(), y in slope()) {
        prop_assert_eq!(det(&x, &y).abs(), det(&m.apply(&x), &m.apply(&y)).abs());
    }

    #[test]
    fn inverse_undoes_apply(m in unimodular(), x in slope()) {
        prop_assert_eq!(m.inverse().apply(&m.apply(&x)), x);
    }

    #[test]
    fn normalizer_lands_in_frame(x in slope(), y in slope()) {
        prop_assume!(x != y);
        let (m, r) = farey_core::normalize_pair(&x, &y).unwrap();
        prop_assert!(m.apply(&x).is_infinite());
        prop_assert_eq!(m.apply(&y), r.clone());
        prop_assert!(!r.numer().is_negative() && r.numer() < r.denom());
        if !x.is_infinite() {
            prop_assert!(BigInt::from(2) * r.numer() <= *r.denom());
        }
    }

    #[test]
    fn eval_accepts_any_positive_entries(entries in prop::collection::vec(1u64..50, 0..12)) {
        let cf = ContinuedFraction::from_u64s(&entries).unwrap();
        let x = cf_eval(&cf);
        if x.numer() < x.denom() {
            prop_assert_eq!(cf_expand(&x).unwrap(), cf);
        }
    }
}
