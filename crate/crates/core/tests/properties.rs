mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use symx::extendability::{candidate_types, verify_witness};
use symx::lens::lens_homeomorphic;
use symx::numtheory::{inverse_mod, units_of};
use symx::{
    are_conjugate, check, classify_all, conjugacy_invariant, normalize, same_cyclic_group, ExtType,
    LensSpace, SymmetryDatum,
};

fn pool() -> &'static [SymmetryDatum] {
    static POOL: OnceLock<Vec<SymmetryDatum>> = OnceLock::new();
    POOL.get_or_init(|| (1..=12).flat_map(|n| common::reduced_data(n, 2, 1, 3)).collect())
}

fn any_datum() -> impl Strategy<Value = SymmetryDatum> {
    (0..pool().len()).prop_map(|i| pool()[i].clone())
}

fn datum_and_unit() -> impl Strategy<Value = (SymmetryDatum, u64)> {
    any_datum().prop_flat_map(|d| {
        let us = units_of(d.n());
        (Just(d), prop::sample::select(us))
    })
}

fn shuffled(d: &SymmetryDatum, rot: usize) -> SymmetryDatum {
    let rotate = |v: &[u64]| {
        let mut v = v.to_vec();
        if !v.is_empty() {
            let k = rot % v.len();
            v.rotate_left(k);
        }
        v
    };
    SymmetryDatum::new(
        d.n(),
        d.orientable(),
        d.h(),
        d.handles().to_vec(),
        rotate(d.boundary()),
        rotate(d.cones()),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn twists_compose((d, a) in datum_and_unit(), b in 1u64..64) {
        let n = d.n();
        prop_assume!(common::gcd(b, n) == 1);
        let twice = d.power_twist(a as i64).unwrap().power_twist(b as i64).unwrap();
        let once = d.power_twist((a * b % n) as i64).unwrap();
        prop_assert_eq!(conjugacy_invariant(&twice), conjugacy_invariant(&once));
    }

    #[test]
    fn twist_by_inverse_returns((d, a) in datum_and_unit()) {
        let inv = inverse_mod(a as i64, d.n()).unwrap();
        let back = d.power_twist(a as i64).unwrap().power_twist(inv as i64).unwrap();
        prop_assert!(are_conjugate(&back, &d));
    }

    #[test]
    fn twists_generate_the_same_group((d, a) in datum_and_unit()) {
        let t = d.power_twist(a as i64).unwrap();
        prop_assert!(same_cyclic_group(&d, &t));
        prop_assert_eq!(t.euler_genus(), d.euler_genus());
        prop_assert!(t.is_valid());
    }

    #[test]
    fn invariant_ignores_order(d in any_datum(), rot in 0usize..5) {
        let e = shuffled(&d, rot);
        prop_assert_eq!(conjugacy_invariant(&e), conjugacy_invariant(&d));
        prop_assert_eq!(classify_all(&e).unwrap(), classify_all(&d).unwrap());
    }

    #[test]
    fn inverse_map_is_conjugate_to_itself_in_reversing_cases(d in any_datum()) {
        // Reversing maps are conjugate to their inverses by the reflection.
        prop_assume!(d.is_orientation_reversing());
        let inv = d.power_twist(-1).unwrap();
        prop_assert!(are_conjugate(&inv, &d));
    }

    #[test]
    fn verdicts_carry_valid_witnesses(d in any_datum()) {
        let types = classify_all(&d).unwrap();
        let candidates = candidate_types(&d);
        prop_assert!(types.iter().all(|k| candidates.contains(k)));
        for kind in ExtType::ALL {
            let v = check(&d, kind);
            if !candidates.contains(&kind) {
                prop_assert!(v.is_err());
                continue;
            }
            let v = v.unwrap();
            match &v.witness {
                Some(w) => {
                    prop_assert!(types.contains(&kind));
                    prop_assert!(verify_witness(&d, w), "witness {:?} rejected", w);
                }
                None => prop_assert!(!v.extendable && (!types.contains(&kind) || d.euler_genus() == Ok(0))),
            }
        }
    }

    #[test]
    fn normal_form_is_a_twist(d in any_datum()) {
        for kind in classify_all(&d).unwrap() {
            let (m, normal) = normalize(&d, kind).unwrap();
            prop_assert_eq!(common::gcd(m, d.n()), 1);
            prop_assert!(are_conjugate(&normal, &d.power_twist(m as i64).unwrap()));
            prop_assert!(classify_all(&normal).unwrap().contains(&kind));
        }
    }

    #[test]
    fn lens_equivalents(l in 1u64..200, m in -400i64..400) {
        prop_assume!(common::gcd(m.unsigned_abs(), l) == 1);
        let a = LensSpace::new(l, m).unwrap();
        let inv = inverse_mod(m, l).unwrap() as i64;
        for other in [m, -m, inv, -inv, m + l as i64] {
            prop_assert!(lens_homeomorphic(a, LensSpace::new(l, other).unwrap()));
        }
    }
}
