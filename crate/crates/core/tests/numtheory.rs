use proptest::prelude::*;
use symx::numtheory::{crt_solve, divisors, gcd, inverse_mod, lcm, order_of, unit_lift, units_of, Residue};

fn naive_gcd(a: u64, b: u64) -> u64 {
    (1..=a.max(b))
        .rev()
        .find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d))
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn gcd_and_lcm(a in 0u64..500, b in 0u64..500) {
        prop_assert_eq!(gcd(a, b), naive_gcd(a, b));
        if a > 0 && b > 0 {
            prop_assert_eq!(lcm(a, b) * gcd(a, b), a * b);
        }
    }

    #[test]
    fn inverses(a in -300i64..300, n in 1u64..300) {
        let brute = (0..n).find(|&x| (a.rem_euclid(n as i64) as u64 * x) % n == 1 % n);
        prop_assert_eq!(inverse_mod(a, n), brute);
    }

    #[test]
    fn orders(v in 0u64..400, n in 1u64..200) {
        let brute = (1..=n).find(|&k| (v * k) % n == 0).unwrap();
        prop_assert_eq!(order_of(v % n, n), brute);
    }

    #[test]
    fn crt_agrees_with_search(p0 in -50i64..50, p in 1u64..40, q0 in -50i64..50, q in 1u64..40) {
        let l = lcm(p, q);
        let brute = (0..l).find(|&x| {
            (x as i64 - p0).rem_euclid(p as i64) == 0 && (x as i64 - q0).rem_euclid(q as i64) == 0
        });
        prop_assert_eq!(crt_solve(p0, p, q0, q).map(|r| r.value()), brute);
        if let Some(r) = crt_solve(p0, p, q0, q) {
            prop_assert_eq!(r.modulus(), l);
        }
    }

    #[test]
    fn unit_lift_is_a_unit(m in -200i64..200, n in 1u64..120) {
        let r = unit_lift(m, n).unwrap();
        prop_assert!(r.is_unit());
        let target = Residue::new(gcd(m.unsigned_abs(), n) as i64, n).unwrap();
        prop_assert_eq!(r * m, target);
    }
}

#[test]
fn divisor_and_unit_lists() {
    for n in 1..=200u64 {
        assert_eq!(divisors(n), (1..=n).filter(|d| n % d == 0).collect::<Vec<_>>());
        assert_eq!(
            units_of(n).len() as u64,
            (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
        );
    }
}
