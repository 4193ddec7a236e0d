use lrs_core::numtheory::{
    divisors, euler_phi, factorize, gcd, is_prime, lcm, multiplicative_order, pow_mod,
};
use lrs_testkit as oracle;
use proptest::prelude::*;

#[test]
fn totient_matches_counting() {
    for n in 1..=10_000u64 {
        assert_eq!(euler_phi(n).unwrap(), oracle::totient(n), "n = {n}");
    }
}

#[test]
fn totient_sums_over_divisors() {
    for n in 1..=2_000u64 {
        let sum: u64 = divisors(n)
            .unwrap()
            .iter()
            .map(|&d| euler_phi(d).unwrap())
            .sum();
        assert_eq!(sum, n);
    }
}

#[test]
fn order_matches_stepping() {
    for q in 2..=200u64 {
        for e in 1..=200u64 {
            if gcd(q, e) != 1 {
                assert!(multiplicative_order(q, e).is_err());
                continue;
            }
            let k = multiplicative_order(q, e).unwrap();
            assert_eq!(k, oracle::multiplicative_order(q, e), "ord_{e}({q})");
            assert_eq!(euler_phi(e).unwrap() % k, 0);
        }
    }
}

#[test]
fn factorization_reconstructs_small() {
    for n in 1..=100_000u64 {
        let fac = factorize(n).unwrap();
        assert_eq!(fac.value(), n as u128);
        assert!(fac.primes().all(oracle::is_prime));
        assert!(fac.pairs().windows(2).all(|w| w[0].0 < w[1].0));
    }
}

proptest! {
    #[test]
    fn factorization_reconstructs_large(n in 1u64..) {
        let fac = factorize(n).unwrap();
        prop_assert_eq!(fac.value(), n as u128);
        for p in fac.primes() {
            prop_assert!(is_prime(p));
        }
    }

    #[test]
    fn divisors_are_exactly_the_divisors(n in 1u64..5_000) {
        let ds = divisors(n).unwrap();
        let expect: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        prop_assert_eq!(ds, expect);
    }

    #[test]
    fn lcm_gcd_product(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        prop_assert_eq!(gcd(a, b) as u128 * lcm(a, b).unwrap() as u128, a as u128 * b as u128);
    }

    #[test]
    fn order_is_minimal(q in 2u64..10_000, e in 2u64..10_000) {
        prop_assume!(gcd(q, e) == 1);
        let k = multiplicative_order(q, e).unwrap();
        prop_assert_eq!(pow_mod(q, k, e), 1);
        for d in divisors(k).unwrap() {
            if d < k {
                prop_assert_ne!(pow_mod(q, d, e), 1);
            }
        }
    }
}
