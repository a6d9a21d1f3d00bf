use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use lmalg::steinitz::{Exponent, SteinitzNumber};

const PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

fn exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        3 => Just(Exponent::Finite(0)),
        5 => (1u64..=4).prop_map(Exponent::Finite),
        1 => Just(Exponent::Infinite),
    ]
}

fn steinitz() -> impl Strategy<Value = SteinitzNumber> {
    prop_oneof![
        20 => prop::collection::vec(exponent(), PRIMES.len()).prop_map(|es| {
            let factors = PRIMES.iter().copied().zip(es).filter(|(_, e)| *e != Exponent::Finite(0));
            SteinitzNumber::from_factors(factors).unwrap()
        }),
        1 => Just(SteinitzNumber::top()),
    ]
}

fn finite() -> impl Strategy<Value = SteinitzNumber> {
    (1u64..=5000).prop_map(|n| SteinitzNumber::from_u64(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn commutative_monoid(a in steinitz(), b in steinitz(), c in steinitz()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&SteinitzNumber::one()), a.clone());
        prop_assert_eq!(a.mul(&SteinitzNumber::top()), SteinitzNumber::top());
    }

    #[test]
    fn lattice(a in steinitz(), b in steinitz(), c in steinitz()) {
        prop_assert_eq!(a.lcm(&a.gcd(&b)), a.clone());
        prop_assert_eq!(a.gcd(&a.lcm(&b)), a.clone());
        prop_assert_eq!(a.lcm(&a), a.clone());
        prop_assert_eq!(a.gcd(&a), a.clone());
        prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
        prop_assert_eq!(a.gcd(&b).gcd(&c), a.gcd(&b.gcd(&c)));
        prop_assert!(SteinitzNumber::one().divides(&a) && a.divides(&SteinitzNumber::top()));
    }

    #[test]
    fn divisibility_is_a_partial_order(a in steinitz(), b in steinitz(), c in steinitz()) {
        prop_assert!(a.divides(&a));
        if a.divides(&b) && b.divides(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.divides(&b) && b.divides(&c) {
            prop_assert!(a.divides(&c));
        }
    }

    #[test]
    fn divisibility_matches_lattice(a in steinitz(), b in steinitz()) {
        let d = a.divides(&b);
        prop_assert_eq!(d, a.lcm(&b) == b);
        prop_assert_eq!(d, a.gcd(&b) == a);
    }

    #[test]
    fn finite_values_agree_with_integers(a in finite(), b in finite()) {
        let (x, y) = (a.to_biguint().unwrap(), b.to_biguint().unwrap());
        prop_assert_eq!(a.mul(&b).to_biguint().unwrap(), &x * &y);
        prop_assert_eq!(a.lcm(&b).to_biguint().unwrap(), x.lcm(&y));
        prop_assert_eq!(a.gcd(&b).to_biguint().unwrap(), x.gcd(&y));
        prop_assert_eq!(a.divides(&b), (&y % &x).is_zero());
    }

    #[test]
    fn infinite_values_have_no_integer(a in steinitz()) {
        let infinite = a.is_top() || a.factors().any(|(_, e)| e.is_infinite());
        prop_assert_eq!(a.to_biguint().is_none(), infinite);
        if let Some(v) = a.to_biguint() {
            prop_assert_eq!(SteinitzNumber::from_u64(u64::try_from(v.clone()).unwrap()).unwrap(), a);
            prop_assert!(v >= BigUint::from(1u8));
        }
    }
}
