use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lmalg::locmat::{self, EmbeddingChain};
use lmalg::profile::AlgebraProfile;
use lmalg::steinitz::{Exponent, SteinitzNumber};

fn chain() -> impl Strategy<Value = EmbeddingChain> {
    any::<u64>().prop_map(|seed| locmat::random_chain(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn admissible() -> impl Strategy<Value = SteinitzNumber> {
    prop::collection::vec(prop_oneof![3 => (0u64..=3).prop_map(Exponent::Finite), 1 => Just(Exponent::Infinite)], 4)
        .prop_map(|es| {
            let factors = [2u64, 3, 5, 7].into_iter().zip(es).filter(|(_, e)| *e != Exponent::Finite(0));
            SteinitzNumber::from_factors(factors).unwrap()
        })
}

fn infinite_steinitz() -> impl Strategy<Value = SteinitzNumber> {
    admissible().prop_filter("needs an infinite exponent", |t| t.to_biguint().is_none())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tensor_is_multiplicative(a in chain(), b in chain()) {
        let t = locmat::tensor(&a, &b).unwrap();
        prop_assert_eq!(
            locmat::steinitz_of_chain(&t),
            locmat::steinitz_of_chain(&a).mul(&locmat::steinitz_of_chain(&b))
        );
    }

    #[test]
    fn decisions_coincide(a in chain(), b in chain()) {
        prop_assert_eq!(locmat::universally_equivalent(&a, &b), locmat::isomorphic_countable(&a, &b));
        prop_assert!(locmat::universally_equivalent(&a, &a));
    }

    #[test]
    fn membership_is_divisor_closed(c in chain(), n in 1u64..=200) {
        if locmat::d_membership(n, &c).unwrap() {
            for d in (1..=n).filter(|d| n % d == 0) {
                prop_assert!(locmat::d_membership(d, &c).unwrap(), "{} in D but {} not", n, d);
            }
        }
        // every listed term is in D
        for &s in c.sizes() {
            prop_assert!(locmat::d_membership(s, &c).unwrap());
        }
    }

    #[test]
    fn realization_round_trips(tau in infinite_steinitz()) {
        let c = locmat::steinitz_realization(&tau).unwrap();
        prop_assert_eq!(locmat::steinitz_of_chain(&c), tau);
    }

    #[test]
    fn finite_numbers_have_no_infinite_chain(tau in admissible()) {
        prop_assert_eq!(locmat::steinitz_realization(&tau).is_ok(), tau.to_biguint().is_none());
    }

    #[test]
    fn embeddings_need_divisibility(n in 1u64..=12, blocks in prop::collection::vec(1u64..=24, 1..4)) {
        let p = AlgebraProfile::new(blocks.clone()).unwrap();
        prop_assert_eq!(locmat::unital_embedding_exists(n, &p).unwrap(), blocks.iter().all(|b| b % n == 0));
    }
}
