use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lmalg::exactnum::{cyclotomic_poly, kernel_mod, totient, Cyclotomic, IntMatrix, IntPoly, Rational};
use lmalg::genclifford::commutation_matrix;

const ORDERS: [u32; 7] = [1, 3, 4, 5, 8, 9, 12];

fn element(order: u32) -> impl Strategy<Value = Cyclotomic> {
    let deg = totient(order);
    (prop::collection::vec(-6i64..=6, deg), 1i64..=4).prop_map(move |(nums, den)| {
        let coeffs = nums.into_iter().map(|n| Rational::new(BigInt::from(n), BigInt::from(den))).collect();
        Cyclotomic::from_coeffs(order, coeffs).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|o| (element(o), element(o), element(o)))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert_eq!(b.checked_div(&a).unwrap(), &b * &inv);
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn zeta_has_exact_order(order in prop::sample::select(ORDERS.to_vec()), k in -40i64..40) {
        let z = Cyclotomic::zeta_pow(order, 1);
        prop_assert!(z.pow(order as i64).unwrap().is_one());
        prop_assert_eq!(Cyclotomic::zeta_pow(order, k), z.pow(k).unwrap());
    }
}

#[test]
fn cyclotomic_polynomials_factor_x_pow_minus_one() {
    for l in 1..=30u32 {
        let product = (1..=l).filter(|d| l % d == 0).fold(IntPoly::one(), |acc, d| acc.mul(&cyclotomic_poly(d)));
        assert_eq!(product, IntPoly::x_pow_minus_one(l as usize), "l={l}");
        let phi = cyclotomic_poly(l);
        assert!(IntPoly::x_pow_minus_one(l as usize).div_exact_monic(&phi).is_some(), "l={l}");
        assert_eq!(phi.degree(), Some(totient(l)), "l={l}");
    }
}

fn small_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
}

fn brute_kernel(rows: &[Vec<i64>], l: u64, m: usize) -> BTreeSet<Vec<u64>> {
    let total = l.pow(m as u32);
    (0..total)
        .map(|mut idx| {
            (0..m)
                .map(|_| {
                    let d = idx % l;
                    idx /= l;
                    d
                })
                .collect::<Vec<u64>>()
        })
        .filter(|k| {
            rows.iter().all(|r| {
                let s: i64 = r.iter().zip(k).map(|(&a, &b)| a * b as i64).sum();
                s.rem_euclid(l as i64) == 0
            })
        })
        .collect()
}

// 2 <= l <= 30 and every m with l^m <= 10^5
#[test]
fn kernel_mod_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for l in 2u64..=30 {
        let mut m = 1usize;
        while l.pow(m as u32) <= 100_000 {
            let random: Vec<Vec<i64>> =
                (0..rng.gen_range(1..=3)).map(|_| (0..m).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            for rows in [small_rows(&commutation_matrix(m)), random] {
                let mat = IntMatrix::from_i64_rows(&rows).unwrap();
                let k = kernel_mod(&mat, l).unwrap();
                let expected = brute_kernel(&rows, l, m);
                assert_eq!(k.count(), expected.len() as u128, "l={l} rows={rows:?}");
                let got: BTreeSet<Vec<u64>> = k.elements(m).into_iter().collect();
                assert_eq!(got, expected, "l={l} rows={rows:?}");
            }
            m += 1;
        }
    }
}
