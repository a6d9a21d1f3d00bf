use proptest::prelude::*;

use lmalg::genclifford::{self, extract_components, phi, GCElement, GCParams};

fn params(max_l: u32, max_m: usize) -> impl Strategy<Value = GCParams> {
    (2..=max_l, 1..=max_m).prop_map(|(l, m)| GCParams::new(l, m).unwrap())
}

fn element(p: GCParams) -> impl Strategy<Value = GCElement> {
    let (l, m) = (p.l() as i64, p.m());
    prop::collection::vec((prop::collection::vec(0..l, m), -3i64..=3, 0..l), 0..5).prop_map(move |terms| {
        let f = p.field();
        let terms: Vec<_> = terms.into_iter().map(|(e, c, k)| (e, &f.from_int(c) * &p.xi_pow(k))).collect();
        GCElement::from_terms(p, terms).unwrap()
    })
}

fn triple(max_l: u32, max_m: usize) -> impl Strategy<Value = (GCElement, GCElement, GCElement)> {
    params(max_l, max_m).prop_flat_map(|p| (element(p), element(p), element(p)))
}

/// Brings `x^a · x^b` to normal form by swapping out-of-order neighbours
/// `x_j x_i → ξ x_i x_j` (i < j) and counting the swaps.
fn rewrite_phase(a: &[u32], b: &[u32]) -> u64 {
    let word_of =
        |e: &[u32]| e.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect::<Vec<_>>();
    let mut word = word_of(a);
    word.extend(word_of(b));
    let mut swaps = 0;
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 0..word.len().saturating_sub(1) {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                swaps += 1;
                sorted = false;
            }
        }
    }
    swaps
}

#[test]
fn monomial_products_match_rewriting() {
    for (l, m) in [(2u32, 2usize), (3, 2), (2, 3)] {
        let p = GCParams::new(l, m).unwrap();
        for i in 0..p.dim() as usize {
            for j in 0..p.dim() as usize {
                let (a, b) = (p.monomial_exps(i), p.monomial_exps(j));
                let to_i64 = |e: &[u32]| e.iter().map(|&x| x as i64).collect::<Vec<_>>();
                let sum: Vec<i64> = a.iter().zip(&b).map(|(&x, &y)| (x + y) as i64).collect();
                let expected = GCElement::monomial(p, &sum).unwrap().scale(&p.xi_pow(rewrite_phase(&a, &b) as i64));
                let got = genclifford::gc_mul(
                    &GCElement::monomial(p, &to_i64(&a)).unwrap(),
                    &GCElement::monomial(p, &to_i64(&b)).unwrap(),
                )
                .unwrap();
                assert_eq!(got, expected, "Clg({l},{m}): x^{a:?} · x^{b:?}");
            }
        }
    }
}

#[test]
fn presentation_relations() {
    for l in 2..=6u32 {
        for m in 1..=3usize {
            let p = GCParams::new(l, m).unwrap();
            let xi = p.xi_pow(1);
            assert!((1..l).all(|k| !p.xi_pow(k as i64).is_one()) && xi.pow(l as i64).unwrap().is_one());
            let gens: Vec<_> = (1..=m).map(|i| GCElement::generator(p, i).unwrap()).collect();
            for (i, x) in gens.iter().enumerate() {
                assert_eq!(x.pow(l), GCElement::one(p), "Clg({l},{m}): x_{}^l", i + 1);
                for y in &gens[i + 1..] {
                    assert_eq!(y.mul(x).unwrap(), x.mul(y).unwrap().scale(&xi));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity((a, b, c) in triple(4, 3)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn phi_is_an_automorphism_of_order_l((a, b, _) in triple(4, 3), i in 1usize..=3) {
        let p = a.params();
        let i = (i - 1) % p.m() + 1;
        prop_assert_eq!(phi(i, &a.mul(&b).unwrap()).unwrap(), phi(i, &a).unwrap().mul(&phi(i, &b).unwrap()).unwrap());
        let mut x = a.clone();
        for _ in 0..p.l() {
            x = phi(i, &x).unwrap();
        }
        prop_assert_eq!(x, a);
    }

    #[test]
    fn components_reconstruct((a, _, _) in triple(5, 3), i in 1usize..=3) {
        let p = a.params();
        let i = (i - 1) % p.m() + 1;
        let parts = extract_components(&a, i).unwrap();
        prop_assert_eq!(parts.len(), p.l() as usize);
        let sum = parts.iter().fold(GCElement::zero(p), |acc, x| acc.add(x).unwrap());
        prop_assert_eq!(sum, a);
        for (k, part) in parts.iter().enumerate() {
            prop_assert!(part.terms().keys().all(|e| e[i - 1] as usize == k));
        }
    }
}

#[test]
fn wedderburn_blocks_fill_the_algebra() {
    for l in 2..=4u32 {
        for m in 1..=3usize {
            let p = GCParams::new(l, m).unwrap();
            let blocks = genclifford::wedderburn(p).unwrap();
            let squares: u64 = blocks.blocks().iter().map(|b| b * b).sum();
            assert_eq!(squares, p.dim(), "Clg({l},{m})");
            let expected_center = if m % 2 == 0 { 1 } else { l as usize };
            assert_eq!(genclifford::center_basis(p).unwrap().len(), expected_center);
        }
    }
}
