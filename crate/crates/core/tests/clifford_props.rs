use std::sync::Arc;

use proptest::prelude::*;

use lmalg::clifford::{self, subalgebra_basis, CliffordAlgebra, DiagonalForm, Multivector, Subspace};
use lmalg::exactnum::CycloField;
use lmalg::linalg;

const DIAG_VALUES: [i64; 6] = [-3, -2, -1, 1, 2, 3];

fn form(max_n: usize) -> impl Strategy<Value = Arc<DiagonalForm>> {
    prop::collection::vec(prop::sample::select(DIAG_VALUES.to_vec()), 1..=max_n)
        .prop_map(|d| Arc::new(DiagonalForm::from_ints(CycloField::rationals(), &d).unwrap()))
}

fn element(form: Arc<DiagonalForm>) -> impl Strategy<Value = Multivector> {
    let n = form.dim();
    prop::collection::vec((0..1u64 << n, -4i64..=4), 0..6).prop_map(move |terms| {
        let f = form.field();
        terms.into_iter().fold(Multivector::zero(&form), |acc, (mask, c)| {
            acc.add(&Multivector::basis(&form, mask).scale(&f.from_int(c))).unwrap()
        })
    })
}

fn form_and_triple(max_n: usize) -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    form(max_n).prop_flat_map(|f| (element(f.clone()), element(f.clone()), element(f)))
}

/// Multiplies basis words by rewriting: sort generators with a sign flip per
/// swap of distinct neighbours and contract equal neighbours to `d_i`.
fn rewrite_product(diag: &[i64], a: u64, b: u64) -> (i64, u64) {
    let word_of = |m: u64| (0..diag.len()).filter(move |i| m >> i & 1 == 1);
    let mut word: Vec<usize> = word_of(a).chain(word_of(b)).collect();
    let mut coeff = 1i64;
    'outer: loop {
        for i in 0..word.len().saturating_sub(1) {
            if word[i] == word[i + 1] {
                coeff *= diag[word[i]];
                word.drain(i..i + 2);
                continue 'outer;
            }
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                coeff = -coeff;
                continue 'outer;
            }
        }
        break;
    }
    (coeff, word.iter().fold(0, |m, &i| m | 1 << i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity((a, b, c) in form_and_triple(6)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn basis_products_match_rewriting(d in prop::collection::vec(prop::sample::select(DIAG_VALUES.to_vec()), 1..=6), seed in any::<u64>()) {
        let form = Arc::new(DiagonalForm::from_ints(CycloField::rationals(), &d).unwrap());
        let n = d.len();
        let a = seed % (1 << n);
        let b = (seed >> 8) % (1 << n);
        let (c, mask) = rewrite_product(&d, a, b);
        let expected = Multivector::basis(&form, mask).scale(&form.field().from_int(c));
        prop_assert_eq!(clifford::mv_mul(&Multivector::basis(&form, a), &Multivector::basis(&form, b)).unwrap(), expected);
    }

    #[test]
    fn vectors_square_to_their_form_value(d in prop::collection::vec(prop::sample::select(DIAG_VALUES.to_vec()), 1..=6), seed in prop::collection::vec(-5i64..=5, 6)) {
        let f = CycloField::rationals();
        let form = Arc::new(DiagonalForm::from_ints(f, &d).unwrap());
        let coords: Vec<_> = seed[..d.len()].iter().map(|&x| f.from_int(x)).collect();
        let v = Multivector::vector(&form, &coords).unwrap();
        let value: i64 = d.iter().zip(&seed).map(|(di, x)| di * x * x).sum();
        prop_assert_eq!(form.value(&coords), f.from_int(value));
        prop_assert_eq!(v.mul(&v).unwrap(), Multivector::scalar(&form, f.from_int(value)));
    }

    #[test]
    fn grading_is_multiplicative((a, b, _) in form_and_triple(5)) {
        let (a0, a1) = a.grade_split();
        let (b0, b1) = b.grade_split();
        prop_assert_eq!(a0.add(&a1).unwrap(), a.clone());
        for (x, px) in [(&a0, 0), (&a1, 1)] {
            for (y, py) in [(&b0, 0), (&b1, 1)] {
                let p = x.mul(y).unwrap();
                if !p.is_zero() {
                    prop_assert_eq!(p.parity(), Some((px + py) % 2));
                }
            }
        }
    }

    #[test]
    fn centralizer_of_unit_generator(rest in prop::collection::vec(prop::sample::select(DIAG_VALUES.to_vec()), 1..=5)) {
        let mut d = vec![1];
        d.extend(rest);
        let n = d.len();
        let alg = CliffordAlgebra::new(DiagonalForm::from_ints(CycloField::rationals(), &d).unwrap());
        let c = alg.centralizer(&[alg.generator(1).unwrap()]).unwrap();
        prop_assert_eq!(c.len(), 1 << (n - 1));
    }

    #[test]
    fn one_generator_algebra_is_commutative(d in prop::sample::select(DIAG_VALUES.to_vec())) {
        let alg = CliffordAlgebra::new(DiagonalForm::from_ints(CycloField::rationals(), &[d]).unwrap());
        prop_assert_eq!(alg.centralizer(&[alg.generator(1).unwrap()]).unwrap().len(), 2);
    }

    #[test]
    fn structure_blocks_fill_the_algebra(d in prop::collection::vec(prop::sample::select(vec![1i64, -1]), 1..=6)) {
        let form = Arc::new(DiagonalForm::from_ints(CycloField::gaussian(), &d).unwrap());
        let r = clifford::structure_id(&form).unwrap();
        let squares: u64 = r.profile.blocks().iter().map(|b| b * b).sum();
        prop_assert_eq!(squares, 1u64 << d.len());
    }

    #[test]
    fn subalgebras_are_closed(
        d in prop::collection::vec(prop::sample::select(DIAG_VALUES.to_vec()), 2..=4),
        rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=3),
    ) {
        let f = CycloField::rationals();
        let n = d.len();
        let form = Arc::new(DiagonalForm::from_ints(f, &d).unwrap());
        let basis: Vec<_> = rows.iter().map(|r| r[..n].iter().map(|&x| f.from_int(x)).collect()).collect();
        let w = Subspace::new(n, basis);
        prop_assume!(w.is_ok());
        let w = w.unwrap();
        let sub = subalgebra_basis(&form, &w);
        prop_assume!(sub.is_ok());
        let elems = sub.unwrap().elements;
        prop_assert_eq!(elems.len(), 1 << w.dim());
        let span: Vec<_> = elems.iter().map(|e| e.coords()).collect();
        let echelon = linalg::row_reduce(span.clone(), 1 << n);
        prop_assert_eq!(echelon.rank(), elems.len());
        for x in &elems {
            for y in &elems {
                prop_assert!(echelon.contains(&x.mul(y).unwrap().coords()));
            }
        }
    }
}
