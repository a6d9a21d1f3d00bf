//! Batch checks over fixed parameter grids, producing pass/fail tables.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{lemma22_check, structure_id, DiagonalForm};
use crate::exactnum::CycloField;
use crate::genclifford::{self, GCParams};
use crate::locmat::{random_chain, steinitz_of_chain, tensor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub rows: Vec<ReportRow>,
    pub pass: bool,
}

impl Report {
    fn new(suite: &str, rows: Vec<ReportRow>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        Report { suite: suite.to_string(), rows, pass }
    }
}

fn row(case: String, expected: String, got: Result<String, String>) -> ReportRow {
    match got {
        Ok(got) => ReportRow { pass: got == expected, case, expected, got },
        Err(e) => ReportRow { case, expected, got: format!("error: {e}"), pass: false },
    }
}

/// `structure_id` on split diagonal forms: `(1, -1, …)` over Q for even `n`,
/// over Q(i) for odd `n`.
pub fn clifford_structure_suite() -> Report {
    let mut rows = Vec::new();
    for (n, field) in [(2, CycloField::rationals()), (4, CycloField::rationals()), (6, CycloField::rationals())]
        .into_iter()
        .chain([(3, CycloField::gaussian()), (5, CycloField::gaussian())])
    {
        let form = Arc::new(DiagonalForm::alternating(field, n));
        let expected = if n % 2 == 0 {
            format!("[{}] center 1", 1u64 << (n / 2))
        } else {
            let b = 1u64 << ((n - 1) / 2);
            format!("[{b}, {b}] center 2")
        };
        let got = structure_id(&form)
            .map(|r| format!("{:?} center {}", r.profile.blocks(), r.center_dim))
            .map_err(|e| e.to_string());
        rows.push(row(format!("n={n} over {field}"), expected, got));
    }
    Report::new("clifford-structure", rows)
}

/// Wedderburn profile, center size and radical of `Clg(l, m)` on the
/// standard grid of even and odd `m`.
pub fn generalized_clifford_suite() -> Report {
    let even = [(2, 2), (2, 4), (3, 2), (3, 4), (4, 2), (4, 4), (6, 2)];
    let odd = [(2, 1), (2, 3), (3, 1), (3, 3), (4, 3)];
    let mut rows = Vec::new();
    for (l, m) in even.into_iter().chain(odd) {
        let l64 = l as u64;
        let expected_blocks: Vec<u64> =
            if m % 2 == 0 { vec![l64.pow(m / 2)] } else { vec![l64.pow((m - 1) / 2); l as usize] };
        let center = if m % 2 == 0 { 1 } else { l as usize };
        let expected = format!("{expected_blocks:?} center {center} radical 0");
        let got = (|| {
            let p = GCParams::new(l, m as usize)?;
            let profile = genclifford::wedderburn(p)?;
            let center = genclifford::center_basis(p)?.len();
            let radical = genclifford::radical_dim(p)?;
            Ok::<_, genclifford::GCError>(format!("{:?} center {center} radical {radical}", profile.blocks()))
        })()
        .map_err(|e| e.to_string());
        rows.push(row(format!("Clg({l},{m})"), expected, got));
    }
    Report::new("generalized-clifford", rows)
}

/// Steinitz number of a tensor product against the product of Steinitz
/// numbers, on `count` seeded random chain pairs.
pub fn tensor_multiplicativity_suite(seed: u64, count: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..count)
        .map(|_| {
            let a = random_chain(&mut rng);
            let b = random_chain(&mut rng);
            let expected = steinitz_of_chain(&a).mul(&steinitz_of_chain(&b)).to_string();
            let got = tensor(&a, &b).map(|t| steinitz_of_chain(&t).to_string()).map_err(|e| e.to_string());
            row(format!("{a} ⊗ {b}"), expected, got)
        })
        .collect();
    Report::new("tensor-multiplicativity", rows)
}

/// Centralizer identity for `e_1, …, e_k` in `Cl` of the unit form over Q(i).
pub fn centralizer_identity_suite() -> Report {
    let rows = [(2, 1), (3, 1), (4, 1), (5, 1), (5, 3), (6, 1)]
        .into_iter()
        .map(|(n, k)| {
            let form = Arc::new(DiagonalForm::from_ints(CycloField::gaussian(), &vec![1; n]).expect("units"));
            let indices: Vec<usize> = (1..=k).collect();
            let side = 1usize << (n - k);
            let expected = format!("equal, dims {side} = {side}");
            let got = lemma22_check(&form, &indices)
                .map(|r| {
                    let rel = if r.equal { "equal" } else { "different" };
                    format!("{rel}, dims {} = {}", r.centralizer_dim, r.product_side_dim)
                })
                .map_err(|e| e.to_string());
            row(format!("n={n} k={k}"), expected, got)
        })
        .collect();
    Report::new("centralizer-identity", rows)
}
