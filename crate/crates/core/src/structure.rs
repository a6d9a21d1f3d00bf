//! Finite-dimensional algebras given by structure constants: trace-form
//! radical, centers of ideals, and the matrix-unit relations
//! `x_ij·x_ts = δ_jt·x_is`, `Σ x_ii = 1`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactnum::{CycloField, Cyclotomic};
use crate::linalg::{self, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("structure table has {got} products, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("vector has length {got}, expected {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("claimed unit fails on basis element {0}")]
    NotUnital(usize),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("candidate array is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("candidate array is empty")]
    EmptyCandidates,
    #[error("candidate ({0}, {1}) is not an element of the algebra")]
    ForeignElement(usize, usize),
}

/// What [`check_matrix_units`] needs from an algebra.
pub trait Algebra {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn field(&self) -> CycloField;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Whether `a` belongs to this algebra (shape, field, parameters).
    fn contains(&self, a: &Self::Elem) -> bool;
}

pub type SparseVec = Vec<(usize, Cyclotomic)>;

fn to_sparse(v: &[Cyclotomic]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// Algebra with basis `e_0, …, e_{dim-1}` and `e_i·e_j = products[i·dim + j]`.
#[derive(Clone, Debug)]
pub struct StructureTable {
    field: CycloField,
    dim: usize,
    unit: Vector,
    products: Vec<SparseVec>,
}

impl StructureTable {
    pub fn new(field: CycloField, dim: usize, unit: Vector, products: Vec<SparseVec>) -> Result<Self, StructureError> {
        if products.len() != dim * dim {
            return Err(StructureError::TableSize { expected: dim * dim, got: products.len() });
        }
        if unit.len() != dim {
            return Err(StructureError::VectorLength { expected: dim, got: unit.len() });
        }
        if let Some(&(index, _)) = products.iter().flatten().find(|(k, _)| *k >= dim) {
            return Err(StructureError::IndexOutOfRange { index, dim });
        }
        let products = products.into_iter().map(|p| p.into_iter().filter(|(_, c)| !c.is_zero()).collect()).collect();
        Ok(StructureTable { field, dim, unit, products })
    }

    pub fn from_fn(
        field: CycloField,
        dim: usize,
        unit: Vector,
        f: impl Fn(usize, usize) -> SparseVec,
    ) -> Result<Self, StructureError> {
        let products = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::new(field, dim, unit, products)
    }

    /// `M_n(F)` in the basis `E_ij ↦ i·n + j`.
    pub fn matrix_algebra(n: usize, field: CycloField) -> Self {
        let mut unit = vec![field.zero(); n * n];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Self::from_fn(field, n * n, unit, |a, b| {
            let (i, j) = (a / n, a % n);
            let (t, s) = (b / n, b % n);
            if j == t {
                vec![(i * n + s, field.one())]
            } else {
                Vec::new()
            }
        })
        .expect("well-formed matrix algebra table")
    }

    /// `F[t]/(t²)` with basis `{1, t}`.
    pub fn dual_numbers(field: CycloField) -> Self {
        Self::from_fn(field, 2, vec![field.one(), field.zero()], |a, b| match (a, b) {
            (0, k) | (k, 0) => vec![(k, field.one())],
            _ => Vec::new(),
        })
        .expect("well-formed table")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    /// Replaces one structure constant row; used to plant defects in tests.
    pub fn with_product(mut self, i: usize, j: usize, value: SparseVec) -> Self {
        self.products[i * self.dim + j] = value;
        self
    }

    pub fn mul_vec(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        for (k, c) in self.mul_sparse(&to_sparse(a), &to_sparse(b)) {
            out[k] = c;
        }
        out
    }

    fn mul_sparse(&self, a: &[(usize, Cyclotomic)], b: &[(usize, Cyclotomic)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in self.product(*i, *j) {
                    let term = &xy * c;
                    match acc.entry(*k) {
                        Entry::Occupied(mut e) => *e.get_mut() += &term,
                        Entry::Vacant(e) => {
                            e.insert(term);
                        }
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Checks the claimed unit on every basis element and associativity on
    /// every basis triple (small tables) or on `samples` seeded random triples.
    pub fn validate(&self, samples: usize, seed: u64) -> Result<(), StructureError> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(StructureError::NotUnital(i));
            }
        }
        let assoc = |i: usize, j: usize, k: usize| {
            let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
            self.mul_vec(&self.mul_vec(&ei, &ej), &ek) == self.mul_vec(&ei, &self.mul_vec(&ej, &ek))
        };
        let d = self.dim;
        if d * d * d <= samples.max(512) {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        if !assoc(i, j, k) {
                            return Err(StructureError::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                if !assoc(i, j, k) {
                    return Err(StructureError::NotAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }

    /// `tr(L_{e_c})` for every basis element `e_c`, L the left regular representation.
    pub fn trace_vector(&self) -> Vector {
        (0..self.dim)
            .map(|c| {
                let mut t = self.field.zero();
                for k in 0..self.dim {
                    if let Some((_, coeff)) = self.product(c, k).iter().find(|(idx, _)| *idx == k) {
                        t += coeff;
                    }
                }
                t
            })
            .collect()
    }

    /// Gram matrix `T(b_i, b_j) = tr(L_{b_i·b_j})` of the trace form on a family of elements.
    pub fn trace_form_gram(&self, basis: &[Vector]) -> Vec<Vector> {
        let traces = self.trace_vector();
        let sparse: Vec<SparseVec> = basis.iter().map(|v| to_sparse(v)).collect();
        sparse
            .iter()
            .map(|a| {
                sparse
                    .iter()
                    .map(|b| {
                        let mut acc = self.field.zero();
                        for (k, x) in self.mul_sparse(a, b) {
                            if !traces[k].is_zero() {
                                acc += &(&x * &traces[k]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// Dimension of the radical of an ideal spanned by `basis` that is a
    /// direct factor of the algebra (for instance `e·A` with `e` a central
    /// idempotent). On such an ideal the trace of `L_a` computed in the whole
    /// algebra equals the trace computed inside the ideal.
    pub fn ideal_radical_dim(&self, basis: &[Vector]) -> usize {
        let gram = self.trace_form_gram(basis);
        basis.len() - linalg::rank(gram, basis.len())
    }

    /// Basis of the center of the subalgebra spanned by `basis`: the elements
    /// of the span commuting with every element of `basis`.
    pub fn center_of_span(&self, basis: &[Vector]) -> Vec<Vector> {
        let n = basis.len();
        // unknowns c_i; equations Σ_i c_i [b_i, b_j] = 0 for each j, coordinatewise
        let sparse: Vec<SparseVec> = basis.iter().map(|v| to_sparse(v)).collect();
        let commutators: Vec<Vec<Vector>> = sparse
            .iter()
            .map(|bi| {
                sparse
                    .iter()
                    .map(|bj| {
                        let mut x = vec![self.field.zero(); self.dim];
                        for (k, c) in self.mul_sparse(bi, bj) {
                            x[k] += &c;
                        }
                        for (k, c) in self.mul_sparse(bj, bi) {
                            x[k] -= &c;
                        }
                        x
                    })
                    .collect()
            })
            .collect();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..self.dim {
                let row: Vector = (0..n).map(|i| commutators[i][j][k].clone()).collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        linalg::nullspace(rows, n, self.field)
            .into_iter()
            .map(|c| {
                let mut v = vec![self.field.zero(); self.dim];
                for (ci, bi) in c.iter().zip(basis) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(bi) {
                        if !y.is_zero() {
                            *x += &(ci * y);
                        }
                    }
                }
                v
            })
            .collect()
    }
}

impl Algebra for StructureTable {
    type Elem = Vector;

    fn field(&self) -> CycloField {
        self.field
    }

    fn zero(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    fn one(&self) -> Vector {
        self.unit.clone()
    }

    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.mul_vec(a, b)
    }

    fn contains(&self, a: &Vector) -> bool {
        a.len() == self.dim && a.iter().all(|c| c.order() == self.field.order())
    }
}

/// Dimension of the Jacobson radical, computed as the kernel of the trace
/// form `T(a, b) = tr(L_{ab})`; valid in characteristic 0. The table is
/// validated first (unit, associativity on sampled triples).
pub fn radical_dim(table: &StructureTable) -> Result<usize, StructureError> {
    table.validate(512, 0)?;
    let basis: Vec<Vector> = (0..table.dim).map(|i| table.basis_vector(i)).collect();
    Ok(table.ideal_radical_dim(&basis))
}

/// Square matrices over a cyclotomic field as an [`Algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixAlgebra {
    pub n: usize,
    pub field: CycloField,
}

impl MatrixAlgebra {
    pub fn unit(&self, i: usize, j: usize) -> Vec<Vector> {
        let mut m = self.zero();
        m[i][j] = self.field.one();
        m
    }

    pub fn standard_units(&self) -> Vec<Vec<Vec<Vector>>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.unit(i, j)).collect()).collect()
    }
}

impl Algebra for MatrixAlgebra {
    type Elem = Vec<Vector>;

    fn field(&self) -> CycloField {
        self.field
    }

    fn zero(&self) -> Vec<Vector> {
        vec![vec![self.field.zero(); self.n]; self.n]
    }

    fn one(&self) -> Vec<Vector> {
        let mut m = self.zero();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.field.one();
        }
        m
    }

    fn add(&self, a: &Vec<Vector>, b: &Vec<Vector>) -> Vec<Vector> {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
    }

    fn mul(&self, a: &Vec<Vector>, b: &Vec<Vector>) -> Vec<Vector> {
        linalg::mat_mul(a, b, self.field)
    }

    fn contains(&self, a: &Vec<Vector>) -> bool {
        a.len() == self.n && a.iter().all(|r| r.len() == self.n)
    }
}

/// A failed matrix-unit relation; indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitViolation {
    /// `x_ij · x_ts ≠ δ_jt · x_is`
    Product { i: usize, j: usize, t: usize, s: usize },
    /// `x_11 + … + x_nn ≠ 1`
    UnitSum,
}

impl fmt::Display for UnitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UnitViolation::Product { i, j, t, s } => {
                let rhs = if j == t { format!("x_{}{}", i + 1, s + 1) } else { "0".into() };
                write!(f, "x_{}{}·x_{}{} ≠ {rhs}", i + 1, j + 1, t + 1, s + 1)
            }
            UnitViolation::UnitSum => write!(f, "x_11 + … + x_nn ≠ 1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitReport {
    pub n: usize,
    pub violation: Option<UnitViolation>,
}

impl UnitReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks all `n⁴` relations `x_ij·x_ts = δ_jt·x_is` and `Σ x_ii = 1`,
/// returning the first violated one.
pub fn check_matrix_units<A: Algebra>(alg: &A, candidates: &[Vec<A::Elem>]) -> Result<UnitReport, StructureError> {
    let n = candidates.len();
    if n == 0 {
        return Err(StructureError::EmptyCandidates);
    }
    for (row, r) in candidates.iter().enumerate() {
        if r.len() != n {
            return Err(StructureError::NotSquare { row, len: r.len(), n });
        }
        if let Some(col) = r.iter().position(|x| !alg.contains(x)) {
            return Err(StructureError::ForeignElement(row, col));
        }
    }
    let zero = alg.zero();
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                for s in 0..n {
                    let lhs = alg.mul(&candidates[i][j], &candidates[t][s]);
                    let rhs = if j == t { &candidates[i][s] } else { &zero };
                    if &lhs != rhs {
                        return Ok(UnitReport { n, violation: Some(UnitViolation::Product { i, j, t, s }) });
                    }
                }
            }
        }
    }
    let sum = (0..n).fold(alg.zero(), |acc, i| alg.add(&acc, &candidates[i][i]));
    let violation = (sum != alg.one()).then_some(UnitViolation::UnitSum);
    Ok(UnitReport { n, violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CycloField {
        CycloField::rationals()
    }

    #[test]
    fn matrix_tables_are_semisimple() {
        for n in 1..=3 {
            assert_eq!(radical_dim(&StructureTable::matrix_algebra(n, q())).unwrap(), 0);
        }
    }

    #[test]
    fn dual_numbers_have_one_dimensional_radical() {
        let t = StructureTable::dual_numbers(q());
        // Gram matrix of the trace form is [[2, 0], [0, 0]]
        let gram = t.trace_form_gram(&[t.basis_vector(0), t.basis_vector(1)]);
        assert_eq!(gram[0][0], q().from_int(2));
        assert!(gram[0][1].is_zero() && gram[1][0].is_zero() && gram[1][1].is_zero());
        assert_eq!(radical_dim(&t).unwrap(), 1);
    }

    #[test]
    fn validation_catches_broken_tables() {
        let t = StructureTable::dual_numbers(q()).with_product(0, 1, Vec::new());
        assert_eq!(radical_dim(&t), Err(StructureError::NotUnital(1)));
        // a·a = b, a·b = a: (a·a)·a = 0 but a·(a·a) = a
        let f = q();
        let bad = StructureTable::from_fn(f, 3, vec![f.one(), f.zero(), f.zero()], |a, b| match (a, b) {
            (0, k) | (k, 0) => vec![(k, f.one())],
            (1, 1) => vec![(2, f.one())],
            (1, 2) => vec![(1, f.one())],
            _ => Vec::new(),
        })
        .unwrap();
        assert!(matches!(bad.validate(10, 0), Err(StructureError::NotAssociative(..))));
        assert!(StructureTable::new(f, 2, vec![f.one(), f.zero()], vec![]).is_err());
    }

    #[test]
    fn standard_units_pass_in_table_and_matrices() {
        for n in 1..=3 {
            let t = StructureTable::matrix_algebra(n, q());
            let units: Vec<Vec<Vector>> = (0..n).map(|i| (0..n).map(|j| t.basis_vector(i * n + j)).collect()).collect();
            assert!(check_matrix_units(&t, &units).unwrap().holds());
            let m = MatrixAlgebra { n, field: q() };
            assert!(check_matrix_units(&m, &m.standard_units()).unwrap().holds());
        }
    }

    #[test]
    fn non_unit_idempotent_breaks_unit_sum() {
        // inside M_3, the units of the corner M_2 satisfy every product relation
        let t = StructureTable::matrix_algebra(3, q());
        let units: Vec<Vec<Vector>> = (0..2).map(|i| (0..2).map(|j| t.basis_vector(i * 3 + j)).collect()).collect();
        let r = check_matrix_units(&t, &units).unwrap();
        assert_eq!(r.violation, Some(UnitViolation::UnitSum));
    }

    #[test]
    fn shape_errors() {
        let t = StructureTable::matrix_algebra(2, q());
        let ragged = vec![vec![t.basis_vector(0), t.basis_vector(1)], vec![t.basis_vector(2)]];
        assert!(matches!(check_matrix_units(&t, &ragged), Err(StructureError::NotSquare { .. })));
        assert_eq!(check_matrix_units(&t, &[]), Err(StructureError::EmptyCandidates));
        let foreign = vec![vec![vec![q().one()]]];
        assert_eq!(check_matrix_units(&t, &foreign), Err(StructureError::ForeignElement(0, 0)));
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        let t = StructureTable::matrix_algebra(2, q());
        let basis: Vec<Vector> = (0..4).map(|i| t.basis_vector(i)).collect();
        let c = t.center_of_span(&basis);
        assert_eq!(c.len(), 1);
        assert!(linalg::same_span(&c, &[t.unit().clone()], 4));
    }
}
