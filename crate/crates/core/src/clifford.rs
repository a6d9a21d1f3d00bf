//! Finite-dimensional Clifford algebras `Cl(V, f)` of diagonal quadratic forms.
//!
//! Generators `e_1, …, e_n` satisfy `e_i² = d_i` and `e_i e_j = -e_j e_i`
//! for `i ≠ j`. A basis element `e_A = e_{i_1} ⋯ e_{i_k}` (`i_1 < … < i_k`)
//! is stored as the bitmask `A` with bit `i - 1` for generator `e_i`.
//! The polar form is `f(u, v) = f(u + v) - f(u) - f(v)`, so `f(v, v) = 2 f(v)`
//! and `uv + vu = f(u, v)·1`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactnum::{CycloField, Cyclotomic, Rational};
use crate::linalg::{self, Vector};
use crate::profile::AlgebraProfile;
use crate::structure::{self, Algebra, StructureError, StructureTable};

/// Largest supported number of generators; masks live in a `u64` and the
/// dense linear algebra over `2^n` coordinates must stay tractable.
pub const MAX_GENERATORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("diagonal entry d_{0} is zero; the form must be nondegenerate")]
    ZeroDiagonal(usize),
    #[error("scalar lives in Q(ζ_{got}) but the form is over Q(ζ_{expected})")]
    FieldMismatch { expected: u32, got: u32 },
    #[error("at most {MAX_GENERATORS} generators are supported, got {0}")]
    TooLarge(usize),
    #[error("operands belong to different Clifford algebras")]
    FormMismatch,
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generator index {0} repeated")]
    RepeatedIndex(usize),
    #[error("coordinate vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("subspace basis vectors are linearly dependent")]
    DependentBasis,
    #[error("form restricted to the subspace is degenerate: basis vector {index} combines into {radical:?}, orthogonal to the whole subspace")]
    Degenerate { index: usize, radical: Vec<String> },
    #[error("the centralizer identity is checked for an odd number of vectors, got {0}")]
    EvenCount(usize),
    #[error("f(e_{0}) must be 1")]
    NotUnitNorm(usize),
    #[error("form does not split over {field}: {reason}")]
    NonSplit { field: String, reason: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Diagonal quadratic form `f(v) = Σ d_i v_i²` over a cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm {
    field: CycloField,
    diag: Vec<Cyclotomic>,
}

impl DiagonalForm {
    pub fn new(field: CycloField, diag: Vec<Cyclotomic>) -> Result<Self, CliffordError> {
        if diag.len() > MAX_GENERATORS {
            return Err(CliffordError::TooLarge(diag.len()));
        }
        for (i, d) in diag.iter().enumerate() {
            if d.order() != field.order() {
                return Err(CliffordError::FieldMismatch { expected: field.order(), got: d.order() });
            }
            if d.is_zero() {
                return Err(CliffordError::ZeroDiagonal(i + 1));
            }
        }
        Ok(DiagonalForm { field, diag })
    }

    /// Integer diagonal over the given field.
    pub fn from_ints(field: CycloField, diag: &[i64]) -> Result<Self, CliffordError> {
        Self::new(field, diag.iter().map(|&d| field.from_int(d)).collect())
    }

    /// `(1, -1, 1, -1, …)` of length `n`.
    pub fn alternating(field: CycloField, n: usize) -> Self {
        let diag: Vec<i64> = (0..n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        Self::from_ints(field, &diag).expect("units are nonzero")
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn field(&self) -> CycloField {
        self.field
    }

    pub fn diag(&self) -> &[Cyclotomic] {
        &self.diag
    }

    /// `f(v)`.
    pub fn value(&self, v: &[Cyclotomic]) -> Cyclotomic {
        v.iter().zip(&self.diag).fold(self.field.zero(), |acc, (x, d)| &acc + &(&(x * x) * d))
    }

    /// The polar form `f(u, v) = Σ 2 d_i u_i v_i`.
    pub fn polar(&self, u: &[Cyclotomic], v: &[Cyclotomic]) -> Cyclotomic {
        let two = Rational::from_integer(2.into());
        u.iter().zip(v).zip(&self.diag).fold(self.field.zero(), |acc, ((x, y), d)| &acc + &(&(x * y) * d).scale(&two))
    }

    /// Whether the form visibly splits: each consecutive pair `(d_{2j-1}, d_{2j})`
    /// spans a hyperbolic plane (`-d_{2j-1} d_{2j}` is a square) and, for odd
    /// `n`, the last entry is a square. Over Q this admits `(1, -1, …, 1)`;
    /// over Q(i) any diagonal of ±1.
    pub fn check_split(&self) -> Result<(), CliffordError> {
        let non_split = |reason: String| CliffordError::NonSplit { field: self.field.to_string(), reason };
        for (j, pair) in self.diag.chunks(2).enumerate() {
            match pair {
                [a, b] => {
                    let disc = -&(a * b);
                    if disc.sqrt().is_none() {
                        return Err(non_split(format!(
                            "-d_{}·d_{} = {disc} has no square root in the field",
                            2 * j + 1,
                            2 * j + 2
                        )));
                    }
                }
                [a] => {
                    if a.sqrt().is_none() {
                        return Err(non_split(format!("d_{} = {a} has no square root in the field", 2 * j + 1)));
                    }
                }
                _ => unreachable!(),
            }
        }
        Ok(())
    }
}

/// Sign of reordering `e_A · e_B` into `e_{A xor B}` up to the squares of
/// shared generators: `(-1)^{#{(i, j) : i ∈ A, j ∈ B, i > j}}`.
pub fn reorder_sign(a: u64, b: u64) -> i32 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Clifford algebra element: bitmask → nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    form: Arc<DiagonalForm>,
    terms: BTreeMap<u64, Cyclotomic>,
}

impl Multivector {
    pub fn zero(form: &Arc<DiagonalForm>) -> Self {
        Multivector { form: Arc::clone(form), terms: BTreeMap::new() }
    }

    pub fn scalar(form: &Arc<DiagonalForm>, c: Cyclotomic) -> Self {
        Self::from_terms(form, [(0, c)])
    }

    pub fn one(form: &Arc<DiagonalForm>) -> Self {
        Self::scalar(form, form.field.one())
    }

    /// The basis element `e_A`.
    pub fn basis(form: &Arc<DiagonalForm>, mask: u64) -> Self {
        Self::from_terms(form, [(mask, form.field.one())])
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(form: &Arc<DiagonalForm>, i: usize) -> Result<Self, CliffordError> {
        if i == 0 || i > form.dim() {
            return Err(CliffordError::IndexOutOfRange { index: i, n: form.dim() });
        }
        Ok(Self::basis(form, 1 << (i - 1)))
    }

    /// The vector `Σ v_i e_i`.
    pub fn vector(form: &Arc<DiagonalForm>, coords: &[Cyclotomic]) -> Result<Self, CliffordError> {
        if coords.len() != form.dim() {
            return Err(CliffordError::WrongLength { expected: form.dim(), got: coords.len() });
        }
        Ok(Self::from_terms(form, coords.iter().enumerate().map(|(i, c)| (1u64 << i, c.clone()))))
    }

    fn from_terms(form: &Arc<DiagonalForm>, terms: impl IntoIterator<Item = (u64, Cyclotomic)>) -> Self {
        let mut out = Self::zero(form);
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    /// Builds an element from (mask, coefficient) pairs with validation.
    pub fn try_from_terms(
        form: &Arc<DiagonalForm>,
        terms: impl IntoIterator<Item = (u64, Cyclotomic)>,
    ) -> Result<Self, CliffordError> {
        let limit = 1u64 << form.dim();
        let mut out = Self::zero(form);
        for (m, c) in terms {
            if m >= limit {
                let index = 64 - m.leading_zeros() as usize;
                return Err(CliffordError::IndexOutOfRange { index, n: form.dim() });
            }
            if c.order() != form.field.order() {
                return Err(CliffordError::FieldMismatch { expected: form.field.order(), got: c.order() });
            }
            out.add_term(m, &c);
        }
        Ok(out)
    }

    /// Element with the given coordinates in the basis `e_0, …, e_{2^n - 1}` (by mask).
    pub fn from_coords(form: &Arc<DiagonalForm>, coords: &[Cyclotomic]) -> Self {
        Self::from_terms(form, coords.iter().enumerate().map(|(m, c)| (m as u64, c.clone())))
    }

    pub fn coords(&self) -> Vector {
        let mut v = vec![self.form.field.zero(); 1 << self.form.dim()];
        for (&m, c) in &self.terms {
            v[m as usize] = c.clone();
        }
        v
    }

    fn add_term(&mut self, mask: u64, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(|| self.form.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn form(&self) -> &Arc<DiagonalForm> {
        &self.form
    }

    pub fn terms(&self) -> &BTreeMap<u64, Cyclotomic> {
        &self.terms
    }

    pub fn coeff(&self, mask: u64) -> Cyclotomic {
        self.terms.get(&mask).cloned().unwrap_or_else(|| self.form.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.form, &other.form) || self.form == other.form
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        if !self.same_algebra(other) {
            return Err(CliffordError::FormMismatch);
        }
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-self.form.field.one())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self::from_terms(&self.form, self.terms.iter().map(|(&m, x)| (m, x * c)))
    }

    /// `e_A · e_B = sign(A, B) · Π_{i ∈ A∩B} d_i · e_{A xor B}`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self, CliffordError> {
        if !self.same_algebra(other) {
            return Err(CliffordError::FormMismatch);
        }
        let mut out = Self::zero(&self.form);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                let c = &(x * y) * &basis_product_coeff(&self.form, a, b);
                out.add_term(a ^ b, &c);
            }
        }
        Ok(out)
    }

    /// Splits into the parts spanned by even and odd products.
    pub fn grade_split(&self) -> (Multivector, Multivector) {
        let (even, odd): (Vec<_>, Vec<_>) =
            self.terms.iter().map(|(&m, c)| (m, c.clone())).partition(|(m, _)| m.count_ones() % 2 == 0);
        (Self::from_terms(&self.form, even), Self::from_terms(&self.form, odd))
    }

    /// Parity of a homogeneous element; `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<u32> {
        let mut parities = self.terms.keys().map(|m| m.count_ones() % 2);
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, CliffordError> {
        Ok(self.mul(other)? == other.mul(self)?)
    }
}

fn basis_product_coeff(form: &DiagonalForm, a: u64, b: u64) -> Cyclotomic {
    let mut c = if reorder_sign(a, b) == 1 { form.field.one() } else { -form.field.one() };
    let mut shared = a & b;
    while shared != 0 {
        let i = shared.trailing_zeros() as usize;
        c = &c * &form.diag[i];
        shared &= shared - 1;
    }
    c
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                if m == 0 {
                    format!("({c})")
                } else {
                    let idx: Vec<String> = mask_indices(m).iter().map(|i| i.to_string()).collect();
                    format!("({c})e{}", idx.join("_"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

/// 1-based generator indices of a mask, increasing.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Mask of 1-based generator indices.
pub fn indices_mask(indices: &[usize], n: usize) -> Result<u64, CliffordError> {
    let mut mask = 0u64;
    for &i in indices {
        if i == 0 || i > n {
            return Err(CliffordError::IndexOutOfRange { index: i, n });
        }
        if mask >> (i - 1) & 1 == 1 {
            return Err(CliffordError::RepeatedIndex(i));
        }
        mask |= 1 << (i - 1);
    }
    Ok(mask)
}

pub fn mv_mul(a: &Multivector, b: &Multivector) -> Result<Multivector, CliffordError> {
    a.mul(b)
}

pub fn grade_split(a: &Multivector) -> (Multivector, Multivector) {
    a.grade_split()
}

/// `Cl(V, f)` as an [`Algebra`] over its multivectors.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    form: Arc<DiagonalForm>,
}

impl CliffordAlgebra {
    pub fn new(form: DiagonalForm) -> Self {
        CliffordAlgebra { form: Arc::new(form) }
    }

    pub fn form(&self) -> &Arc<DiagonalForm> {
        &self.form
    }

    pub fn dim(&self) -> usize {
        1 << self.form.dim()
    }

    pub fn generator(&self, i: usize) -> Result<Multivector, CliffordError> {
        Multivector::generator(&self.form, i)
    }

    pub fn generators(&self) -> Vec<Multivector> {
        (1..=self.form.dim()).map(|i| self.generator(i).expect("index in range")).collect()
    }

    /// Structure constants in the mask basis.
    pub fn table(&self) -> StructureTable {
        let field = self.form.field;
        let dim = self.dim();
        let mut unit = vec![field.zero(); dim];
        unit[0] = field.one();
        StructureTable::from_fn(field, dim, unit, |a, b| {
            vec![(a ^ b, basis_product_coeff(&self.form, a as u64, b as u64))]
        })
        .expect("Clifford table is well formed")
    }

    fn to_multivectors(&self, vectors: Vec<Vector>) -> Vec<Multivector> {
        vectors.iter().map(|v| Multivector::from_coords(&self.form, v)).collect()
    }

    /// Basis of `{a : a·s = s·a for all s ∈ S}`.
    pub fn centralizer(&self, set: &[Multivector]) -> Result<Vec<Multivector>, CliffordError> {
        let dim = self.dim();
        let field = self.form.field;
        // column A holds the coordinates of e_A·s - s·e_A for every s in turn
        let mut rows = vec![vec![field.zero(); dim]; dim * set.len()];
        for s in set {
            if !Arc::ptr_eq(&s.form, &self.form) && *s.form != *self.form {
                return Err(CliffordError::FormMismatch);
            }
        }
        for a in 0..dim {
            let ea = Multivector::basis(&self.form, a as u64);
            for (k, s) in set.iter().enumerate() {
                let comm = ea.mul(s)?.sub(&s.mul(&ea)?)?;
                for (&m, c) in comm.terms() {
                    rows[k * dim + m as usize][a] = c.clone();
                }
            }
        }
        rows.retain(|r| r.iter().any(|c| !c.is_zero()));
        Ok(self.to_multivectors(linalg::nullspace(rows, dim, field)))
    }

    /// Basis of the center, i.e. the centralizer of the generators.
    pub fn center(&self) -> Result<Vec<Multivector>, CliffordError> {
        self.centralizer(&self.generators())
    }
}

impl Algebra for CliffordAlgebra {
    type Elem = Multivector;

    fn field(&self) -> CycloField {
        self.form.field
    }

    fn zero(&self) -> Multivector {
        Multivector::zero(&self.form)
    }

    fn one(&self) -> Multivector {
        Multivector::one(&self.form)
    }

    fn add(&self, a: &Multivector, b: &Multivector) -> Multivector {
        a.add(b).expect("elements of one algebra")
    }

    fn mul(&self, a: &Multivector, b: &Multivector) -> Multivector {
        a.mul(b).expect("elements of one algebra")
    }

    fn contains(&self, a: &Multivector) -> bool {
        a.same_algebra(&self.zero())
    }
}

pub fn centralizer(alg: &CliffordAlgebra, set: &[Multivector]) -> Result<Vec<Multivector>, CliffordError> {
    alg.centralizer(set)
}

/// Subspace of the generating space `V`, given by a basis of coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<Vector>) -> Result<Self, CliffordError> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient) {
            return Err(CliffordError::WrongLength { expected: ambient, got: v.len() });
        }
        if linalg::rank(basis.clone(), ambient) != basis.len() {
            return Err(CliffordError::DependentBasis);
        }
        Ok(Subspace { ambient, basis })
    }

    /// Span of the given 1-based coordinate axes.
    pub fn coordinate(field: CycloField, ambient: usize, axes: &[usize]) -> Result<Self, CliffordError> {
        let basis = axes
            .iter()
            .map(|&i| {
                if i == 0 || i > ambient {
                    return Err(CliffordError::IndexOutOfRange { index: i, n: ambient });
                }
                let mut v = vec![field.zero(); ambient];
                v[i - 1] = field.one();
                Ok(v)
            })
            .collect::<Result<_, _>>()?;
        Self::new(ambient, basis)
    }

    /// The whole space.
    pub fn full(field: CycloField, ambient: usize) -> Self {
        Self::coordinate(field, ambient, &(1..=ambient).collect::<Vec<_>>()).expect("axes in range")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// `{v' ∈ V : f(v, v') = 0 for all v in the subspace}`.
    pub fn orthogonal_complement(&self, form: &DiagonalForm) -> Self {
        let rows: Vec<Vector> = self
            .basis
            .iter()
            .map(|v| {
                let e: Vec<Cyclotomic> = (0..self.ambient)
                    .map(|i| {
                        let mut unit = vec![form.field.zero(); self.ambient];
                        unit[i] = form.field.one();
                        form.polar(v, &unit)
                    })
                    .collect();
                e
            })
            .collect();
        let basis = linalg::nullspace(rows, self.ambient, form.field);
        Subspace { ambient: self.ambient, basis }
    }
}

/// Basis of the subalgebra `Cl(W, f|_W) ⊆ Cl(V, f)`.
#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    /// Pairwise orthogonal basis `u_1, …, u_w` of `W`.
    pub orthogonal: Vec<Multivector>,
    /// `elements[S]` is the ordered product of the `u_i` with `i ∈ S` (bitmask over `0..w`).
    pub elements: Vec<Multivector>,
}

impl SubalgebraBasis {
    /// Products of even length, spanning `Cl(W)_0̄`.
    pub fn even(&self) -> Vec<Multivector> {
        self.elements.iter().enumerate().filter(|(s, _)| s.count_ones() % 2 == 0).map(|(_, e)| e.clone()).collect()
    }
}

/// Orthogonalizes a basis of `W` (Gram–Schmidt with the polar form) and
/// returns the `2^{dim W}` ordered products of the orthogonal vectors.
pub fn subalgebra_basis(form: &Arc<DiagonalForm>, w: &Subspace) -> Result<SubalgebraBasis, CliffordError> {
    if w.ambient != form.dim() {
        return Err(CliffordError::WrongLength { expected: form.dim(), got: w.ambient });
    }
    let field = form.field;
    let k = w.dim();
    let gram: Vec<Vector> = w.basis.iter().map(|a| w.basis.iter().map(|b| form.polar(a, b)).collect()).collect();
    if let Some(null) = linalg::nullspace(gram, k, field).into_iter().next() {
        let index = null.iter().position(|c| !c.is_zero()).expect("nonzero null vector") + 1;
        let mut radical = vec![field.zero(); w.ambient];
        for (c, v) in null.iter().zip(&w.basis) {
            for (r, x) in radical.iter_mut().zip(v) {
                *r += &(c * x);
            }
        }
        return Err(CliffordError::Degenerate { index, radical: radical.iter().map(ToString::to_string).collect() });
    }

    let mut pending: Vec<Vector> = w.basis.clone();
    let mut orthogonal: Vec<Vector> = Vec::with_capacity(k);
    while !pending.is_empty() {
        let pick = match pending.iter().position(|v| !form.value(v).is_zero()) {
            Some(p) => p,
            None => {
                // all remaining vectors are isotropic; v + w is not when f(v, w) ≠ 0
                let partner = (1..pending.len())
                    .find(|&j| !form.polar(&pending[0], &pending[j]).is_zero())
                    .ok_or_else(|| CliffordError::Internal("nondegenerate block without anisotropic vector".into()))?;
                let sum: Vector = pending[0].iter().zip(&pending[partner]).map(|(a, b)| a + b).collect();
                pending[0] = sum;
                0
            }
        };
        let u = pending.remove(pick);
        let uu = form.polar(&u, &u);
        let uu_inv = uu.inv().expect("anisotropic vector");
        for v in pending.iter_mut() {
            let coef = &form.polar(v, &u) * &uu_inv;
            if coef.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(&u) {
                *x -= &(&coef * y);
            }
        }
        orthogonal.push(u);
    }

    let vectors: Vec<Multivector> =
        orthogonal.iter().map(|u| Multivector::vector(form, u)).collect::<Result<_, _>>()?;
    let mut elements = Vec::with_capacity(1 << k);
    for s in 0u64..(1 << k) {
        let mut prod = Multivector::one(form);
        for i in mask_indices(s) {
            prod = prod.mul(&vectors[i - 1])?;
        }
        elements.push(prod);
    }
    Ok(SubalgebraBasis { orthogonal: vectors, elements })
}

/// Outcome of comparing `C(v_1) ∩ … ∩ C(v_k)` with
/// `v_1⋯v_k·Cl(W)_0̄ + Cl(W)_0̄`, `W = v_1^⊥ ∩ … ∩ v_k^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerIdentityReport {
    pub n: usize,
    pub indices: Vec<usize>,
    pub centralizer_dim: usize,
    pub product_side_dim: usize,
    pub equal: bool,
}

/// Checks the centralizer identity for generators `e_i` (`i` in `indices`,
/// 1-based, odd count) with `f(e_i) = 1`.
pub fn lemma22_check(form: &Arc<DiagonalForm>, indices: &[usize]) -> Result<CentralizerIdentityReport, CliffordError> {
    let k = indices.len();
    if k % 2 == 0 {
        return Err(CliffordError::EvenCount(k));
    }
    let n = form.dim();
    indices_mask(indices, n)?;
    for &i in indices {
        if !form.diag[i - 1].is_one() {
            return Err(CliffordError::NotUnitNorm(i));
        }
    }
    let alg = CliffordAlgebra { form: Arc::clone(form) };
    let vs: Vec<Multivector> = indices.iter().map(|&i| alg.generator(i)).collect::<Result<_, _>>()?;
    let lhs = alg.centralizer(&vs)?;

    let span = Subspace::coordinate(form.field, n, indices)?;
    let complement = span.orthogonal_complement(form);
    let even = subalgebra_basis(form, &complement)?.even();
    let mut v = Multivector::one(form);
    for x in &vs {
        v = v.mul(x)?;
    }
    let mut rhs = even.clone();
    for b in &even {
        rhs.push(v.mul(b)?);
    }

    let dim = alg.dim();
    let lhs_c: Vec<Vector> = lhs.iter().map(Multivector::coords).collect();
    let rhs_c: Vec<Vector> = rhs.iter().map(Multivector::coords).collect();
    let product_side_dim = linalg::rank(rhs_c.clone(), dim);
    let equal = linalg::same_span(&lhs_c, &rhs_c, dim);
    Ok(CentralizerIdentityReport { n, indices: indices.to_vec(), centralizer_dim: lhs.len(), product_side_dim, equal })
}

/// Per-summand data verified by [`structure_id`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandCheck {
    pub dim: usize,
    pub center_dim: usize,
    pub radical_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub profile: AlgebraProfile,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub summands: Vec<SummandCheck>,
}

/// Identifies `Cl(V, f)` as `M_{2^{n/2}}` (n even) or `M_{2^{(n-1)/2}} ⊕ M_{2^{(n-1)/2}}`
/// (n odd), verifying center, radical, and (odd case) the central idempotents
/// and their summands. The form must visibly split over its field.
pub fn structure_id(form: &Arc<DiagonalForm>) -> Result<StructureReport, CliffordError> {
    form.check_split()?;
    let n = form.dim();
    let field = form.field;
    let alg = CliffordAlgebra { form: Arc::clone(form) };
    let table = alg.table();
    let radical_dim = structure::radical_dim(&table)?;
    let center = alg.center()?;
    if radical_dim != 0 {
        return Err(CliffordError::Internal(format!("radical has dimension {radical_dim}")));
    }

    if n % 2 == 0 {
        if center.len() != 1 {
            return Err(CliffordError::Internal(format!("center has dimension {}", center.len())));
        }
        return Ok(StructureReport {
            profile: AlgebraProfile::simple(1 << (n / 2)),
            center_dim: 1,
            radical_dim,
            summands: vec![SummandCheck { dim: 1 << n, center_dim: 1, radical_dim: 0 }],
        });
    }

    if center.len() != 2 {
        return Err(CliffordError::Internal(format!("center has dimension {}", center.len())));
    }
    let one = Multivector::one(form);
    let omega = center
        .iter()
        .find(|c| c.terms.keys().any(|&m| m != 0))
        .ok_or_else(|| CliffordError::Internal("center has no non-scalar element".into()))?;
    // ω² = p + q·ω inside the center; shifting by q/2 leaves a scalar square
    let sq = omega.mul(omega)?;
    let coeffs = linalg::solve_combination(&[one.coords(), omega.coords()], &sq.coords(), field)
        .ok_or_else(|| CliffordError::Internal("center is not closed under multiplication".into()))?;
    let half = Rational::new(1.into(), 2.into());
    let shifted = omega.sub(&one.scale(&coeffs[1].scale(&half)))?;
    let c = shifted.mul(&shifted)?.coeff(0);
    let root = c.sqrt().ok_or_else(|| CliffordError::NonSplit {
        field: field.to_string(),
        reason: format!("central element squares to {c}, which has no square root in the field"),
    })?;
    let unit_central = shifted.scale(&root.inv().expect("nonzero root"));
    let idempotents = [
        one.add(&unit_central)?.scale(&field.from_rational(half.clone())),
        one.sub(&unit_central)?.scale(&field.from_rational(half)),
    ];
    let [e0, e1] = &idempotents;
    if e0.mul(e0)? != *e0 || e1.mul(e1)? != *e1 || !e0.mul(e1)?.is_zero() || e0.add(e1)? != one {
        return Err(CliffordError::Internal("central idempotents fail to decompose the unit".into()));
    }

    let mut summands = Vec::new();
    for e in &idempotents {
        let products: Vec<Vector> = (0..alg.dim() as u64)
            .map(|m| e.mul(&Multivector::basis(form, m)).map(|x| x.coords()))
            .collect::<Result<_, _>>()?;
        let ech = linalg::row_reduce(products, alg.dim());
        let basis = ech.rows;
        let check = SummandCheck {
            dim: basis.len(),
            center_dim: table.center_of_span(&basis).len(),
            radical_dim: table.ideal_radical_dim(&basis),
        };
        if check.dim != 1 << (n - 1) || check.center_dim != 1 || check.radical_dim != 0 {
            return Err(CliffordError::Internal(format!("summand check failed: {check:?}")));
        }
        summands.push(check);
    }
    Ok(StructureReport {
        profile: AlgebraProfile::repeated(1 << ((n - 1) / 2), 2),
        center_dim: 2,
        radical_dim,
        summands,
    })
}
