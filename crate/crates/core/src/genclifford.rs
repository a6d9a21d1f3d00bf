//! Generalized Clifford algebras `Clg(l, m)`: generators `x_1, …, x_m` with
//! `x_i^l = 1` and `x_j x_i = ξ x_i x_j` for `i < j`, `ξ` a primitive `l`-th
//! root of unity.
//!
//! Elements are finite sums of ordered monomials `x^k = x_1^{k_1} ⋯ x_m^{k_m}`,
//! `0 <= k_i < l`. When monomials are indexed (structure tables, coordinate
//! vectors) the index is `Σ k_i l^{i-1}`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactnum::{kernel_mod, CycloField, Cyclotomic, IntMatrix, Rational};
use crate::linalg::{self, Vector};
use crate::profile::AlgebraProfile;
use crate::structure::{self, Algebra, StructureError, StructureTable};

/// Largest `l^m` for which a structure table is built.
pub const TABLE_LIMIT: u64 = 4096;

pub type Matrix = Vec<Vector>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GCError {
    #[error("need l >= 2 and m >= 1 with l^m < 2^32, got l = {l}, m = {m}")]
    InvalidParams { l: u32, m: usize },
    #[error("{field} has no primitive {l}-th root of unity")]
    FieldLacksRoot { l: u32, field: String },
    #[error("operands belong to different algebras")]
    ParamsMismatch,
    #[error("generator index {index} out of range 1..={m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("scalar lives in Q(ζ_{got}) but the algebra is over Q(ζ_{expected})")]
    FieldMismatch { expected: u32, got: u32 },
    #[error("span is not invariant under φ_{index}: φ_{index}({witness}) leaves it")]
    NotInvariant { index: usize, witness: String },
    #[error("the clock–shift representation needs an even number of generators, got {0}")]
    OddGeneratorCount(usize),
    #[error("no {l}-th root of {scalar} in {field}; splitting needs a field extension")]
    FieldExtension { scalar: String, l: u32, field: String },
    #[error("algebra of dimension {0} exceeds the structure-table limit {TABLE_LIMIT}")]
    TooLarge(u64),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// `(l, m)` together with the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GCParams {
    l: u32,
    m: usize,
    field: CycloField,
}

impl GCParams {
    /// Coefficients in `Q(ξ_l)` for odd `l` and `Q(ξ_{2l})` for even `l`,
    /// which is where `Clg(l, m)` splits.
    pub fn new(l: u32, m: usize) -> Result<Self, GCError> {
        let order = if l % 2 == 0 { 2 * l } else { l };
        let field = CycloField::new(order.max(1)).map_err(|_| GCError::InvalidParams { l, m })?;
        Self::with_field(l, m, field)
    }

    /// Any field containing a primitive `l`-th root of unity.
    pub fn with_field(l: u32, m: usize, field: CycloField) -> Result<Self, GCError> {
        let fits = l >= 2 && m >= 1 && (l as u64).checked_pow(m as u32).is_some_and(|d| d < 1 << 32);
        if !fits {
            return Err(GCError::InvalidParams { l, m });
        }
        if !field.has_root_of_unity(l) {
            return Err(GCError::FieldLacksRoot { l, field: field.to_string() });
        }
        Ok(GCParams { l, m, field })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> CycloField {
        self.field
    }

    /// `l^m`.
    pub fn dim(&self) -> u64 {
        (self.l as u64).pow(self.m as u32)
    }

    /// `ξ^k` for the fixed primitive `l`-th root `ξ`, which is `ζ_n^{n/l}` when `l | n`.
    pub fn xi_pow(&self, k: i64) -> Cyclotomic {
        let k = k.rem_euclid(self.l as i64);
        let order = self.field.order() as i64;
        if order % self.l as i64 == 0 {
            return self.field.zeta_pow(order / self.l as i64 * k);
        }
        let step = (self.field.roots_of_unity_count() / self.l as u64) as i64;
        self.field.unit_root_pow(step * k)
    }

    pub fn monomial_index(&self, exps: &[u32]) -> usize {
        exps.iter().rev().fold(0usize, |acc, &k| acc * self.l as usize + k as usize)
    }

    pub fn monomial_exps(&self, mut index: usize) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let k = (index % self.l as usize) as u32;
                index /= self.l as usize;
                k
            })
            .collect()
    }

    /// Phase exponent `Σ_{i<j} a_j b_i` of `x^a · x^b = ξ^e x^{a+b}`, reduced mod `l`.
    pub fn phase(&self, a: &[u32], b: &[u32]) -> u64 {
        let l = self.l as u64;
        let mut prefix = 0u64; // Σ_{i<j} b_i
        let mut e = 0u64;
        for (&aj, &bj) in a.iter().zip(b) {
            e = (e + aj as u64 * prefix) % l;
            prefix = (prefix + bj as u64) % l;
        }
        e
    }

    fn check_index(&self, i: usize) -> Result<(), GCError> {
        if i == 0 || i > self.m {
            return Err(GCError::IndexOutOfRange { index: i, m: self.m });
        }
        Ok(())
    }
}

impl fmt::Display for GCParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clg({}, {}) over {}", self.l, self.m, self.field)
    }
}

/// Element of `Clg(l, m)`: reduced exponent vector → nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct GCElement {
    params: GCParams,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl GCElement {
    pub fn zero(params: GCParams) -> Self {
        GCElement { params, terms: BTreeMap::new() }
    }

    pub fn scalar(params: GCParams, c: Cyclotomic) -> Self {
        let mut out = Self::zero(params);
        out.add_term(vec![0; params.m], &c);
        out
    }

    pub fn one(params: GCParams) -> Self {
        Self::scalar(params, params.field.one())
    }

    /// `x^k`; exponents are reduced mod `l`.
    pub fn monomial(params: GCParams, exps: &[i64]) -> Result<Self, GCError> {
        Self::from_terms(params, [(exps.to_vec(), params.field.one())])
    }

    /// Generator `x_i`, 1-based.
    pub fn generator(params: GCParams, i: usize) -> Result<Self, GCError> {
        params.check_index(i)?;
        let mut exps = vec![0; params.m];
        exps[i - 1] = 1;
        Self::monomial(params, &exps)
    }

    /// Sum of `coeff · x^exps`; exponents may be any integers and are reduced mod `l`.
    pub fn from_terms(
        params: GCParams,
        terms: impl IntoIterator<Item = (Vec<i64>, Cyclotomic)>,
    ) -> Result<Self, GCError> {
        let mut out = Self::zero(params);
        for (exps, c) in terms {
            if exps.len() != params.m {
                return Err(GCError::ExponentLength { expected: params.m, got: exps.len() });
            }
            if c.order() != params.field.order() {
                return Err(GCError::FieldMismatch { expected: params.field.order(), got: c.order() });
            }
            let reduced = exps.iter().map(|&k| k.rem_euclid(params.l as i64) as u32).collect();
            out.add_term(reduced, &c);
        }
        Ok(out)
    }

    /// Element with the given coordinates in the indexed monomial basis.
    pub fn from_coords(params: GCParams, coords: &[Cyclotomic]) -> Self {
        let mut out = Self::zero(params);
        for (i, c) in coords.iter().enumerate() {
            out.add_term(params.monomial_exps(i), c);
        }
        out
    }

    pub fn coords(&self) -> Vector {
        let mut v = vec![self.params.field.zero(); self.params.dim() as usize];
        for (k, c) in &self.terms {
            v[self.params.monomial_index(k)] = c.clone();
        }
        v
    }

    fn add_term(&mut self, exps: Vec<u32>, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let zero = self.params.field.zero();
        let entry = self.terms.entry(exps.clone()).or_insert(zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn params(&self) -> GCParams {
        self.params
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Cyclotomic> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Cyclotomic {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.params.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value, if the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(self.params.field.zero()),
            1 => self.terms.get(&vec![0; self.params.m]).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GCError> {
        if self.params != other.params {
            return Err(GCError::ParamsMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GCError> {
        self.add(&other.scale(&-self.params.field.one()))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.params);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GCError> {
        gc_mul(self, other)
    }

    /// `self^e` for `e >= 0`.
    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.params);
        for _ in 0..e {
            out = out.mul(self).expect("same params");
        }
        out
    }
}

impl fmt::Display for GCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mono: String = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}){mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GCElement({self})")
    }
}

/// Bilinear extension of `x^a · x^b = ξ^{Σ_{i<j} a_j b_i} x^{(a+b) mod l}`.
pub fn gc_mul(a: &GCElement, b: &GCElement) -> Result<GCElement, GCError> {
    if a.params != b.params {
        return Err(GCError::ParamsMismatch);
    }
    let p = a.params;
    let mut out = GCElement::zero(p);
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let exps: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| (x + y) % p.l).collect();
            let c = &(ca * cb) * &p.xi_pow(p.phase(ka, kb) as i64);
            out.add_term(exps, &c);
        }
    }
    Ok(out)
}

/// The automorphism `φ_i: x_j ↦ ξ^{δ_ij} x_j`.
pub fn phi(i: usize, a: &GCElement) -> Result<GCElement, GCError> {
    let p = a.params;
    p.check_index(i)?;
    let mut out = GCElement::zero(p);
    for (k, c) in &a.terms {
        out.add_term(k.clone(), &(c * &p.xi_pow(k[i - 1] as i64)));
    }
    Ok(out)
}

/// The decomposition `a = Σ_k x_i^k v_k` with `v_k` free of `x_i`; entry `k`
/// is `x_i^k v_k`. Obtained from `φ_i^s(a) = Σ_k ξ^{sk} x_i^k v_k`,
/// `s = 0..l-1`, by inverting the Vandermonde matrix `(ξ^{sk})`.
pub fn extract_components(a: &GCElement, i: usize) -> Result<Vec<GCElement>, GCError> {
    let p = a.params;
    p.check_index(i)?;
    let l = p.l as usize;
    let mut images = Vec::with_capacity(l);
    let mut cur = a.clone();
    for _ in 0..l {
        let next = phi(i, &cur)?;
        images.push(cur);
        cur = next;
    }
    let inv = linalg::inverse(&vandermonde(p), p.field)
        .ok_or_else(|| GCError::Internal("Vandermonde matrix is singular".into()))?;
    Ok(inv
        .iter()
        .map(|row| {
            row.iter()
                .zip(&images)
                .fold(GCElement::zero(p), |acc, (c, img)| acc.add(&img.scale(c)).expect("same params"))
        })
        .collect())
}

/// `(ξ^{sk})_{s,k}`.
pub fn vandermonde(p: GCParams) -> Matrix {
    let l = p.l as i64;
    (0..l).map(|s| (0..l).map(|k| p.xi_pow(s * k)).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpanReport {
    pub span_dim: usize,
    pub monomial_dim: usize,
    /// Exponent vectors of the monomials lying in the span.
    pub monomials: Vec<Vec<u32>>,
    pub equal: bool,
}

/// For a span invariant under every `φ_i`, finds the monomials it contains
/// by splitting along each variable in turn, and compares their span with
/// the input span.
pub fn invariant_span_check(basis: &[GCElement]) -> Result<InvariantSpanReport, GCError> {
    let Some(first) = basis.first() else {
        return Ok(InvariantSpanReport { span_dim: 0, monomial_dim: 0, monomials: vec![], equal: true });
    };
    let p = first.params;
    if basis.iter().any(|b| b.params != p) {
        return Err(GCError::ParamsMismatch);
    }
    let dim = p.dim() as usize;
    let coords: Vec<Vector> = basis.iter().map(GCElement::coords).collect();
    let ech = linalg::row_reduce(coords.clone(), dim);
    for i in 1..=p.m {
        for b in basis {
            let img = phi(i, b)?;
            if !ech.contains(&img.coords()) {
                return Err(GCError::NotInvariant { index: i, witness: b.to_string() });
            }
        }
    }

    let mut pieces: Vec<GCElement> = basis.to_vec();
    for i in 1..=p.m {
        let mut next = Vec::new();
        for piece in &pieces {
            next.extend(extract_components(piece, i)?.into_iter().filter(|c| !c.is_zero()));
        }
        pieces = next;
    }
    let mut monomials: Vec<Vec<u32>> = Vec::new();
    for piece in &pieces {
        if piece.terms.len() != 1 {
            return Err(GCError::Internal(format!("splitting left a non-monomial piece {piece}")));
        }
        let k = piece.terms.keys().next().expect("one term").clone();
        if !monomials.contains(&k) {
            monomials.push(k);
        }
    }
    monomials.sort();
    let mono_coords: Vec<Vector> = monomials
        .iter()
        .map(|k| {
            let mut v = vec![p.field.zero(); dim];
            v[p.monomial_index(k)] = p.field.one();
            v
        })
        .collect();
    Ok(InvariantSpanReport {
        span_dim: ech.rank(),
        monomial_dim: monomials.len(),
        equal: linalg::same_span(&coords, &mono_coords, dim),
        monomials,
    })
}

/// `K` with zero diagonal, `+1` above and `-1` below: `x^k` commutes with
/// `x_j` iff `(K k)_j ≡ 0 (mod l)`.
pub fn commutation_matrix(m: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..m).map(|j| (0..m).map(|i| (i > j) as i64 - (i < j) as i64).collect()).collect();
    IntMatrix::from_i64_rows(&rows).expect("rectangular")
}

/// Central monomials `x^k`, `k` ranging over `{k : K k ≡ 0 (mod l)}`, sorted
/// by exponent vector; each is checked against every generator.
pub fn center_basis(p: GCParams) -> Result<Vec<GCElement>, GCError> {
    let kernel = kernel_mod(&commutation_matrix(p.m), p.l as u64).map_err(|e| GCError::Internal(e.to_string()))?;
    let mut exps = kernel.elements(p.m);
    exps.sort();
    let gens: Vec<GCElement> = (1..=p.m).map(|i| GCElement::generator(p, i)).collect::<Result<_, _>>()?;
    exps.iter()
        .map(|k| {
            let z = GCElement::monomial(p, &k.iter().map(|&x| x as i64).collect::<Vec<_>>())?;
            for g in &gens {
                if z.mul(g)? != g.mul(&z)? {
                    return Err(GCError::Internal(format!("kernel monomial {z} does not commute with {g}")));
                }
            }
            Ok(z)
        })
        .collect()
}

/// Structure constants in the indexed monomial basis.
pub fn structure_table(p: GCParams) -> Result<StructureTable, GCError> {
    let dim = p.dim();
    if dim > TABLE_LIMIT {
        return Err(GCError::TooLarge(dim));
    }
    let dim = dim as usize;
    let mut unit = vec![p.field.zero(); dim];
    unit[0] = p.field.one();
    let exps: Vec<Vec<u32>> = (0..dim).map(|i| p.monomial_exps(i)).collect();
    let phases: Vec<Cyclotomic> = (0..p.l as i64).map(|k| p.xi_pow(k)).collect();
    Ok(StructureTable::from_fn(p.field, dim, unit, |a, b| {
        let sum: Vec<u32> = exps[a].iter().zip(&exps[b]).map(|(x, y)| (x + y) % p.l).collect();
        vec![(p.monomial_index(&sum), phases[p.phase(&exps[a], &exps[b]) as usize].clone())]
    })?)
}

/// Trace-form radical dimension of `Clg(l, m)`.
pub fn radical_dim(p: GCParams) -> Result<usize, GCError> {
    Ok(structure::radical_dim(&structure_table(p)?)?)
}

fn identity(n: usize, field: CycloField) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
}

fn kron(a: &Matrix, b: &Matrix, field: CycloField) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a[0].len(), b[0].len());
    let mut out = vec![vec![field.zero(); ca * cb]; ra * rb];
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, brow) in b.iter().enumerate() {
                for (t, y) in brow.iter().enumerate() {
                    if !y.is_zero() {
                        out[i * rb + k][j * cb + t] = x * y;
                    }
                }
            }
        }
    }
    out
}

fn mat_pow(a: &Matrix, e: u32, field: CycloField) -> Matrix {
    (0..e).fold(identity(a.len(), field), |acc, _| linalg::mat_mul(&acc, a, field))
}

fn mat_scale(a: &Matrix, c: &Cyclotomic) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

/// The scalar `c` with `a = c·I`, if any.
fn as_scalar_matrix(a: &Matrix) -> Option<Cyclotomic> {
    let c = a[0][0].clone();
    let ok = a
        .iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { *x == c } else { x.is_zero() }));
    ok.then_some(c)
}

/// Shift `X e_k = e_{k+1}` and clock `Z = diag(1, ξ, …, ξ^{l-1})`; `Z X = ξ X Z`.
pub fn clock_and_shift(p: GCParams) -> (Matrix, Matrix) {
    let l = p.l as usize;
    let f = p.field;
    let mut x = vec![vec![f.zero(); l]; l];
    let mut z = vec![vec![f.zero(); l]; l];
    for k in 0..l {
        x[(k + 1) % l][k] = f.one();
        z[k][k] = p.xi_pow(k as i64);
    }
    (x, z)
}

/// Matrices of size `l^{m/2}` for `x_1, …, x_m` (even `m`): pair `i` uses
/// slot `i` as `x_{2i-1} ↦ C⊗…⊗C⊗X⊗I⊗…`, `x_{2i} ↦ C⊗…⊗C⊗Z⊗I⊗…`, where
/// `C = γ Z X^{-1}` ξ-commutes with `X` and `Z` and `γ` makes `C^l = 1`.
/// All defining relations and the rank `l^m` of the monomial images are
/// checked before returning.
pub fn clock_shift_rep(p: GCParams) -> Result<Vec<Matrix>, GCError> {
    if p.m % 2 != 0 {
        return Err(GCError::OddGeneratorCount(p.m));
    }
    let f = p.field;
    let l = p.l as usize;
    let (x, z) = clock_and_shift(p);
    let pairs = p.m / 2;
    let string = if pairs > 1 {
        let x_inv = mat_pow(&x, p.l - 1, f);
        let zx = linalg::mat_mul(&z, &x_inv, f);
        let s = as_scalar_matrix(&mat_pow(&zx, p.l, f))
            .ok_or_else(|| GCError::Internal("(Z X^-1)^l is not scalar".into()))?;
        let target = s.inv().expect("invertible");
        let gamma = target.nth_root(p.l).ok_or_else(|| GCError::FieldExtension {
            scalar: target.to_string(),
            l: p.l,
            field: f.to_string(),
        })?;
        mat_scale(&zx, &gamma)
    } else {
        identity(l, f)
    };

    let mut images = Vec::with_capacity(p.m);
    for slot in 0..pairs {
        for local in [&x, &z] {
            let mut acc: Matrix = vec![vec![f.one()]];
            for t in 0..pairs {
                let factor = match t.cmp(&slot) {
                    std::cmp::Ordering::Less => &string,
                    std::cmp::Ordering::Equal => local,
                    std::cmp::Ordering::Greater => &identity(l, f),
                };
                acc = kron(&acc, factor, f);
            }
            images.push(acc);
        }
    }
    verify_representation(p, &images)?;
    Ok(images)
}

/// Image of `x^k` under generator images `gens`.
pub fn monomial_image(p: GCParams, gens: &[Matrix], exps: &[u32]) -> Matrix {
    let n = gens[0].len();
    let mut acc = identity(n, p.field);
    for (g, &e) in gens.iter().zip(exps) {
        for _ in 0..e {
            acc = linalg::mat_mul(&acc, g, p.field);
        }
    }
    acc
}

fn verify_representation(p: GCParams, gens: &[Matrix]) -> Result<(), GCError> {
    let f = p.field;
    let n = gens[0].len();
    let id = identity(n, f);
    for (i, g) in gens.iter().enumerate() {
        if mat_pow(g, p.l, f) != id {
            return Err(GCError::Internal(format!("image of x_{} does not have order {}", i + 1, p.l)));
        }
    }
    let xi = p.xi_pow(1);
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let lhs = linalg::mat_mul(&gens[j], &gens[i], f);
            let rhs = mat_scale(&linalg::mat_mul(&gens[i], &gens[j], f), &xi);
            if lhs != rhs {
                return Err(GCError::Internal(format!("x_{} x_{} = ξ x_{} x_{} fails", j + 1, i + 1, i + 1, j + 1)));
            }
        }
    }
    let dim = p.dim() as usize;
    let flat: Vec<Vector> = (0..dim).map(|idx| monomial_image(p, gens, &p.monomial_exps(idx)).concat()).collect();
    let rank = linalg::rank(flat, n * n);
    if rank != dim {
        return Err(GCError::Internal(format!("monomial images have rank {rank}, expected {dim}")));
    }
    Ok(())
}

/// Preimages of the standard matrix units `E_ij` under [`clock_shift_rep`].
pub fn pullback_matrix_units(p: GCParams) -> Result<Vec<Vec<GCElement>>, GCError> {
    let gens = clock_shift_rep(p)?;
    let n = gens[0].len();
    let dim = p.dim() as usize;
    let flat: Vec<Vector> = (0..dim).map(|idx| monomial_image(p, &gens, &p.monomial_exps(idx)).concat()).collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut target = vec![p.field.zero(); n * n];
                    target[i * n + j] = p.field.one();
                    let c = linalg::solve_combination(&flat, &target, p.field)
                        .ok_or_else(|| GCError::Internal(format!("E_{}{} is not in the image", i + 1, j + 1)))?;
                    Ok(GCElement::from_coords(p, &c))
                })
                .collect()
        })
        .collect()
}

/// Evidence gathered by [`wedderburn_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnReport {
    pub profile: AlgebraProfile,
    pub center_dim: usize,
    /// `z^l` for the central monomial `z = x^{(1,-1,1,…)}` (odd `m`).
    pub z_power: Option<Cyclotomic>,
    /// Dimension of each summand `e_k·Clg` (odd `m`).
    pub summand_dims: Vec<usize>,
}

pub fn wedderburn(p: GCParams) -> Result<AlgebraProfile, GCError> {
    Ok(wedderburn_report(p)?.profile)
}

/// Even `m`: the clock–shift representation is an isomorphism onto
/// `M_{l^{m/2}}`. Odd `m`: the normalized central monomial yields `l`
/// orthogonal central idempotents `e_k`; each `e_k·Clg` has dimension
/// `l^{m-1}`, zero radical and a 1-dimensional center, and the generators
/// `x_1, …, x_{m-1}` map injectively into it, so `e_k·Clg ≅ Clg(l, m-1)`.
pub fn wedderburn_report(p: GCParams) -> Result<WedderburnReport, GCError> {
    let l = p.l as u64;
    if p.m % 2 == 0 {
        clock_shift_rep(p)?;
        return Ok(WedderburnReport {
            profile: AlgebraProfile::simple(l.pow(p.m as u32 / 2)),
            center_dim: 1,
            z_power: None,
            summand_dims: vec![p.dim() as usize],
        });
    }

    let center = center_basis(p)?;
    if center.len() != p.l as usize {
        return Err(GCError::Internal(format!("center has {} monomials, expected {}", center.len(), p.l)));
    }
    let z_exps: Vec<i64> = (0..p.m).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let z = GCElement::monomial(p, &z_exps)?;
    let zl = z.pow(p.l);
    let s = zl
        .as_scalar()
        .filter(|s| !s.is_zero())
        .ok_or_else(|| GCError::Internal(format!("z^l = {zl} is not a nonzero scalar")))?;
    let target = s.inv().expect("nonzero");
    let c = target.nth_root(p.l).ok_or_else(|| GCError::FieldExtension {
        scalar: s.to_string(),
        l: p.l,
        field: p.field.to_string(),
    })?;
    let zt = z.scale(&c);
    let powers: Vec<GCElement> = (0..p.l).map(|s| zt.pow(s)).collect();
    let inv_l = p.field.from_rational(Rational::new(1.into(), (p.l as i64).into()));
    let idempotents: Vec<GCElement> = (0..p.l as i64)
        .map(|k| {
            powers
                .iter()
                .enumerate()
                .fold(GCElement::zero(p), |acc, (s, zs)| {
                    acc.add(&zs.scale(&p.xi_pow(-k * s as i64))).expect("same params")
                })
                .scale(&inv_l)
        })
        .collect();

    let one = GCElement::one(p);
    let total = idempotents.iter().try_fold(GCElement::zero(p), |acc, e| acc.add(e))?;
    if total != one {
        return Err(GCError::Internal("idempotents do not sum to 1".into()));
    }
    for (a, ea) in idempotents.iter().enumerate() {
        for (b, eb) in idempotents.iter().enumerate() {
            let prod = ea.mul(eb)?;
            let expected = if a == b { ea.clone() } else { GCElement::zero(p) };
            if prod != expected {
                return Err(GCError::Internal(format!("e_{a}·e_{b} is wrong")));
            }
        }
    }

    let table = structure_table(p)?;
    let dim = p.dim() as usize;
    let sub = GCParams::with_field(p.l, p.m - 1, p.field).ok();
    let mut summand_dims = Vec::new();
    for (k, e) in idempotents.iter().enumerate() {
        let span: Vec<Vector> = (0..dim)
            .map(|idx| e.mul(&GCElement::from_coords(p, &table.basis_vector(idx))).map(|x| x.coords()))
            .collect::<Result<_, _>>()?;
        let basis = linalg::row_reduce(span, dim).rows;
        let expected = dim / p.l as usize;
        let radical = table.ideal_radical_dim(&basis);
        let center_dim = table.center_of_span(&basis).len();
        if basis.len() != expected || radical != 0 || center_dim != 1 {
            return Err(GCError::Internal(format!(
                "summand {k}: dimension {}, radical {radical}, center {center_dim}",
                basis.len()
            )));
        }
        // monomials without x_m land on a basis of the summand
        let restricted: Vec<Vector> = (0..dim)
            .filter(|idx| p.monomial_exps(*idx)[p.m - 1] == 0)
            .map(|idx| e.mul(&GCElement::from_coords(p, &table.basis_vector(idx))).map(|x| x.coords()))
            .collect::<Result<_, _>>()?;
        if linalg::rank(restricted, dim) != expected {
            return Err(GCError::Internal(format!("summand {k} is not generated by x_1..x_(m-1)")));
        }
        if let Some(sub) = sub.filter(|s| s.m % 2 == 0) {
            clock_shift_rep(sub)?;
        }
        summand_dims.push(basis.len());
    }

    Ok(WedderburnReport {
        profile: AlgebraProfile::repeated(l.pow((p.m as u32 - 1) / 2), p.l as usize),
        center_dim: center.len(),
        z_power: Some(s),
        summand_dims,
    })
}

/// `Clg(l, m)` as an [`Algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GCAlgebra(pub GCParams);

impl Algebra for GCAlgebra {
    type Elem = GCElement;

    fn field(&self) -> CycloField {
        self.0.field
    }

    fn zero(&self) -> GCElement {
        GCElement::zero(self.0)
    }

    fn one(&self) -> GCElement {
        GCElement::one(self.0)
    }

    fn add(&self, a: &GCElement, b: &GCElement) -> GCElement {
        a.add(b).expect("elements of one algebra")
    }

    fn mul(&self, a: &GCElement, b: &GCElement) -> GCElement {
        a.mul(b).expect("elements of one algebra")
    }

    fn contains(&self, a: &GCElement) -> bool {
        a.params == self.0
    }
}
