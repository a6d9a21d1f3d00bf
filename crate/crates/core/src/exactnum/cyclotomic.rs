//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! An element is a coefficient vector in the power basis `1, ζ, …, ζ^{φ(n)-1}`,
//! always reduced modulo the cyclotomic polynomial Φ_n, so equality of
//! elements is equality of coefficient vectors. Order 1 (and 2) give Q itself.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, RatPoly};
use super::NumError;

pub type Rational = BigRational;

/// Per-order data: Φ_n and the reductions of ζ^k for `0 <= k < n`.
#[derive(Debug)]
pub(crate) struct CycloData {
    phi: IntPoly,
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<CycloData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn phi_recursive(n: u32, memo: &mut HashMap<u32, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut divisor = IntPoly::one();
    for d in (1..n).filter(|d| n % d == 0) {
        divisor = divisor.mul(&phi_recursive(d, memo));
    }
    let phi = IntPoly::x_pow_minus_one(n as usize)
        .div_exact_monic(&divisor)
        .expect("x^n - 1 is divisible by the product of Φ_d over proper divisors");
    memo.insert(n, phi.clone());
    phi
}

pub(crate) fn cyclo_data(order: u32) -> Arc<CycloData> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(d) = cache().lock().unwrap().get(&order) {
        return Arc::clone(d);
    }
    let phi = phi_recursive(order, &mut HashMap::new());
    let degree = phi.degree().unwrap();
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by x, then fold the overflow coefficient back via Φ
        let top = cur.pop().unwrap();
        cur.insert(0, BigInt::zero());
        if !top.is_zero() {
            for (c, p) in cur.iter_mut().zip(phi.coeffs()) {
                *c -= &top * p;
            }
        }
    }
    let data = Arc::new(CycloData { phi, degree, powers });
    cache().lock().unwrap().entry(order).or_insert(data).clone()
}

/// The n-th cyclotomic polynomial Φ_n, computed by exact division of
/// `x^n - 1` by the product of Φ_d over the proper divisors `d` of `n`.
pub fn cyclotomic_poly(n: u32) -> IntPoly {
    cyclo_data(n).phi.clone()
}

/// Euler's totient, i.e. the degree of Φ_n.
pub fn totient(n: u32) -> usize {
    cyclo_data(n).degree
}

/// A cyclotomic field Q(ζ_n), identified by its order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloField {
    order: u32,
}

impl CycloField {
    pub fn new(order: u32) -> Result<Self, NumError> {
        if order == 0 {
            return Err(NumError::InvalidOrder(order));
        }
        Ok(CycloField { order })
    }

    /// Q, represented as Q(ζ_1).
    pub fn rationals() -> Self {
        CycloField { order: 1 }
    }

    /// Q(i) = Q(ζ_4).
    pub fn gaussian() -> Self {
        CycloField { order: 4 }
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn degree(self) -> usize {
        totient(self.order)
    }

    pub fn zero(self) -> Cyclotomic {
        Cyclotomic::zero(self.order)
    }

    pub fn one(self) -> Cyclotomic {
        Cyclotomic::one(self.order)
    }

    pub fn from_int(self, n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(self.order, Rational::from_integer(n.into()))
    }

    pub fn from_rational(self, r: Rational) -> Cyclotomic {
        Cyclotomic::from_rational(self.order, r)
    }

    /// ζ_n^k for the field's generator ζ_n.
    pub fn zeta_pow(self, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.order, k)
    }

    /// Whether the field contains a primitive `l`-th root of unity, i.e. `l | lcm(2, n)`.
    pub fn has_root_of_unity(self, l: u32) -> bool {
        self.roots_of_unity_count() % l as u64 == 0
    }

    /// Size of the group of roots of unity in the field: lcm(2, n).
    pub fn roots_of_unity_count(self) -> u64 {
        (self.order as u64).lcm(&2)
    }

    /// ω^j for a fixed generator ω of the roots of unity in the field.
    pub fn unit_root_pow(self, j: i64) -> Cyclotomic {
        let n = self.order as i64;
        if n % 2 == 0 {
            self.zeta_pow(j)
        } else {
            // -ζ generates μ_{2n} when n is odd
            let z = self.zeta_pow(j);
            if j.rem_euclid(2) == 1 {
                -z
            } else {
                z
            }
        }
    }
}

impl fmt::Display for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 | 2 => write!(f, "Q"),
            n => write!(f, "Q(ζ_{n})"),
        }
    }
}

/// Element of Q(ζ_n) in the reduced power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        let d = totient(order);
        Cyclotomic { order, coeffs: vec![Rational::zero(); d] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    /// Builds an element from power-basis coefficients; the vector must have
    /// exactly φ(order) entries.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self, NumError> {
        if order == 0 {
            return Err(NumError::InvalidOrder(order));
        }
        let d = totient(order);
        if coeffs.len() != d {
            return Err(NumError::CoefficientLength { order, expected: d, got: coeffs.len() });
        }
        Ok(Cyclotomic { order, coeffs })
    }

    /// Reduces an arbitrary polynomial in ζ (coefficients low first) modulo Φ_order.
    pub fn from_poly(order: u32, poly: &[Rational]) -> Self {
        let data = cyclo_data(order);
        let n = order as usize;
        let mut out = vec![Rational::zero(); data.degree];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            accumulate_power(&mut out, &data.powers[k % n], c);
        }
        Cyclotomic { order, coeffs: out }
    }

    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let data = cyclo_data(order);
        let idx = k.rem_euclid(order as i64) as usize;
        let coeffs = data.powers[idx].iter().cloned().map(Rational::from_integer).collect();
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn field(&self) -> CycloField {
        CycloField { order: self.order }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number when it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn check_order(&self, other: &Self) -> Result<(), NumError> {
        if self.order != other.order {
            return Err(NumError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        let inv = other.inv().ok_or(NumError::DivisionByZero)?;
        Ok(self.mul_unchecked(&inv))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.coeffs.len();
        if d == 1 {
            return Cyclotomic { order: self.order, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let data = cyclo_data(self.order);
        let mut out: Vec<Rational> = prod[..d].to_vec();
        for (k, c) in prod.iter().enumerate().skip(d) {
            if !c.is_zero() {
                accumulate_power(&mut out, &data.powers[k % self.order as usize], c);
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplies by ζ^k without a general product.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let n = self.order as i64;
        let shift = k.rem_euclid(n);
        if shift == 0 {
            return self.clone();
        }
        let data = cyclo_data(self.order);
        let mut out = vec![Rational::zero(); data.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = ((i as i64 + shift) % n) as usize;
                accumulate_power(&mut out, &data.powers[idx], c);
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(self.order, r.recip()));
        }
        let data = cyclo_data(self.order);
        let modulus = RatPoly::from_int(&data.phi);
        let inv = RatPoly::new(self.coeffs.clone()).inverse_mod(&modulus)?;
        let mut coeffs = inv.into_coeffs();
        coeffs.resize(data.degree, Rational::zero());
        Some(Cyclotomic { order: self.order, coeffs })
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// An `n`-th root inside the field, searched among elements of the form
    /// `q · ω` with `q` rational and `ω` a root of unity of the field.
    /// Returns `None` when no root of that shape exists; roots of other
    /// shapes (such as √2 ∈ Q(ζ_8)) are not found.
    pub fn nth_root(&self, n: u32) -> Option<Self> {
        assert!(n >= 1);
        if self.is_zero() {
            return Some(self.clone());
        }
        let field = self.field();
        let count = field.roots_of_unity_count() as i64;
        for j in 0..count {
            let candidate = self * &field.unit_root_pow(-j);
            let Some(q) = candidate.as_rational() else { continue };
            let Some(s) = rational_nth_root(q, n) else { continue };
            // need t with n·t ≡ j (mod count)
            if let Some(t) = (0..count).find(|t| (n as i64 * t - j).rem_euclid(count) == 0) {
                return Some(field.unit_root_pow(t).scale(&s));
            }
        }
        None
    }

    pub fn sqrt(&self) -> Option<Self> {
        self.nth_root(2)
    }
}

fn accumulate_power(out: &mut [Rational], power: &[BigInt], c: &Rational) {
    for (o, p) in out.iter_mut().zip(power) {
        if !p.is_zero() {
            *o += c * p;
        }
    }
}

/// Real `n`-th root of a rational, when it is rational.
fn rational_nth_root(q: &Rational, n: u32) -> Option<Rational> {
    if q.is_negative() && n % 2 == 0 {
        return None;
    }
    let root = |x: &BigInt| -> Option<BigInt> {
        let r = x.abs().nth_root(n);
        (num_traits::pow(r.clone(), n as usize) == x.abs()).then_some(r)
    };
    let num = root(q.numer())?;
    let den = root(q.denom())?;
    let r = Rational::new(num, den);
    Some(if q.is_negative() { -r } else { r })
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})ζ")?,
                _ => write!(f, "({c})ζ^{k}")?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[Q(ζ_{})] {}", self.order, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(8), IntPoly::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn zeta_relations() {
        for l in 1..=12u32 {
            let z = Cyclotomic::zeta_pow(l, 1);
            let zl = z.pow(l as i64).unwrap();
            assert!(zl.is_one(), "ζ_{l}^{l} must be 1");
            assert!((&z * &Cyclotomic::zeta_pow(l, l as i64 - 1)).is_one());
        }
        let i = Cyclotomic::zeta_pow(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_rational(4, q(-1, 1)));
        let w = Cyclotomic::zeta_pow(3, 1);
        let s = &(&Cyclotomic::one(3) + &w) + &(&w * &w);
        assert!(s.is_zero());
    }

    #[test]
    fn division_and_errors() {
        let a = &Cyclotomic::one(5) + &Cyclotomic::zeta_pow(5, 2);
        let b = Cyclotomic::from_rational(5, q(3, 7));
        let c = a.checked_div(&b).unwrap();
        assert_eq!(&c * &b, a);
        assert_eq!(a.checked_div(&Cyclotomic::zero(5)), Err(NumError::DivisionByZero));
        assert!(matches!(a.checked_add(&Cyclotomic::one(3)), Err(NumError::OrderMismatch { left: 5, right: 3 })));
        assert!(Cyclotomic::from_coeffs(4, vec![q(1, 1)]).is_err());
    }

    #[test]
    fn mul_zeta_pow_matches_product() {
        let a = Cyclotomic::from_coeffs(8, vec![q(1, 2), q(-3, 1), q(0, 1), q(5, 4)]).unwrap();
        for k in -9..9 {
            assert_eq!(a.mul_zeta_pow(k), &a * &Cyclotomic::zeta_pow(8, k));
        }
    }

    #[test]
    fn roots_found_when_shaped_like_unit_times_rational() {
        let minus_one = Cyclotomic::from_rational(4, q(-1, 1));
        let r = minus_one.sqrt().unwrap();
        assert_eq!(&r * &r, minus_one);
        assert!(Cyclotomic::from_rational(1, q(-1, 1)).sqrt().is_none());
        assert_eq!(Cyclotomic::from_rational(1, q(9, 4)).sqrt().unwrap(), Cyclotomic::from_rational(1, q(3, 2)));
        // -1 has a 4th root in Q(ζ_8) (namely ζ_8) but not in Q(ζ_4)
        let m8 = Cyclotomic::from_rational(8, q(-1, 1));
        let r8 = m8.nth_root(4).unwrap();
        assert_eq!(r8.pow(4).unwrap(), m8);
        assert!(Cyclotomic::from_rational(4, q(-1, 1)).nth_root(4).is_none());
        // cube roots in Q are real
        let c = Cyclotomic::from_rational(1, q(-8, 27));
        assert_eq!(c.nth_root(3).unwrap(), Cyclotomic::from_rational(1, q(-2, 3)));
        // √2 ∈ Q(ζ_8) exists but is not of the searched shape
        assert!(Cyclotomic::from_rational(8, q(2, 1)).sqrt().is_none());
    }

    #[test]
    fn field_roots_of_unity() {
        assert!(CycloField::new(3).unwrap().has_root_of_unity(6));
        assert!(!CycloField::new(4).unwrap().has_root_of_unity(8));
        let f = CycloField::new(3).unwrap();
        let w = f.unit_root_pow(1);
        assert!(w.pow(6).unwrap().is_one());
        assert!(!w.pow(3).unwrap().is_one());
    }
}
