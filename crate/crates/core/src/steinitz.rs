//! Steinitz (supernatural) numbers `Π p^{r_p}` with `r_p ∈ N ∪ {∞}`.
//!
//! Only finitely supported values and the top element `I = Π p^∞` are
//! representable; every constructor in this crate produces one of those.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinitzError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent of {0} must be positive")]
    ZeroExponent(u64),
    #[error("prime {0} listed twice")]
    DuplicatePrime(u64),
    #[error("lcm of an empty set")]
    EmptySet,
    #[error("values must be positive, got {0}")]
    NonPositive(u64),
    #[error("periodic multiplier must be at least 2, got {0}")]
    BadTail(u64),
}

/// Exponent of a prime: a positive integer or ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exponent {
    Finite(u64),
    Infinite,
}

impl Exponent {
    fn add(self, other: Exponent) -> Exponent {
        match (self, other) {
            (Exponent::Finite(a), Exponent::Finite(b)) => Exponent::Finite(a + b),
            _ => Exponent::Infinite,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Exponent::Infinite
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Infinite => write!(f, "∞"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SteinitzNumber {
    exponents: BTreeMap<u64, Exponent>,
    top: bool,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    let mut d = 2u64;
    while d * d <= n {
        while n % d == 0 {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

impl SteinitzNumber {
    pub fn one() -> Self {
        SteinitzNumber { exponents: BTreeMap::new(), top: false }
    }

    /// The greatest element `I`, every prime with exponent ∞.
    pub fn top() -> Self {
        SteinitzNumber { exponents: BTreeMap::new(), top: true }
    }

    pub fn from_u64(n: u64) -> Result<Self, SteinitzError> {
        if n == 0 {
            return Err(SteinitzError::NonPositive(0));
        }
        let exponents = factorize(n).into_iter().map(|(p, e)| (p, Exponent::Finite(e))).collect();
        Ok(SteinitzNumber { exponents, top: false })
    }

    /// `p^∞`.
    pub fn prime_power_infinite(p: u64) -> Result<Self, SteinitzError> {
        Self::from_factors([(p, Exponent::Infinite)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (u64, Exponent)>) -> Result<Self, SteinitzError> {
        let mut exponents = BTreeMap::new();
        for (p, e) in factors {
            if !is_prime(p) {
                return Err(SteinitzError::NotPrime(p));
            }
            if e == Exponent::Finite(0) {
                return Err(SteinitzError::ZeroExponent(p));
            }
            if exponents.insert(p, e).is_some() {
                return Err(SteinitzError::DuplicatePrime(p));
            }
        }
        Ok(SteinitzNumber { exponents, top: false })
    }

    pub fn is_top(&self) -> bool {
        self.top
    }

    pub fn is_finite(&self) -> bool {
        !self.top && self.exponents.values().all(|e| !e.is_infinite())
    }

    /// Exponent of `p`; `None` means zero.
    pub fn exponent(&self, p: u64) -> Option<Exponent> {
        if self.top {
            return Some(Exponent::Infinite);
        }
        self.exponents.get(&p).copied()
    }

    /// The stored (prime, exponent) pairs in increasing prime order; empty for `I`.
    pub fn factors(&self) -> impl Iterator<Item = (u64, Exponent)> + '_ {
        self.exponents.iter().map(|(&p, &e)| (p, e))
    }

    /// The integer value when every exponent is finite.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if !self.is_finite() {
            return None;
        }
        let mut acc = BigUint::one();
        for (&p, e) in &self.exponents {
            let Exponent::Finite(e) = e else { unreachable!() };
            acc *= num_traits::pow(BigUint::from(p), *e as usize);
        }
        Some(acc)
    }

    fn combine(&self, other: &Self, f: impl Fn(Option<Exponent>, Option<Exponent>) -> Option<Exponent>) -> Self {
        let mut exponents = BTreeMap::new();
        for p in self.exponents.keys().chain(other.exponents.keys()) {
            if let Some(e) = f(self.exponents.get(p).copied(), other.exponents.get(p).copied()) {
                exponents.insert(*p, e);
            }
        }
        SteinitzNumber { exponents, top: false }
    }

    /// Prime-wise exponent addition; ∞ and `I` absorb.
    pub fn mul(&self, other: &Self) -> Self {
        if self.top || other.top {
            return Self::top();
        }
        self.combine(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(a.add(b)),
            (a, b) => a.or(b),
        })
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        if other.top {
            return true;
        }
        if self.top {
            return false;
        }
        self.exponents.iter().all(|(p, e)| other.exponents.get(p).is_some_and(|f| e <= f))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.top || other.top {
            return Self::top();
        }
        self.combine(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        if self.top {
            return other.clone();
        }
        if other.top {
            return self.clone();
        }
        self.combine(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            _ => None,
        })
    }

    /// Least common multiple of `values`, followed, when `tail` is present,
    /// by the chain `lcm(values)·t, lcm(values)·t², …`: every prime of `t`
    /// then has exponent ∞.
    pub fn lcm_of_set(values: &[u64], tail: Option<u64>) -> Result<Self, SteinitzError> {
        if values.is_empty() {
            return Err(SteinitzError::EmptySet);
        }
        let mut acc = Self::one();
        for &v in values {
            acc = acc.lcm(&Self::from_u64(v)?);
        }
        if let Some(t) = tail {
            if t < 2 {
                return Err(SteinitzError::BadTail(t));
            }
            for p in factorize(t).into_keys() {
                acc.exponents.insert(p, Exponent::Infinite);
            }
        }
        Ok(acc)
    }
}

impl PartialOrd for SteinitzNumber {
    /// The divisibility order.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.divides(other), other.divides(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for SteinitzNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.top {
            return write!(f, "I");
        }
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(p, e)| match e {
                Exponent::Finite(1) => p.to_string(),
                e => format!("{p}^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}
