//! Countable-dimensional unital locally matrix algebras modeled as chains
//! of unital embeddings `M_{n_1} ⊂ M_{n_2} ⊂ …`, and their Steinitz invariant.
//!
//! A chain lists `n_1 | n_2 | … | n_r` and optionally a multiplier `t >= 2`
//! continuing it as `n_r t, n_r t², …`. The set `D(A)` of sizes `n` with a
//! unital `M_n ⊆ A` is modeled as the divisors of the chain terms, and the
//! isomorphism and universal-equivalence decisions compare Steinitz numbers.
//! The decisions are only meaningful for countable dimension.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::profile::AlgebraProfile;
use crate::steinitz::{Exponent, SteinitzError, SteinitzNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocmatError {
    #[error("chain has no sizes")]
    Empty,
    #[error("chain sizes must be positive")]
    ZeroSize,
    #[error("chain sizes must divide each other: {prev} does not divide {next}")]
    NotDivisible { prev: u64, next: u64 },
    #[error("tail multiplier must be at least 2, got {0}")]
    BadTail(u64),
    #[error("n must be positive")]
    NonPositive,
    #[error("chain sizes overflow 64 bits")]
    Overflow,
    #[error("the top Steinitz number has infinite support and no chain model")]
    TopNotRealizable,
    #[error("{0} has no infinite exponent")]
    NoInfiniteExponent(String),
    #[error("probe {n}: membership differs between equal Steinitz numbers")]
    ProbeInconsistent { n: u64 },
    #[error(transparent)]
    Steinitz(#[from] SteinitzError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingChain {
    sizes: Vec<u64>,
    tail: Option<u64>,
    label: String,
}

impl EmbeddingChain {
    pub fn new(sizes: Vec<u64>, tail: Option<u64>, label: impl Into<String>) -> Result<Self, LocmatError> {
        if sizes.is_empty() {
            return Err(LocmatError::Empty);
        }
        if sizes.contains(&0) {
            return Err(LocmatError::ZeroSize);
        }
        if let Some(w) = sizes.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(LocmatError::NotDivisible { prev: w[0], next: w[1] });
        }
        if let Some(t) = tail.filter(|&t| t < 2) {
            return Err(LocmatError::BadTail(t));
        }
        Ok(EmbeddingChain { sizes, tail, label: label.into() })
    }

    /// The chain `M_2 ⊂ M_4 ⊂ …` of a Clifford algebra on a countable-dimensional
    /// space with nondegenerate form.
    pub fn clifford_countable() -> Self {
        Self::new(vec![2], Some(2), "Cl(V,f), dim V countable").expect("valid")
    }

    /// The chain `M_l ⊂ M_{l²} ⊂ …` of `Clg(l, I)` for countable `I`.
    pub fn generalized_clifford_countable(l: u64) -> Result<Self, LocmatError> {
        Self::new(vec![l], Some(l), format!("Clg({l}, I), I countable"))
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn tail(&self) -> Option<u64> {
        self.tail
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn last(&self) -> u64 {
        *self.sizes.last().expect("nonempty")
    }

    /// The first `count` terms, continuing through the tail when present.
    pub fn terms(&self, count: usize) -> Vec<u64> {
        let mut out: Vec<u64> = self.sizes.iter().copied().take(count).collect();
        if let Some(t) = self.tail {
            let mut cur = self.last();
            while out.len() < count {
                match cur.checked_mul(t) {
                    Some(next) => cur = next,
                    None => break,
                }
                out.push(cur);
            }
        }
        out
    }
}

impl fmt::Display for EmbeddingChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(u64::to_string).collect();
        write!(f, "[{}]", sizes.join(", "))?;
        if let Some(t) = self.tail {
            write!(f, " ×{t}…")?;
        }
        if !self.label.is_empty() {
            write!(f, " ({})", self.label)?;
        }
        Ok(())
    }
}

/// `𝐧(A)`: the lcm of the chain terms, with every prime of the tail at ∞.
pub fn steinitz_of_chain(c: &EmbeddingChain) -> SteinitzNumber {
    SteinitzNumber::lcm_of_set(&c.sizes, c.tail).expect("chain invariants guarantee a valid set")
}

/// Whether `n ∈ D(A)`, i.e. `n` divides some chain term.
pub fn d_membership(n: u64, c: &EmbeddingChain) -> Result<bool, LocmatError> {
    if n == 0 {
        return Err(LocmatError::NonPositive);
    }
    Ok(SteinitzNumber::from_u64(n)?.divides(&steinitz_of_chain(c)))
}

/// Termwise products after padding the shorter list with its last element;
/// tails multiply.
pub fn tensor(a: &EmbeddingChain, b: &EmbeddingChain) -> Result<EmbeddingChain, LocmatError> {
    let len = a.sizes.len().max(b.sizes.len());
    let at = |c: &EmbeddingChain, i: usize| *c.sizes.get(i).unwrap_or(&c.last());
    let sizes =
        (0..len).map(|i| at(a, i).checked_mul(at(b, i)).ok_or(LocmatError::Overflow)).collect::<Result<_, _>>()?;
    let tail = match (a.tail, b.tail) {
        (Some(s), Some(t)) => Some(s.checked_mul(t).ok_or(LocmatError::Overflow)?),
        (s, t) => s.or(t),
    };
    let label =
        if a.label.is_empty() && b.label.is_empty() { String::new() } else { format!("{} ⊗ {}", a.label, b.label) };
    let out = EmbeddingChain::new(sizes, tail, label)?;
    debug_assert_eq!(steinitz_of_chain(&out), steinitz_of_chain(a).mul(&steinitz_of_chain(b)));
    Ok(out)
}

/// Probe sizes used by default for the membership cross-check.
pub fn default_probes() -> Vec<u64> {
    (1..=64).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub left: SteinitzNumber,
    pub right: SteinitzNumber,
    /// A probe `n` lying in exactly one of the two sets `D`, if any.
    pub separating_probe: Option<u64>,
}

/// Decision by Steinitz equality, cross-checked on `probes`: equal numbers
/// must agree on every probe, and a separating probe forces inequality.
pub fn equivalence_report(
    a: &EmbeddingChain,
    b: &EmbeddingChain,
    probes: &[u64],
) -> Result<EquivalenceReport, LocmatError> {
    let left = steinitz_of_chain(a);
    let right = steinitz_of_chain(b);
    let equivalent = left == right;
    let mut separating_probe = None;
    for &n in probes {
        if d_membership(n, a)? != d_membership(n, b)? {
            if equivalent {
                return Err(LocmatError::ProbeInconsistent { n });
            }
            separating_probe = Some(n);
            break;
        }
    }
    Ok(EquivalenceReport { equivalent, left, right, separating_probe })
}

pub fn universally_equivalent(a: &EmbeddingChain, b: &EmbeddingChain) -> bool {
    equivalence_report(a, b, &default_probes()).expect("probes are positive").equivalent
}

/// Isomorphism of the direct limits; valid for countable dimension only.
pub fn isomorphic_countable(a: &EmbeddingChain, b: &EmbeddingChain) -> bool {
    steinitz_of_chain(a) == steinitz_of_chain(b)
}

/// Whether `M_n` embeds unitally into `⊕ M_{m_i}`: `n` must divide every `m_i`.
pub fn unital_embedding_exists(n: u64, p: &AlgebraProfile) -> Result<bool, LocmatError> {
    if n == 0 {
        return Err(LocmatError::NonPositive);
    }
    Ok(p.blocks().iter().all(|m| m % n == 0))
}

/// A chain whose Steinitz number is `tau`: start at the finite part times
/// each ∞-prime once, then multiply by the product of the ∞-primes.
pub fn steinitz_realization(tau: &SteinitzNumber) -> Result<EmbeddingChain, LocmatError> {
    if tau.is_top() {
        return Err(LocmatError::TopNotRealizable);
    }
    let mut start = 1u64;
    let mut tail = 1u64;
    for (p, e) in tau.factors() {
        let factor = match e {
            Exponent::Finite(k) => u32::try_from(k).ok().and_then(|k| p.checked_pow(k)),
            Exponent::Infinite => {
                tail = tail.checked_mul(p).ok_or(LocmatError::Overflow)?;
                Some(p)
            }
        };
        start = factor.and_then(|f| start.checked_mul(f)).ok_or(LocmatError::Overflow)?;
    }
    if tail == 1 {
        return Err(LocmatError::NoInfiniteExponent(tau.to_string()));
    }
    let chain = EmbeddingChain::new(vec![start], Some(tail), format!("realization of {tau}"))?;
    assert_eq!(&steinitz_of_chain(&chain), tau, "realization must reproduce its Steinitz number");
    Ok(chain)
}

const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

/// A random chain over small primes: up to four terms, each step a product
/// of at most two small primes, and a tail half of the time.
pub fn random_chain<R: Rng + ?Sized>(rng: &mut R) -> EmbeddingChain {
    let len = rng.gen_range(1..=4);
    let mut cur = 1u64;
    let mut sizes = Vec::with_capacity(len);
    for _ in 0..len {
        for _ in 0..rng.gen_range(0..=2) {
            cur *= SMALL_PRIMES[rng.gen_range(0..SMALL_PRIMES.len())];
        }
        sizes.push(cur);
    }
    let tail = rng.gen_bool(0.5).then(|| {
        let p = SMALL_PRIMES[rng.gen_range(0..3)];
        if rng.gen_bool(0.3) {
            p * SMALL_PRIMES[rng.gen_range(0..3)]
        } else {
            p
        }
    });
    EmbeddingChain::new(sizes, tail, "random").expect("constructed as a divisibility chain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use Exponent::*;

    fn chain(sizes: &[u64], tail: Option<u64>) -> EmbeddingChain {
        EmbeddingChain::new(sizes.to_vec(), tail, "").unwrap()
    }

    fn sn(f: &[(u64, Exponent)]) -> SteinitzNumber {
        SteinitzNumber::from_factors(f.iter().copied()).unwrap()
    }

    #[test]
    fn chain_validation() {
        assert_eq!(EmbeddingChain::new(vec![], None, ""), Err(LocmatError::Empty));
        assert_eq!(EmbeddingChain::new(vec![2, 3], None, ""), Err(LocmatError::NotDivisible { prev: 2, next: 3 }));
        assert_eq!(EmbeddingChain::new(vec![2], Some(1), ""), Err(LocmatError::BadTail(1)));
        assert_eq!(EmbeddingChain::new(vec![0], None, ""), Err(LocmatError::ZeroSize));
        assert_eq!(chain(&[2, 4], Some(3)).terms(4), vec![2, 4, 12, 36]);
    }

    #[test]
    fn steinitz_numbers_of_chains() {
        assert_eq!(steinitz_of_chain(&chain(&[2, 4, 8], Some(2))), sn(&[(2, Infinite)]));
        assert_eq!(steinitz_of_chain(&chain(&[1], None)), SteinitzNumber::one());
        assert_eq!(steinitz_of_chain(&chain(&[6], Some(6))), sn(&[(2, Infinite), (3, Infinite)]));
        assert_eq!(steinitz_of_chain(&EmbeddingChain::clifford_countable()), sn(&[(2, Infinite)]));
    }

    #[test]
    fn membership() {
        assert!(d_membership(4, &chain(&[2, 4, 8], None)).unwrap());
        assert!(!d_membership(3, &chain(&[2], Some(2))).unwrap());
        assert!(d_membership(1, &chain(&[5], None)).unwrap());
        assert!(d_membership(1024, &chain(&[2], Some(2))).unwrap());
        assert_eq!(d_membership(0, &chain(&[5], None)), Err(LocmatError::NonPositive));
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&chain(&[2], Some(2)), &chain(&[3], Some(3))).unwrap();
        assert_eq!((t.sizes(), t.tail()), (&[6u64][..], Some(6)));
        assert_eq!(steinitz_of_chain(&t), sn(&[(2, Infinite), (3, Infinite)]));
        let t = tensor(&chain(&[2, 4], None), &chain(&[3, 9], None)).unwrap();
        assert_eq!(t.sizes(), &[6, 36]);
        assert_eq!(steinitz_of_chain(&t), sn(&[(2, Finite(2)), (3, Finite(2))]));
        let a = chain(&[2, 6], Some(5));
        assert_eq!(steinitz_of_chain(&tensor(&a, &chain(&[1], None)).unwrap()), steinitz_of_chain(&a));
    }

    #[test]
    fn decisions() {
        assert!(universally_equivalent(&chain(&[2], Some(2)), &chain(&[4], Some(4))));
        assert!(!universally_equivalent(&chain(&[2], Some(2)), &chain(&[2], Some(6))));
        let c = chain(&[3, 9], Some(2));
        assert!(universally_equivalent(&c, &c));
        assert!(isomorphic_countable(&chain(&[2], Some(2)), &chain(&[8], Some(2))));
        assert!(isomorphic_countable(&chain(&[2, 4], None), &chain(&[4], None)));
        assert!(!isomorphic_countable(&chain(&[2], None), &chain(&[3], None)));
        let r = equivalence_report(&chain(&[2], Some(2)), &chain(&[6], Some(6)), &default_probes()).unwrap();
        assert_eq!(r.separating_probe, Some(3));
    }

    #[test]
    fn embeddings_into_profiles() {
        let p = |b: &[u64]| AlgebraProfile::new(b.to_vec()).unwrap();
        assert!(unital_embedding_exists(2, &p(&[4, 6])).unwrap());
        assert!(!unital_embedding_exists(2, &p(&[4, 3])).unwrap());
        assert!(unital_embedding_exists(1, &p(&[7, 5])).unwrap());
    }

    #[test]
    fn realizations() {
        let c = steinitz_realization(&sn(&[(2, Infinite)])).unwrap();
        assert_eq!((c.sizes(), c.tail()), (&[2u64][..], Some(2)));
        let c = steinitz_realization(&sn(&[(2, Finite(3)), (3, Infinite)])).unwrap();
        assert_eq!((c.sizes(), c.tail()), (&[24u64][..], Some(3)));
        let c = steinitz_realization(&sn(&[(2, Infinite), (5, Infinite)])).unwrap();
        assert_eq!((c.sizes(), c.tail()), (&[10u64][..], Some(10)));
        assert_eq!(steinitz_realization(&SteinitzNumber::top()), Err(LocmatError::TopNotRealizable));
        assert!(matches!(
            steinitz_realization(&SteinitzNumber::from_u64(12).unwrap()),
            Err(LocmatError::NoInfiniteExponent(_))
        ));
    }
}
