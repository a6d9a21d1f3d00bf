//! Wedderburn data of a finite-dimensional semisimple algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Multiset of matrix block sizes: `[n_1, …, n_k]` stands for `⊕ M_{n_i}(F)`.
/// Blocks are kept sorted, so equality ignores order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProfile")]
pub struct AlgebraProfile {
    blocks: Vec<u64>,
}

#[derive(Deserialize)]
struct RawProfile {
    blocks: Vec<u64>,
}

impl TryFrom<RawProfile> for AlgebraProfile {
    type Error = String;
    fn try_from(raw: RawProfile) -> Result<Self, String> {
        AlgebraProfile::new(raw.blocks).ok_or_else(|| "blocks must be a nonempty list of positive integers".to_string())
    }
}

impl AlgebraProfile {
    /// `None` for an empty list or a zero block.
    pub fn new(mut blocks: Vec<u64>) -> Option<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return None;
        }
        blocks.sort_unstable();
        Some(AlgebraProfile { blocks })
    }

    pub fn simple(n: u64) -> Self {
        AlgebraProfile { blocks: vec![n.max(1)] }
    }

    pub fn repeated(n: u64, times: usize) -> Self {
        Self::new(vec![n; times]).expect("positive block repeated at least once")
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// `Σ n_i²`, the dimension of the algebra.
    pub fn dim(&self) -> u64 {
        self.blocks.iter().map(|b| b * b).sum()
    }
}

impl fmt::Display for AlgebraProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| format!("M_{b}")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_insensitive() {
        assert_eq!(AlgebraProfile::new(vec![3, 1, 2]), AlgebraProfile::new(vec![1, 2, 3]));
        assert_eq!(AlgebraProfile::new(vec![2, 2]).unwrap().dim(), 8);
        assert!(AlgebraProfile::new(vec![]).is_none());
        assert!(AlgebraProfile::new(vec![0, 1]).is_none());
    }

    #[test]
    fn json_shape() {
        let p = AlgebraProfile::repeated(2, 2);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"blocks":[2,2]}"#);
        let back: AlgebraProfile = serde_json::from_str(r#"{"blocks":[4,2]}"#).unwrap();
        assert_eq!(back.blocks(), &[2, 4]);
        assert!(serde_json::from_str::<AlgebraProfile>(r#"{"blocks":[]}"#).is_err());
    }
}
