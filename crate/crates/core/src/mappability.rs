//! Per-window mappability counts and algorithm selection.

use crate::error::{Error, Result};
use crate::text::Text;
use crate::{large_m, nlogn, oracle};

/// Counts for every window start `i` in `0..=n-m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MappabilityVector {
    exact: Vec<u64>,
    one_mismatch: Vec<u64>,
}

impl MappabilityVector {
    pub fn new(exact: Vec<u64>, one_mismatch: Vec<u64>) -> Self {
        assert_eq!(exact.len(), one_mismatch.len());
        MappabilityVector {
            exact,
            one_mismatch,
        }
    }

    /// Builds the vector from exact counts and `<= 1` totals.
    pub fn from_totals(exact: Vec<u64>, totals: &[u64]) -> Self {
        let one_mismatch = exact.iter().zip(totals).map(|(&e, &t)| t - e).collect();
        MappabilityVector::new(exact, one_mismatch)
    }

    pub fn len(&self) -> usize {
        self.exact.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exact.is_empty()
    }

    /// Windows at Hamming distance 0, the window itself included.
    pub fn exact(&self) -> &[u64] {
        &self.exact
    }

    /// Windows at Hamming distance exactly 1.
    pub fn one_mismatch(&self) -> &[u64] {
        &self.one_mismatch
    }

    pub fn total_le1(&self, i: usize) -> u64 {
        self.exact[i] + self.one_mismatch[i]
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..self.len()).map(|i| self.total_le1(i)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// `LargeM` when `m >= max(8, ceil(sqrt(n)))`, otherwise `Nlogn`.
    Auto,
    Nlogn,
    LargeM,
    Naive,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Nlogn => "nlogn",
            Algorithm::LargeM => "large-m",
            Algorithm::Naive => "naive",
        }
    }

    /// The concrete algorithm `Auto` stands for on a text of length `n`.
    pub fn resolve(self, n: usize, m: usize) -> Algorithm {
        match self {
            Algorithm::Auto => {
                let threshold = large_m::MIN_WINDOW.max(ceil_sqrt(n));
                if m >= threshold {
                    Algorithm::LargeM
                } else {
                    Algorithm::Nlogn
                }
            }
            other => other,
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "nlogn" => Ok(Algorithm::Nlogn),
            "large-m" => Ok(Algorithm::LargeM),
            "naive" => Ok(Algorithm::Naive),
            _ => Err(format!("unknown algorithm `{s}`")),
        }
    }
}

/// Computes the 1-mappability of `text` for window length `m`.
pub fn compute(text: &Text, m: usize, algorithm: Algorithm) -> Result<MappabilityVector> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    match algorithm.resolve(text.len(), m) {
        Algorithm::Nlogn => nlogn::one_mappability_nlogn(text, m),
        Algorithm::LargeM => large_m::one_mappability_large_m(text, m),
        Algorithm::Naive => oracle::naive_mappability(text, m, &oracle::OracleConfig::default()),
        Algorithm::Auto => unreachable!("resolved above"),
    }
}

pub(crate) fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(50), 8);
        assert_eq!(ceil_sqrt(64), 8);
        assert_eq!(ceil_sqrt(65), 9);
        assert_eq!(ceil_sqrt(1000), 32);
    }

    #[test]
    fn auto_selection() {
        assert_eq!(Algorithm::Auto.resolve(100, 9), Algorithm::Nlogn);
        assert_eq!(Algorithm::Auto.resolve(100, 10), Algorithm::LargeM);
        assert_eq!(Algorithm::Auto.resolve(16, 7), Algorithm::Nlogn);
        assert_eq!(Algorithm::Auto.resolve(16, 8), Algorithm::LargeM);
        assert_eq!(Algorithm::Naive.resolve(16, 8), Algorithm::Naive);
    }

    #[test]
    fn totals_add_up() {
        let v = MappabilityVector::from_totals(vec![1, 2], &[3, 2]);
        assert_eq!(v.one_mismatch(), &[2, 0]);
        assert_eq!(v.totals(), vec![3, 2]);
    }
}
