//! Brute-force reference implementations.
//!
//! Nothing here touches the suffix-array or tree indexes.

use crate::error::{Error, Result};
use crate::mappability::MappabilityVector;
use crate::stairs::StairsUpdate;
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Longest accepted input.
    pub max_n: usize,
    /// Mismatch budget.
    pub k: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: 5000, k: 1 }
    }
}

/// Per-window counts of windows at distance 0, at distance exactly `k`, and
/// the vector of both combined with everything in between (`<= k`).
///
/// The returned [`MappabilityVector`] holds exact counts and the count of
/// windows at distance `1..=k`.
pub fn naive_mappability(
    text: &Text,
    m: usize,
    config: &OracleConfig,
) -> Result<MappabilityVector> {
    let n = text.len();
    if n == 0 {
        return Err(Error::EmptyText);
    }
    if n > config.max_n {
        return Err(Error::InputTooLarge {
            n,
            max: config.max_n,
        });
    }
    if m == 0 || m > n {
        return Err(Error::window(m, n));
    }
    let s = text.symbols();
    let w = n - m + 1;
    let mut exact = vec![0u64; w];
    let mut near = vec![0u64; w];
    // Diagonal `delta`: windows i and i + delta. Slide a mismatch count.
    for delta in 0..w {
        let mut mism = (0..m).filter(|&k| s[k] != s[k + delta]).count();
        for i in 0..w - delta {
            if i > 0 {
                mism -= (s[i - 1] != s[i - 1 + delta]) as usize;
                mism += (s[i + m - 1] != s[i + m - 1 + delta]) as usize;
            }
            let j = i + delta;
            let (slot, hit) = match mism {
                0 => (&mut exact, true),
                x if x <= config.k => (&mut near, true),
                _ => (&mut exact, false),
            };
            if hit {
                slot[i] += 1;
                if delta > 0 {
                    slot[j] += 1;
                }
            }
        }
    }
    Ok(MappabilityVector::new(exact, near))
}

/// Literal application of each update to a zeroed array of `t` counters.
pub fn naive_stairs_apply(t: usize, p: usize, updates: &[StairsUpdate]) -> Vec<i64> {
    let mut c = vec![0i64; t];
    for u in updates {
        match *u {
            StairsUpdate::Increasing { a, b, sign } => {
                for (k, i) in (a..=b).enumerate() {
                    c[i] += sign * (k / p + 1) as i64;
                }
            }
            StairsUpdate::Decreasing { a, b, sign } => {
                for (k, i) in (a..=b).rev().enumerate() {
                    c[i] += sign * (k / p + 1) as i64;
                }
            }
            StairsUpdate::Interval { a, b, x } => {
                for v in &mut c[a..=b] {
                    *v += x;
                }
            }
        }
    }
    c
}

/// Every distinct length-`q` factor with its 0-based occurrence positions,
/// sorted by factor.
pub fn naive_periodic_occurrences(
    text: &Text,
    q: usize,
    config: &OracleConfig,
) -> Result<Vec<(Vec<u32>, Vec<usize>)>> {
    let n = text.len();
    if n > config.max_n {
        return Err(Error::InputTooLarge {
            n,
            max: config.max_n,
        });
    }
    if q == 0 || q > n {
        return Err(Error::window(q, n));
    }
    let s = text.symbols();
    let mut map: std::collections::BTreeMap<&[u32], Vec<usize>> = Default::default();
    for i in 0..=n - q {
        map.entry(&s[i..i + q]).or_default().push(i);
    }
    Ok(map.into_iter().map(|(f, p)| (f.to_vec(), p)).collect())
}

/// Smallest period `p` of `w` with `p <= |w| / 2`, if any.
pub fn naive_period(w: &[u32]) -> Option<usize> {
    (1..=w.len() / 2).find(|&p| (p..w.len()).all(|i| w[i] == w[i - p]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming(a: &[u32], b: &[u32]) -> usize {
        let mut d = 0;
        let mut k = 0;
        while k < a.len() {
            if a[k] != b[k] {
                d += 1;
            }
            k += 1;
        }
        d
    }

    /// Triple loop with no sliding: the oracle of the oracle.
    fn micro(text: &Text, m: usize) -> Vec<(u64, u64)> {
        let s = text.symbols();
        let w = s.len() - m + 1;
        let mut out = Vec::new();
        for i in 0..w {
            let (mut e, mut o) = (0, 0);
            for j in 0..w {
                match hamming(&s[i..i + m], &s[j..j + m]) {
                    0 => e += 1,
                    1 => o += 1,
                    _ => {}
                }
            }
            out.push((e, o));
        }
        out
    }

    #[test]
    fn hand_checked() {
        let cfg = OracleConfig::default();
        let v = naive_mappability(&Text::from("banana"), 3, &cfg).unwrap();
        assert_eq!(v.totals(), vec![2, 2, 2, 2]);
        let v = naive_mappability(&Text::from("abab"), 2, &cfg).unwrap();
        assert_eq!(v.totals(), vec![2, 1, 2]);
    }

    #[test]
    fn full_budget_counts_everything() {
        let t = Text::from("abcabdaa");
        for m in 1..=t.len() {
            let cfg = OracleConfig { max_n: 100, k: m };
            let v = naive_mappability(&t, m, &cfg).unwrap();
            assert!(v.totals().iter().all(|&c| c as usize == t.len() - m + 1));
        }
    }

    #[test]
    fn guard() {
        let cfg = OracleConfig { max_n: 3, k: 1 };
        assert_eq!(
            naive_mappability(&Text::from("abcd"), 2, &cfg).unwrap_err(),
            Error::InputTooLarge { n: 4, max: 3 }
        );
    }

    #[test]
    fn agrees_with_micro_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(1..=30);
            let sigma = rng.gen_range(1..=4u64);
            let t = Text::from_symbols((0..n).map(|_| rng.gen_range(0..sigma)));
            let m = rng.gen_range(1..=n);
            let v = naive_mappability(&t, m, &OracleConfig::default()).unwrap();
            let got: Vec<(u64, u64)> = v
                .exact()
                .iter()
                .copied()
                .zip(v.one_mismatch().iter().copied())
                .collect();
            assert_eq!(got, micro(&t, m));
        }
    }

    #[test]
    fn stairs_oracle_examples() {
        let up = StairsUpdate::Increasing {
            a: 2,
            b: 7,
            sign: 1,
        };
        assert_eq!(
            naive_stairs_apply(10, 2, &[up]),
            vec![0, 0, 1, 1, 2, 2, 3, 3, 0, 0]
        );
        let down = StairsUpdate::Decreasing {
            a: 3,
            b: 4,
            sign: 1,
        };
        assert_eq!(naive_stairs_apply(6, 2, &[down]), vec![0, 0, 0, 1, 1, 0]);
        assert_eq!(naive_stairs_apply(3, 1, &[]), vec![0; 3]);
        let bx = StairsUpdate::Interval { a: 1, b: 2, x: 4 };
        assert_eq!(naive_stairs_apply(4, 1, &[bx]), vec![0, 4, 4, 0]);
    }

    #[test]
    fn periodic_oracle() {
        let cfg = OracleConfig::default();
        let occ = naive_periodic_occurrences(&Text::from("abababab"), 3, &cfg).unwrap();
        assert_eq!(occ.len(), 2);
        assert_eq!(occ[0].1, vec![0, 2, 4]);
        assert_eq!(occ[1].1, vec![1, 3, 5]);
        let occ = naive_periodic_occurrences(&Text::from("abcd"), 4, &cfg).unwrap();
        assert_eq!(occ, vec![(vec![0, 1, 2, 3], vec![0])]);
        assert_eq!(naive_period(&[0, 1, 0, 1, 0]), Some(2));
        assert_eq!(naive_period(&[0, 1, 0]), None);
    }
}
