//! Suffix array by prefix doubling with radix passes, plus Kasai's LCP array.
//!
//! Works for any integer alphabet of size at most `n` (which rank compression
//! in [`Text`] guarantees), in `O(n log n)` time.

use crate::error::{Error, Result};
use crate::text::Text;

/// Suffixes of a text in lexicographic order. Positions are 0-based; the
/// empty suffix is not stored.
#[derive(Debug, Clone)]
pub struct SuffixArray {
    sa: Vec<u32>,
    rank: Vec<u32>,
    /// `lcp[r]` is the longest common prefix of suffixes `sa[r-1]` and `sa[r]`;
    /// `lcp[0] = 0`.
    lcp: Vec<u32>,
}

impl SuffixArray {
    pub fn build(text: &Text) -> Result<Self> {
        Self::from_codes(text.symbols(), text.alphabet_size())
    }

    pub(crate) fn from_codes(s: &[u32], sigma: usize) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyText);
        }
        let sa = prefix_doubling(s, sigma.max(1));
        let mut rank = vec![0u32; s.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(s, &sa, &rank);
        Ok(SuffixArray { sa, rank, lcp })
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// Suffix start positions in lexicographic order (0-based).
    pub fn positions(&self) -> &[u32] {
        &self.sa
    }

    /// Inverse permutation: `rank()[sa[r]] == r`.
    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Positions as 1-based indices, for display.
    pub fn one_based(&self) -> Vec<usize> {
        self.sa.iter().map(|&p| p as usize + 1).collect()
    }
}

fn prefix_doubling(s: &[u32], sigma: usize) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = s.to_vec();
    let mut tmp = vec![0u32; n];
    let mut buckets = vec![0usize; sigma.max(n) + 1];

    // Initial order by first symbol.
    counting_sort(&mut sa, &mut tmp, &rank, sigma, &mut buckets);
    std::mem::swap(&mut sa, &mut tmp);
    let mut classes = rerank(&sa, &mut tmp, |a, b| rank[a] == rank[b]);
    std::mem::swap(&mut rank, &mut tmp);

    let mut k = 1usize;
    while classes < n {
        // Order by second key: suffixes without a second half come first.
        let mut order = Vec::with_capacity(n);
        order.extend((n - k.min(n)..n).map(|p| p as u32));
        order.extend(
            sa.iter()
                .filter(|&&p| p as usize >= k)
                .map(|&p| p - k as u32),
        );
        // Stable sort by first key.
        counting_sort(&mut order, &mut tmp, &rank, classes, &mut buckets);
        sa.copy_from_slice(&tmp);

        let second = |p: usize| if p + k < n { rank[p + k] as i64 } else { -1 };
        classes = rerank(&sa, &mut tmp, |a, b| {
            rank[a] == rank[b] && second(a) == second(b)
        });
        std::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

fn counting_sort(
    input: &mut [u32],
    out: &mut [u32],
    key: &[u32],
    keys: usize,
    buckets: &mut [usize],
) {
    buckets[..=keys].iter_mut().for_each(|b| *b = 0);
    for &p in input.iter() {
        buckets[key[p as usize] as usize + 1] += 1;
    }
    for c in 1..=keys {
        buckets[c] += buckets[c - 1];
    }
    for &p in input.iter() {
        let slot = &mut buckets[key[p as usize] as usize];
        out[*slot] = p;
        *slot += 1;
    }
}

/// Writes dense class ids for `sa` into `out`; returns the number of classes.
fn rerank(sa: &[u32], out: &mut [u32], same: impl Fn(usize, usize) -> bool) -> usize {
    let mut class = 0u32;
    out[sa[0] as usize] = 0;
    for w in sa.windows(2) {
        if !same(w[0] as usize, w[1] as usize) {
            class += 1;
        }
        out[w[1] as usize] = class;
    }
    class as usize + 1
}

fn kasai(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sa(s: &[u32]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..s.len() as u32).collect();
        sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
        sa
    }

    #[test]
    fn banana() {
        let sa = SuffixArray::build(&Text::from("banana")).unwrap();
        assert_eq!(sa.one_based(), vec![6, 4, 2, 1, 5, 3]);
        assert_eq!(sa.lcp(), &[0, 1, 3, 0, 0, 2]);
    }

    #[test]
    fn single_and_unary() {
        assert_eq!(
            SuffixArray::build(&Text::from("a")).unwrap().one_based(),
            vec![1]
        );
        assert_eq!(
            SuffixArray::build(&Text::from("aaa")).unwrap().one_based(),
            vec![3, 2, 1]
        );
    }

    #[test]
    fn empty_text_is_rejected() {
        assert_eq!(
            SuffixArray::build(&Text::from("")).unwrap_err(),
            Error::EmptyText
        );
    }

    proptest! {
        #[test]
        fn matches_naive_sort(s in proptest::collection::vec(0u32..4, 1..200)) {
            let text = Text::from_symbols(s.iter().map(|&c| c as u64));
            let sa = SuffixArray::build(&text).unwrap();
            let codes = text.symbols();
            let want = naive_sa(codes);
            prop_assert_eq!(sa.positions(), want.as_slice());
            for (r, &p) in sa.positions().iter().enumerate() {
                prop_assert_eq!(sa.rank()[p as usize] as usize, r);
                if r > 0 {
                    let a = &codes[sa.positions()[r - 1] as usize..];
                    let b = &codes[p as usize..];
                    prop_assert!(a < b);
                    let common = a.iter().zip(b).take_while(|(x, y)| x == y).count();
                    prop_assert_eq!(sa.lcp()[r] as usize, common);
                }
            }
        }
    }
}
