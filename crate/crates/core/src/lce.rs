//! Longest common extension queries.
//!
//! A sparse table over the LCP array answers `LCP(i, j)` in constant time; the
//! same structure over the reversed text answers longest common suffixes.

use crate::error::{Error, Result};
use crate::suffix_array::SuffixArray;
use crate::text::Text;

/// Range minimum over a fixed array. O(1) query, O(n log n) words.
#[derive(Debug, Clone)]
pub struct SparseTable {
    n: usize,
    /// Row `k` holds minima of windows of length `2^k`.
    rows: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: &[u32]) -> Self {
        let n = values.len();
        let mut rows = vec![values.to_vec()];
        let mut len = 1;
        while 2 * len <= n {
            let prev = rows.last().unwrap();
            let row: Vec<u32> = (0..=n - 2 * len)
                .map(|i| prev[i].min(prev[i + len]))
                .collect();
            rows.push(row);
            len *= 2;
        }
        SparseTable { n, rows }
    }

    /// Minimum of `values[lo..hi]`; the range must be non-empty.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo < hi && hi <= self.n);
        let k = (hi - lo).ilog2() as usize;
        let row = &self.rows[k];
        row[lo].min(row[hi - (1 << k)])
    }
}

/// Suffix array, LCP array and RMQ for one reading direction of a text.
#[derive(Debug, Clone)]
pub struct DirectionalIndex {
    symbols: Vec<u32>,
    alphabet_size: usize,
    sa: SuffixArray,
    rmq: SparseTable,
}

impl DirectionalIndex {
    pub fn new(text: &Text) -> Result<Self> {
        let sa = SuffixArray::build(text)?;
        let rmq = SparseTable::new(sa.lcp());
        Ok(DirectionalIndex {
            symbols: text.symbols().to_vec(),
            alphabet_size: text.alphabet_size(),
            sa,
            rmq,
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn suffix_array(&self) -> &SuffixArray {
        &self.sa
    }

    /// Longest common prefix of the suffixes at 0-based `i` and `j`. Either
    /// position may equal or exceed `n`, denoting the empty suffix.
    #[inline]
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        let n = self.symbols.len();
        if i >= n || j >= n {
            return 0;
        }
        if i == j {
            return n - i;
        }
        let (a, b) = (self.sa.rank()[i] as usize, self.sa.rank()[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo + 1, hi + 1) as usize
    }
}

/// LCP and LCS queries over one text.
///
/// The unchecked methods [`LceIndex::lcp`] and [`LceIndex::lcs`] use 0-based
/// coordinates and are what the algorithms call. [`LceIndex::lcp_query`] and
/// [`LceIndex::lcs_query`] validate 1-based positions.
#[derive(Debug, Clone)]
pub struct LceIndex {
    forward: DirectionalIndex,
    backward: DirectionalIndex,
}

impl LceIndex {
    pub fn new(text: &Text) -> Result<Self> {
        Ok(LceIndex {
            forward: DirectionalIndex::new(text)?,
            backward: DirectionalIndex::new(&text.reversed())?,
        })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &DirectionalIndex {
        &self.forward
    }

    pub fn backward(&self) -> &DirectionalIndex {
        &self.backward
    }

    /// A view of the text in the requested direction.
    pub fn strand(&self, reversed: bool) -> Strand<'_> {
        if reversed {
            Strand {
                fwd: &self.backward,
                bwd: &self.forward,
            }
        } else {
            Strand {
                fwd: &self.forward,
                bwd: &self.backward,
            }
        }
    }

    /// Longest common prefix of the suffixes starting at 0-based `i`, `j`.
    #[inline]
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        self.forward.lcp(i, j)
    }

    /// Longest common suffix of the prefixes `S[..a]` and `S[..b]` (exclusive
    /// 0-based ends).
    #[inline]
    pub fn lcs(&self, a: usize, b: usize) -> usize {
        self.strand(false).lcs(a, b)
    }

    /// `LCP(i, j)` for 1-based positions.
    pub fn lcp_query(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.lcp(i - 1, j - 1))
    }

    /// `LCS(i, j)` for 1-based positions: the longest `l` with
    /// `S[i-l+1..=i] == S[j-l+1..=j]`.
    pub fn lcs_query(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.lcs(i, j))
    }

    fn check(&self, pos: usize) -> Result<()> {
        let n = self.len();
        if pos == 0 || pos > n {
            Err(Error::PositionOutOfRange { pos, n })
        } else {
            Ok(())
        }
    }
}

/// One reading direction of an [`LceIndex`]. The reversed strand sees the
/// reversed text, so code written against a strand runs unchanged in both
/// directions.
#[derive(Debug, Clone, Copy)]
pub struct Strand<'a> {
    fwd: &'a DirectionalIndex,
    bwd: &'a DirectionalIndex,
}

impl<'a> Strand<'a> {
    pub fn len(&self) -> usize {
        self.fwd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fwd.is_empty()
    }

    pub fn symbols(&self) -> &'a [u32] {
        self.fwd.symbols()
    }

    pub fn index(&self) -> &'a DirectionalIndex {
        self.fwd
    }

    /// The same text read in the other direction.
    pub fn reversed(&self) -> Strand<'a> {
        Strand {
            fwd: self.bwd,
            bwd: self.fwd,
        }
    }

    #[inline]
    pub fn lcp(&self, i: usize, j: usize) -> usize {
        self.fwd.lcp(i, j)
    }

    /// Longest common suffix of `S[..a]` and `S[..b]` for exclusive ends.
    #[inline]
    pub fn lcs(&self, a: usize, b: usize) -> usize {
        let n = self.len();
        debug_assert!(a <= n && b <= n);
        if a == b {
            return a;
        }
        self.bwd.lcp(n - a, n - b)
    }
}
