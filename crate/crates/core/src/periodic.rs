//! Periodic occurrence sets and LCE queries against them.
//!
//! The occurrences of a length-`q` factor split into arithmetic progressions:
//! occurrences closer than `q/2` apart are exactly `per(w)` apart and lie in
//! one run. LCP values between a fixed position and the members of such a
//! progression take at most a handful of constant or arithmetic shapes,
//! computed here from O(1) LCE queries.

use crate::error::{Error, Result};
use crate::lce::{LceIndex, Strand};
use crate::suffix_tree::{check_window, TrimmedSuffixTree};
use crate::text::Text;

/// Positions `s, s + d, ..., e`. Singletons carry `d = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArithmeticProgression {
    pub s: usize,
    pub e: usize,
    pub d: usize,
}

impl ArithmeticProgression {
    pub fn new(s: usize, e: usize, d: usize) -> Self {
        debug_assert!(s <= e);
        debug_assert!(s == e || (d > 0 && (e - s).is_multiple_of(d)));
        ArithmeticProgression { s, e, d }
    }

    pub fn singleton(s: usize) -> Self {
        ArithmeticProgression { s, e: s, d: 0 }
    }

    /// `count` terms from `s` with difference `d`.
    pub fn from_count(s: usize, d: usize, count: usize) -> Self {
        debug_assert!(count >= 1);
        if count == 1 {
            Self::singleton(s)
        } else {
            Self::new(s, s + (count - 1) * d, d)
        }
    }

    pub fn count(&self) -> usize {
        (self.e - self.s).checked_div(self.d).map_or(1, |k| k + 1)
    }

    pub fn get(&self, j: usize) -> usize {
        self.s + j * self.d
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.count()).map(|j| self.get(j))
    }

    /// The first `count` terms.
    pub fn truncated(&self, count: usize) -> Self {
        Self::from_count(self.s, self.d, count.min(self.count()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Const,
    ArithDown,
    ArithUp,
}

/// `value(j) = base + step * j` for `j` in `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub lo: usize,
    pub hi: usize,
    pub base: i64,
    pub step: i64,
}

impl Piece {
    fn constant(lo: usize, hi: usize, value: usize) -> Self {
        Piece {
            lo,
            hi,
            base: value as i64,
            step: 0,
        }
    }

    pub fn kind(&self) -> PieceKind {
        match self.step.signum() {
            0 => PieceKind::Const,
            -1 => PieceKind::ArithDown,
            _ => PieceKind::ArithUp,
        }
    }

    pub fn value(&self, j: usize) -> usize {
        debug_assert!(self.lo <= j && j <= self.hi);
        (self.base + self.step * j as i64) as usize
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of `j` in the piece whose value is at least `t`.
    pub fn count_at_least(&self, t: usize) -> usize {
        let t = t as i64;
        let (lo, hi) = (self.lo as i64, self.hi as i64);
        let (a, b) = match self.step.signum() {
            0 => {
                return if self.base >= t { self.len() } else { 0 };
            }
            // base + step*j >= t  <=>  j <= (base - t) / -step
            -1 => (lo, hi.min((self.base - t).div_euclid(-self.step))),
            _ => (lo.max(ceil_div(t - self.base, self.step)), hi),
        };
        if a > b {
            0
        } else {
            (b - a + 1) as usize
        }
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Compact description of `j -> LCE(fixed, s_j)` over a progression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LceRep {
    pub count: usize,
    /// Disjoint pieces covering `0..count` in increasing order.
    pub pieces: Vec<Piece>,
    /// Index whose value was evaluated individually because both
    /// extensions end at the same offset.
    pub aligned: Option<usize>,
}

impl LceRep {
    fn single(value: usize) -> Self {
        LceRep {
            count: 1,
            pieces: vec![Piece::constant(0, 0, value)],
            aligned: None,
        }
    }

    pub fn value(&self, j: usize) -> usize {
        let k = self.pieces.partition_point(|p| p.hi < j);
        self.pieces[k].value(j)
    }

    pub fn expand(&self) -> Vec<usize> {
        self.pieces
            .iter()
            .flat_map(|p| (p.lo..=p.hi).map(move |j| p.value(j)))
            .collect()
    }

    pub fn count_at_least(&self, t: usize) -> usize {
        self.pieces.iter().map(|p| p.count_at_least(t)).sum()
    }

    /// Re-indexes `j -> count - 1 - j`.
    fn reversed(self) -> Self {
        let c = self.count as i64;
        let mut pieces: Vec<Piece> = self
            .pieces
            .into_iter()
            .map(|p| Piece {
                lo: (c - 1) as usize - p.hi,
                hi: (c - 1) as usize - p.lo,
                base: p.base + p.step * (c - 1),
                step: -p.step,
            })
            .collect();
        pieces.reverse();
        LceRep {
            count: self.count,
            pieces,
            aligned: self.aligned.map(|j| self.count - 1 - j),
        }
    }
}

/// Length of the `d`-periodic stretch starting at `x`.
fn extension(strand: &Strand, x: usize, d: usize) -> usize {
    let n = strand.len();
    if x + d <= n {
        d + strand.lcp(x, x + d)
    } else {
        n.saturating_sub(x)
    }
}

/// `LCP(i, s_j)` for every term of `a` on the given strand.
///
/// Requires the terms to share one `d`-periodic stretch starting at `a.s`;
/// otherwise returns [`Error::NotARun`]. The check is O(1).
pub(crate) fn rep_lcp(strand: &Strand, a: &ArithmeticProgression, i: usize) -> Result<LceRep> {
    let c = a.count();
    let s = a.s;
    if c == 1 {
        return Ok(LceRep::single(strand.lcp(i, s)));
    }
    let d = a.d;
    let ex_s = extension(strand, s, d);
    if ex_s < (c - 1) * d {
        return Err(Error::NotARun {
            start: s,
            diff: d,
            count: c,
        });
    }
    let last = c - 1;
    let mut pieces = Vec::with_capacity(4);
    let mut aligned = None;
    let lp = strand.lcp(i, s);
    if lp < d {
        if last >= 1 {
            pieces.push(Piece::constant(0, last - 1, lp));
        }
    } else {
        let ex_i = extension(strand, i, d);
        // Const Ex_i while Ex_s - j*d > Ex_i, ArithDown once below.
        let gap = ex_s as i64 - ex_i as i64;
        let di = d as i64;
        let (below, star, above) = if gap <= 0 {
            (0, (gap == 0).then_some(0), if gap == 0 { 1 } else { 0 })
        } else {
            let q = gap / di;
            if gap % di == 0 {
                (q, Some(q), q + 1)
            } else {
                (q + 1, None, q + 1)
            }
        };
        let top = last as i64 - 1;
        if below > 0 && top >= 0 {
            pieces.push(Piece::constant(0, below.min(top + 1) as usize - 1, ex_i));
        }
        if let Some(js) = star {
            if js <= top {
                let js = js as usize;
                pieces.push(Piece::constant(js, js, strand.lcp(i, a.get(js))));
                aligned = Some(js);
            }
        }
        if above <= top {
            pieces.push(Piece {
                lo: above as usize,
                hi: top as usize,
                base: ex_s as i64,
                step: -di,
            });
        }
    }
    pieces.push(Piece::constant(last, last, strand.lcp(i, a.get(last))));
    Ok(LceRep {
        count: c,
        pieces,
        aligned,
    })
}

/// `LCS` of the prefixes ending (exclusively) at `e` and at every term of `a`.
pub(crate) fn rep_lcs_excl(strand: &Strand, a: &ArithmeticProgression, e: usize) -> Result<LceRep> {
    let n = strand.len();
    let rev = strand.reversed();
    let c = a.count();
    let mirrored = ArithmeticProgression::from_count(n - a.e, a.d, c);
    Ok(rep_lcp(&rev, &mirrored, n - e)?.reversed())
}

/// `LCP(i, s_j)` for every term `s_j` of `a` (0-based positions).
pub fn repetitive_lcp(lce: &LceIndex, a: &ArithmeticProgression, i: usize) -> Result<LceRep> {
    check_positions(lce.len(), a, i)?;
    rep_lcp(&lce.strand(false), a, i)
}

/// Longest common suffix of `S[..=i]` and `S[..=s_j]` for every term of `a`
/// (0-based positions).
pub fn repetitive_lcs(lce: &LceIndex, a: &ArithmeticProgression, i: usize) -> Result<LceRep> {
    check_positions(lce.len(), a, i)?;
    let shifted = ArithmeticProgression::from_count(a.s + 1, a.d, a.count());
    rep_lcs_excl(&lce.strand(false), &shifted, i + 1)
}

fn check_positions(n: usize, a: &ArithmeticProgression, i: usize) -> Result<()> {
    for pos in [i, a.e] {
        if pos >= n {
            return Err(Error::PositionOutOfRange { pos: pos + 1, n });
        }
    }
    Ok(())
}

/// `lcp(i, s_j)` extended past one mismatch: `r1 + 1 + lcp(i + r1 + 1,
/// s_j + r1 + 1)` with `r1 = lcp(i, s_j)`.
pub(crate) fn one_mismatch_lcp(
    strand: &Strand,
    a: &ArithmeticProgression,
    i: usize,
) -> Result<LceRep> {
    let first = rep_lcp(strand, a, i)?;
    let direct = |j: usize| {
        let sj = a.get(j);
        let r1 = strand.lcp(i, sj);
        r1 + 1 + strand.lcp(i + r1 + 1, sj + r1 + 1)
    };
    let d = a.d;
    let mut pieces = Vec::with_capacity(8);
    for p in &first.pieces {
        if p.lo == p.hi {
            pieces.push(Piece::constant(p.lo, p.lo, direct(p.lo)));
            continue;
        }
        let cnt = p.len();
        match p.kind() {
            PieceKind::Const => {
                let v = p.base as usize;
                let prog = ArithmeticProgression::from_count(a.get(p.lo) + v + 1, d, cnt);
                let second = rep_lcp(strand, &prog, i + v + 1)?;
                pieces.extend(second.pieces.into_iter().map(|q| Piece {
                    lo: q.lo + p.lo,
                    hi: q.hi + p.lo,
                    base: q.base - q.step * p.lo as i64 + v as i64 + 1,
                    step: q.step,
                }));
            }
            PieceKind::ArithDown => {
                // s_j + r1 + 1 is fixed; the other side walks backwards.
                let ex_s = p.base;
                let fixed = (a.s as i64 + ex_s + 1) as usize;
                let x0 = (i as i64 + ex_s + 1 - p.hi as i64 * d as i64) as usize;
                let prog = ArithmeticProgression::from_count(x0, d, cnt);
                let second = rep_lcp(strand, &prog, fixed)?;
                let hi = p.hi as i64;
                pieces.extend(second.pieces.into_iter().rev().map(|q| Piece {
                    lo: (hi - q.hi as i64) as usize,
                    hi: (hi - q.lo as i64) as usize,
                    base: ex_s + 1 + q.base + q.step * hi,
                    step: p.step - q.step,
                }));
            }
            PieceKind::ArithUp => unreachable!("forward LCP pieces never increase"),
        }
    }
    Ok(LceRep {
        count: first.count,
        pieces,
        aligned: first.aligned,
    })
}

/// Arithmetic progressions of the occurrences of every depth-`q` leaf,
/// indexed by leaf ordinal, each list in increasing position order.
pub fn periodic_occurrences(tree: &TrimmedSuffixTree) -> Vec<Vec<ArithmeticProgression>> {
    let q = tree.window_len();
    let leaf_of = tree.leaf_of_window();
    let leaves = tree.leaves().len();
    const NONE: usize = usize::MAX;
    // Per leaf: last occurrence, start of the open progression, difference.
    let mut pre = vec![NONE; leaves];
    let mut start = vec![0usize; leaves];
    let mut diff = vec![0usize; leaves];
    let mut out: Vec<Vec<ArithmeticProgression>> = vec![Vec::new(); leaves];

    for (i, &ord) in leaf_of.iter().enumerate() {
        let v = ord as usize;
        if pre[v] != NONE {
            let gap = i - pre[v];
            if 2 * gap <= q && (diff[v] == 0 || diff[v] == gap) {
                diff[v] = gap;
                pre[v] = i;
                continue;
            }
            out[v].push(ArithmeticProgression::new(start[v], pre[v], diff[v]));
        }
        pre[v] = i;
        start[v] = i;
        diff[v] = 0;
    }
    for v in 0..leaves {
        if pre[v] != NONE {
            out[v].push(ArithmeticProgression::new(start[v], pre[v], diff[v]));
        }
    }
    out
}

/// Counts windows within Hamming distance one of a window, one word at a
/// time, in `O(n / m)` LCE queries per word after `O(n log n)` setup.
#[derive(Debug, Clone)]
pub struct SingleWordCounter {
    m: usize,
    lce: LceIndex,
    /// Forward: split at `ceil(m/2)`; backward: `floor(m/2)` on the reversed
    /// text.
    sides: [Side; 2],
    exact: Vec<u64>,
}

#[derive(Debug, Clone)]
struct Side {
    h: usize,
    leaf_of: Vec<u32>,
    progressions: Vec<Vec<ArithmeticProgression>>,
}

impl Side {
    fn new(text: &Text, h: usize) -> Result<Self> {
        let tree = TrimmedSuffixTree::build(text, h)?;
        Ok(Side {
            h,
            leaf_of: tree.leaf_of_window(),
            progressions: periodic_occurrences(&tree),
        })
    }

    /// Windows of length `m` whose first `h` symbols match those of the
    /// window at `i` exactly and which differ from it in at most one place.
    fn count(&self, strand: &Strand, i: usize, m: usize) -> Result<usize> {
        let n = strand.len();
        let mut total = 0;
        for a in &self.progressions[self.leaf_of[i] as usize] {
            if a.s + m > n {
                break;
            }
            let keep = (n - m - a.s)
                .checked_div(a.d)
                .map_or(1, |k| (k + 1).min(a.count()));
            let prog = a.truncated(keep);
            total += one_mismatch_lcp(strand, &prog, i)?.count_at_least(m);
        }
        Ok(total)
    }
}

impl SingleWordCounter {
    /// Requires `2 <= m <= n`.
    pub fn new(text: &Text, m: usize) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyText);
        }
        check_window(m, text.len())?;
        if m < 2 {
            return Err(Error::BadWindowLength {
                m,
                n: text.len(),
                reason: "the half-split counter needs m >= 2",
            });
        }
        let exact = TrimmedSuffixTree::build(text, m)?.exact_occurrence_counts();
        Ok(SingleWordCounter {
            m,
            lce: LceIndex::new(text)?,
            sides: [
                Side::new(text, m.div_ceil(2))?,
                Side::new(&text.reversed(), m / 2)?,
            ],
            exact,
        })
    }

    pub fn window_len(&self) -> usize {
        self.m
    }

    /// Windows (self included) within Hamming distance one of the window at
    /// 0-based `i`.
    pub fn count(&self, i: usize) -> Result<u64> {
        let (n, m) = (self.lce.len(), self.m);
        if i + m > n {
            return Err(Error::PositionOutOfRange {
                pos: i + 1,
                n: n - m + 1,
            });
        }
        let lo = self.sides[0].count(&self.lce.strand(false), i, m)?;
        let ro = self.sides[1].count(&self.lce.strand(true), n - i - m, m)?;
        debug_assert_eq!(self.sides[0].h + self.sides[1].h, m);
        Ok((lo + ro) as u64 - self.exact[i])
    }
}

/// One-shot form of [`SingleWordCounter::count`].
pub fn count_one_ham_single_word(text: &Text, i: usize, m: usize) -> Result<u64> {
    SingleWordCounter::new(text, m)?.count(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lce(s: &str) -> LceIndex {
        LceIndex::new(&Text::from(s)).unwrap()
    }

    fn naive_lcp(s: &[u32], i: usize, j: usize) -> usize {
        s[i..]
            .iter()
            .zip(&s[j..])
            .take_while(|(a, b)| a == b)
            .count()
    }

    #[test]
    fn progression_counts() {
        let a = ArithmeticProgression::new(0, 4, 2);
        assert_eq!(a.count(), 3);
        assert_eq!(a.positions().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(ArithmeticProgression::singleton(7).count(), 1);
        assert_eq!(a.truncated(2), ArithmeticProgression::new(0, 2, 2));
    }

    #[test]
    fn aaaab_aligned_case() {
        let idx = lce("aaaab");
        let rep = repetitive_lcp(&idx, &ArithmeticProgression::new(0, 2, 1), 2).unwrap();
        assert_eq!(rep.pieces[0], Piece::constant(0, 1, 2));
        assert_eq!(rep.pieces.last().unwrap().value(2), 3);
        assert_eq!(rep.expand(), vec![2, 2, 3]);
    }

    #[test]
    fn short_prefix_is_constant() {
        // Run "ababab" at 0; the fixed position starts with "ac".
        let idx = lce("abababacx");
        let rep = repetitive_lcp(&idx, &ArithmeticProgression::new(0, 4, 2), 6).unwrap();
        assert_eq!(rep.pieces[0], Piece::constant(0, 1, 1));
        assert_eq!(rep.expand(), vec![1, 1, 1]);
    }

    #[test]
    fn singleton_progressions() {
        let idx = lce("banana");
        let rep = repetitive_lcp(&idx, &ArithmeticProgression::singleton(3), 1).unwrap();
        assert_eq!(rep.expand(), vec![3]);
        let rep = repetitive_lcs(&idx, &ArithmeticProgression::singleton(5), 3).unwrap();
        assert_eq!(rep.expand(), vec![3]);
    }

    #[test]
    fn lcs_inside_a_run() {
        let idx = lce("baaaa");
        let rep = repetitive_lcs(&idx, &ArithmeticProgression::new(1, 3, 1), 3).unwrap();
        assert_eq!(rep.expand(), vec![1, 2, 4]);
        assert!(rep.pieces.iter().any(|p| p.kind() == PieceKind::ArithUp));
    }

    #[test]
    fn not_a_run() {
        let idx = lce("abcabd");
        assert!(matches!(
            repetitive_lcp(&idx, &ArithmeticProgression::new(0, 4, 2), 1),
            Err(Error::NotARun { .. })
        ));
    }

    #[test]
    fn composed_matches_direct() {
        let text = Text::from("aaaabaaaaaabaaaaaaaaabaa");
        let idx = LceIndex::new(&text).unwrap();
        let s = text.symbols();
        let strand = idx.strand(false);
        for i in 0..s.len() {
            for (st, cnt) in [(5usize, 5usize), (12, 8), (0, 3)] {
                let a = ArithmeticProgression::from_count(st, 1, cnt);
                let rep = one_mismatch_lcp(&strand, &a, i).unwrap();
                for j in 0..cnt {
                    let sj = a.get(j);
                    let r1 = naive_lcp(s, i, sj);
                    let r2 = if i + r1 + 1 < s.len() && sj + r1 + 1 < s.len() {
                        naive_lcp(s, i + r1 + 1, sj + r1 + 1)
                    } else {
                        0
                    };
                    assert_eq!(rep.value(j), r1 + 1 + r2, "i={i} st={st} j={j}");
                }
            }
        }
    }

    #[test]
    fn periodic_occurrences_abab() {
        let text = Text::from("abababab");
        let tree = TrimmedSuffixTree::build(&text, 4).unwrap();
        let occ = periodic_occurrences(&tree);
        assert_eq!(tree.locus(tree.leaves()[0]), &[0, 1, 0, 1]);
        assert_eq!(occ[0], vec![ArithmeticProgression::new(0, 4, 2)]);
        assert_eq!(occ[1], vec![ArithmeticProgression::new(1, 3, 2)]);

        // A gap of 2 is more than half of 3, so "aba" keeps singletons.
        let tree = TrimmedSuffixTree::build(&text, 3).unwrap();
        let occ = periodic_occurrences(&tree);
        assert_eq!(tree.locus(tree.leaves()[0]), &[0, 1, 0]);
        let singles: Vec<_> = [0, 2, 4]
            .map(|s| ArithmeticProgression::new(s, s, 0))
            .into();
        assert_eq!(occ[0], singles);
    }

    #[test]
    fn periodic_occurrences_banana() {
        let tree = TrimmedSuffixTree::build(&Text::from("banana"), 3).unwrap();
        let occ = periodic_occurrences(&tree);
        // Leaves: ana, ban, nan.
        assert_eq!(
            occ[0],
            vec![
                ArithmeticProgression::singleton(1),
                ArithmeticProgression::singleton(3)
            ]
        );
        assert_eq!(occ[1], vec![ArithmeticProgression::singleton(0)]);
    }

    #[test]
    fn single_word_examples() {
        let banana = Text::from("banana");
        assert_eq!(count_one_ham_single_word(&banana, 0, 3).unwrap(), 2);
        assert_eq!(
            count_one_ham_single_word(&Text::from("aaaa"), 0, 2).unwrap(),
            3
        );
        assert_eq!(
            count_one_ham_single_word(&Text::from("abab"), 1, 2).unwrap(),
            1
        );
        assert!(count_one_ham_single_word(&banana, 4, 3).is_err());
    }
}
