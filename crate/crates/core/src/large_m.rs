//! 1-mappability for long windows in `O(n^2 / m^2 + n)` time.
//!
//! Window starts are processed in batches of `q + 1` consecutive positions,
//! `q = floor(m / 4)`. All windows of a batch contain a common length-`q`
//! anchor, and each window is split right after it. An occurrence with at
//! most one mismatch either matches the part up to the split exactly (an
//! l-occurrence) or the part after it exactly (an r-occurrence), so the
//! total is `|Lo| + |Ro| - #w`.
//!
//! For l-occurrences, every occurrence `s` of the anchor gives a range of
//! windows `t` (the anchor's offset inside the window) it serves: the exact
//! extension to the left must reach `t` and the one-mismatch extension to
//! the right must reach `m - t`. Occurrences come in arithmetic
//! progressions along runs, and across a progression both extensions are
//! piecewise constant or arithmetic, so each progression turns into O(1)
//! stairs and interval updates on a counter per window. The r-occurrence
//! pass is the same computation on the reversed text.

use crate::error::{Error, Result};
use crate::lce::{LceIndex, Strand};
use crate::mappability::MappabilityVector;
use crate::periodic::{
    one_mismatch_lcp, periodic_occurrences, rep_lcs_excl, ArithmeticProgression, LceRep,
};
use crate::stairs::{StairsCounters, StairsUpdate};
use crate::suffix_tree::{check_window, TrimmedSuffixTree};
use crate::text::Text;

/// Shortest window length accepted; gives `q >= 2`.
pub const MIN_WINDOW: usize = 8;

/// Window starts `base ..= last`, with the anchor at `base + q`. The window
/// at `base + q - t` holds the anchor at offset `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowBatch {
    pub base: usize,
    pub last: usize,
    pub q: usize,
}

impl WindowBatch {
    /// Batches covering window starts `0 ..= n - m`, stride `q + 1`.
    pub fn tiling(n: usize, m: usize) -> Vec<WindowBatch> {
        let q = m / 4;
        let top = n - m;
        (0..=top)
            .step_by(q + 1)
            .map(|base| WindowBatch {
                base,
                last: (base + q).min(top),
                q,
            })
            .collect()
    }

    pub fn anchor(&self) -> usize {
        self.base + self.q
    }

    /// Smallest and largest anchor offset `t` among the batch's windows.
    pub fn t_range(&self) -> (usize, usize) {
        (self.base + self.q - self.last, self.q)
    }

    pub fn window(&self, t: usize) -> usize {
        self.base + self.q - t
    }
}

/// Right and left extensions over one progression of anchor occurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterExtents {
    pub progression: ArithmeticProgression,
    /// `r^j`: match length rightwards from the anchor allowing one mismatch.
    pub r: LceRep,
    /// `l^j`: exact match length leftwards from the anchor.
    pub l: LceRep,
}

/// Extents of the occurrences in `a` relative to the anchor at `anchor`.
pub fn cluster_extents(
    strand: &Strand,
    a: &ArithmeticProgression,
    anchor: usize,
) -> Result<ClusterExtents> {
    Ok(ClusterExtents {
        progression: *a,
        r: one_mismatch_lcp(strand, a, anchor)?,
        l: rep_lcs_excl(strand, a, anchor)?,
    })
}

/// A value `base + step * j`.
#[derive(Debug, Clone, Copy)]
struct Linear {
    base: i64,
    step: i64,
}

impl Linear {
    fn at(&self, j: i64) -> i64 {
        self.base + self.step * j
    }
}

/// Splits `lo..=hi` into the part where `f(j) >= 0` and the part where
/// `f(j) < 0`; `f` is monotone so both are contiguous.
type Span = Option<(i64, i64)>;

fn split_sign(lo: i64, hi: i64, f: Linear) -> (Span, Span) {
    let nonneg = |j: i64| f.at(j) >= 0;
    if f.step == 0 {
        return if nonneg(lo) {
            (Some((lo, hi)), None)
        } else {
            (None, Some((lo, hi)))
        };
    }
    // First j where the sign flips.
    let (a, b) = (nonneg(lo), nonneg(hi));
    if a == b {
        return if a {
            (Some((lo, hi)), None)
        } else {
            (None, Some((lo, hi)))
        };
    }
    let (mut x, mut y) = (lo, hi);
    while y - x > 1 {
        let mid = x + (y - x) / 2;
        if nonneg(mid) == a {
            x = mid;
        } else {
            y = mid;
        }
    }
    if a {
        (Some((lo, x)), Some((y, hi)))
    } else {
        (Some((y, hi)), Some((lo, x)))
    }
}

/// Emits the updates adding 1 to `[lower(j) ..= upper(j)]` for every `j` in
/// `a ..= b`, in counter coordinates.
fn emit(a: i64, b: i64, lower: Linear, upper: Linear, p: usize, out: &mut Vec<StairsUpdate>) {
    let c = b - a + 1;
    let (x, y) = (lower.at(a), upper.at(a));
    let (alpha, beta) = (lower.step, upper.step);
    debug_assert!(x <= y && lower.at(b) <= upper.at(b));
    let span = |u: i64, v: i64| (u as usize, v as usize);
    let step = p as i64;
    match (alpha != 0, beta != 0) {
        (false, false) => {
            let (u, v) = span(x, y);
            out.push(StairsUpdate::Interval { a: u, b: v, x: c });
        }
        (false, true) => {
            debug_assert_eq!(beta, step);
            let (u, v) = span(x, y);
            out.push(StairsUpdate::Interval { a: u, b: v, x: c });
            if c > 1 {
                let (u, v) = span(y + 1, y + (c - 1) * step);
                out.push(StairsUpdate::Decreasing {
                    a: u,
                    b: v,
                    sign: 1,
                });
            }
        }
        (true, false) => {
            debug_assert_eq!(alpha, step);
            let top = x + (c - 1) * step;
            let (u, v) = span(top, y);
            out.push(StairsUpdate::Interval { a: u, b: v, x: c });
            if c > 1 {
                let (u, v) = span(x, top - 1);
                out.push(StairsUpdate::Increasing {
                    a: u,
                    b: v,
                    sign: 1,
                });
            }
        }
        (true, true) => {
            debug_assert!(alpha == step && beta == step);
            let shift = (c - 1) * step;
            let (u, v) = span(x + shift, y + shift);
            out.push(StairsUpdate::Interval { a: u, b: v, x: c });
            if c > 1 {
                let (u, v) = span(x, x + shift - 1);
                out.push(StairsUpdate::Increasing {
                    a: u,
                    b: v,
                    sign: 1,
                });
                let (u, v) = span(y + 1, y + shift);
                out.push(StairsUpdate::Increasing {
                    a: u,
                    b: v,
                    sign: -1,
                });
            }
        }
    }
}

/// Updates crediting each occurrence `s_j` of the safe part of a cluster to
/// the windows `t` in `[max(t_lo, m - r^j) ..= min(t_hi, l^j)]`, shifted so
/// that `t_lo` is counter 0. `p` is the stairs width.
pub fn updates_from_cluster(
    ext: &ClusterExtents,
    m: usize,
    t_lo: usize,
    t_hi: usize,
    p: usize,
) -> Vec<StairsUpdate> {
    let mut out = Vec::new();
    let (m, t_lo, t_hi) = (m as i64, t_lo as i64, t_hi as i64);
    let mut ri = ext.r.pieces.iter().peekable();
    let mut li = ext.l.pieces.iter().peekable();
    while let (Some(&&rp), Some(&&lp)) = (ri.peek(), li.peek()) {
        let lo = rp.lo.max(lp.lo) as i64;
        let hi = rp.hi.min(lp.hi) as i64;
        if rp.hi <= lp.hi {
            ri.next();
        }
        if lp.hi <= rp.hi {
            li.next();
        }
        if lo > hi {
            continue;
        }
        // lower = max(t_lo, m - r), upper = min(t_hi, l), relative to t_lo.
        let m_minus_r = Linear {
            base: m - rp.base - t_lo,
            step: -rp.step,
        };
        let l = Linear {
            base: lp.base - t_lo,
            step: lp.step,
        };
        let floor = Linear { base: 0, step: 0 };
        let ceil = Linear {
            base: t_hi - t_lo,
            step: 0,
        };
        // m - r >= 0 picks the linear lower bound.
        let (lin_lo, const_lo) = split_sign(lo, hi, m_minus_r);
        for (range, lower) in [(lin_lo, m_minus_r), (const_lo, floor)] {
            let Some((a, b)) = range else { continue };
            let over = Linear {
                base: l.base - ceil.base,
                step: l.step,
            };
            let (capped, open) = split_sign(a, b, over);
            for (range, upper) in [(capped, ceil), (open, l)] {
                let Some((a, b)) = range else { continue };
                let width = Linear {
                    base: upper.base - lower.base,
                    step: upper.step - lower.step,
                };
                if let (Some((a, b)), _) = split_sign(a, b, width) {
                    emit(a, b, lower, upper, p, &mut out);
                }
            }
        }
    }
    out
}

/// Indexes shared by all batches, one set per reading direction.
struct Direction {
    leaf_of: Vec<u32>,
    progressions: Vec<Vec<ArithmeticProgression>>,
    /// Period of each leaf's factor, or 1 when it has none.
    period: Vec<usize>,
}

impl Direction {
    fn new(text: &Text, q: usize) -> Result<Self> {
        let tree = TrimmedSuffixTree::build(text, q)?;
        let progressions = periodic_occurrences(&tree);
        let period = progressions
            .iter()
            .map(|ps| ps.iter().find(|a| a.d > 0).map_or(1, |a| a.d))
            .collect();
        Ok(Direction {
            leaf_of: tree.leaf_of_window(),
            progressions,
            period,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LargeMStats {
    pub batches: usize,
    /// Most stairs and interval updates applied in one pass of one batch.
    pub max_updates_per_pass: usize,
}

/// Counts, for each `t` in `t_lo ..= t_hi`, the occurrences `s` of the
/// anchor at `anchor` with `lcs(anchor, s) >= t`, one-mismatch
/// `lcp(anchor, s) >= m - t` and `s - t + m <= n`.
#[allow(clippy::too_many_arguments)]
fn pass_counts(
    strand: &Strand,
    dir: &Direction,
    anchor: usize,
    t_lo: usize,
    t_hi: usize,
    m: usize,
    q: usize,
    updates: &mut usize,
) -> Result<Vec<i64>> {
    let n = strand.len();
    let leaf = dir.leaf_of[anchor] as usize;
    // Sized for a full batch so that the width never exceeds the length.
    let len = (t_hi - t_lo + 1).max(q + 1);
    let p = dir.period[leaf];
    let mut counters = StairsCounters::new(len, p)?;
    // Occurrences past this bound would need the end-of-text clamp.
    let safe_end = n - m + t_lo;
    for a in &dir.progressions[leaf] {
        let safe = if a.s > safe_end {
            0
        } else {
            (safe_end - a.s)
                .checked_div(a.d)
                .map_or(1, |k| (k + 1).min(a.count()))
        };
        if safe > 0 {
            let ext = cluster_extents(strand, &a.truncated(safe), anchor)?;
            for u in updates_from_cluster(&ext, m, t_lo, t_hi, p) {
                counters.apply(u)?;
            }
        }
        for s in a.positions().skip(safe) {
            let r1 = strand.lcp(anchor, s);
            let r = r1 + 1 + strand.lcp(anchor + r1 + 1, s + r1 + 1);
            let l = strand.lcs(anchor, s);
            let lo = t_lo.max(m.saturating_sub(r)).max(s + m - n);
            let hi = t_hi.min(l);
            if lo <= hi {
                counters.apply_interval(lo - t_lo, hi - t_lo, 1)?;
            }
        }
    }
    *updates = (*updates).max(counters.update_count());
    let mut counts = counters.report_all();
    counts.truncate(t_hi - t_lo + 1);
    Ok(counts)
}

fn check_large_window(n: usize, m: usize) -> Result<()> {
    check_window(m, n)?;
    if m < MIN_WINDOW {
        return Err(Error::BadWindowLength {
            m,
            n,
            reason: "the large-m algorithm needs m >= 8",
        });
    }
    Ok(())
}

/// For one batch, the number of windows of length `m` matching the batch's
/// window `batch.window(t)` exactly up to the end of the anchor and with at
/// most one mismatch overall, for every `t` in [`WindowBatch::t_range`].
pub fn batch_l_occurrence_counts(text: &Text, batch: &WindowBatch, m: usize) -> Result<Vec<u64>> {
    check_large_window(text.len(), m)?;
    let lce = LceIndex::new(text)?;
    let dir = Direction::new(text, batch.q)?;
    let (t_lo, t_hi) = batch.t_range();
    let mut updates = 0;
    let counts = pass_counts(
        &lce.strand(false),
        &dir,
        batch.anchor(),
        t_lo,
        t_hi,
        m,
        batch.q,
        &mut updates,
    )?;
    Ok(counts.into_iter().map(|c| c as u64).collect())
}

pub fn one_mappability_large_m(text: &Text, m: usize) -> Result<MappabilityVector> {
    one_mappability_large_m_with_stats(text, m).map(|(v, _)| v)
}

pub fn one_mappability_large_m_with_stats(
    text: &Text,
    m: usize,
) -> Result<(MappabilityVector, LargeMStats)> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    let n = text.len();
    check_large_window(n, m)?;
    let q = m / 4;
    let lce = LceIndex::new(text)?;
    let forward = Direction::new(text, q)?;
    let backward = Direction::new(&text.reversed(), q)?;
    let exact = TrimmedSuffixTree::from_index(lce.forward(), m)?.exact_occurrence_counts();

    let mut totals = vec![0i64; n - m + 1];
    let mut stats = LargeMStats::default();
    for batch in WindowBatch::tiling(n, m) {
        stats.batches += 1;
        let (t_lo, t_hi) = batch.t_range();
        let lo = pass_counts(
            &lce.strand(false),
            &forward,
            batch.anchor(),
            t_lo,
            t_hi,
            m,
            q,
            &mut stats.max_updates_per_pass,
        )?;
        for (k, c) in lo.into_iter().enumerate() {
            totals[batch.window(t_lo + k)] += c;
        }

        // Mirror: the right part of window x is the left part, up to the
        // reversed anchor S[b+2q .. b+3q), of the reversed window at
        // n - x - m, which holds that anchor at offset x + m - b - 3q.
        let rev_anchor = n - batch.base - 3 * q;
        let off = m - 3 * q;
        let ro = pass_counts(
            &lce.strand(true),
            &backward,
            rev_anchor,
            off,
            off + batch.last - batch.base,
            m,
            q,
            &mut stats.max_updates_per_pass,
        )?;
        for (k, c) in ro.into_iter().enumerate() {
            totals[batch.base + k] += c;
        }
    }
    let totals: Vec<u64> = totals
        .iter()
        .zip(&exact)
        .map(|(&t, &e)| (t - e as i64) as u64)
        .collect();
    Ok((MappabilityVector::from_totals(exact, &totals), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{naive_mappability, naive_stairs_apply, OracleConfig};

    fn naive(text: &Text, m: usize) -> Vec<u64> {
        naive_mappability(text, m, &OracleConfig::default())
            .unwrap()
            .totals()
    }

    #[test]
    fn rejects_short_windows() {
        let t = Text::from("abcdefghij");
        assert!(matches!(
            one_mappability_large_m(&t, 7),
            Err(Error::BadWindowLength { .. })
        ));
        assert!(one_mappability_large_m(&t, 11).is_err());
    }

    #[test]
    fn tiling_covers_every_start() {
        let b = WindowBatch::tiling(40, 9);
        let mut seen = [0; 32];
        for w in &b {
            for s in &mut seen[w.base..=w.last] {
                *s += 1;
            }
            let (lo, hi) = w.t_range();
            assert_eq!(w.window(hi), w.base);
            assert_eq!(w.window(lo), w.last);
        }
        assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn unary_text() {
        let t = Text::from("a".repeat(50).as_str());
        let v = one_mappability_large_m(&t, 8).unwrap();
        assert!(v.totals().iter().all(|&c| c == 43));
    }

    #[test]
    fn periodic_and_planted() {
        let mut cases = vec!["ab".repeat(30), "abc".repeat(20), "aab".repeat(17)];
        let mut planted: Vec<u8> = vec![b'a'; 60];
        planted[29] = b'b';
        cases.push(String::from_utf8(planted).unwrap());
        for s in &cases {
            let t = Text::from(s.as_str());
            for m in [8, 9, 12, 16, 23] {
                let got = one_mappability_large_m(&t, m).unwrap().totals();
                assert_eq!(got, naive(&t, m), "{s} m={m}");
            }
        }
    }

    #[test]
    fn cluster_type_one() {
        let ext = ClusterExtents {
            progression: ArithmeticProgression::new(0, 2, 1),
            r: LceRep {
                count: 3,
                pieces: vec![crate::periodic::Piece {
                    lo: 0,
                    hi: 2,
                    base: 40,
                    step: 0,
                }],
                aligned: None,
            },
            l: LceRep {
                count: 3,
                pieces: vec![crate::periodic::Piece {
                    lo: 0,
                    hi: 2,
                    base: 40,
                    step: 0,
                }],
                aligned: None,
            },
        };
        let u = updates_from_cluster(&ext, 32, 0, 8, 1);
        assert_eq!(u, vec![StairsUpdate::Interval { a: 0, b: 8, x: 3 }]);
    }

    #[test]
    fn sliding_window_decomposition() {
        let mut out = Vec::new();
        emit(
            0,
            2,
            Linear { base: 0, step: 2 },
            Linear { base: 2, step: 2 },
            2,
            &mut out,
        );
        assert_eq!(naive_stairs_apply(7, 2, &out), vec![1, 1, 2, 1, 2, 1, 1]);
    }
}
