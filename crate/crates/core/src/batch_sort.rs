//! Batched suffix sorting.
//!
//! Many small lists are sorted at once by the text suffixes their members point
//! at: every member is dropped into a bucket keyed by its suffix start, then a
//! single left-to-right pass over the suffix array empties the buckets into the
//! output lists. One pass costs `O(n + members)`, so callers accumulate
//! requests until the batch holds between `n` and `2n` members.

use crate::error::{Error, Result};
use crate::lce::DirectionalIndex;

const NIL: u32 = u32::MAX;

/// Members to be ordered by the suffix starting `offset - 1` symbols after
/// their occurrence, i.e. at 1-based index `offset` of the word that occurs
/// there.
#[derive(Debug, Clone)]
pub struct SortRequest<T> {
    pub offset: usize,
    /// `(item, 0-based occurrence start)`.
    pub members: Vec<(T, usize)>,
}

impl<T> SortRequest<T> {
    pub fn new(offset: usize) -> Self {
        SortRequest {
            offset,
            members: Vec::new(),
        }
    }
}

/// Sorts every request's members by the lexicographic order of
/// `S[occurrence + offset - 1 ..]`. The empty suffix sorts first; ties keep
/// an arbitrary order.
pub fn batched_suffix_sort<T: Copy>(
    index: &DirectionalIndex,
    requests: &[SortRequest<T>],
) -> Result<Vec<Vec<T>>> {
    let n = index.len();
    let total: usize = requests.iter().map(|r| r.members.len()).sum();

    // Bucket heads per suffix start (n = empty suffix), chained through `next`.
    let mut head = vec![NIL; n + 1];
    let mut next = Vec::with_capacity(total);
    let mut owner = Vec::with_capacity(total);
    for (r, req) in requests.iter().enumerate() {
        for (k, &(_, occ)) in req.members.iter().enumerate() {
            let key = occ + req.offset.max(1) - 1;
            if key > n {
                return Err(Error::OffsetPastEnd { key: key + 1, n });
            }
            let id = next.len() as u32;
            next.push(head[key]);
            owner.push((r as u32, k as u32));
            head[key] = id;
        }
    }

    let mut out: Vec<Vec<T>> = requests
        .iter()
        .map(|r| Vec::with_capacity(r.members.len()))
        .collect();
    let mut drain = |key: usize| {
        let mut e = head[key];
        while e != NIL {
            let (r, k) = owner[e as usize];
            out[r as usize].push(requests[r as usize].members[k as usize].0);
            e = next[e as usize];
        }
    };
    drain(n);
    for &p in index.suffix_array().positions() {
        drain(p as usize);
    }
    Ok(out)
}
