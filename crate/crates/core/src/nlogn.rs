//! 1-mappability in `O(n log n)` time over a general integer alphabet.
//!
//! Every pair of distinct windows at Hamming distance one meets in the
//! trimmed tree at a node `u` of depth `k`, the mismatch being at index `k`.
//! If neither of the two children of `u` involved is heavy the pair is found
//! by sorting the leaves of the light children of `u` by what follows the
//! mismatch (light occurrences). Otherwise one leaf `z` is in a sidetree and
//! the other lies below the heavy child; replacing `L(z)[k]` with the heavy
//! symbol gives the heavy word of `z`, and all heavy words of a path are
//! sorted and merged against the leaves below the path head.

use std::cmp::Ordering;

use crate::batch_sort::{batched_suffix_sort, SortRequest};
use crate::error::{Error, Result};
use crate::heavy_path::HeavyPathDecomposition;
use crate::lce::DirectionalIndex;
use crate::mappability::MappabilityVector;
use crate::suffix_tree::{check_window, NodeId, TrimmedSuffixTree};
use crate::text::Text;

/// A sidetree leaf with the symbol at `mismatch_index` replaced by the heavy
/// symbol of the path node it hangs off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeavyWord {
    pub leaf: NodeId,
    /// Canonical (0-based) occurrence of `L(leaf)`.
    pub occurrence: usize,
    /// 0-based index of the substituted symbol; equals the depth of `source`.
    pub mismatch_index: usize,
    pub heavy_symbol: u32,
    pub source: NodeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Placement {
    Less,
    Equal,
    Greater,
}

/// Heavy words of one path bucketed by their LCP with the path's tail locus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LcpPartitionOutput {
    /// `(l, words)` with `l` ascending; words compare below the tail locus.
    pub less: Vec<(usize, Vec<HeavyWord>)>,
    /// Words having the tail locus as a prefix.
    pub equal: Vec<HeavyWord>,
    /// `(l, words)` with `l` ascending; words compare above the tail locus.
    pub greater: Vec<(usize, Vec<HeavyWord>)>,
    pub tail_depth: usize,
}

impl LcpPartitionOutput {
    pub fn is_empty(&self) -> bool {
        self.less.is_empty() && self.equal.is_empty() && self.greater.is_empty()
    }

    pub fn len(&self) -> usize {
        let side = |v: &Vec<(usize, Vec<HeavyWord>)>| v.iter().map(|(_, w)| w.len()).sum::<usize>();
        side(&self.less) + self.equal.len() + side(&self.greater)
    }

    /// Buckets in the order whose concatenation is sorted: `<` buckets by
    /// increasing `l`, the `=` bucket, then `>` buckets by decreasing `l`.
    fn ordered_buckets(&self) -> impl Iterator<Item = (usize, &[HeavyWord])> {
        let tail = self.tail_depth;
        self.less
            .iter()
            .map(|(l, w)| (*l, w.as_slice()))
            .chain((!self.equal.is_empty()).then_some((tail, self.equal.as_slice())))
            .chain(self.greater.iter().rev().map(|(l, w)| (*l, w.as_slice())))
    }
}

/// Instrumentation collected by [`one_mappability_nlogn_with_stats`].
#[derive(Debug, Clone, Default)]
pub struct NlognStats {
    pub text_len: usize,
    /// Member count of every batched suffix sort in the light phase.
    pub light_batches: Vec<usize>,
    /// Heavy-word count of every batched LCP partition and its sort.
    pub heavy_batches: Vec<usize>,
    /// With auditing on, every counted `(leaf, partner)` pair as leaf
    /// ordinals. Each unordered pair appears once in each direction.
    pub pairs: Option<Vec<(usize, usize)>>,
}

impl NlognStats {
    pub fn max_batch(&self) -> usize {
        self.light_batches
            .iter()
            .chain(&self.heavy_batches)
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Per-leaf counters of windows at Hamming distance exactly one.
struct Counters<'t> {
    tree: &'t TrimmedSuffixTree,
    values: Vec<u64>,
    pairs: Option<Vec<(usize, usize)>>,
}

impl<'t> Counters<'t> {
    fn new(tree: &'t TrimmedSuffixTree, audit: bool) -> Self {
        Counters {
            tree,
            values: vec![0; tree.leaves().len()],
            pairs: audit.then(Vec::new),
        }
    }

    fn add_pair(&mut self, z: NodeId, partner: NodeId) {
        let (a, b) = (self.tree.leaf_ordinal(z), self.tree.leaf_ordinal(partner));
        self.values[a] += self.tree.occ_count(partner) as u64;
        self.values[b] += self.tree.occ_count(z) as u64;
        if let Some(p) = &mut self.pairs {
            p.push((a, b));
            p.push((b, a));
        }
    }
}

pub fn one_mappability_nlogn(text: &Text, m: usize) -> Result<MappabilityVector> {
    one_mappability_nlogn_with_stats(text, m, false).map(|(v, _)| v)
}

/// Like [`one_mappability_nlogn`], also returning batch sizes and, when
/// `audit` is set, the counted leaf pairs.
pub fn one_mappability_nlogn_with_stats(
    text: &Text,
    m: usize,
    audit: bool,
) -> Result<(MappabilityVector, NlognStats)> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    check_window(m, text.len())?;
    let index = DirectionalIndex::new(text)?;
    let tree = TrimmedSuffixTree::from_index(&index, m)?;
    let hpd = HeavyPathDecomposition::new(&tree);
    let n = text.len();

    let mut stats = NlognStats {
        text_len: n,
        ..NlognStats::default()
    };
    let mut counters = Counters::new(&tree, audit);
    light_phase(&tree, &hpd, &index, &mut counters, &mut stats.light_batches)?;
    heavy_phase(&tree, &hpd, &index, &mut counters, &mut stats.heavy_batches)?;
    stats.pairs = counters.pairs.take();

    let exact = tree.exact_occurrence_counts();
    let one = tree
        .leaf_of_window()
        .iter()
        .map(|&ord| counters.values[ord as usize])
        .collect();
    Ok((MappabilityVector::new(exact, one), stats))
}

fn light_request(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    u: NodeId,
) -> SortRequest<NodeId> {
    let mut req = SortRequest::new(tree.depth(u) + 2);
    req.members = hpd
        .sidetree_leaves(tree, u)
        .map(|s| (s.leaf, s.occurrence))
        .collect();
    req
}

fn light_phase(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    index: &DirectionalIndex,
    counters: &mut Counters,
    batches: &mut Vec<usize>,
) -> Result<()> {
    let n = index.len();
    let mut pending: Vec<SortRequest<NodeId>> = Vec::new();
    let mut size = 0;
    for u in 0..tree.node_count() as NodeId {
        if tree.is_leaf(u) || hpd.sidetree_leaf_count(tree, u) < 2 {
            continue;
        }
        let req = light_request(tree, hpd, u);
        size += req.members.len();
        pending.push(req);
        if size >= n {
            flush_light(tree, index, &mut pending, counters)?;
            batches.push(size);
            size = 0;
        }
    }
    if size > 0 {
        flush_light(tree, index, &mut pending, counters)?;
        batches.push(size);
    }
    Ok(())
}

fn flush_light(
    tree: &TrimmedSuffixTree,
    index: &DirectionalIndex,
    pending: &mut Vec<SortRequest<NodeId>>,
    counters: &mut Counters,
) -> Result<()> {
    let sorted = batched_suffix_sort(index, pending)?;
    for (req, list) in pending.iter().zip(&sorted) {
        group_light(tree, index, req.offset - 2, list, counters);
    }
    pending.clear();
    Ok(())
}

/// Pairs up leaves of a list sorted by what follows index `k`, adding each
/// member's group partners to its counter.
fn group_light(
    tree: &TrimmedSuffixTree,
    index: &DirectionalIndex,
    k: usize,
    list: &[NodeId],
    counters: &mut Counters,
) {
    let m = tree.window_len();
    let need = m - k - 1;
    let key = |z: NodeId| tree.canonical_occurrence(z) + k + 1;
    let mut a = 0;
    while a < list.len() {
        let mut b = a + 1;
        while b < list.len() && index.lcp(key(list[b - 1]), key(list[b])) >= need {
            b += 1;
        }
        if b - a > 1 {
            let group = &list[a..b];
            if counters.pairs.is_some() {
                for (x, &z) in group.iter().enumerate() {
                    for &y in &group[x + 1..] {
                        counters.add_pair(z, y);
                    }
                }
            } else {
                let sum: u64 = group.iter().map(|&z| tree.occ_count(z) as u64).sum();
                for &z in group {
                    counters.values[tree.leaf_ordinal(z)] += sum - tree.occ_count(z) as u64;
                }
            }
        }
        a = b;
    }
}

/// Counts light occurrences for every node of one heavy path.
pub fn count_light_occurrences(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    index: &DirectionalIndex,
    path: usize,
    counters: &mut [u64],
) -> Result<()> {
    let mut c = Counters::new(tree, false);
    let mut pending: Vec<SortRequest<NodeId>> = hpd.paths()[path]
        .iter()
        .filter(|&&u| hpd.sidetree_leaf_count(tree, u) >= 2)
        .map(|&u| light_request(tree, hpd, u))
        .collect();
    flush_light(tree, index, &mut pending, &mut c)?;
    for (dst, v) in counters.iter_mut().zip(c.values) {
        *dst += v;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    path: u32,
    l: u32,
    placement: Placement,
    word: HeavyWord,
}

fn path_entries(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    index: &DirectionalIndex,
    path: &[NodeId],
    local: u32,
    out: &mut Vec<Entry>,
) {
    let Some(&tail) = path.last() else { return };
    let jx = tree.canonical_occurrence(tail);
    let wx = tree.depth(tail);
    let s = index.symbols();
    for &u in &path[..path.len() - 1] {
        let k = tree.depth(u);
        let d = hpd
            .heavy_symbol(tree, u)
            .expect("non-tail path node has a heavy child");
        for side in hpd.sidetree_leaves(tree, u) {
            let jz = side.occurrence;
            let l = (k + 1 + index.lcp(jz + k + 1, jx + k + 1)).min(wx);
            let placement = if l == wx {
                Placement::Equal
            } else if s[jz + l] < s[jx + l] {
                Placement::Less
            } else {
                Placement::Greater
            };
            out.push(Entry {
                path: local,
                l: l as u32,
                placement,
                word: HeavyWord {
                    leaf: side.leaf,
                    occurrence: jz,
                    mismatch_index: k,
                    heavy_symbol: d,
                    source: u,
                },
            });
        }
    }
}

/// Stable counting sort of `entries` by `key`, whose values lie in `0..range`.
fn counting_sort<F: Fn(&Entry) -> usize>(entries: Vec<Entry>, range: usize, key: F) -> Vec<Entry> {
    let mut start = vec![0usize; range + 1];
    for e in &entries {
        start[key(e) + 1] += 1;
    }
    for r in 0..range {
        start[r + 1] += start[r];
    }
    let mut out = vec![None; entries.len()];
    for e in entries {
        let slot = &mut start[key(&e)];
        out[*slot] = Some(e);
        *slot += 1;
    }
    out.into_iter()
        .map(|e| e.expect("every slot filled"))
        .collect()
}

/// Groups entries of `paths` into one partition per path. Sorting is by
/// counting passes, so a batch costs `O(entries + m + paths)`.
fn partition_batch(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    index: &DirectionalIndex,
    paths: &[usize],
) -> Vec<LcpPartitionOutput> {
    let m = tree.window_len();
    let mut entries = Vec::new();
    for (local, &p) in paths.iter().enumerate() {
        path_entries(
            tree,
            hpd,
            index,
            &hpd.paths()[p],
            local as u32,
            &mut entries,
        );
    }
    let entries = counting_sort(entries, 3 * (m + 1), |e| {
        3 * e.l as usize + e.placement as usize
    });
    let entries = counting_sort(entries, paths.len(), |e| e.path as usize);

    let mut out: Vec<LcpPartitionOutput> = paths
        .iter()
        .map(|&p| LcpPartitionOutput {
            tail_depth: tree.depth(*hpd.paths()[p].last().unwrap()),
            ..LcpPartitionOutput::default()
        })
        .collect();
    let mut a = 0;
    while a < entries.len() {
        let head = entries[a];
        let mut b = a + 1;
        while b < entries.len()
            && entries[b].path == head.path
            && entries[b].l == head.l
            && entries[b].placement == head.placement
        {
            b += 1;
        }
        let words: Vec<HeavyWord> = entries[a..b].iter().map(|e| e.word).collect();
        let part = &mut out[head.path as usize];
        match head.placement {
            Placement::Less => part.less.push((head.l as usize, words)),
            Placement::Equal => part.equal = words,
            Placement::Greater => part.greater.push((head.l as usize, words)),
        }
        a = b;
    }
    out
}

/// Buckets the heavy words of one path by LCP with the path's tail locus.
/// Paths with fewer than two nodes yield an empty partition.
pub fn lcp_partition(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    index: &DirectionalIndex,
    path: usize,
) -> LcpPartitionOutput {
    partition_batch(tree, hpd, index, &[path]).pop().unwrap()
}

/// Sorts several partitions with one batched suffix sort.
fn sort_partitions(
    index: &DirectionalIndex,
    parts: &[LcpPartitionOutput],
) -> Result<Vec<Vec<HeavyWord>>> {
    let mut requests = Vec::new();
    let mut owner = Vec::new();
    for (p, part) in parts.iter().enumerate() {
        for (l, words) in part.ordered_buckets() {
            let mut req = SortRequest::new(l + 1);
            req.members = words.iter().map(|w| (*w, w.occurrence)).collect();
            requests.push(req);
            owner.push(p);
        }
    }
    let sorted = batched_suffix_sort(index, &requests)?;
    let mut out = vec![Vec::new(); parts.len()];
    for (p, list) in owner.into_iter().zip(sorted) {
        out[p].extend(list);
    }
    Ok(out)
}

/// The heavy words of a partition in lexicographic order.
pub fn sorted_heavy_words(
    index: &DirectionalIndex,
    partition: &LcpPartitionOutput,
) -> Result<Vec<HeavyWord>> {
    Ok(sort_partitions(index, std::slice::from_ref(partition))?
        .pop()
        .unwrap())
}

/// Compares a heavy word with the length-`m` window at `jp`.
fn compare_heavy(index: &DirectionalIndex, m: usize, hw: &HeavyWord, jp: usize) -> Ordering {
    let s = index.symbols();
    let (jz, k) = (hw.occurrence, hw.mismatch_index);
    let a = index.lcp(jz, jp);
    if a < k {
        return s[jz + a].cmp(&s[jp + a]);
    }
    match hw.heavy_symbol.cmp(&s[jp + k]) {
        Ordering::Equal => {}
        other => return other,
    }
    let t = k + 1 + index.lcp(jz + k + 1, jp + k + 1);
    if t >= m {
        Ordering::Equal
    } else {
        s[jz + t].cmp(&s[jp + t])
    }
}

fn merge_heavy(
    tree: &TrimmedSuffixTree,
    index: &DirectionalIndex,
    words: &[HeavyWord],
    leaves: &[NodeId],
    counters: &mut Counters,
) {
    let m = tree.window_len();
    let (mut i, mut j) = (0, 0);
    while i < words.len() && j < leaves.len() {
        let jp = tree.canonical_occurrence(leaves[j]);
        match compare_heavy(index, m, &words[i], jp) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                counters.add_pair(words[i].leaf, leaves[j]);
                // Several heavy words may equal the same leaf.
                i += 1;
            }
        }
    }
}

/// Merges sorted heavy words against the sorted leaves below `head`,
/// crediting both sides of every equality. `counters` is indexed by leaf
/// ordinal.
pub fn count_p_heavy(
    tree: &TrimmedSuffixTree,
    index: &DirectionalIndex,
    head: NodeId,
    words: &[HeavyWord],
    counters: &mut [u64],
) {
    let mut c = Counters::new(tree, false);
    merge_heavy(tree, index, words, tree.leaves_below(head), &mut c);
    for (dst, v) in counters.iter_mut().zip(c.values) {
        *dst += v;
    }
}

fn heavy_phase(
    tree: &TrimmedSuffixTree,
    hpd: &HeavyPathDecomposition,
    index: &DirectionalIndex,
    counters: &mut Counters,
    batches: &mut Vec<usize>,
) -> Result<()> {
    let n = index.len();
    let paths = hpd.paths();
    let weight = |p: usize| -> usize {
        let path = &paths[p];
        path[..path.len() - 1]
            .iter()
            .map(|&u| hpd.sidetree_leaf_count(tree, u))
            .sum()
    };

    let mut run = |batch: &mut Vec<usize>, size: usize, counters: &mut Counters| -> Result<()> {
        let parts = partition_batch(tree, hpd, index, batch);
        let sorted = sort_partitions(index, &parts)?;
        for (&p, words) in batch.iter().zip(&sorted) {
            merge_heavy(tree, index, words, tree.leaves_below(paths[p][0]), counters);
        }
        batches.push(size);
        batch.clear();
        Ok(())
    };

    let mut batch = Vec::new();
    let mut size = 0;
    for (p, path) in paths.iter().enumerate() {
        if path.len() < 2 {
            continue;
        }
        let w = weight(p);
        if w == 0 {
            continue;
        }
        batch.push(p);
        size += w;
        if size >= n {
            run(&mut batch, size, counters)?;
            size = 0;
        }
    }
    if size > 0 {
        run(&mut batch, size, counters)?;
    }
    Ok(())
}
