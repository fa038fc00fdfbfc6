//! Suffix tree trimmed at string depth `m`.
//!
//! The tree is the compacted trie of all length-`m` windows of the text,
//! obtained from the suffix array: windows in suffix-array order, adjacent
//! LCPs capped at `m`, and the usual stack construction over the resulting
//! LCP intervals. Every distinct window is an explicit leaf at depth `m`.
//! Suffixes shorter than `m` contribute no nodes.
//!
//! Occurrence lists are not copied per node: windows are kept in
//! lexicographic order, so the occurrences of any node's locus form a
//! contiguous slice of that order, and leaves below a node form a contiguous
//! slice of the leaf order.

use crate::error::{Error, Result};
use crate::lce::DirectionalIndex;
use crate::text::Text;

pub type NodeId = u32;

pub const ROOT: NodeId = 0;
const NO_PARENT: NodeId = NodeId::MAX;

#[derive(Debug, Clone)]
struct Node {
    parent: NodeId,
    depth: u32,
    /// `(first symbol of edge, child)`, in increasing symbol order.
    children: Vec<(u32, NodeId)>,
    win_lo: u32,
    win_hi: u32,
    leaf_lo: u32,
    leaf_hi: u32,
}

impl Node {
    fn new(parent: NodeId, depth: usize, win_lo: usize, leaf_lo: usize) -> Self {
        Node {
            parent,
            depth: depth as u32,
            children: Vec::new(),
            win_lo: win_lo as u32,
            win_hi: win_lo as u32,
            leaf_lo: leaf_lo as u32,
            leaf_hi: leaf_lo as u32,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TrimmedSuffixTree {
    m: usize,
    symbols: Vec<u32>,
    nodes: Vec<Node>,
    /// Window start positions (0-based) in lexicographic order of the windows.
    windows: Vec<u32>,
    /// Depth-`m` leaves in lexicographic order.
    leaves: Vec<NodeId>,
}

impl TrimmedSuffixTree {
    pub fn build(text: &Text, m: usize) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyText);
        }
        check_window(m, text.len())?;
        Self::from_index(&DirectionalIndex::new(text)?, m)
    }

    pub fn from_index(index: &DirectionalIndex, m: usize) -> Result<Self> {
        let symbols = index.symbols();
        let n = symbols.len();
        check_window(m, n)?;
        let sa = index.suffix_array();

        // Windows in lexicographic order with their adjacent LCPs.
        let mut windows = Vec::with_capacity(n - m + 1);
        let mut adjacent = Vec::with_capacity(n - m + 1);
        let mut running = u32::MAX;
        for (r, &p) in sa.positions().iter().enumerate() {
            if r > 0 {
                running = running.min(sa.lcp()[r]);
            }
            if p as usize + m <= n {
                adjacent.push(if windows.is_empty() {
                    0
                } else {
                    running.min(m as u32)
                });
                windows.push(p);
                running = u32::MAX;
            }
        }

        let mut nodes = vec![Node::new(NO_PARENT, 0, 0, 0)];
        let mut leaves: Vec<NodeId> = Vec::with_capacity(windows.len());
        let mut stack: Vec<NodeId> = vec![ROOT];

        for (k, &p) in windows.iter().enumerate() {
            if k > 0 {
                let l = adjacent[k] as usize;
                if l >= m {
                    continue;
                }
                let mut last = None;
                while nodes[*stack.last().unwrap() as usize].depth as usize > l {
                    let v = stack.pop().unwrap();
                    close(&mut nodes[v as usize], k, leaves.len());
                    last = Some(v);
                }
                let top = *stack.last().unwrap();
                if (nodes[top as usize].depth as usize) < l {
                    let last = last.expect("a deeper node was popped");
                    let id = nodes.len() as NodeId;
                    let (win_lo, leaf_lo) = {
                        let v = &nodes[last as usize];
                        (v.win_lo as usize, v.leaf_lo as usize)
                    };
                    let mut inner = Node::new(top, l, win_lo, leaf_lo);
                    inner
                        .children
                        .push((symbols[windows[win_lo] as usize + l], last));
                    nodes.push(inner);
                    nodes[last as usize].parent = id;
                    let slot = nodes[top as usize].children.last_mut().unwrap();
                    debug_assert_eq!(slot.1, last);
                    slot.1 = id;
                    stack.push(id);
                }
            }
            let top = *stack.last().unwrap();
            let id = nodes.len() as NodeId;
            let symbol = symbols[p as usize + nodes[top as usize].depth as usize];
            nodes.push(Node::new(top, m, k, leaves.len()));
            nodes[top as usize].children.push((symbol, id));
            leaves.push(id);
            stack.push(id);
        }
        let (end, leaf_end) = (windows.len(), leaves.len());
        while let Some(v) = stack.pop() {
            close(&mut nodes[v as usize], end, leaf_end);
        }

        Ok(TrimmedSuffixTree {
            m,
            symbols: symbols.to_vec(),
            nodes,
            windows,
            leaves,
        })
    }

    pub fn window_len(&self) -> usize {
        self.m
    }

    pub fn text_len(&self) -> usize {
        self.symbols.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> NodeId {
        ROOT
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        let p = self.nodes[v as usize].parent;
        (p != NO_PARENT).then_some(p)
    }

    /// String depth `|L(v)|`.
    pub fn depth(&self, v: NodeId) -> usize {
        self.nodes[v as usize].depth as usize
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.depth(v) == self.m
    }

    /// Children as `(first edge symbol, child)` in increasing symbol order.
    pub fn children(&self, v: NodeId) -> &[(u32, NodeId)] {
        &self.nodes[v as usize].children
    }

    pub fn child(&self, v: NodeId, symbol: u32) -> Option<NodeId> {
        let ch = self.children(v);
        ch.binary_search_by_key(&symbol, |&(c, _)| c)
            .ok()
            .map(|k| ch[k].1)
    }

    /// Edge into `v` as `(start, length)` over the text (0-based start).
    pub fn edge_label(&self, v: NodeId) -> (usize, usize) {
        match self.parent(v) {
            None => (0, 0),
            Some(p) => {
                let pd = self.depth(p);
                (self.canonical_occurrence(v) + pd, self.depth(v) - pd)
            }
        }
    }

    /// The locus `L(v)`.
    pub fn locus(&self, v: NodeId) -> &[u32] {
        let start = self.canonical_occurrence(v);
        &self.symbols[start..start + self.depth(v)]
    }

    /// Number of occurrences of `L(v)` as a prefix of some window.
    pub fn occ_count(&self, v: NodeId) -> usize {
        let node = &self.nodes[v as usize];
        (node.win_hi - node.win_lo) as usize
    }

    /// Window starts (0-based) at which `L(v)` occurs, in lexicographic order
    /// of the windows.
    pub fn occurrences(&self, v: NodeId) -> &[u32] {
        let node = &self.nodes[v as usize];
        &self.windows[node.win_lo as usize..node.win_hi as usize]
    }

    /// The first entry of the occurrence list.
    pub fn canonical_occurrence(&self, v: NodeId) -> usize {
        self.windows[self.nodes[v as usize].win_lo as usize] as usize
    }

    /// Number of depth-`m` leaves in the subtree of `v`.
    pub fn leaf_count(&self, v: NodeId) -> usize {
        let node = &self.nodes[v as usize];
        (node.leaf_hi - node.leaf_lo) as usize
    }

    /// Depth-`m` leaves below `v`, in lexicographic order.
    pub fn leaves_below(&self, v: NodeId) -> &[NodeId] {
        let node = &self.nodes[v as usize];
        &self.leaves[node.leaf_lo as usize..node.leaf_hi as usize]
    }

    /// All depth-`m` leaves in lexicographic order.
    pub fn leaves(&self) -> &[NodeId] {
        &self.leaves
    }

    /// Ordinal of a leaf within [`TrimmedSuffixTree::leaves`].
    pub fn leaf_ordinal(&self, leaf: NodeId) -> usize {
        debug_assert!(self.is_leaf(leaf));
        self.nodes[leaf as usize].leaf_lo as usize
    }

    /// Windows in lexicographic order.
    pub fn windows(&self) -> &[u32] {
        &self.windows
    }

    /// For each window start, the ordinal of its leaf.
    pub fn leaf_of_window(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.windows.len()];
        for (ord, &leaf) in self.leaves.iter().enumerate() {
            for &p in self.occurrences(leaf) {
                out[p as usize] = ord as u32;
            }
        }
        out
    }

    /// For each window start, the number of exact occurrences of its window
    /// (self-occurrence included).
    pub fn exact_occurrence_counts(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.windows.len()];
        for &leaf in &self.leaves {
            let c = self.occ_count(leaf) as u64;
            for &p in self.occurrences(leaf) {
                out[p as usize] = c;
            }
        }
        out
    }

    /// Node ids in depth-first preorder, children in symbol order.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![ROOT];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children(v).iter().rev().map(|&(_, c)| c));
        }
        order
    }
}

fn close(node: &mut Node, win_end: usize, leaf_end: usize) {
    node.win_hi = win_end as u32;
    node.leaf_hi = leaf_end as u32;
}

pub(crate) fn check_window(m: usize, n: usize) -> Result<()> {
    if m == 0 || m > n {
        Err(Error::window(m, n))
    } else {
        Ok(())
    }
}
