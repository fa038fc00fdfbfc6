//! Heavy path decomposition of a trimmed suffix tree.
//!
//! The edge `(u, v)` is heavy iff `|I_u| < 2 |I_v|`, where `I_x` is the set of
//! depth-`m` leaves below `x`. At most one child can satisfy this, so every
//! node lies on exactly one maximal path of heavy edges. Subtrees hanging off a
//! path through light edges are its sidetrees.

use crate::suffix_tree::{NodeId, TrimmedSuffixTree};

#[derive(Debug, Clone)]
pub struct HeavyPathDecomposition {
    heavy_child: Vec<Option<NodeId>>,
    path_of: Vec<u32>,
    index_in_path: Vec<u32>,
    paths: Vec<Vec<NodeId>>,
}

/// A leaf of a sidetree, as seen from the path node the sidetree hangs off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SidetreeLeaf {
    /// First symbol of the light edge leading into the sidetree.
    pub symbol: u32,
    pub leaf: NodeId,
    /// Canonical (0-based) occurrence of the leaf's locus.
    pub occurrence: usize,
}

impl HeavyPathDecomposition {
    pub fn new(tree: &TrimmedSuffixTree) -> Self {
        let count = tree.node_count();
        let mut heavy_child = vec![None; count];
        let mut path_of = vec![0u32; count];
        let mut index_in_path = vec![0u32; count];
        let mut paths: Vec<Vec<NodeId>> = Vec::new();

        for v in 0..count as NodeId {
            let size = tree.leaf_count(v);
            // Ties cannot occur under the strict inequality; taking the first
            // qualifying child in symbol order keeps the choice deterministic.
            heavy_child[v as usize] = tree
                .children(v)
                .iter()
                .map(|&(_, c)| c)
                .find(|&c| size < 2 * tree.leaf_count(c));
        }

        let mut heads = vec![tree.root()];
        while let Some(head) = heads.pop() {
            let id = paths.len() as u32;
            let mut path = Vec::new();
            let mut cur = Some(head);
            while let Some(u) = cur {
                path_of[u as usize] = id;
                index_in_path[u as usize] = path.len() as u32;
                path.push(u);
                let heavy = heavy_child[u as usize];
                heads.extend(
                    tree.children(u)
                        .iter()
                        .rev()
                        .map(|&(_, c)| c)
                        .filter(|&c| Some(c) != heavy),
                );
                cur = heavy;
            }
            paths.push(path);
        }

        HeavyPathDecomposition {
            heavy_child,
            path_of,
            index_in_path,
            paths,
        }
    }

    pub fn heavy_child(&self, v: NodeId) -> Option<NodeId> {
        self.heavy_child[v as usize]
    }

    pub fn path_of(&self, v: NodeId) -> usize {
        self.path_of[v as usize] as usize
    }

    pub fn index_in_path(&self, v: NodeId) -> usize {
        self.index_in_path[v as usize] as usize
    }

    /// Heavy paths, each listed from its head (shallowest node) downwards.
    pub fn paths(&self) -> &[Vec<NodeId>] {
        &self.paths
    }

    pub fn is_light_edge(&self, tree: &TrimmedSuffixTree, v: NodeId) -> bool {
        tree.parent(v)
            .is_some_and(|p| self.heavy_child(p) != Some(v))
    }

    /// Symbol `d_i` of the heavy edge leaving `u`, if any.
    pub fn heavy_symbol(&self, tree: &TrimmedSuffixTree, u: NodeId) -> Option<u32> {
        let h = self.heavy_child(u)?;
        tree.children(u)
            .iter()
            .find(|&&(_, c)| c == h)
            .map(|&(s, _)| s)
    }

    /// Light children of `u` with their edge symbols.
    pub fn light_children<'t>(
        &'t self,
        tree: &'t TrimmedSuffixTree,
        u: NodeId,
    ) -> impl Iterator<Item = (u32, NodeId)> + 't {
        let heavy = self.heavy_child(u);
        tree.children(u)
            .iter()
            .copied()
            .filter(move |&(_, c)| Some(c) != heavy)
    }

    /// Number of depth-`m` leaves in the sidetrees of `u`.
    pub fn sidetree_leaf_count(&self, tree: &TrimmedSuffixTree, u: NodeId) -> usize {
        self.light_children(tree, u)
            .map(|(_, c)| tree.leaf_count(c))
            .sum()
    }

    /// Every depth-`m` leaf of every sidetree of `u`.
    pub fn sidetree_leaves<'t>(
        &'t self,
        tree: &'t TrimmedSuffixTree,
        u: NodeId,
    ) -> impl Iterator<Item = SidetreeLeaf> + 't {
        self.light_children(tree, u).flat_map(move |(symbol, c)| {
            tree.leaves_below(c).iter().map(move |&leaf| SidetreeLeaf {
                symbol,
                leaf,
                occurrence: tree.canonical_occurrence(leaf),
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Text;
    use proptest::prelude::*;

    fn build(s: &str, m: usize) -> (TrimmedSuffixTree, HeavyPathDecomposition) {
        let t = TrimmedSuffixTree::build(&Text::from(s), m).unwrap();
        let h = HeavyPathDecomposition::new(&t);
        (t, h)
    }

    #[test]
    fn path_shaped_tree_is_one_path() {
        let (t, h) = build("aaaa", 4);
        assert_eq!(h.paths().len(), 1);
        assert_eq!(h.paths()[0].len(), t.node_count());
        for v in 0..t.node_count() as NodeId {
            assert_eq!(h.sidetree_leaves(&t, v).count(), 0);
        }
    }

    #[test]
    fn three_equal_leaves_have_no_heavy_edge() {
        let (t, h) = build("abc", 1);
        assert_eq!(t.children(t.root()).len(), 3);
        assert_eq!(h.heavy_child(t.root()), None);
        assert_eq!(h.paths().len(), 4);
        assert!(h.paths().iter().all(|p| p.len() == 1));
        // The root is its own path head; all three leaves hang off it.
        assert_eq!(h.sidetree_leaves(&t, t.root()).count(), 3);
    }

    #[test]
    fn abab_has_no_heavy_edge() {
        // Leaves "ab" and "ba" split the root evenly.
        let (t, h) = build("abab", 2);
        assert_eq!(h.heavy_child(t.root()), None);
        assert_eq!(h.sidetree_leaves(&t, t.root()).count(), 2);
    }

    #[test]
    fn heavy_edge_towards_a() {
        // Leaves aa, ab, ba: the 'a' subtree holds two of three.
        let (t, h) = build("aabab", 2);
        let root = t.root();
        let heavy = h.heavy_child(root).unwrap();
        assert_eq!(t.locus(heavy), &[0]);
        assert_eq!(h.heavy_symbol(&t, root), Some(0));
        let side: Vec<SidetreeLeaf> = h.sidetree_leaves(&t, root).collect();
        assert_eq!(side.len(), 1);
        assert_eq!(side[0].occurrence, 2);
        assert_eq!(t.locus(side[0].leaf), &[1, 0]);
    }

    proptest! {
        #[test]
        fn light_depth_bounded(codes in proptest::collection::vec(0u64..4, 1..300), m_seed in 0usize..1000) {
            let text = Text::from_symbols(codes.clone());
            let m = m_seed % codes.len() + 1;
            let t = TrimmedSuffixTree::build(&text, m).unwrap();
            let h = HeavyPathDecomposition::new(&t);
            let leaves = t.leaves().len();
            let bound = leaves.ilog2() as usize + 1;

            let mut seen = vec![0usize; t.node_count()];
            for p in h.paths() {
                for &v in p {
                    seen[v as usize] += 1;
                }
                prop_assert_eq!(p[0] == t.root() || h.is_light_edge(&t, p[0]), true);
            }
            prop_assert!(seen.iter().all(|&c| c == 1));

            let mut sidetree_total = 0;
            let mut per_leaf_paths = vec![std::collections::BTreeSet::new(); t.node_count()];
            for (pid, p) in h.paths().iter().enumerate() {
                for &u in p {
                    for s in h.sidetree_leaves(&t, u) {
                        sidetree_total += 1;
                        per_leaf_paths[s.leaf as usize].insert(pid);
                    }
                }
            }
            prop_assert!(sidetree_total <= leaves * bound);
            prop_assert!(per_leaf_paths.iter().all(|s| s.len() <= bound));

            for &leaf in t.leaves() {
                let mut light = 0;
                let mut v = leaf;
                while let Some(p) = t.parent(v) {
                    if h.heavy_child(p) != Some(v) {
                        light += 1;
                    }
                    v = p;
                }
                prop_assert!(light <= bound);
            }
        }
    }
}
