//! Brute-force reference implementations.
//!
//! Everything here is the slow, obviously-correct counterpart of the real
//! structures: a naive suffix trie with suffix links, direct classification
//! of trie nodes into the LST / pre-LST, fast links by definition chasing,
//! nearest-marked-ancestor by parent walks, and longest-prefix matching by
//! substring scan. The differential tests compare the online builders and
//! the matcher against these. O(n²) by design.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::elt::EltForest;
use crate::lst::{Lst, NodeId, NodeKind, Symbol};
use crate::matcher::Edge;

/// Texts longer than this are rejected; the trie is quadratic.
pub const ORACLE_MAX_TEXT: usize = 4096;

/// Explicit suffix trie: one node per distinct substring, single-symbol
/// edges, per-node suffix links.
pub struct SuffixTrie<S: Symbol> {
    pub children: Vec<BTreeMap<S, usize>>,
    pub parent: Vec<Option<usize>>,
    pub parent_label: Vec<Option<S>>,
    pub slink: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    /// The node's path label is a suffix of the text.
    pub is_suffix: Vec<bool>,
}

impl<S: Symbol> SuffixTrie<S> {
    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Builds the exact suffix trie of `t` with suffix links.
pub fn naive_suffix_trie<S: Symbol>(t: &[S]) -> SuffixTrie<S> {
    assert!(
        t.len() <= ORACLE_MAX_TEXT,
        "oracle text limit is {ORACLE_MAX_TEXT} symbols"
    );
    let mut trie = SuffixTrie {
        children: alloc::vec![BTreeMap::new()],
        parent: alloc::vec![None],
        parent_label: alloc::vec![None],
        slink: alloc::vec![None],
        depth: alloc::vec![0],
        is_suffix: alloc::vec![t.is_empty()],
    };
    for i in 0..t.len() {
        let mut u = 0usize;
        for &c in &t[i..] {
            u = match trie.children[u].get(&c) {
                Some(&v) => v,
                None => {
                    let v = trie.children.len();
                    trie.children.push(BTreeMap::new());
                    trie.parent.push(Some(u));
                    trie.parent_label.push(Some(c));
                    trie.slink.push(None);
                    trie.depth.push(trie.depth[u] + 1);
                    trie.is_suffix.push(false);
                    trie.children[u].insert(c, v);
                    v
                }
            };
        }
        trie.is_suffix[u] = true;
    }
    trie.is_suffix[0] = true; // the empty suffix
    // Suffix links, breadth first: slink(child(u, c)) = child(slink(u), c),
    // with the root's children linking back to the root.
    let mut order: Vec<usize> = (0..trie.len()).collect();
    order.sort_by_key(|&u| trie.depth[u]);
    for u in order {
        if trie.depth[u] == 0 {
            continue;
        }
        if trie.depth[u] == 1 {
            trie.slink[u] = Some(0);
            continue;
        }
        let p = trie.parent[u].unwrap();
        let c = trie.parent_label[u].unwrap();
        let sp = trie.slink[p].unwrap();
        trie.slink[u] = Some(trie.children[sp][&c]);
    }
    trie
}

fn classify<S: Symbol>(trie: &SuffixTrie<S>, pre: bool) -> (Vec<bool>, Vec<bool>) {
    let n = trie.len();
    let mut type1 = alloc::vec![false; n];
    for u in 0..n {
        let branching = trie.children[u].len() >= 2;
        let leaf = trie.children[u].is_empty();
        type1[u] = if pre {
            u == trie.root() || branching || leaf
        } else {
            // Suffix-tree version where repeated suffixes are explicit.
            u == trie.root() || branching || trie.is_suffix[u]
        };
    }
    let mut type2 = alloc::vec![false; n];
    for u in 0..n {
        if !type1[u] {
            if let Some(s) = trie.slink[u] {
                type2[u] = type1[s];
            }
        }
    }
    (type1, type2)
}

fn compact<S: Symbol>(t: &[S], trie: &SuffixTrie<S>, type1: &[bool], type2: &[bool]) -> Lst<S> {
    let mut lst = Lst::new();
    lst.cur_len = t.len();
    for &c in t {
        lst.alphabet.insert(c);
    }
    let mut map: Vec<Option<NodeId>> = alloc::vec![None; trie.len()];
    map[trie.root()] = Some(lst.root());
    // Depth order guarantees parents are compacted before children.
    let mut order: Vec<usize> = (0..trie.len()).collect();
    order.sort_by_key(|&u| trie.depth[u]);
    for u in order {
        if u == trie.root() || !(type1[u] || type2[u]) {
            continue;
        }
        // Nearest LST ancestor and the first symbol below it.
        let mut anc = trie.parent[u].unwrap();
        let mut first_edge = trie.parent_label[u].unwrap();
        while !(type1[anc] || type2[anc]) {
            first_edge = trie.parent_label[anc].unwrap();
            anc = trie.parent[anc].unwrap();
        }
        let kind = if type1[u] { NodeKind::Type1 } else { NodeKind::Type2 };
        let is_leaf = trie.children[u].is_empty();
        let suffix_start = is_leaf.then(|| t.len() - trie.depth[u] + 1);
        // First symbol of the whole path label.
        let mut top = u;
        while trie.depth[top] > 1 {
            top = trie.parent[top].unwrap();
        }
        let id = lst.new_node(kind, is_leaf, trie.depth[u], suffix_start, trie.parent_label[top]);
        let parent_id = map[anc].expect("ancestor compacted first");
        lst.attach_child(parent_id, first_edge, id);
        map[u] = Some(id);
    }
    // Suffix links between members.
    for u in 0..trie.len() {
        let (Some(id), Some(s)) = (map[u], trie.slink[u]) else { continue };
        if let Some(target) = map[s] {
            lst.set_slink(id, target);
        }
    }
    lst.finalize();
    lst
}

/// The LST of `t` derived by direct classification of the suffix trie.
pub fn oracle_lst<S: Symbol>(t: &[S]) -> Lst<S> {
    let trie = naive_suffix_trie(t);
    let (t1, t2) = classify(&trie, false);
    compact(t, &trie, &t1, &t2)
}

/// The pre-LST of `t` (type-1 nodes are only the root, branching nodes and
/// leaves). Coincides with the LST when `t` ends with a unique terminator.
pub fn oracle_pre_lst<S: Symbol>(t: &[S]) -> Lst<S> {
    let trie = naive_suffix_trie(t);
    let (t1, t2) = classify(&trie, true);
    compact(t, &trie, &t1, &t2)
}

/// Rebuilds the edge link tree of a finished LST, for tests that need fast
/// links on oracle-built structures.
pub fn elt_of<S: Symbol>(lst: &Lst<S>) -> EltForest {
    let mut elt = EltForest::new();
    elt.init_root(lst.root());
    let mut order: Vec<NodeId> = lst.node_ids().collect();
    order.sort_by_key(|&u| lst.vdepth(u));
    for u in order {
        if u == lst.root() {
            continue;
        }
        let Some(s) = lst.node(u).slink else { continue };
        let marked = lst.node(lst.node(u).parent.unwrap()).kind == NodeKind::Type2;
        elt.add_attached(u, s, marked);
    }
    elt
}

/// Fast link of an edge by Definition-1 iteration: follow suffix links from
/// both endpoints until the images stop being parent and child. `None` when
/// the chain reaches the root first (single-symbol edges near the top).
pub fn naive_fast_link<S: Symbol>(lst: &Lst<S>, e: Edge) -> Option<Edge> {
    let mut u = e.parent;
    let mut v = e.child;
    loop {
        u = lst.node(u).slink?;
        v = lst.node(v).slink.expect("child image outlives parent image");
        if lst.node(v).parent != Some(u) {
            return Some(Edge { parent: u, child: v });
        }
    }
}

/// Length of the longest prefix of `p` occurring in `t`, by direct scan.
pub fn naive_longest_prefix<S: Symbol>(t: &[S], p: &[S]) -> usize {
    (0..=p.len())
        .rev()
        .find(|&l| l == 0 || t.windows(l).any(|w| w == &p[..l]))
        .unwrap_or(0)
}

/// Finds the LST node sitting at depth `label.len()` on the path that starts
/// with the symbols of `label`. Test helper: compressed symbols inside edges
/// are not re-verified, so `label` must be a path label that exists.
pub fn find_node<S: Symbol>(lst: &Lst<S>, label: &[S]) -> Option<NodeId> {
    let depth = label.len();
    let mut cur = lst.root();
    let mut at = 0usize;
    while at < depth {
        let next = lst.child(cur, label[at])?;
        let nd = lst.vdepth(next);
        if nd > depth {
            return None;
        }
        at = nd;
        cur = next;
    }
    Some(cur)
}

/// Reference tree for the nearest-marked-ancestor differential tests:
/// explicit parents, explicit marks, walk-up queries.
#[derive(Default)]
pub struct RefNmaTree {
    parent: Vec<Option<usize>>,
    marked: Vec<bool>,
    children: Vec<Vec<usize>>,
}

impl RefNmaTree {
    pub fn new_root() -> Self {
        RefNmaTree {
            parent: alloc::vec![None],
            marked: alloc::vec![true],
            children: alloc::vec![Vec::new()],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn add_leaf(&mut self, parent: usize) -> usize {
        let id = self.parent.len();
        self.parent.push(Some(parent));
        self.marked.push(false);
        self.children.push(Vec::new());
        self.children[parent].push(id);
        id
    }

    pub fn mark(&mut self, u: usize) {
        self.marked[u] = true;
    }

    pub fn demote_mark(&mut self, u: usize) {
        if !self.marked[u] {
            return;
        }
        self.marked[u] = false;
        let kids = self.children[u].clone();
        for w in kids {
            self.marked[w] = true;
        }
    }

    /// Nearest marked ancestor by parent walk; `u` counts as its own
    /// ancestor.
    pub fn nma(&self, u: usize) -> Option<usize> {
        let mut x = u;
        loop {
            if self.marked[x] {
                return Some(x);
            }
            x = self.parent[x]?;
        }
    }
}

/// Structural equality of two LSTs as path-label isomorphism: child symbols,
/// kinds, leaf flags, `+` flags, string depths, suffix links and reversed
/// suffix links must all correspond; node ids never matter.
///
/// `tolerate_pending_slink` permits the first tree (a snapshot of a growing
/// left-to-right build) to miss the suffix link of its newest leaf.
pub fn structural_eq<S: Symbol>(
    a: &Lst<S>,
    b: &Lst<S>,
    tolerate_pending_slink: bool,
) -> Result<(), String> {
    let mut map_ab: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut stack: Vec<(NodeId, NodeId, Vec<S>)> = alloc::vec![(a.root(), b.root(), Vec::new())];
    let mut pending_misses = 0usize;
    while let Some((x, y, label)) = stack.pop() {
        map_ab.insert(x, y);
        let nx = a.node(x);
        let ny = b.node(y);
        let ctx = || format!("at path label {label:?}");
        if nx.kind != ny.kind {
            return Err(format!("kind differs {}", ctx()));
        }
        if nx.is_leaf != ny.is_leaf {
            return Err(format!("leaf flag differs {}", ctx()));
        }
        if nx.plus != ny.plus {
            return Err(format!("plus flag differs {}", ctx()));
        }
        if a.vdepth(x) != b.vdepth(y) {
            return Err(format!("string depth differs {}", ctx()));
        }
        let ka: Vec<S> = nx.children.keys().copied().collect();
        let kb: Vec<S> = ny.children.keys().copied().collect();
        if ka != kb {
            return Err(format!("child symbols differ {}", ctx()));
        }
        for &c in &ka {
            let mut l = label.clone();
            l.push(c);
            stack.push((nx.children[&c], ny.children[&c], l));
        }
    }
    // Suffix links must commute with the bijection.
    for (&x, &y) in &map_ab {
        let sx = a.node(x).slink.map(|s| map_ab[&s]);
        let sy = b.node(y).slink;
        if sx != sy {
            if tolerate_pending_slink && sx.is_none() {
                pending_misses += 1;
                if pending_misses > 1 {
                    return Err(String::from("more than one missing suffix link"));
                }
                continue;
            }
            return Err(format!("suffix link differs at node {x}"));
        }
        // Reversed suffix links are the keyed inverse; check the key sets.
        let ra: Vec<S> = a.node(x).rlinks.keys().copied().collect();
        let rb: Vec<S> = b.node(y).rlinks.keys().copied().collect();
        if ra != rb {
            if tolerate_pending_slink {
                // The pending leaf's missing link may hide one key.
                let missing: Vec<&S> = rb.iter().filter(|c| !ra.contains(c)).collect();
                if missing.len() <= 1 && ra.iter().all(|c| rb.contains(c)) {
                    continue;
                }
            }
            return Err(format!("reversed suffix link keys differ at node {x}"));
        }
        for (&c, &t) in &a.node(x).rlinks {
            if map_ab[&t] != b.node(y).rlinks[&c] {
                return Err(format!("reversed suffix link target differs at node {x}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn trie_nodes_small() {
        let t = naive_suffix_trie(b"aa".as_slice());
        assert_eq!(t.len(), 3); // ε, a, aa
        let t = naive_suffix_trie(b"ab".as_slice());
        assert_eq!(t.len(), 4); // ε, a, b, ab
    }

    #[test]
    fn trie_counts_distinct_substrings() {
        let text = b"abaaba$";
        let trie = naive_suffix_trie(text.as_slice());
        let mut subs: BTreeSet<&[u8]> = BTreeSet::new();
        for i in 0..text.len() {
            for j in i + 1..=text.len() {
                subs.insert(&text[i..j]);
            }
        }
        assert_eq!(trie.len(), subs.len() + 1);
    }

    #[test]
    fn lst_of_paper_example() {
        // 14 nodes: internal type-1 {ε, a, aba, ba}, type-2 {b, aa, aaba},
        // 7 leaves.
        let lst = oracle_lst(b"abaaba$".as_slice());
        let s = lst.stats();
        assert_eq!(s.leaves, 7);
        assert_eq!(s.internal_type1, 4);
        assert_eq!(s.type2, 3);
        assert_eq!(lst.len(), 14);
        assert!(lst.validate().is_empty());
    }

    #[test]
    fn lst_of_terminator_only() {
        let lst = oracle_lst(b"$".as_slice());
        let s = lst.stats();
        assert_eq!(s.leaves, 1);
        assert_eq!(s.internal_type1, 1);
        assert_eq!(s.type2, 0);
        assert!(lst.validate().is_empty());
    }

    #[test]
    fn pre_lst_differs_on_repeated_suffixes() {
        // "abaaba": suffixes "aba" and "ba" repeat, so the full LST keeps
        // them explicit while the pre-LST does not.
        let full = oracle_lst(b"abaaba".as_slice());
        let pre = oracle_pre_lst(b"abaaba".as_slice());
        assert!(full.len() > pre.len());
        // With a terminator the two coincide.
        let full = oracle_lst(b"abaaba$".as_slice());
        let pre = oracle_pre_lst(b"abaaba$".as_slice());
        structural_eq(&pre, &full, false).unwrap();
    }

    #[test]
    fn longest_prefix_scan() {
        assert_eq!(naive_longest_prefix(b"abaaba$", b"aba"), 3);
        assert_eq!(naive_longest_prefix(b"abaaba$", b"abab"), 3);
        assert_eq!(naive_longest_prefix(b"abaaba$", b"z"), 0);
        assert_eq!(naive_longest_prefix(b"abaaba$", b""), 0);
    }
}
