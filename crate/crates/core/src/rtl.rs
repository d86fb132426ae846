//! Right-to-left online construction.
//!
//! Reading the text back to front, each pushed symbol adds one leaf. The
//! insertion point is found by walking up from the previous insertion point
//! until a reversed suffix link labeled with the new symbol exists; if that
//! point is a type-2 node it is promoted to type-1, splicing sibling type-2
//! nodes next to its reversed-link images. One new type-2 node is then
//! created for every type-1 ancestor passed between the last leaf and the
//! found ancestor, mirroring that stretch of the tree under the new symbol.

use crate::elt::EltForest;
use crate::lst::{Lst, NodeId, NodeKind, Symbol};

pub struct RtlBuilder<S: Symbol> {
    lst: Lst<S>,
    elt: EltForest,
    /// Insertion point of the previous step; `None` encodes the auxiliary ⊥
    /// parent of the root (only before the first symbol).
    prev_ins_point: Option<NodeId>,
    /// Leaf for the whole text consumed so far.
    prev_leaf: NodeId,
    /// Reversed-suffix-link probes done while searching insertion points;
    /// bounded by 2n over a whole build.
    walk_probes: u64,
}

impl<S: Symbol> RtlBuilder<S> {
    pub fn new() -> Self {
        let lst = Lst::new();
        let mut elt = EltForest::new();
        elt.init_root(lst.root());
        RtlBuilder {
            prev_leaf: lst.root(),
            prev_ins_point: None,
            lst,
            elt,
            walk_probes: 0,
        }
    }

    pub fn lst(&self) -> &Lst<S> {
        &self.lst
    }

    pub fn elt(&self) -> &EltForest {
        &self.elt
    }

    pub fn symbols_consumed(&self) -> usize {
        self.lst.text_len()
    }

    pub fn walk_probes(&self) -> u64 {
        self.walk_probes
    }

    /// First type-1 proper ancestor of `x` (`None` = ⊥ above the root),
    /// together with the node the walk stepped out of — the child of that
    /// ancestor on the path, which carries the first edge symbol.
    fn next_t1_above(&self, x: NodeId) -> (Option<NodeId>, NodeId) {
        let mut below = x;
        let mut v = self.lst.node(x).parent;
        while let Some(n) = v {
            if self.lst.node(n).kind == NodeKind::Type1 {
                return (Some(n), below);
            }
            below = n;
            v = self.lst.node(n).parent;
        }
        (None, below)
    }

    /// Prepends one symbol to the indexed text.
    pub fn push_front(&mut self, c: S) {
        self.lst.cur_len += 1;
        self.lst.alphabet.insert(c);
        let pos = self.lst.cur_len;

        // Deepest ancestor of the last leaf carrying a c-labeled reversed
        // suffix link; its target is the insertion point.
        let ins_point = {
            let mut v = self.prev_ins_point;
            loop {
                match v {
                    None => break self.lst.root(),
                    Some(x) => {
                        self.walk_probes += 1;
                        if let Some(&u) = self.lst.node(x).rlinks.get(&c) {
                            break u;
                        }
                        v = self.lst.node(x).parent;
                    }
                }
            }
        };

        if self.lst.node(ins_point).kind == NodeKind::Type2 {
            self.lst.promote(&mut self.elt, ins_point);
        }

        // New leaf for the whole current text; its suffix link is the
        // previous leaf (the root before the first symbol).
        let new_leaf = self.lst.new_node(NodeKind::Type1, true, pos, Some(pos), Some(c));
        self.lst.set_slink(new_leaf, self.prev_leaf);

        // Mirror the stretch between the last leaf and the found ancestor:
        // one type-2 node per type-1 ancestor without a c-link yet.
        let mut chain = alloc::vec::Vec::new();
        let mut y = new_leaf;
        let (mut v, mut below) = self.next_t1_above(self.prev_leaf);
        loop {
            let linked = match v {
                None => true, // ⊥: rlink(⊥, c) = root for every c
                Some(n) => self.lst.node(n).rlinks.contains_key(&c),
            };
            if linked {
                let a = match v {
                    None => c,
                    Some(_) => self.lst.node(below).parent_label.expect("edge label"),
                };
                self.lst.attach_child(ins_point, a, y);
                break;
            }
            let n = v.expect("⊥ is always linked");
            let x = self
                .lst
                .new_node(NodeKind::Type2, false, self.lst.vdepth(n) + 1, None, Some(c));
            let a = self.lst.node(below).parent_label.expect("edge label");
            self.lst.attach_child(x, a, y);
            self.lst.set_slink(x, n);
            chain.push(x);
            y = x;
            let (nv, nb) = self.next_t1_above(n);
            v = nv;
            below = nb;
        }

        // Register the additions in the edge link tree. All of them are
        // leaves there; a node is marked iff its LST parent is type-2.
        self.elt_register(new_leaf);
        for x in chain {
            self.elt_register(x);
        }

        self.prev_ins_point = Some(ins_point);
        self.prev_leaf = new_leaf;
    }

    fn elt_register(&mut self, u: NodeId) {
        let s = self.lst.node(u).slink.expect("new node has a suffix link");
        let p = self.lst.node(u).parent.expect("new node is attached");
        let marked = self.lst.node(p).kind == NodeKind::Type2;
        self.elt.add_attached(u, s, marked);
    }

    /// Freezes and returns the structures.
    pub fn finish(mut self) -> (Lst<S>, EltForest) {
        self.lst.finalize();
        (self.lst, self.elt)
    }
}

impl<S: Symbol> Default for RtlBuilder<S> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_lst, structural_eq};

    fn build(text: &[u8]) -> RtlBuilder<u8> {
        let mut b = RtlBuilder::new();
        for &c in text.iter().rev() {
            b.push_front(c);
        }
        b
    }

    #[test]
    fn empty_build() {
        let b = RtlBuilder::<u8>::new();
        let (lst, _) = b.finish();
        assert_eq!(lst.len(), 1);
        assert!(lst.validate().is_empty());
        let s = lst.stats();
        assert_eq!((s.leaves, s.type2), (0, 0));
    }

    #[test]
    fn terminator_only() {
        let b = build(b"$");
        let (lst, _) = b.finish();
        let s = lst.stats();
        assert_eq!((s.leaves, s.internal_type1, s.type2), (1, 1, 0));
        assert!(lst.validate().is_empty());
    }

    #[test]
    fn paper_example_stats() {
        let b = build(b"abaaba$");
        let (lst, _) = b.finish();
        let s = lst.stats();
        assert_eq!(s.leaves, 7);
        assert_eq!(s.internal_type1, 4);
        assert_eq!(s.type2, 3);
        assert!(lst.validate().is_empty());
        structural_eq(&lst, &oracle_lst(b"abaaba$".as_slice()), false).unwrap();
    }

    #[test]
    fn every_intermediate_state_matches_oracle() {
        // Every suffix of abaaba$, and unary texts.
        for text in [&b"abaaba$"[..], &b"aaaaaa$"[..], &b"abcabc$"[..]] {
            let mut b = RtlBuilder::new();
            for (idx, &c) in text.iter().enumerate().rev() {
                b.push_front(c);
                let expect = oracle_lst(&text[idx..]);
                structural_eq(b.lst(), &expect, false)
                    .unwrap_or_else(|e| panic!("suffix {:?}: {e}", &text[idx..]));
            }
        }
    }
}
