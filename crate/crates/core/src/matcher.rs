//! Fast-link queries and pattern matching on a finalized LST.
//!
//! The fast link of an edge `(U, V)` is the pair reached after the minimal
//! number of suffix-link hops that places a type-2 node strictly inside the
//! image: computed as `(t1parent(V'), V')` with `V' = NMA(slink(V))` on the
//! edge link tree. Compressed edge labels are recovered one symbol at a time
//! by diving through fast links and tracing the chain back, so matching a
//! pattern `P` costs `O(|P'| log σ)` for the matched prefix `P'`.

use alloc::vec::Vec;

use crate::elt::EltForest;
use crate::lst::{Lst, NodeId, Symbol};

/// A parent/child pair wired in the LST.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub parent: NodeId,
    pub child: NodeId,
}

/// Where a match stopped.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatchStop {
    Node(NodeId),
    /// Inside `edge`, after consuming `offset` symbols of its label.
    InEdge { edge: Edge, offset: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct MatchResult {
    /// Length of the longest prefix of the pattern occurring in the text.
    pub matched_len: usize,
    pub stop: MatchStop,
    /// True iff the whole pattern occurs.
    pub found: bool,
    /// Number of fast-link applications the query used.
    pub fast_link_applications: u64,
}

/// Fast link of `e`, or `None` when every suffix-link image of `e` stays a
/// single edge all the way to the root (only possible for single-symbol
/// edges).
pub fn fast_link<S: Symbol>(lst: &Lst<S>, elt: &EltForest, e: Edge) -> Option<Edge> {
    let s = lst.node(e.child).slink?;
    let v = elt.nma(s)?;
    if v == lst.root() {
        return None;
    }
    let u = lst.t1parent(v).expect("non-root NMA result");
    Some(Edge { parent: u, child: v })
}

/// Sequential reader for the underlying label of one edge. Frames record the
/// pending walks along fast-link image paths; tracing them back yields the
/// label symbols strictly left to right.
struct EdgeReader<'a, S: Symbol> {
    lst: &'a Lst<S>,
    elt: &'a EltForest,
    frames: Vec<(NodeId, NodeId)>,
    fast_links: u64,
}

impl<'a, S: Symbol> EdgeReader<'a, S> {
    fn new(lst: &'a Lst<S>, elt: &'a EltForest) -> Self {
        EdgeReader { lst, elt, frames: Vec::new(), fast_links: 0 }
    }

    /// Dives through fast links until the first symbol of `e`'s label sits
    /// on an uncompressed edge, and returns it.
    fn dive(&mut self, mut e: Edge) -> S {
        loop {
            let stored = self.lst.node(e.child).parent_label.expect("edge has a label");
            if !self.lst.node(e.child).plus {
                return stored;
            }
            self.fast_links += 1;
            let img = fast_link(self.lst, self.elt, e).expect("compressed edge has a fast link");
            let x = self.lst.child(img.parent, stored).expect("image path starts with the label");
            self.frames.push((x, img.child));
            e = Edge { parent: img.parent, child: x };
        }
    }

    /// Next symbol of the edge whose reading is in progress; `None` once the
    /// label is exhausted.
    fn next(&mut self) -> Option<S> {
        loop {
            let &(cur, end) = self.frames.last()?;
            if cur == end {
                self.frames.pop();
                continue;
            }
            // cur is a type-2 node strictly inside an image path.
            let (_, nxt) = self.lst.single_child(cur);
            self.frames.last_mut().expect("frame").0 = nxt;
            return Some(self.dive(Edge { parent: cur, child: nxt }));
        }
    }
}

/// The full underlying label of `e`, of length
/// `string_depth(child) - string_depth(parent)`, reconstructed through fast
/// links without any stored text.
pub fn retrieve_edge_label<S: Symbol>(lst: &Lst<S>, elt: &EltForest, e: Edge) -> Vec<S> {
    let len = lst.vdepth(e.child) - lst.vdepth(e.parent);
    let mut reader = EdgeReader::new(lst, elt);
    let mut out = Vec::with_capacity(len);
    out.push(reader.dive(e));
    while let Some(c) = reader.next() {
        out.push(c);
    }
    debug_assert_eq!(out.len(), len);
    out
}

/// Longest prefix of `p` that occurs in the indexed text.
pub fn longest_prefix_match<S: Symbol>(lst: &Lst<S>, elt: &EltForest, p: &[S]) -> MatchResult {
    let mut u = lst.root();
    let mut i = 0usize;
    let mut fast_links = 0u64;
    loop {
        if i == p.len() {
            return MatchResult {
                matched_len: i,
                stop: MatchStop::Node(u),
                found: true,
                fast_link_applications: fast_links,
            };
        }
        let Some(v) = lst.child(u, p[i]) else {
            return MatchResult {
                matched_len: i,
                stop: MatchStop::Node(u),
                found: false,
                fast_link_applications: fast_links,
            };
        };
        let e = Edge { parent: u, child: v };
        let len = lst.vdepth(v) - lst.vdepth(u);
        let mut reader = EdgeReader::new(lst, elt);
        let first = reader.dive(e);
        debug_assert_eq!(first, p[i]);
        i += 1;
        let mut off = 1usize;
        while off < len {
            if i == p.len() {
                return MatchResult {
                    matched_len: i,
                    stop: MatchStop::InEdge { edge: e, offset: off },
                    found: true,
                    fast_link_applications: fast_links + reader.fast_links,
                };
            }
            let c = reader.next().expect("label not exhausted");
            if c != p[i] {
                return MatchResult {
                    matched_len: i,
                    stop: MatchStop::InEdge { edge: e, offset: off },
                    found: false,
                    fast_link_applications: fast_links + reader.fast_links,
                };
            }
            i += 1;
            off += 1;
        }
        fast_links += reader.fast_links;
        u = v;
    }
}

/// Whether `p` occurs in the indexed text.
pub fn contains<S: Symbol>(lst: &Lst<S>, elt: &EltForest, p: &[S]) -> bool {
    longest_prefix_match(lst, elt, p).found
}
