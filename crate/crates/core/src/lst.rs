//! Arena representation of the linear-size suffix trie.
//!
//! Nodes are identified by dense `NodeId` indexes into an append-only arena.
//! Type-1 nodes are the suffix-tree nodes (root, branching nodes, leaves and
//! explicitly represented repeated suffixes); type-2 nodes are the remaining
//! trie nodes whose suffix link points at a type-1 node. Every edge stores a
//! single symbol; an edge that compresses a longer trie path carries the `+`
//! flag on its child.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::elt::EltForest;

/// Alphabet token. Anything totally ordered and cheap to copy works; the CLI
/// instantiates this with `u8`.
pub trait Symbol: Copy + Ord + fmt::Debug {}
impl<T: Copy + Ord + fmt::Debug> Symbol for T {}

/// Dense index of a node in the arena. Valid for the lifetime of the owning
/// [`Lst`]; never reused.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_raw(v: u32) -> NodeId {
        NodeId(v)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Type1,
    Type2,
}

/// One node of the LST.
#[derive(Clone, Debug)]
pub struct LstNode<S: Symbol> {
    pub kind: NodeKind,
    pub is_leaf: bool,
    /// `+` flag of the incoming edge: the edge compresses a trie path of
    /// length > 1 and only its first symbol is stored.
    pub plus: bool,
    pub parent: Option<NodeId>,
    /// Stored symbol of the incoming edge (the key under `parent.children`).
    pub parent_label: Option<S>,
    pub children: BTreeMap<S, NodeId>,
    pub slink: Option<NodeId>,
    /// Reversed suffix links keyed by the prepended symbol.
    pub rlinks: BTreeMap<S, NodeId>,
    /// Length of the node's path label in the underlying suffix trie. For
    /// leaves of a growing left-to-right build this is stale; use
    /// [`Lst::vdepth`], which accounts for open leaf edges.
    pub string_depth: usize,
    /// Leaves: 1-based start of the suffix (from the left for LTR builds and
    /// the oracle, from the right end for RTL builds).
    pub suffix_start: Option<usize>,
    /// First symbol of the node's path label (`None` for the root). This is
    /// the key this node uses in its suffix-link target's `rlinks`.
    pub first_symbol: Option<S>,
}

/// Counters produced by [`Lst::stats`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LstStats {
    pub leaves: usize,
    pub internal_type1: usize,
    pub type2: usize,
    pub plus_nodes: usize,
    pub edges: usize,
    pub max_string_depth: usize,
}

/// The linear-size suffix trie: an append-only node arena rooted at the
/// empty-string node. The auxiliary ⊥ parent of the root is not stored;
/// lookups that would go through it are guarded at the call sites.
#[derive(Clone, Debug)]
pub struct Lst<S: Symbol> {
    nodes: Vec<LstNode<S>>,
    /// Symbols consumed so far; equals the text length once finalized.
    pub(crate) cur_len: usize,
    /// While true, leaf depths are virtual: `cur_len - suffix_start + 1`.
    pub(crate) open_leaves: bool,
    finalized: bool,
    /// Nearest type-1 proper ancestor, filled by [`Lst::finalize`].
    t1p: Vec<Option<NodeId>>,
    pub(crate) alphabet: BTreeSet<S>,
}

impl<S: Symbol> Lst<S> {
    pub fn new() -> Self {
        let root = LstNode {
            kind: NodeKind::Type1,
            is_leaf: false,
            plus: false,
            parent: None,
            parent_label: None,
            children: BTreeMap::new(),
            slink: None,
            rlinks: BTreeMap::new(),
            string_depth: 0,
            suffix_start: None,
            first_symbol: None,
        };
        Lst {
            nodes: alloc::vec![root],
            cur_len: 0,
            open_leaves: false,
            finalized: false,
            t1p: Vec::new(),
            alphabet: BTreeSet::new(),
        }
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn text_len(&self) -> usize {
        self.cur_len
    }

    pub fn is_finalized(&self) -> bool {
        self.finalized
    }

    pub fn alphabet_seen(&self) -> &BTreeSet<S> {
        &self.alphabet
    }

    pub fn node(&self, u: NodeId) -> &LstNode<S> {
        &self.nodes[u.index()]
    }

    pub(crate) fn node_mut(&mut self, u: NodeId) -> &mut LstNode<S> {
        &mut self.nodes[u.index()]
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len() as u32).map(NodeId)
    }

    /// Depth of the node's path label, accounting for open leaf edges of an
    /// in-progress left-to-right build.
    pub fn vdepth(&self, u: NodeId) -> usize {
        let n = self.node(u);
        if self.open_leaves && n.is_leaf {
            self.cur_len - n.suffix_start.expect("leaf without suffix start") + 1
        } else {
            n.string_depth
        }
    }

    pub(crate) fn new_node(
        &mut self,
        kind: NodeKind,
        is_leaf: bool,
        string_depth: usize,
        suffix_start: Option<usize>,
        first_symbol: Option<S>,
    ) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(LstNode {
            kind,
            is_leaf,
            plus: false,
            parent: None,
            parent_label: None,
            children: BTreeMap::new(),
            slink: None,
            rlinks: BTreeMap::new(),
            string_depth,
            suffix_start,
            first_symbol,
        });
        id
    }

    /// Wires `child` under `parent` with edge symbol `label`, replacing any
    /// previous `label` entry, and recomputes the child's `+` flag from the
    /// stored depths.
    pub(crate) fn attach_child(&mut self, parent: NodeId, label: S, child: NodeId) {
        self.node_mut(parent).children.insert(label, child);
        let pd = self.vdepth(parent);
        let cd = self.vdepth(child);
        let c = self.node_mut(child);
        c.parent = Some(parent);
        c.parent_label = Some(label);
        c.plus = cd > pd + 1;
    }

    /// Sets `slink(u) = v` and registers the inverse `rlink(v, first(u)) = u`.
    pub(crate) fn set_slink(&mut self, u: NodeId, v: NodeId) {
        let c = self
            .node(u)
            .first_symbol
            .expect("suffix link source must have a first symbol");
        self.node_mut(u).slink = Some(v);
        self.node_mut(v).rlinks.insert(c, u);
    }

    /// The child of `u` whose incoming edge symbol is `c`.
    pub fn child(&self, u: NodeId, c: S) -> Option<NodeId> {
        self.node(u).children.get(&c).copied()
    }

    /// Single child of a non-branching node, with its edge symbol.
    pub(crate) fn single_child(&self, u: NodeId) -> (S, NodeId) {
        let n = self.node(u);
        debug_assert_eq!(n.children.len(), 1, "{u} expected to have one child");
        let (&c, &v) = n.children.iter().next().expect("childless node");
        (c, v)
    }

    /// Nearest strict type-1 ancestor of `u` (the root qualifies).
    /// `None` for the root itself.
    pub fn t1parent(&self, u: NodeId) -> Option<NodeId> {
        if u == self.root() {
            return None;
        }
        if self.finalized {
            return self.t1p[u.index()];
        }
        let mut v = self.node(u).parent;
        while let Some(p) = v {
            if self.node(p).kind == NodeKind::Type1 {
                return Some(p);
            }
            v = self.node(p).parent;
        }
        None
    }

    /// Nearest type-1 node reached by descending from `u` along the `c` edge
    /// (type-2 nodes have a single child, so the descent is determined).
    pub fn t1child(&self, u: NodeId, c: S) -> Option<NodeId> {
        let mut v = self.child(u, c)?;
        while self.node(v).kind == NodeKind::Type2 {
            v = self.single_child(v).1;
        }
        Some(v)
    }

    /// Splices the new type-2 nodes required when `u` is promoted from
    /// type-2 to type-1: for every symbol `d` with `rlink(t1child(u), d)`
    /// defined, a node `R` (= `d·u`) is inserted between `parent(Q)` and
    /// `Q = rlink(t1child(u), d)`. Returns true if one of the splices
    /// re-parented `u`'s own child (in which case the caller must not demote
    /// it: its new parent is the freshly created type-2 node).
    pub(crate) fn create_type2(&mut self, elt: &mut EltForest, u: NodeId) -> bool {
        let (b, _) = self.single_child(u);
        let z = self.t1child(u, b).expect("type-2 node has a child");
        let rl: Vec<(S, NodeId)> = self.node(z).rlinks.iter().map(|(&d, &q)| (d, q)).collect();
        let mut covered = false;
        let ud = self.vdepth(u);
        for (d, q) in rl {
            let p = self.node(q).parent.expect("rlink target has a parent");
            // A chain node created earlier in the same split may not have its
            // suffix link yet; its splice role is already played by that node.
            if self.node(p).slink.is_none() && p != self.root() {
                continue;
            }
            let a = self.node(q).parent_label.expect("non-root has an edge label");
            let r = self.new_node(NodeKind::Type2, false, ud + 1, None, Some(d));
            self.attach_child(p, a, r);
            self.attach_child(r, b, q);
            self.set_slink(r, u);
            if p == u {
                covered = true;
            }
            let r_marked = p != u && self.node(p).kind == NodeKind::Type2;
            elt.add_attached(r, u, r_marked);
            elt.mark(q);
        }
        covered
    }

    /// Promotes a type-2 node to type-1, splicing sibling type-2 nodes via
    /// [`Lst::create_type2`] and keeping the edge link tree marks in step.
    pub(crate) fn promote(&mut self, elt: &mut EltForest, u: NodeId) {
        debug_assert_eq!(self.node(u).kind, NodeKind::Type2);
        let (_, c0) = self.single_child(u);
        let covered = self.create_type2(elt, u);
        self.node_mut(u).kind = NodeKind::Type1;
        if !covered {
            elt.demote_mark(c0);
        }
    }

    /// Freezes the structure: leaf depths of an open (left-to-right) build
    /// are written out and the type-1 ancestor table is computed.
    pub(crate) fn finalize(&mut self) {
        if self.open_leaves {
            let cur = self.cur_len;
            for n in &mut self.nodes {
                if n.is_leaf {
                    n.string_depth = cur - n.suffix_start.expect("leaf suffix start") + 1;
                }
            }
            self.open_leaves = false;
        }
        self.t1p = alloc::vec![None; self.nodes.len()];
        let mut stack: Vec<NodeId> = alloc::vec![self.root()];
        while let Some(u) = stack.pop() {
            let up = if self.node(u).kind == NodeKind::Type1 {
                Some(u)
            } else {
                self.t1p[u.index()]
            };
            for &v in self.node(u).children.values() {
                self.t1p[v.index()] = up;
                stack.push(v);
            }
        }
        self.finalized = true;
    }

    /// Exact counters over the arena.
    pub fn stats(&self) -> LstStats {
        let mut s = LstStats::default();
        for id in self.node_ids() {
            let n = self.node(id);
            if n.is_leaf {
                s.leaves += 1;
            } else if n.kind == NodeKind::Type1 {
                s.internal_type1 += 1;
            }
            if n.kind == NodeKind::Type2 {
                s.type2 += 1;
            }
            if n.plus {
                s.plus_nodes += 1;
            }
            s.edges += n.children.len();
            s.max_string_depth = s.max_string_depth.max(self.vdepth(id));
        }
        s
    }

    /// Checks the structural invariants, returning one description per
    /// violation. Empty on every LST of a terminator-ended text produced by
    /// either builder or the brute-force oracle.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let root = self.root();
        if self.node(root).kind != NodeKind::Type1 {
            out.push(String::from("root is not type-1"));
        }
        for id in self.node_ids() {
            let n = self.node(id);
            if n.kind == NodeKind::Type2 && n.children.len() != 1 {
                out.push(format!("{id}: type-2 node with {} children", n.children.len()));
            }
            if n.is_leaf && n.kind != NodeKind::Type1 {
                out.push(format!("{id}: leaf is not type-1"));
            }
            if n.is_leaf && !n.children.is_empty() {
                out.push(format!("{id}: leaf has children"));
            }
            if self.finalized
                && id != root
                && !n.is_leaf
                && n.kind == NodeKind::Type1
                && n.children.len() < 2
            {
                out.push(format!("{id}: internal type-1 node with < 2 children"));
            }
            if let Some(p) = n.parent {
                let dist = self.vdepth(id) as i64 - self.vdepth(p) as i64;
                if dist < 1 {
                    out.push(format!("{id}: depth not below parent"));
                }
                if n.plus != (dist > 1) {
                    out.push(format!("{id}: plus flag contradicts depth difference"));
                }
                match n.parent_label {
                    Some(c) => {
                        if self.child(p, c) != Some(id) {
                            out.push(format!("{id}: parent's child map disagrees"));
                        }
                    }
                    None => out.push(format!("{id}: missing incoming edge label")),
                }
            } else if id != root {
                out.push(format!("{id}: non-root without parent"));
            }
            if let Some(v) = n.slink {
                if self.vdepth(v) + 1 != self.vdepth(id) {
                    out.push(format!("{id}: suffix link does not drop depth by one"));
                }
                let c = n.first_symbol;
                match c {
                    Some(c) => {
                        if self.node(v).rlinks.get(&c) != Some(&id) {
                            out.push(format!("{id}: reversed suffix link missing at target"));
                        }
                    }
                    None => out.push(format!("{id}: suffix link source without first symbol")),
                }
            } else if self.finalized && id != root {
                out.push(format!("{id}: missing suffix link"));
            }
            for (&c, &u) in &n.rlinks {
                let un = self.node(u);
                if un.slink != Some(id) || un.first_symbol != Some(c) {
                    out.push(format!("{id}: rlink({c:?}) is not the inverse of a suffix link"));
                }
            }
        }
        if self.finalized {
            let n = self.cur_len;
            if self.nodes.len() > 3 * n.max(1) {
                out.push(format!("node count {} exceeds 3n = {}", self.nodes.len(), 3 * n));
            }
        }
        out
    }
}

impl<S: Symbol> Default for Lst<S> {
    fn default() -> Self {
        Self::new()
    }
}
