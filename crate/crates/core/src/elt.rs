//! Edge link tree of a (growing) LST.
//!
//! The edge link tree is the reversed-suffix-link tree: the parent of a node
//! is its suffix-link target. A non-root node is marked iff its LST parent is
//! a type-2 node, so a nearest-marked-ancestor query computes fast links.
//!
//! `demoteMark` (unmark a node, mark all its children — the only unmark the
//! builders ever need) is simulated on a shadow copy of the tree using only
//! `mark` and `addLeaf`: the children's shadow images are marked, a fresh
//! unmarked shadow leaf is added under the parent's image, and the demoted
//! node's link is redirected to it. The stale shadow node stays marked but is
//! shielded by its now-marked children, so queries never surface it.
//!
//! During a left-to-right build the newest leaf has no suffix link yet; such
//! nodes enter the forest as free roots and are attached once the link is
//! wired.

use alloc::vec::Vec;

use crate::lst::NodeId;
use crate::nma::NmaForest;

const NO_SHADOW: u32 = u32::MAX;

#[derive(Clone, Debug, Default)]
pub struct EltForest {
    marked: Vec<bool>,
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    link: Vec<u32>,
    registered: Vec<bool>,
    shadow: NmaForest,
    /// Current owner of a shadow node; stale entries are unreachable.
    owner: Vec<NodeId>,
    root: Option<NodeId>,
}

impl EltForest {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers the LST root: always marked, the root of the edge link tree.
    pub fn init_root(&mut self, root: NodeId) {
        self.ensure(root);
        self.marked[root.index()] = true;
        let s = self.shadow.add_root(true);
        self.link[root.index()] = s;
        self.set_owner(s, root);
        self.registered[root.index()] = true;
        self.root = Some(root);
    }

    fn ensure(&mut self, u: NodeId) {
        if self.marked.len() <= u.index() {
            self.marked.resize(u.index() + 1, false);
            self.parent.resize(u.index() + 1, None);
            self.children.resize(u.index() + 1, Vec::new());
            self.link.resize(u.index() + 1, NO_SHADOW);
            self.registered.resize(u.index() + 1, false);
        }
    }

    fn set_owner(&mut self, s: u32, u: NodeId) {
        if self.owner.len() <= s as usize {
            self.owner.resize(s as usize + 1, NodeId::from_raw(0));
        }
        self.owner[s as usize] = u;
    }

    pub fn is_marked(&self, u: NodeId) -> bool {
        self.marked[u.index()]
    }

    pub fn elt_parent(&self, u: NodeId) -> Option<NodeId> {
        self.parent[u.index()]
    }

    pub fn elt_children(&self, u: NodeId) -> &[NodeId] {
        &self.children[u.index()]
    }

    pub fn is_attached(&self, u: NodeId) -> bool {
        u.index() < self.parent.len()
            && (self.parent[u.index()].is_some() || self.root == Some(u))
    }

    /// Adds a node whose suffix link (= edge link tree parent) is known.
    pub fn add_attached(&mut self, u: NodeId, parent: NodeId, marked: bool) {
        self.ensure(u);
        debug_assert!(!self.registered[u.index()]);
        self.marked[u.index()] = marked;
        self.parent[u.index()] = Some(parent);
        self.children[parent.index()].push(u);
        let s = self.shadow.add_leaf(self.link[parent.index()], marked);
        self.link[u.index()] = s;
        self.set_owner(s, u);
        self.registered[u.index()] = true;
        self.debug_check(u);
    }

    /// Adds a node whose suffix link is not wired yet (the newest leaf of a
    /// left-to-right build). It becomes a free root of the forest.
    pub fn add_pending(&mut self, u: NodeId) {
        self.ensure(u);
        debug_assert!(!self.registered[u.index()]);
        let s = self.shadow.add_root(false);
        self.link[u.index()] = s;
        self.set_owner(s, u);
        self.registered[u.index()] = true;
    }

    /// Hangs a pending node below its now-known suffix link target.
    pub fn resolve_pending(&mut self, u: NodeId, parent: NodeId) {
        debug_assert!(self.registered[u.index()] && self.parent[u.index()].is_none());
        self.parent[u.index()] = Some(parent);
        self.children[parent.index()].push(u);
        self.shadow.attach(self.link[u.index()], self.link[parent.index()]);
        self.debug_check(u);
    }

    /// Marks `u` (no-op when already marked).
    pub fn mark(&mut self, u: NodeId) {
        if self.marked[u.index()] {
            return;
        }
        self.marked[u.index()] = true;
        self.shadow.mark(self.link[u.index()]);
        self.debug_check(u);
    }

    /// If `u` is marked: unmark it and mark all of its children. Used when a
    /// type-2 LST parent is promoted to type-1. No-op when `u` is unmarked.
    /// The root of the edge link tree is never demoted.
    pub fn demote_mark(&mut self, u: NodeId) {
        if !self.marked[u.index()] {
            return;
        }
        assert_ne!(Some(u), self.root, "demoteMark on the edge link tree root");
        self.marked[u.index()] = false;
        let kids = self.children[u.index()].clone();
        for w in kids {
            self.mark(w);
        }
        let s = match self.parent[u.index()] {
            Some(p) => self.shadow.add_leaf(self.link[p.index()], false),
            // A pending node keeps a fresh free shadow root; the stale one is
            // shielded by its marked children.
            None => self.shadow.add_root(false),
        };
        self.link[u.index()] = s;
        self.set_owner(s, u);
        self.debug_check(u);
    }

    /// Nearest marked ancestor of `u` in the edge link tree (`u` itself when
    /// marked). `None` below an unattached, fully unmarked chain.
    pub fn nma(&self, u: NodeId) -> Option<NodeId> {
        if self.marked[u.index()] {
            return Some(u);
        }
        let s = self.shadow.nma(self.link[u.index()])?;
        Some(self.owner[s as usize])
    }

    /// Walk-up reference answer on the main tree, for the correspondence
    /// checks and differential tests.
    pub fn nma_naive(&self, u: NodeId) -> Option<NodeId> {
        let mut x = u;
        loop {
            if self.marked[x.index()] {
                return Some(x);
            }
            x = self.parent[x.index()]?;
        }
    }

    #[cfg(debug_assertions)]
    fn debug_check(&self, u: NodeId) {
        debug_assert_eq!(
            self.marked[u.index()],
            self.shadow.is_marked(self.link[u.index()]),
            "{u}: mark bit disagrees with shadow"
        );
        if !self.marked[u.index()] {
            if let Some(p) = self.parent[u.index()] {
                debug_assert_eq!(
                    self.shadow.parent(self.link[u.index()]),
                    Some(self.link[p.index()]),
                    "{u}: shadow parent disagrees"
                );
            }
        }
    }

    #[cfg(not(debug_assertions))]
    fn debug_check(&self, _u: NodeId) {}

    /// Full shadow-correspondence check for one node: mark equality, parent
    /// correspondence, and NMA commuting with the link. Differential tests
    /// call this after every operation.
    pub fn check_shadow_correspondence(&self, u: NodeId) -> bool {
        if !self.registered[u.index()] {
            return true;
        }
        if self.marked[u.index()] != self.shadow.is_marked(self.link[u.index()]) {
            return false;
        }
        if !self.marked[u.index()] {
            if let Some(p) = self.parent[u.index()] {
                if self.shadow.parent(self.link[u.index()]) != Some(self.link[p.index()]) {
                    return false;
                }
            }
        }
        let main = self.nma_naive(u);
        let via_shadow = self.nma(u);
        main == via_shadow
    }
}
