//! Nearest-marked-ancestor queries on a growing forest.
//!
//! Unmarked nodes are partitioned into clusters; a cluster records the marked
//! node governing it, so a query is one table lookup. `mark` splits a cluster
//! by enumerating the subtree below the marked node and the remainder with
//! two simultaneous traversals, relabeling whichever side exhausts first
//! ("relabel the smaller half", O(log n) amortized). Cluster membership is
//! kept in doubly-linked lists so either side moves in O(1) per node.
//!
//! Besides `add_leaf` and `mark`, the forest supports `add_root` plus a later
//! `attach` of that root under a parent; the edge link tree needs this for
//! nodes whose suffix link is wired after creation.

use alloc::vec::Vec;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct NmaNode {
    parent: u32,
    children: Vec<u32>,
    marked: bool,
    cluster: u32,
    next_m: u32,
    prev_m: u32,
}

#[derive(Clone, Debug)]
struct Cluster {
    /// Nearest marked ancestor of every member; `None` while the cluster
    /// hangs below an unattached root.
    nma: Option<u32>,
    head: u32,
    size: u32,
    /// Topmost members (several when the governing node has more than one
    /// unmarked child).
    tops: Vec<u32>,
}

#[derive(Clone, Debug, Default)]
pub struct NmaForest {
    nodes: Vec<NmaNode>,
    clusters: Vec<Cluster>,
}

impl NmaForest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_marked(&self, u: u32) -> bool {
        self.nodes[u as usize].marked
    }

    pub fn parent(&self, u: u32) -> Option<u32> {
        match self.nodes[u as usize].parent {
            NONE => None,
            p => Some(p),
        }
    }

    /// Nearest marked ancestor, `u` included. `None` when no marked node is
    /// above `u` (only possible below a not-yet-attached unmarked root).
    pub fn nma(&self, u: u32) -> Option<u32> {
        let n = &self.nodes[u as usize];
        if n.marked {
            return Some(u);
        }
        self.clusters[n.cluster as usize].nma
    }

    pub fn add_root(&mut self, marked: bool) -> u32 {
        let id = self.push_node(NONE, marked);
        if !marked {
            let cid = self.new_cluster(None, id);
            self.join(cid, id);
        }
        id
    }

    pub fn add_leaf(&mut self, parent: u32, marked: bool) -> u32 {
        let id = self.push_node(parent, marked);
        self.nodes[parent as usize].children.push(id);
        if !marked {
            let p = &self.nodes[parent as usize];
            if p.marked {
                let cid = self.new_cluster(Some(parent), id);
                self.join(cid, id);
            } else {
                let cid = p.cluster;
                self.join(cid, id);
            }
        }
        id
    }

    /// Hangs a previously free root (and everything below it) under `parent`.
    pub fn attach(&mut self, u: u32, parent: u32) {
        debug_assert_eq!(self.nodes[u as usize].parent, NONE);
        self.nodes[u as usize].parent = parent;
        self.nodes[parent as usize].children.push(u);
        if self.nodes[u as usize].marked {
            return;
        }
        let cu = self.nodes[u as usize].cluster;
        if self.nodes[parent as usize].marked {
            self.clusters[cu as usize].nma = Some(parent);
            return;
        }
        let cp = self.nodes[parent as usize].cluster;
        debug_assert_ne!(cu, cp);
        // Merge the smaller membership list into the larger cluster.
        let (small, big) = if self.clusters[cu as usize].size <= self.clusters[cp as usize].size {
            (cu, cp)
        } else {
            (cp, cu)
        };
        let mut members = Vec::new();
        let mut m = self.clusters[small as usize].head;
        while m != NONE {
            members.push(m);
            m = self.nodes[m as usize].next_m;
        }
        for &m in &members {
            self.unlink(m);
            self.join(big, m);
        }
        // The merged cluster keeps the parent's governing node and tops.
        if big == cu {
            let nma = self.clusters[cp as usize].nma;
            let tops = core::mem::take(&mut self.clusters[cp as usize].tops);
            self.clusters[big as usize].nma = nma;
            self.clusters[big as usize].tops = tops;
        }
        self.clusters[small as usize].size = 0;
    }

    /// Marks `u`. Members below `u` now answer `u`; the rest of the cluster
    /// is untouched. No-op when already marked.
    pub fn mark(&mut self, u: u32) {
        if self.nodes[u as usize].marked {
            return;
        }
        let cid = self.nodes[u as usize].cluster;
        self.nodes[u as usize].marked = true;
        self.unlink(u);
        self.nodes[u as usize].cluster = NONE;
        self.clusters[cid as usize].size -= 1;
        let tops = &mut self.clusters[cid as usize].tops;
        if let Some(pos) = tops.iter().position(|&t| t == u) {
            tops.swap_remove(pos);
        }
        if self.clusters[cid as usize].size == 0 {
            return;
        }

        // Two simultaneous traversals: the zone below u versus the rest of
        // the cluster. The side that exhausts first is the smaller one and
        // is the only side relabeled.
        let mut below_stack: Vec<u32> = self.unmarked_children(u);
        let mut rest_stack: Vec<u32> = self.clusters[cid as usize].tops.clone();
        let mut below: Vec<u32> = Vec::new();
        let mut rest: Vec<u32> = Vec::new();
        loop {
            match below_stack.pop() {
                None => {
                    // Zone below u is the smaller side: give it a new record.
                    if !below.is_empty() {
                        let ncid = self.new_cluster_empty(Some(u));
                        self.clusters[ncid as usize].tops = self.unmarked_children(u);
                        for &m in &below {
                            self.unlink(m);
                            self.clusters[cid as usize].size -= 1;
                            self.join(ncid, m);
                        }
                    }
                    return;
                }
                Some(x) => {
                    below.push(x);
                    let kids = self.unmarked_children(x);
                    below_stack.extend(kids);
                }
            }
            match rest_stack.pop() {
                None => {
                    // The remainder is smaller: move it out, keep the record
                    // for the below-u side with its governing node rewritten.
                    let old_nma = self.clusters[cid as usize].nma;
                    let old_tops = core::mem::take(&mut self.clusters[cid as usize].tops);
                    let ncid = self.new_cluster_empty(old_nma);
                    self.clusters[ncid as usize].tops = old_tops;
                    for &m in &rest {
                        self.unlink(m);
                        self.clusters[cid as usize].size -= 1;
                        self.join(ncid, m);
                    }
                    self.clusters[cid as usize].nma = Some(u);
                    self.clusters[cid as usize].tops = self.unmarked_children(u);
                    return;
                }
                Some(x) => {
                    rest.push(x);
                    let kids: Vec<u32> = self
                        .unmarked_children(x)
                        .into_iter()
                        .filter(|&k| k != u)
                        .collect();
                    rest_stack.extend(kids);
                }
            }
        }
    }

    fn unmarked_children(&self, u: u32) -> Vec<u32> {
        self.nodes[u as usize]
            .children
            .iter()
            .copied()
            .filter(|&c| !self.nodes[c as usize].marked)
            .collect()
    }

    fn push_node(&mut self, parent: u32, marked: bool) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(NmaNode {
            parent,
            children: Vec::new(),
            marked,
            cluster: NONE,
            next_m: NONE,
            prev_m: NONE,
        });
        id
    }

    fn new_cluster(&mut self, nma: Option<u32>, top: u32) -> u32 {
        let id = self.clusters.len() as u32;
        self.clusters.push(Cluster {
            nma,
            head: NONE,
            size: 0,
            tops: alloc::vec![top],
        });
        id
    }

    fn new_cluster_empty(&mut self, nma: Option<u32>) -> u32 {
        let id = self.clusters.len() as u32;
        self.clusters.push(Cluster {
            nma,
            head: NONE,
            size: 0,
            tops: Vec::new(),
        });
        id
    }

    fn join(&mut self, cid: u32, u: u32) {
        let head = self.clusters[cid as usize].head;
        self.nodes[u as usize].cluster = cid;
        self.nodes[u as usize].prev_m = NONE;
        self.nodes[u as usize].next_m = head;
        if head != NONE {
            self.nodes[head as usize].prev_m = u;
        }
        self.clusters[cid as usize].head = u;
        self.clusters[cid as usize].size += 1;
    }

    fn unlink(&mut self, u: u32) {
        let cid = self.nodes[u as usize].cluster;
        let (prev, next) = (self.nodes[u as usize].prev_m, self.nodes[u as usize].next_m);
        if prev != NONE {
            self.nodes[prev as usize].next_m = next;
        } else {
            self.clusters[cid as usize].head = next;
        }
        if next != NONE {
            self.nodes[next as usize].prev_m = prev;
        }
        self.nodes[u as usize].next_m = NONE;
        self.nodes[u as usize].prev_m = NONE;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Walk-up reference.
    fn naive_nma(f: &NmaForest, mut u: u32) -> Option<u32> {
        loop {
            if f.is_marked(u) {
                return Some(u);
            }
            u = f.parent(u)?;
        }
    }

    #[test]
    fn chain_marks() {
        let mut f = NmaForest::new();
        let root = f.add_root(true);
        let a = f.add_leaf(root, false);
        let b = f.add_leaf(a, false);
        let c = f.add_leaf(b, false);
        assert_eq!(f.nma(c), Some(root));
        f.mark(b);
        assert_eq!(f.nma(c), Some(b));
        assert_eq!(f.nma(a), Some(root));
        assert_eq!(f.nma(b), Some(b));
    }

    #[test]
    fn attach_adopts_zone() {
        let mut f = NmaForest::new();
        let root = f.add_root(true);
        let x = f.add_root(false);
        let y = f.add_leaf(x, false);
        assert_eq!(f.nma(y), None);
        f.attach(x, root);
        assert_eq!(f.nma(y), Some(root));
    }

    #[test]
    fn randomized_against_walk_up() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        let mut f = NmaForest::new();
        f.add_root(true);
        for _ in 0..4000 {
            let n = f.len() as u32;
            match rng.gen_range(0..3) {
                0 => {
                    let p = rng.gen_range(0..n);
                    f.add_leaf(p, rng.gen_bool(0.2));
                }
                1 => {
                    let u = rng.gen_range(0..n);
                    f.mark(u);
                }
                _ => {
                    let u = rng.gen_range(0..n);
                    assert_eq!(f.nma(u), naive_nma(&f, u));
                }
            }
        }
        for u in 0..f.len() as u32 {
            assert_eq!(f.nma(u), naive_nma(&f, u));
        }
    }
}
