//! Linear-size suffix trie (LST) indexing.
//!
//! An LST represents all suffixes of a text with single-symbol edge labels
//! and O(n) nodes, so the indexed text can be discarded after construction.
//! This crate provides two online builders (right-to-left and left-to-right),
//! a nearest-marked-ancestor structure over the tree of reversed suffix
//! links that makes fast links available while the tree grows, a fast-link
//! based pattern matcher, and brute-force reference implementations used by
//! the differential tests.
//!
//! The crate is `no_std` (alloc required); all I/O lives in the companion
//! CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dot;
pub mod elt;
pub mod lst;
pub mod ltr;
pub mod matcher;
pub mod nma;
pub mod oracle;
pub mod rtl;

pub use elt::EltForest;
pub use lst::{Lst, LstNode, LstStats, NodeId, NodeKind, Symbol};
pub use ltr::LtrBuilder;
pub use matcher::{contains, fast_link, longest_prefix_match, retrieve_edge_label, Edge, MatchResult, MatchStop};
pub use rtl::RtlBuilder;
