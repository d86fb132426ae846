//! Deterministic DOT export for debugging and visualization.

use alloc::format;
use alloc::string::String;

use crate::elt::EltForest;
use crate::lst::{Lst, NodeKind, Symbol};

/// DOT digraph of the LST: solid edges carry the stored symbol (with a `+`
/// when the edge is compressed), dashed edges are suffix links, node shape
/// encodes the kind. Nodes are emitted in arena order, so the output is
/// byte-identical across runs.
pub fn export_dot_with<S: Symbol>(lst: &Lst<S>, mut sym: impl FnMut(S) -> String) -> String {
    let mut out = String::from("digraph lst {\n  rankdir=TB;\n");
    for id in lst.node_ids() {
        let n = lst.node(id);
        let shape = if n.is_leaf {
            "box"
        } else if n.kind == NodeKind::Type1 {
            "circle"
        } else {
            "point"
        };
        let label = match n.suffix_start {
            Some(s) => format!("{id} d{} s{}", lst.vdepth(id), s),
            None => format!("{id} d{}", lst.vdepth(id)),
        };
        out += &format!("  {id} [shape={shape},label=\"{label}\"];\n");
    }
    for id in lst.node_ids() {
        let n = lst.node(id);
        for (&c, &v) in &n.children {
            let plus = if lst.node(v).plus { "+" } else { "" };
            out += &format!("  {id} -> {v} [label=\"{}{plus}\"];\n", sym(c));
        }
    }
    for id in lst.node_ids() {
        if let Some(s) = lst.node(id).slink {
            out += &format!("  {id} -> {s} [style=dashed,constraint=false];\n");
        }
    }
    out += "}\n";
    out
}

/// [`export_dot_with`] using the symbol's `Debug` form.
pub fn export_dot<S: Symbol>(lst: &Lst<S>) -> String {
    export_dot_with(lst, |c| format!("{c:?}").replace('"', "\\\""))
}

/// DOT digraph of the edge link tree, same determinism rule as the LST
/// export.
pub fn export_elt_dot<S: Symbol>(lst: &Lst<S>, elt: &EltForest) -> String {
    let mut out = String::from("digraph elt {\n");
    for id in lst.node_ids() {
        let fill = if elt.is_marked(id) { ",style=filled" } else { "" };
        out += &format!("  {id} [shape=circle{fill}];\n");
    }
    for id in lst.node_ids() {
        if let Some(p) = elt.elt_parent(id) {
            out += &format!("  {p} -> {id};\n");
        }
    }
    out += "}\n";
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_lst;

    #[test]
    fn deterministic() {
        let lst = oracle_lst(b"abaaba$".as_slice());
        assert_eq!(export_dot(&lst), export_dot(&lst));
    }

    #[test]
    fn counts_match_stats() {
        let lst = oracle_lst(b"abaaba$".as_slice());
        let dot = export_dot(&lst);
        let s = lst.stats();
        let nodes = dot.lines().filter(|l| l.contains("[shape=")).count();
        let solid = dot.lines().filter(|l| l.contains("label=") && l.contains("->")).count();
        assert_eq!(nodes, lst.len());
        assert_eq!(solid, s.edges);
    }
}
