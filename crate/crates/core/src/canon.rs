//! Canonical normal form and semantic equality of terms.
//!
//! The normal form of a graph is the overlay, over its nodes in canonical
//! order, of `(t1 >< t2 >< ...) >> (p1 <> p2 <> ...)`, with `e` standing in
//! for an empty side. Every chain is left-nested and lists labels in
//! ascending order, so the form is unique for each flow graph.

use crate::flow::{FlowGraph, FlowNode};
use crate::term::EdgeTerm;

/// The normal-form term of a flow graph.
pub fn canonical_term<L: Ord + Clone>(graph: &FlowGraph<L>) -> EdgeTerm<L> {
    graph
        .nodes()
        .map(node_term)
        .reduce(EdgeTerm::overlay)
        .unwrap_or(EdgeTerm::Empty)
}

/// `tips-chain >> pits-chain` for a single node.
pub fn node_term<L: Clone>(node: &FlowNode<L>) -> EdgeTerm<L> {
    let chain = |labels: &std::collections::BTreeSet<L>,
                 join: fn(EdgeTerm<L>, EdgeTerm<L>) -> EdgeTerm<L>| {
        labels
            .iter()
            .cloned()
            .map(EdgeTerm::Edge)
            .reduce(join)
            .unwrap_or(EdgeTerm::Empty)
    };
    EdgeTerm::into(
        chain(&node.tips, EdgeTerm::tips),
        chain(&node.pits, EdgeTerm::pits),
    )
}

/// The normal form of `term`: `canonical_term(eval(term))`.
pub fn normalize<L: Ord + Clone>(term: &EdgeTerm<L>) -> EdgeTerm<L> {
    canonical_term(&FlowGraph::eval(term))
}

/// Whether two terms denote the same graph.
pub fn equivalent<L: Ord + Clone>(a: &EdgeTerm<L>, b: &EdgeTerm<L>) -> bool {
    FlowGraph::eval(a) == FlowGraph::eval(b)
}
