//! Terms for common graph shapes, built from edge lists.
//!
//! All builders are total: any list is accepted, and node specifications
//! that overlap are unified by overlay.

use crate::term::EdgeTerm;

/// A node given by the edges terminating at it and the edges originating
/// from it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NodeSpec<L> {
    pub terminating: Vec<L>,
    pub originating: Vec<L>,
}

impl<L> NodeSpec<L> {
    pub fn new(
        terminating: impl IntoIterator<Item = L>,
        originating: impl IntoIterator<Item = L>,
    ) -> Self {
        NodeSpec {
            terminating: terminating.into_iter().collect(),
            originating: originating.into_iter().collect(),
        }
    }
}

// foldr (op . edge) seed xs
fn fold_edges<L: Clone>(
    xs: &[L],
    seed: EdgeTerm<L>,
    op: fn(EdgeTerm<L>, EdgeTerm<L>) -> EdgeTerm<L>,
) -> EdgeTerm<L> {
    xs.iter()
        .rev()
        .fold(seed, |acc, x| op(EdgeTerm::Edge(x.clone()), acc))
}

/// Isolated edges: `x1 + (x2 + (... + e))`.
pub fn discrete_graph<L: Clone>(xs: &[L]) -> EdgeTerm<L> {
    fold_edges(xs, EdgeTerm::Empty, EdgeTerm::overlay)
}

/// Every edge looped on one node: `x1 >> (x2 >> (... >> (xn >> x1)))`.
pub fn flower_graph<L: Clone>(xs: &[L]) -> EdgeTerm<L> {
    match xs.first() {
        None => EdgeTerm::Empty,
        Some(head) => fold_edges(xs, EdgeTerm::Edge(head.clone()), EdgeTerm::into),
    }
}

/// All edges leaving one common node.
pub fn pit_graph<L: Clone>(xs: &[L]) -> EdgeTerm<L> {
    fold_edges(xs, EdgeTerm::Empty, EdgeTerm::pits)
}

/// All edges entering one common node.
pub fn tip_graph<L: Clone>(xs: &[L]) -> EdgeTerm<L> {
    fold_edges(xs, EdgeTerm::Empty, EdgeTerm::tips)
}

/// One node with `tips` terminating and `pits` originating.
pub fn into_graph<L: Clone>(tips: &[L], pits: &[L]) -> EdgeTerm<L> {
    EdgeTerm::into(tip_graph(tips), pit_graph(pits))
}

/// Overlay of one [`into_graph`] per node.
pub fn mk_edge_graph<L: Clone>(specs: &[NodeSpec<L>]) -> EdgeTerm<L> {
    specs.iter().rev().fold(EdgeTerm::Empty, |acc, spec| {
        EdgeTerm::overlay(into_graph(&spec.terminating, &spec.originating), acc)
    })
}
