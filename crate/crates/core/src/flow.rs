//! The flow representation: a graph is a set of nodes, each node the pair of
//! edge-label sets terminating at it (`tips`) and originating from it
//! (`pits`).
//!
//! A valid [`FlowGraph`] satisfies three conditions:
//!
//! 1. every label occurs as a tip exactly when it occurs as a pit, so the
//!    union of all tips equals the union of all pits (the edge set);
//! 2. distinct nodes have disjoint tips and disjoint pits;
//! 3. no node has both sides empty.
//!
//! Every value of the type is valid. The only ways to obtain one are
//! [`FlowGraph::validate`] and the algebra operations, all of which are
//! closed on valid graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::dsu::DisjointSets;
use crate::term::{BinOp, EdgeTerm, GraphAlgebra};

/// One node: the edges ending here and the edges starting here.
///
/// The derived order compares `tips` first, then `pits`, each
/// lexicographically. Inside a valid graph that is the same as ordering by
/// (least tip, least pit), since tips and pits are disjoint across nodes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlowNode<L> {
    pub tips: BTreeSet<L>,
    pub pits: BTreeSet<L>,
}

impl<L: Ord> FlowNode<L> {
    pub fn new(tips: impl IntoIterator<Item = L>, pits: impl IntoIterator<Item = L>) -> Self {
        FlowNode {
            tips: tips.into_iter().collect(),
            pits: pits.into_iter().collect(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.tips.is_empty() && self.pits.is_empty()
    }

    /// Component-wise inclusion.
    pub fn is_within(&self, other: &Self) -> bool {
        self.tips.is_subset(&other.tips) && self.pits.is_subset(&other.pits)
    }

    /// Whether the two nodes share a tip or a pit.
    pub fn touches(&self, other: &Self) -> bool {
        !self.tips.is_disjoint(&other.tips) || !self.pits.is_disjoint(&other.pits)
    }

    /// Component-wise union.
    pub fn absorb(&mut self, other: FlowNode<L>) {
        self.tips.extend(other.tips);
        self.pits.extend(other.pits);
    }
}

impl<L: fmt::Display> fmt::Display for FlowNode<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side<L: fmt::Display>(f: &mut fmt::Formatter<'_>, s: &BTreeSet<L>) -> fmt::Result {
            if s.is_empty() {
                return f.write_str("∅");
            }
            f.write_str("{")?;
            for (i, x) in s.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")
        }
        f.write_str("(")?;
        side(f, &self.tips)?;
        f.write_str(",")?;
        side(f, &self.pits)?;
        f.write_str(")")
    }
}

/// Which side of a node a label sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Tips,
    Pits,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Tips => "tips",
            Side::Pits => "pits",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlowError<L: fmt::Debug> {
    #[error(
        "Condition1Violation: tips without pits {tips_only:?}, pits without tips {pits_only:?}"
    )]
    Condition1Violation {
        tips_only: Vec<L>,
        pits_only: Vec<L>,
    },
    #[error("Condition2Violation: label {label:?} is in the {side} of nodes {first} and {second}")]
    Condition2Violation {
        label: L,
        side: Side,
        first: usize,
        second: usize,
    },
    #[error("Condition3Violation: node {index} has neither tips nor pits")]
    Condition3Violation { index: usize },
}

impl<L: fmt::Debug> FlowError<L> {
    /// Stable identifier for scripts and the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            FlowError::Condition1Violation { .. } => "Condition1Violation",
            FlowError::Condition2Violation { .. } => "Condition2Violation",
            FlowError::Condition3Violation { .. } => "Condition3Violation",
        }
    }

    pub fn map_label<M: fmt::Debug>(self, mut f: impl FnMut(L) -> M) -> FlowError<M> {
        match self {
            FlowError::Condition1Violation {
                tips_only,
                pits_only,
            } => FlowError::Condition1Violation {
                tips_only: tips_only.into_iter().map(&mut f).collect(),
                pits_only: pits_only.into_iter().map(&mut f).collect(),
            },
            FlowError::Condition2Violation {
                label,
                side,
                first,
                second,
            } => FlowError::Condition2Violation {
                label: f(label),
                side,
                first,
                second,
            },
            FlowError::Condition3Violation { index } => FlowError::Condition3Violation { index },
        }
    }
}

/// A valid flow representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlowGraph<L> {
    nodes: BTreeSet<FlowNode<L>>,
}

impl<L> Default for FlowGraph<L> {
    fn default() -> Self {
        FlowGraph {
            nodes: BTreeSet::new(),
        }
    }
}

impl<L: Ord + Clone> FlowGraph<L> {
    /// The empty graph.
    pub fn empty() -> Self {
        Self::default()
    }

    /// A single edge: its tip node and its pit node.
    pub fn edge(label: L) -> Self {
        let mut nodes = BTreeSet::new();
        nodes.insert(FlowNode::new([label.clone()], []));
        nodes.insert(FlowNode::new([], [label]));
        FlowGraph { nodes }
    }

    /// Checks the three flow conditions on a list of nodes.
    ///
    /// The input is treated as a list, so a node listed twice counts as two
    /// nodes sharing their labels. Conditions are checked in the order 3, 2,
    /// 1 and the first violation found is reported.
    pub fn validate(nodes: impl IntoIterator<Item = FlowNode<L>>) -> Result<Self, FlowError<L>>
    where
        L: fmt::Debug,
    {
        let nodes: Vec<FlowNode<L>> = nodes.into_iter().collect();
        if let Some(index) = nodes.iter().position(FlowNode::is_void) {
            return Err(FlowError::Condition3Violation { index });
        }
        let mut tip_owner: BTreeMap<&L, usize> = BTreeMap::new();
        let mut pit_owner: BTreeMap<&L, usize> = BTreeMap::new();
        for (i, node) in nodes.iter().enumerate() {
            for (side, labels, owner) in [
                (Side::Tips, &node.tips, &mut tip_owner),
                (Side::Pits, &node.pits, &mut pit_owner),
            ] {
                for x in labels {
                    if let Some(&first) = owner.get(x) {
                        return Err(FlowError::Condition2Violation {
                            label: x.clone(),
                            side,
                            first,
                            second: i,
                        });
                    }
                    owner.insert(x, i);
                }
            }
        }
        let tips_only: Vec<L> = tip_owner
            .keys()
            .filter(|x| !pit_owner.contains_key(*x))
            .map(|x| (*x).clone())
            .collect();
        let pits_only: Vec<L> = pit_owner
            .keys()
            .filter(|x| !tip_owner.contains_key(*x))
            .map(|x| (*x).clone())
            .collect();
        if !tips_only.is_empty() || !pits_only.is_empty() {
            return Err(FlowError::Condition1Violation {
                tips_only,
                pits_only,
            });
        }
        drop(tip_owner);
        drop(pit_owner);
        Ok(FlowGraph {
            nodes: nodes.into_iter().collect(),
        })
    }

    /// Evaluates a term in the flow algebra.
    pub fn eval(term: &EdgeTerm<L>) -> Self {
        term.fold(&FlowAlgebra)
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = &FlowNode<L>> + DoubleEndedIterator + '_ {
        self.nodes.iter()
    }

    pub fn into_nodes(self) -> BTreeSet<FlowNode<L>> {
        self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The underlying edge set.
    pub fn underlying(&self) -> BTreeSet<L> {
        self.nodes
            .iter()
            .flat_map(|n| n.tips.iter().cloned())
            .collect()
    }

    pub fn contains_edge(&self, label: &L) -> bool {
        self.tip_node(label).is_some()
    }

    /// The node at which `label` terminates.
    pub fn tip_node(&self, label: &L) -> Option<&FlowNode<L>> {
        self.nodes.iter().find(|n| n.tips.contains(label))
    }

    /// The node from which `label` originates.
    pub fn pit_node(&self, label: &L) -> Option<&FlowNode<L>> {
        self.nodes.iter().find(|n| n.pits.contains(label))
    }

    /// Least upper bound: unions every class of nodes that transitively share
    /// a tip or a pit.
    pub fn overlay(&self, other: &Self) -> Self {
        merge_nodes(self.nodes.iter().chain(other.nodes.iter()).cloned())
    }

    /// `self >> other`: every tip of `self` meets every pit of `other`.
    pub fn connect_into(&self, other: &Self) -> Self {
        self.connect(BinOp::Into, other)
    }

    /// `self <> other`: every pit of either graph meets at one node.
    pub fn connect_pits(&self, other: &Self) -> Self {
        self.connect(BinOp::Pits, other)
    }

    /// `self >< other`: every tip of either graph meets at one node.
    pub fn connect_tips(&self, other: &Self) -> Self {
        self.connect(BinOp::Tips, other)
    }

    /// Applies the binary constructor `op`.
    pub fn apply(&self, op: BinOp, other: &Self) -> Self {
        self.connect(op, other)
    }

    // Overlaying one pairwise helper graph per (d, e) in |self| x |other|
    // merges, whenever both sides have edges, exactly the nodes touched by a
    // single hub node; the hub is pushed through the overlay merge instead.
    fn connect(&self, op: BinOp, other: &Self) -> Self {
        let left = self.underlying();
        let right = other.underlying();
        if op == BinOp::Overlay || left.is_empty() || right.is_empty() {
            return self.overlay(other);
        }
        let hub = match op {
            BinOp::Into => FlowNode {
                tips: left,
                pits: right,
            },
            BinOp::Pits => FlowNode {
                tips: BTreeSet::new(),
                pits: left.into_iter().chain(right).collect(),
            },
            BinOp::Tips => FlowNode {
                tips: left.into_iter().chain(right).collect(),
                pits: BTreeSet::new(),
            },
            BinOp::Overlay => unreachable!(),
        };
        merge_nodes(
            self.nodes
                .iter()
                .chain(other.nodes.iter())
                .cloned()
                .chain(std::iter::once(hub)),
        )
    }

    /// Node-wise order: every node of `self` is contained in some node of
    /// `other`.
    pub fn precedes(&self, other: &Self) -> bool {
        self.nodes
            .iter()
            .all(|x| other.nodes.iter().any(|y| x.is_within(y)))
    }

    /// Order induced by overlay: `self + other == other`.
    pub fn is_absorbed_by(&self, other: &Self) -> bool {
        self.overlay(other) == *other
    }

    /// Reverses every edge.
    pub fn transpose(&self) -> Self {
        FlowGraph {
            nodes: self
                .nodes
                .iter()
                .map(|n| FlowNode {
                    tips: n.pits.clone(),
                    pits: n.tips.clone(),
                })
                .collect(),
        }
    }

    /// Removes every edge of `other` from `self`, dropping nodes left with no
    /// edges. Edges of `other` that `self` lacks are ignored.
    pub fn subtract(&self, other: &Self) -> Self {
        let removed = other.underlying();
        FlowGraph {
            nodes: self
                .nodes
                .iter()
                .map(|n| FlowNode {
                    tips: n.tips.difference(&removed).cloned().collect(),
                    pits: n.pits.difference(&removed).cloned().collect(),
                })
                .filter(|n| !n.is_void())
                .collect(),
        }
    }
}

impl<L: fmt::Display> fmt::Display for FlowGraph<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

/// Unions nodes that transitively share a tip or a pit. Void nodes are
/// skipped.
fn merge_nodes<L: Ord + Clone>(nodes: impl IntoIterator<Item = FlowNode<L>>) -> FlowGraph<L> {
    let nodes: Vec<FlowNode<L>> = nodes.into_iter().filter(|n| !n.is_void()).collect();
    let mut sets = DisjointSets::new(nodes.len());
    {
        let mut tip_owner: BTreeMap<&L, usize> = BTreeMap::new();
        let mut pit_owner: BTreeMap<&L, usize> = BTreeMap::new();
        for (i, node) in nodes.iter().enumerate() {
            for x in &node.tips {
                match tip_owner.get(x) {
                    Some(&j) => {
                        sets.union(i, j);
                    }
                    None => {
                        tip_owner.insert(x, i);
                    }
                }
            }
            for x in &node.pits {
                match pit_owner.get(x) {
                    Some(&j) => {
                        sets.union(i, j);
                    }
                    None => {
                        pit_owner.insert(x, i);
                    }
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, FlowNode<L>> = BTreeMap::new();
    for (i, node) in nodes.into_iter().enumerate() {
        let root = sets.find(i);
        match classes.get_mut(&root) {
            Some(acc) => acc.absorb(node),
            None => {
                classes.insert(root, node);
            }
        }
    }
    FlowGraph {
        nodes: classes.into_values().collect(),
    }
}

/// The flow algebra: `eval` is the fold into it.
#[derive(Debug, Clone, Copy, Default)]
pub struct FlowAlgebra;

impl<L: Ord + Clone> GraphAlgebra<L> for FlowAlgebra {
    type Carrier = FlowGraph<L>;

    fn empty(&self) -> FlowGraph<L> {
        FlowGraph::empty()
    }
    fn edge(&self, label: &L) -> FlowGraph<L> {
        FlowGraph::edge(label.clone())
    }
    fn overlay(&self, a: FlowGraph<L>, b: FlowGraph<L>) -> FlowGraph<L> {
        a.overlay(&b)
    }
    fn into(&self, a: FlowGraph<L>, b: FlowGraph<L>) -> FlowGraph<L> {
        a.connect_into(&b)
    }
    fn pits(&self, a: FlowGraph<L>, b: FlowGraph<L>) -> FlowGraph<L> {
        a.connect_pits(&b)
    }
    fn tips(&self, a: FlowGraph<L>, b: FlowGraph<L>) -> FlowGraph<L> {
        a.connect_tips(&b)
    }
}
