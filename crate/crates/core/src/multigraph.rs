//! Node-carrying representations and their correspondence with flow graphs.
//!
//! A [`Multigraph`] is the usual `(nodes, edges, pit_of, tip_of)` tuple. A
//! [`NodalFlow`] is a flow representation that keeps node identities, and
//! with them isolated nodes. The two are in bijection. Forgetting node ids
//! and isolated nodes gives the flow graph, which identifies multigraphs
//! up to renaming of their non-isolated nodes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::flow::{FlowGraph, FlowNode};

/// Node identifier synthesized from a flow graph: the position of the node
/// in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultigraphError<L: fmt::Debug, N: fmt::Debug> {
    #[error("edge {0:?} is listed more than once")]
    DuplicateEdge(L),
    #[error("edge {label:?} refers to node {node:?}, which is not in the node set")]
    UnknownNode { label: L, node: N },
}

/// `(N, E, pit_of, tip_of)`; the edge set is the key set of both maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph<L, N> {
    nodes: BTreeSet<N>,
    pit_of: BTreeMap<L, N>,
    tip_of: BTreeMap<L, N>,
}

impl<L: Ord + Clone, N: Ord + Clone> Multigraph<L, N> {
    /// Builds a multigraph from its nodes and `(label, pit, tip)` triples.
    pub fn new(
        nodes: impl IntoIterator<Item = N>,
        edges: impl IntoIterator<Item = (L, N, N)>,
    ) -> Result<Self, MultigraphError<L, N>>
    where
        L: fmt::Debug,
        N: fmt::Debug,
    {
        let nodes: BTreeSet<N> = nodes.into_iter().collect();
        let mut pit_of = BTreeMap::new();
        let mut tip_of = BTreeMap::new();
        for (label, pit, tip) in edges {
            for node in [&pit, &tip] {
                if !nodes.contains(node) {
                    return Err(MultigraphError::UnknownNode {
                        label,
                        node: node.clone(),
                    });
                }
            }
            if pit_of.contains_key(&label) {
                return Err(MultigraphError::DuplicateEdge(label));
            }
            pit_of.insert(label.clone(), pit);
            tip_of.insert(label, tip);
        }
        Ok(Multigraph {
            nodes,
            pit_of,
            tip_of,
        })
    }

    pub fn nodes(&self) -> &BTreeSet<N> {
        &self.nodes
    }

    pub fn edges(&self) -> impl Iterator<Item = &L> + '_ {
        self.pit_of.keys()
    }

    pub fn edge_count(&self) -> usize {
        self.pit_of.len()
    }

    pub fn pit_of(&self, label: &L) -> Option<&N> {
        self.pit_of.get(label)
    }

    pub fn tip_of(&self, label: &L) -> Option<&N> {
        self.tip_of.get(label)
    }

    /// Nodes that are the pit or tip of some edge.
    pub fn non_isolated(&self) -> BTreeSet<&N> {
        self.pit_of.values().chain(self.tip_of.values()).collect()
    }

    /// Adds a node with no edges.
    pub fn with_isolated(mut self, node: N) -> Self {
        self.nodes.insert(node);
        self
    }

    /// Renames nodes with an injective map.
    pub fn rename<M: Ord + Clone>(&self, mut f: impl FnMut(&N) -> M) -> Multigraph<L, M> {
        let map: BTreeMap<&N, M> = self.nodes.iter().map(|n| (n, f(n))).collect();
        Multigraph {
            nodes: map.values().cloned().collect(),
            pit_of: self
                .pit_of
                .iter()
                .map(|(l, n)| (l.clone(), map[n].clone()))
                .collect(),
            tip_of: self
                .tip_of
                .iter()
                .map(|(l, n)| (l.clone(), map[n].clone()))
                .collect(),
        }
    }

    /// One entry per node holding the preimages of `tip_of` and `pit_of`.
    pub fn to_nodal_flow(&self) -> NodalFlow<L, N> {
        let mut entries: BTreeMap<N, FlowNode<L>> = self
            .nodes
            .iter()
            .map(|n| {
                (
                    n.clone(),
                    FlowNode {
                        tips: BTreeSet::new(),
                        pits: BTreeSet::new(),
                    },
                )
            })
            .collect();
        for (label, node) in &self.tip_of {
            entries
                .get_mut(node)
                .expect("tip in node set")
                .tips
                .insert(label.clone());
        }
        for (label, node) in &self.pit_of {
            entries
                .get_mut(node)
                .expect("pit in node set")
                .pits
                .insert(label.clone());
        }
        NodalFlow { entries }
    }

    /// The flow graph of the multigraph, forgetting node names and isolated
    /// nodes.
    pub fn to_flow(&self) -> FlowGraph<L>
    where
        L: fmt::Debug,
    {
        self.to_nodal_flow().restrict()
    }
}

impl<L: Ord + Clone + fmt::Debug> Multigraph<L, NodeId> {
    /// The representative multigraph of a flow graph: one node per flow node,
    /// numbered in canonical order.
    pub fn from_flow(graph: &FlowGraph<L>) -> Self {
        let mut pit_of = BTreeMap::new();
        let mut tip_of = BTreeMap::new();
        for (i, node) in graph.nodes().enumerate() {
            for x in &node.tips {
                tip_of.insert(x.clone(), NodeId(i));
            }
            for x in &node.pits {
                pit_of.insert(x.clone(), NodeId(i));
            }
        }
        Multigraph {
            nodes: (0..graph.len()).map(NodeId).collect(),
            pit_of,
            tip_of,
        }
    }
}

/// Whether two multigraphs agree up to renaming non-isolated nodes.
pub fn equivalent_multigraphs<L, N, M>(a: &Multigraph<L, N>, b: &Multigraph<L, M>) -> bool
where
    L: Ord + Clone + fmt::Debug,
    N: Ord + Clone,
    M: Ord + Clone,
{
    a.to_flow() == b.to_flow()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NodalFlowError<L: fmt::Debug, N: fmt::Debug> {
    #[error("node id {0:?} is used by more than one entry")]
    DuplicateNode(N),
    #[error("label {0:?} is a tip of more than one node")]
    SharedTip(L),
    #[error("label {0:?} is a pit of more than one node")]
    SharedPit(L),
    #[error("label {0:?} has a tip but no pit, or a pit but no tip")]
    Uncovered(L),
}

/// Flow representation with explicit node identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalFlow<L, N> {
    entries: BTreeMap<N, FlowNode<L>>,
}

impl<L: Ord + Clone + fmt::Debug, N: Ord + Clone + fmt::Debug> NodalFlow<L, N> {
    /// Checks disjointness and coverage of `(tips, pits, node)` triples.
    pub fn new<T, P>(
        entries: impl IntoIterator<Item = (T, P, N)>,
    ) -> Result<Self, NodalFlowError<L, N>>
    where
        T: IntoIterator<Item = L>,
        P: IntoIterator<Item = L>,
    {
        let mut map = BTreeMap::new();
        let mut tips = BTreeSet::new();
        let mut pits = BTreeSet::new();
        for (t, p, n) in entries {
            let node = FlowNode::new(t, p);
            for x in &node.tips {
                if !tips.insert(x.clone()) {
                    return Err(NodalFlowError::SharedTip(x.clone()));
                }
            }
            for x in &node.pits {
                if !pits.insert(x.clone()) {
                    return Err(NodalFlowError::SharedPit(x.clone()));
                }
            }
            if map.contains_key(&n) {
                return Err(NodalFlowError::DuplicateNode(n));
            }
            map.insert(n, node);
        }
        if let Some(x) = tips.symmetric_difference(&pits).next() {
            return Err(NodalFlowError::Uncovered(x.clone()));
        }
        Ok(NodalFlow { entries: map })
    }
}

impl<L: Ord + Clone, N: Ord + Clone> NodalFlow<L, N> {
    pub fn entries(&self) -> impl Iterator<Item = (&N, &FlowNode<L>)> + '_ {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inverse of [`Multigraph::to_nodal_flow`].
    pub fn to_multigraph(&self) -> Multigraph<L, N> {
        let mut pit_of = BTreeMap::new();
        let mut tip_of = BTreeMap::new();
        for (n, node) in &self.entries {
            for x in &node.tips {
                tip_of.insert(x.clone(), n.clone());
            }
            for x in &node.pits {
                pit_of.insert(x.clone(), n.clone());
            }
        }
        Multigraph {
            nodes: self.entries.keys().cloned().collect(),
            pit_of,
            tip_of,
        }
    }

    /// Drops node ids and isolated nodes.
    pub fn restrict(&self) -> FlowGraph<L>
    where
        L: fmt::Debug,
    {
        FlowGraph::validate(self.entries.values().filter(|n| !n.is_void()).cloned())
            .expect("a nodal flow restricts to a valid flow graph")
    }
}
