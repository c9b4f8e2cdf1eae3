//! Edge graphs: multigraphs identified purely by their edge labels.
//!
//! A graph is built from six constructors (empty, single edge, overlay and
//! the three connect operators into, pits and tips) collected in
//! [`EdgeTerm`]. Terms are given meaning by folding them into an algebra;
//! the canonical semantics is the flow representation [`FlowGraph`], a set
//! of `(tips, pits)` pairs, one per node. Two terms denote the same graph
//! exactly when their flow graphs are equal, which [`canon`] turns into a
//! normal form.
//!
//! ```
//! use edgegraph::{EdgeTerm, FlowGraph, canon};
//!
//! // 1 >> 2 >> 1 loops both edges on a single node
//! let t = EdgeTerm::into(
//!     EdgeTerm::into(EdgeTerm::edge(1), EdgeTerm::edge(2)),
//!     EdgeTerm::edge(1),
//! );
//! let g = FlowGraph::eval(&t);
//! assert_eq!(g.len(), 1);
//! assert!(canon::equivalent(&t, &canon::canonical_term(&g)));
//! ```

mod dsu;

pub mod builders;
pub mod canon;
pub mod cli;
pub mod flow;
pub mod multigraph;
pub mod paths;
pub mod term;

pub use flow::{FlowError, FlowGraph, FlowNode};
pub use multigraph::{Multigraph, NodalFlow, NodeId};
pub use paths::{End, PathError, PathMap, Semiring};
pub use term::{BinOp, EdgeTerm, GraphAlgebra};
