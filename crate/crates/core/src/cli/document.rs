//! The flow document: a JSON object with a single `nodes` field.
//!
//! ```json
//! {
//!   "nodes": [
//!     {"tips": [], "pits": ["1"]},
//!     {"tips": ["1"], "pits": []}
//!   ]
//! }
//! ```
//!
//! Output lists labels in ascending order and nodes in canonical order, one
//! node per line. Input may use any order and any JSON layout; repeated
//! labels inside one list are collapsed, repeated labels across nodes are
//! rejected by validation.

use serde::{Deserialize, Serialize};

use crate::flow::{FlowError, FlowGraph, FlowNode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocNode {
    pub tips: Vec<String>,
    pub pits: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowDocument {
    pub nodes: Vec<DocNode>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("DocumentError: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] FlowError<String>),
}

impl DocumentError {
    pub fn code(&self) -> &'static str {
        match self {
            DocumentError::Malformed(_) => "DocumentError",
            DocumentError::Invalid(e) => e.code(),
        }
    }
}

impl FlowDocument {
    pub fn to_text(&self) -> String {
        let list = |xs: &[String]| serde_json::to_string(xs).expect("string lists serialize");
        let mut out = String::from("{\n  \"nodes\": [");
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            out.push_str(&format!(
                "    {{\"tips\": {}, \"pits\": {}}}",
                list(&n.tips),
                list(&n.pits)
            ));
        }
        if !self.nodes.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn flow_to_doc(graph: &FlowGraph<String>) -> FlowDocument {
    FlowDocument {
        nodes: graph
            .nodes()
            .map(|n| DocNode {
                tips: n.tips.iter().cloned().collect(),
                pits: n.pits.iter().cloned().collect(),
            })
            .collect(),
    }
}

pub fn flow_from_doc(doc: &FlowDocument) -> Result<FlowGraph<String>, FlowError<String>> {
    FlowGraph::validate(
        doc.nodes
            .iter()
            .map(|n| FlowNode::new(n.tips.iter().cloned(), n.pits.iter().cloned())),
    )
}

/// Parses and validates a document.
pub fn flow_from_text(text: &str) -> Result<FlowGraph<String>, DocumentError> {
    Ok(flow_from_doc(&FlowDocument::parse(text)?)?)
}
