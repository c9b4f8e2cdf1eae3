//! Graphviz output: one point per flow node, one labelled arc per edge from
//! the node it leaves to the node it enters.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::flow::FlowGraph;

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Nodes are named `n0, n1, ...` in canonical order; arcs follow label
/// order.
pub fn export_dot(graph: &FlowGraph<String>) -> String {
    let mut pit_at: BTreeMap<&str, usize> = BTreeMap::new();
    let mut tip_at: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, node) in graph.nodes().enumerate() {
        for x in &node.pits {
            pit_at.insert(x, i);
        }
        for x in &node.tips {
            tip_at.insert(x, i);
        }
    }
    let mut out = String::from("digraph edgegraph {\n  node [shape=point];\n");
    for i in 0..graph.len() {
        writeln!(out, "  n{i};").unwrap();
    }
    for (label, from) in &pit_at {
        let to = tip_at[label];
        writeln!(out, "  n{from} -> n{to} [label={}];", quote(label)).unwrap();
    }
    out.push_str("}\n");
    out
}
