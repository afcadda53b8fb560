use std::fmt::Write;

use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{labels} labels for {vertices} vertices")]
pub struct LabelMismatch {
    pub vertices: usize,
    pub labels: usize,
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders `g` as an undirected DOT graph. Nodes are named by vertex index
/// and carry `labels[v]`; each edge appears once as `u -- v` with `u < v`.
pub fn write_dot<S: AsRef<str>>(g: &SimpleGraph, labels: &[S]) -> Result<String, LabelMismatch> {
    if labels.len() != g.vertex_count() {
        return Err(LabelMismatch {
            vertices: g.vertex_count(),
            labels: labels.len(),
        });
    }
    let mut out = String::from("graph {\n");
    for (v, label) in labels.iter().enumerate() {
        writeln!(out, "  {v} [label=\"{}\"];", escape(label.as_ref())).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
