use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{AnchorMode, CrystalGraph};
use crate::cartan::{CartanData, ClassicalWeight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonNode {
    pub id: usize,
    pub repr: String,
    pub wt: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub src: usize,
    pub dst: usize,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonAnchors {
    pub max: Option<usize>,
    pub min: Option<usize>,
}

/// Serialized form of a crystal graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: Vec<JsonNode>,
    pub edges: Vec<JsonEdge>,
    pub anchors: JsonAnchors,
}

impl CrystalGraph {
    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            nodes: (0..self.len())
                .map(|b| JsonNode {
                    id: b,
                    repr: self.repr(b).to_string(),
                    wt: self.weight(b).0.clone(),
                })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(src, dst, color)| JsonEdge { src, dst, color })
                .collect(),
            anchors: JsonAnchors {
                max: self.anchor(AnchorMode::Max).ok(),
                min: self.anchor(AnchorMode::Min).ok(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(cartan: Arc<CartanData>, text: &str) -> Result<Self> {
        let j: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("graph JSON: {e}")))?;
        for (k, node) in j.nodes.iter().enumerate() {
            if node.id != k || node.wt.len() != cartan.rank() {
                return Err(Error::Invalid(format!("malformed node {k}")));
            }
        }
        let edges: Vec<_> = j.edges.iter().map(|e| (e.src, e.dst, e.color)).collect();
        let mut colors: Vec<usize> = edges.iter().map(|e| e.2).collect();
        colors.sort_unstable();
        colors.dedup();
        CrystalGraph::from_edges(
            cartan,
            colors,
            j.nodes.iter().map(|n| n.repr.clone()).collect(),
            j.nodes.iter().map(|n| ClassicalWeight(n.wt.clone())).collect(),
            &edges,
        )
    }

    /// DOT rendering; arrows of color 0, 1, 2 are drawn black, blue and red.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for b in 0..self.len() {
            let label = self.repr(b).replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(s, "  {b} [label=\"{label}\"];").unwrap();
        }
        for (src, dst, i) in self.edges() {
            let color = match i {
                0 => ", color=black",
                1 => ", color=blue",
                2 => ", color=red",
                _ => "",
            };
            writeln!(s, "  {src} -> {dst} [label=\"{i}\"{color}];").unwrap();
        }
        s.push_str("}\n");
        s
    }
}
