//! Graph documents: the JSON and DOT forms of a built crystal.

use std::collections::VecDeque;
use std::fmt::Write as _;

use kr_core::builders::KrBuild;
use kr_core::cartan::{AffineSpec, Family, Weight};
use kr_core::crystal::{CrystalGraph, Element, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: u32,
    pub element: String,
    /// Coordinates in the ε-basis, doubled so spin weights stay integral.
    pub weight: Vec<i32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub src: u32,
    pub dst: u32,
    pub color: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

#[derive(Debug)]
pub enum DocumentError {
    Json(serde_json::Error),
    Family(String),
    Spec(String),
    Graph(GraphError),
    Ids,
}

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocumentError::Json(e) => write!(f, "malformed JSON: {e}"),
            DocumentError::Family(s) => write!(f, "unknown family {s:?}"),
            DocumentError::Spec(s) => write!(f, "invalid spec: {s}"),
            DocumentError::Graph(e) => write!(f, "invalid graph: {e}"),
            DocumentError::Ids => write!(f, "node ids must be 0, 1, 2, … in order"),
        }
    }
}

impl std::error::Error for DocumentError {}

/// Vertex order: breadth first from vertex 0, colors ascending, f before e;
/// unreached vertices start new searches in their old order.
pub fn bfs_order(g: &CrystalGraph) -> Vec<u32> {
    let mut seen = vec![false; g.len()];
    let mut order = Vec::with_capacity(g.len());
    for root in 0..g.len() as u32 {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &c in g.colors() {
                for w in [g.f(v, c), g.e(v, c)].into_iter().flatten() {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    order
}

impl GraphDocument {
    pub fn from_graph(spec: AffineSpec, g: &CrystalGraph) -> Self {
        let order = bfs_order(g);
        let mut id = vec![0u32; g.len()];
        for (k, &v) in order.iter().enumerate() {
            id[v as usize] = k as u32;
        }
        let nodes = order
            .iter()
            .enumerate()
            .map(|(k, &v)| Node { id: k as u32, element: g.label(v).to_string(), weight: g.weight(v).0.clone() })
            .collect();
        let mut edges: Vec<Edge> = g
            .edges()
            .into_iter()
            .map(|(a, c, b)| Edge { src: id[a as usize], dst: id[b as usize], color: c })
            .collect();
        edges.sort();
        GraphDocument { family: spec.family.name().to_string(), n: spec.n, r: spec.r, s: spec.s, nodes, edges }
    }

    pub fn from_build(build: &KrBuild) -> Self {
        Self::from_graph(build.spec, &build.graph)
    }

    pub fn spec(&self) -> Result<AffineSpec, DocumentError> {
        let family = Family::parse(&self.family).ok_or_else(|| DocumentError::Family(self.family.clone()))?;
        AffineSpec::new(family, self.n, self.r, self.s).map_err(|e| DocumentError::Spec(e.to_string()))
    }

    /// The graph described by the document. Elements are opaque: vertex k
    /// carries `Element::Ambient(k)` and its canonical string as label.
    pub fn to_graph(&self) -> Result<CrystalGraph, DocumentError> {
        let spec = self.spec()?;
        if self.nodes.iter().enumerate().any(|(k, nd)| nd.id as usize != k) {
            return Err(DocumentError::Ids);
        }
        let elements = (0..self.nodes.len() as u32).map(Element::Ambient).collect();
        let labels = self.nodes.iter().map(|nd| nd.element.clone()).collect();
        let weights = self.nodes.iter().map(|nd| Weight(nd.weight.clone())).collect();
        let edges: Vec<(u32, u8, u32)> = self.edges.iter().map(|e| (e.src, e.color, e.dst)).collect();
        CrystalGraph::from_parts(spec.colors(), elements, labels, weights, &edges).map_err(DocumentError::Graph)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(DocumentError::Json)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{} n={} r={} s={}\" {{", self.family, self.n, self.r, self.s);
        for nd in &self.nodes {
            let _ = writeln!(out, "  {} [label=\"{}\"];", nd.id, escape(&nd.element));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", e.src, e.dst, e.color);
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
