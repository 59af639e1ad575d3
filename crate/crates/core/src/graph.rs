//! Signed graph data model, JSON interchange and DOT export.
//!
//! Vertices are dense ids `0..p`. Edges are stored normalised (`u < v`) and
//! sorted by `(u, v)`, so two graphs with the same edge set always compare
//! and serialise identically.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::verify::LabelingMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Sign::Positive),
            "-" => Ok(Sign::Negative),
            other => Err(Error::InvalidGraph(format!(
                "edge sign must be \"+\" or \"-\", got {other:?}"
            ))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn positive(u: usize, v: usize) -> Self {
        Edge::new(u, v, Sign::Positive)
    }

    pub fn negative(u: usize, v: usize) -> Self {
        Edge::new(u, v, Sign::Negative)
    }
}

/// A simple undirected graph with a sign on every edge.
///
/// An unsigned graph is an all-positive signed graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    p: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// Builds a graph on vertices `0..p`, rejecting loops, out-of-range
    /// endpoints and repeated vertex pairs (whatever their signs).
    pub fn new(p: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut normalised: Vec<Edge> = edges
            .into_iter()
            .map(|e| Edge::new(e.u.min(e.v), e.u.max(e.v), e.sign))
            .collect();
        for e in &normalised {
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", e.u)));
            }
            if e.v >= p {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) references a vertex outside 0..{p}",
                    e.u, e.v
                )));
            }
        }
        normalised.sort_unstable();
        if let Some(w) = normalised
            .windows(2)
            .find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v))
        {
            return Err(Error::InvalidGraph(format!(
                "vertex pair ({}, {}) carries more than one edge",
                w[0].u, w[0].v
            )));
        }
        Ok(SignedGraph {
            p,
            edges: normalised,
        })
    }

    /// All-positive graph from unsigned vertex pairs.
    pub fn unsigned(p: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        SignedGraph::new(p, pairs.into_iter().map(|(u, v)| Edge::positive(u, v)))
    }

    pub fn empty(p: usize) -> Self {
        SignedGraph {
            p,
            edges: Vec::new(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of positive edges.
    pub fn m(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_positive()).count()
    }

    /// Number of negative edges.
    pub fn n(&self) -> usize {
        self.edges.len() - self.m()
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_positive())
    }

    pub(crate) fn require_unsigned(&self, context: &str) -> Result<()> {
        if self.is_all_positive() {
            Ok(())
        } else {
            Err(Error::ModeMismatch {
                context: context.to_string(),
                negative: self.n(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&key))
            .is_ok()
    }

    pub fn sign_of(&self, u: usize, v: usize) -> Option<Sign> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&key))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.p];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.p];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// Same vertex pairs with every sign forgotten (made positive).
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            p: self.p,
            edges: self
                .edges
                .iter()
                .map(|e| Edge::positive(e.u, e.v))
                .collect(),
        }
    }

    /// Connectivity of the underlying graph. Graphs with at most one vertex
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        if self.p <= 1 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.p];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.p
    }

    /// Renames vertex `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.p {
            return Err(Error::LengthMismatch {
                expected: self.p,
                found: perm.len(),
            });
        }
        SignedGraph::new(
            self.p,
            self.edges
                .iter()
                .map(|e| Edge::new(perm[e.u], perm[e.v], e.sign)),
        )
    }

    pub fn stats(&self) -> Stats {
        Stats {
            p: self.p,
            m: self.m(),
            n: self.n(),
            q: self.q(),
            connected: self.is_connected(),
            degrees: self.degrees(),
        }
    }

    /// Graphviz rendering: positive edges solid, negative edges dashed.
    /// Attached labels become the vertex captions.
    pub fn to_dot(&self, labeling: Option<&VertexLabeling>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.p {
            match labeling.and_then(|f| f.get(v)) {
                Some(label) => writeln!(out, "  {v} [label=\"{label}\"];").unwrap(),
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for e in &self.edges {
            let style = match e.sign {
                Sign::Positive => "solid",
                Sign::Negative => "dashed",
            };
            writeln!(out, "  {} -- {} [style={style}];", e.u, e.v).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Structural counts of a signed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub p: usize,
    pub m: usize,
    pub n: usize,
    pub q: usize,
    pub connected: bool,
    pub degrees: Vec<usize>,
}

/// Vertex labels indexed by vertex id. Injectivity is a property checked by
/// the verifier, not enforced here, so invalid candidates can be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexLabeling(Vec<u32>);

impl VertexLabeling {
    pub fn new(labels: Vec<u32>) -> Self {
        VertexLabeling(labels)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.0.get(v).copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn max_label(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Labeling that follows [`SignedGraph::permuted`] with the same `perm`.
    pub fn permuted(&self, perm: &[usize]) -> VertexLabeling {
        let mut out = vec![0; self.0.len()];
        for (i, &label) in self.0.iter().enumerate() {
            out[perm[i]] = label;
        }
        VertexLabeling(out)
    }
}

impl From<Vec<u32>> for VertexLabeling {
    fn from(labels: Vec<u32>) -> Self {
        VertexLabeling(labels)
    }
}

impl std::ops::Index<usize> for VertexLabeling {
    type Output = u32;

    fn index(&self, v: usize) -> &u32 {
        &self.0[v]
    }
}

/// A named vertex of a construction (`u`, `w`, `p3`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Role {
    pub name: String,
    pub vertex: usize,
}

/// JSON interchange document. Only `p` and `edges` are required; the other
/// fields are metadata emitted by the generators and ignored by consumers
/// that do not need them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub p: usize,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<VertexLabeling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<LabelingMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<Vec<Role>>,
    /// Integer represented by each vertex id (non-divisible sum graphs).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_values: Option<Vec<u64>>,
}

impl GraphDocument {
    pub fn from_graph(graph: &SignedGraph, labeling: Option<&VertexLabeling>) -> Self {
        GraphDocument {
            p: graph.p(),
            edges: graph.edges().to_vec(),
            labeling: labeling.cloned(),
            family: None,
            mode: None,
            roles: None,
            vertex_values: None,
        }
    }

    pub fn graph(&self) -> Result<SignedGraph> {
        SignedGraph::new(self.p, self.edges.iter().copied())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Compact single-line JSON with edges in canonical order.
    pub fn to_json(&self) -> Result<String> {
        let mut doc = self.clone();
        doc.edges = self.graph()?.edges().to_vec();
        Ok(serde_json::to_string(&doc)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(SignedGraph::new(2, [Edge::positive(1, 1)]).is_err());
        assert!(SignedGraph::new(2, [Edge::positive(0, 2)]).is_err());
        assert!(SignedGraph::new(2, [Edge::positive(0, 1), Edge::negative(1, 0)]).is_err());
        assert!(SignedGraph::new(2, [Edge::positive(0, 1), Edge::positive(1, 0)]).is_err());
    }

    #[test]
    fn edges_are_normalised_and_sorted() {
        let g = SignedGraph::new(
            4,
            [
                Edge::negative(3, 1),
                Edge::positive(2, 0),
                Edge::positive(1, 0),
            ],
        )
        .unwrap();
        let pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.sign_of(3, 1), Some(Sign::Negative));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn stats_of_negative_triangle() {
        let g = SignedGraph::new(
            3,
            [
                Edge::negative(0, 1),
                Edge::negative(1, 2),
                Edge::negative(0, 2),
            ],
        )
        .unwrap();
        let s = g.stats();
        assert_eq!((s.p, s.m, s.n, s.q, s.connected), (3, 0, 3, 3, true));
        assert_eq!(s.degrees, vec![2, 2, 2]);
    }

    #[test]
    fn stats_of_edgeless_pair() {
        let s = SignedGraph::empty(2).stats();
        assert_eq!((s.p, s.m, s.n, s.q, s.connected), (2, 0, 0, 0, false));
        assert_eq!(s.degrees, vec![0, 0]);
    }

    #[test]
    fn sign_json_uses_symbols() {
        let doc = GraphDocument::parse(r#"{"p":2,"edges":[{"u":0,"v":1,"sign":"-"}]}"#).unwrap();
        assert_eq!(doc.edges[0].sign, Sign::Negative);
        assert!(GraphDocument::parse(r#"{"p":2,"edges":[{"u":0,"v":1,"sign":"x"}]}"#).is_err());
        assert_eq!(
            doc.to_json().unwrap(),
            r#"{"p":2,"edges":[{"u":0,"v":1,"sign":"-"}]}"#
        );
    }

    #[test]
    fn dot_marks_negative_edges_dashed() {
        let g = SignedGraph::new(3, [Edge::negative(0, 1), Edge::positive(1, 2)]).unwrap();
        let dot = g.to_dot(Some(&VertexLabeling::new(vec![0, 1, 2])));
        assert!(dot.contains("0 -- 1 [style=dashed];"));
        assert!(dot.contains("1 -- 2 [style=solid];"));
        assert!(dot.contains("2 [label=\"2\"];"));
    }
}
