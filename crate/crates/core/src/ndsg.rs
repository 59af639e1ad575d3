//! Non-divisible sum graphs `G(m, n)` and complement-reducibility tests.
//!
//! `G(m, n)` has vertices `1..=n`, with `a ~ b` iff `a != b` and `m` does not
//! divide `a + b`. Vertex id `i` stands for the integer `i + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphDocument, SignedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NdsgParams {
    pub m: u64,
    pub n: u64,
}

impl NdsgParams {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m <= 1 {
            return Err(Error::InvalidParameter(format!(
                "divisor m must exceed 1, got {m}"
            )));
        }
        if n < 1 {
            return Err(Error::InvalidParameter(format!(
                "vertex count n must be at least 1, got {n}"
            )));
        }
        Ok(NdsgParams { m, n })
    }
}

/// Whether integers `a` and `b` are adjacent in any `G(m, _)` containing them.
pub fn adjacent(m: u64, a: u64, b: u64) -> bool {
    a != b && !(a + b).is_multiple_of(m)
}

pub fn build_gmn(params: NdsgParams) -> Result<SignedGraph> {
    let NdsgParams { m, n } = NdsgParams::new(params.m, params.n)?;
    let n = n as usize;
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    SignedGraph::unsigned(
        n,
        pairs.filter(|&(i, j)| adjacent(m, i as u64 + 1, j as u64 + 1)),
    )
}

/// JSON document for `G(m, n)` carrying the integer behind each vertex id.
pub fn gmn_document(params: NdsgParams) -> Result<GraphDocument> {
    let graph = build_gmn(params)?;
    let mut doc = GraphDocument::from_graph(&graph, None);
    doc.family = Some(format!("G({},{})", params.m, params.n));
    doc.vertex_values = Some((1..=params.n).collect());
    Ok(doc)
}

/// Dense adjacency matrix restricted to the graph's vertex set.
struct Matrix {
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    fn of(graph: &SignedGraph) -> Self {
        let mut adj = vec![vec![false; graph.p()]; graph.p()];
        for e in graph.edges() {
            adj[e.u][e.v] = true;
            adj[e.v][e.u] = true;
        }
        Matrix { adj }
    }

    fn components(&self, vertices: &[usize], complemented: bool) -> Vec<Vec<usize>> {
        let mut seen = vec![false; vertices.len()];
        let mut out = Vec::new();
        for start in 0..vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(vertices[i]);
                for j in 0..vertices.len() {
                    if !seen[j] && i != j && self.adj[vertices[i]][vertices[j]] != complemented {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn has_edge_within(&self, vertices: &[usize], complemented: bool) -> bool {
        vertices.iter().enumerate().any(|(k, &a)| {
            vertices[k + 1..]
                .iter()
                .any(|&b| self.adj[a][b] != complemented)
        })
    }

    /// Reduces the subgraph induced by `vertices` (complemented or not).
    /// Edgeless reduces trivially; otherwise a disconnected graph recurses on
    /// its components, and a connected one must fall apart once complemented.
    fn reducible(&self, vertices: &[usize], complemented: bool) -> bool {
        if !self.has_edge_within(vertices, complemented) {
            return true;
        }
        let comps = self.components(vertices, complemented);
        if comps.len() > 1 {
            return comps.iter().all(|c| self.reducible(c, complemented));
        }
        let flipped = self.components(vertices, !complemented);
        if flipped.len() == 1 {
            return false;
        }
        flipped.iter().all(|c| self.reducible(c, !complemented))
    }
}

/// Whether successive complementation within components reduces the graph to
/// an edgeless one.
pub fn is_complement_reducible(graph: &SignedGraph) -> Result<bool> {
    graph.require_unsigned("complement reducibility")?;
    let vertices: Vec<usize> = (0..graph.p()).collect();
    Ok(Matrix::of(graph).reducible(&vertices, false))
}

/// Brute force over all 4-subsets: true iff none induces a path `P4`.
pub fn is_p4_free(graph: &SignedGraph) -> Result<bool> {
    graph.require_unsigned("P4-freeness")?;
    let adj = Matrix::of(graph).adj;
    let p = graph.p();
    for a in 0..p {
        for b in a + 1..p {
            for c in b + 1..p {
                for d in c + 1..p {
                    let quad = [a, b, c, d];
                    let mut degree = [0u8; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if adj[quad[i]][quad[j]] {
                                degree[i] += 1;
                                degree[j] += 1;
                                edges += 1;
                            }
                        }
                    }
                    degree.sort_unstable();
                    // Three edges with degrees 1,1,2,2 on four vertices is
                    // exactly P4 (triangle+isolated and claw differ).
                    if edges == 3 && degree == [1, 1, 2, 2] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
