//! Exact verifiers for the four labeling notions.
//!
//! | mode              | label domain           | positive edges      | negative edges      |
//! |-------------------|------------------------|---------------------|---------------------|
//! | `graceful`        | `0..=q`                | `|f(u)-f(v)|` = 1..q | (not allowed)      |
//! | `additive`        | `0..=ceil((q+1)/2)`    | `f(u)+f(v)` = 1..q  | (not allowed)       |
//! | `graceful-signed` | `0..=q`                | `|f(u)-f(v)|` = 1..m | `|f(u)-f(v)|` = 1..n |
//! | `additive-signed` | `0..=m+ceil((n+1)/2)`  | `|f(u)-f(v)|` = 1..m | `f(u)+f(v)` = 1..n  |
//!
//! "= 1..k" means the induced labels over that edge class are exactly the
//! set `{1, ..., k}`; an empty class is satisfied vacuously.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, VertexLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelingMode {
    #[serde(rename = "graceful")]
    Graceful,
    #[serde(rename = "additive")]
    AdditivelyGraceful,
    #[serde(rename = "graceful-signed")]
    GracefulSigned,
    #[serde(rename = "additive-signed")]
    AdditivelyGracefulSigned,
}

impl LabelingMode {
    pub const ALL: [LabelingMode; 4] = [
        LabelingMode::Graceful,
        LabelingMode::AdditivelyGraceful,
        LabelingMode::GracefulSigned,
        LabelingMode::AdditivelyGracefulSigned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LabelingMode::Graceful => "graceful",
            LabelingMode::AdditivelyGraceful => "additive",
            LabelingMode::GracefulSigned => "graceful-signed",
            LabelingMode::AdditivelyGracefulSigned => "additive-signed",
        }
    }

    /// Unsigned modes only accept all-positive graphs.
    pub fn requires_unsigned(self) -> bool {
        matches!(
            self,
            LabelingMode::Graceful | LabelingMode::AdditivelyGraceful
        )
    }

    pub fn accepts(self, graph: &SignedGraph) -> bool {
        !self.requires_unsigned() || graph.is_all_positive()
    }

    pub(crate) fn check_compatible(self, graph: &SignedGraph) -> Result<()> {
        if self.requires_unsigned() {
            graph.require_unsigned(&format!("mode {self}"))
        } else {
            Ok(())
        }
    }

    /// Largest label a vertex may receive.
    pub fn max_label(self, graph: &SignedGraph) -> u32 {
        let (m, n, q) = (graph.m(), graph.n(), graph.q());
        let bound = match self {
            LabelingMode::Graceful | LabelingMode::GracefulSigned => q,
            LabelingMode::AdditivelyGraceful => (q + 2) / 2,
            LabelingMode::AdditivelyGracefulSigned => m + (n + 2) / 2,
        };
        bound as u32
    }

    pub(crate) fn rule(self, sign: Sign) -> EdgeRule {
        match (self, sign) {
            (LabelingMode::AdditivelyGraceful, _) => EdgeRule::Sum,
            (LabelingMode::AdditivelyGracefulSigned, Sign::Negative) => EdgeRule::Sum,
            _ => EdgeRule::Difference,
        }
    }

    /// Index of the edge class whose induced labels must cover `1..=cap`.
    pub(crate) fn class(self, sign: Sign) -> usize {
        if self.requires_unsigned() {
            0
        } else {
            match sign {
                Sign::Positive => 0,
                Sign::Negative => 1,
            }
        }
    }

    pub(crate) fn caps(self, graph: &SignedGraph) -> [usize; 2] {
        if self.requires_unsigned() {
            [graph.q(), 0]
        } else {
            [graph.m(), graph.n()]
        }
    }
}

impl fmt::Display for LabelingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LabelingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LabelingMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown mode {s:?} (expected graceful, additive, graceful-signed or additive-signed)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EdgeRule {
    Difference,
    Sum,
}

impl EdgeRule {
    #[inline]
    pub(crate) fn apply(self, a: u32, b: u32) -> u32 {
        match self {
            EdgeRule::Difference => a.abs_diff(b),
            EdgeRule::Sum => a + b,
        }
    }
}

/// Label an edge receives under `mode`. Graceful signed labelings carry the
/// edge sign, so negative edges induce `-|f(u)-f(v)|` there.
pub fn induced_label(mode: LabelingMode, edge: &Edge, f: &VertexLabeling) -> i64 {
    let raw = mode.rule(edge.sign).apply(f[edge.u], f[edge.v]) as i64;
    if mode == LabelingMode::GracefulSigned && edge.sign == Sign::Negative {
        -raw
    } else {
        raw
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonInjective {
        label: u32,
        first: usize,
        second: usize,
    },
    OutOfDomain {
        vertex: usize,
        label: u32,
        max: u32,
    },
    EdgeLabelOutOfRange {
        edge: Edge,
        label: i64,
        cap: usize,
    },
    DuplicateEdgeLabel {
        edge: Edge,
        label: i64,
        earlier: Edge,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonInjective {
                label,
                first,
                second,
            } => write!(
                f,
                "labeling is not injective: vertices {first} and {second} both have label {label}"
            ),
            Violation::OutOfDomain { vertex, label, max } => write!(
                f,
                "vertex {vertex} has label {label}, outside the domain 0..={max}"
            ),
            Violation::EdgeLabelOutOfRange { edge, label, cap } => write!(
                f,
                "{} edge ({}, {}) induces {label}, outside 1..={cap}",
                sign_word(edge.sign),
                edge.u,
                edge.v
            ),
            Violation::DuplicateEdgeLabel {
                edge,
                label,
                earlier,
            } => write!(
                f,
                "{} edges ({}, {}) and ({}, {}) both induce {label}",
                sign_word(edge.sign),
                earlier.u,
                earlier.v,
                edge.u,
                edge.v
            ),
        }
    }
}

fn sign_word(sign: Sign) -> &'static str {
    match sign {
        Sign::Positive => "positive",
        Sign::Negative => "negative",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedLabel {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub mode: LabelingMode,
    pub induced: Vec<InducedLabel>,
    #[serde(serialize_with = "violation_text")]
    pub violation: Option<Violation>,
}

fn violation_text<S: Serializer>(
    v: &Option<Violation>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => serializer.serialize_some(&v.to_string()),
        None => serializer.serialize_none(),
    }
}

/// Checks `f` against `mode` on `graph` and reports every induced edge label.
///
/// Checks run in a fixed order (injectivity, label domain, edge labels in
/// canonical edge order) and the first failure is recorded.
pub fn verify(
    graph: &SignedGraph,
    f: &VertexLabeling,
    mode: LabelingMode,
) -> Result<VerificationReport> {
    if f.len() != graph.p() {
        return Err(Error::LengthMismatch {
            expected: graph.p(),
            found: f.len(),
        });
    }
    mode.check_compatible(graph)?;

    let induced: Vec<InducedLabel> = graph
        .edges()
        .iter()
        .map(|e| InducedLabel {
            u: e.u,
            v: e.v,
            sign: e.sign,
            label: induced_label(mode, e, f),
        })
        .collect();

    let violation = injectivity_violation(f)
        .or_else(|| domain_violation(f, mode.max_label(graph)))
        .or_else(|| edge_violation(graph, &induced, mode));

    Ok(VerificationReport {
        valid: violation.is_none(),
        mode,
        induced,
        violation,
    })
}

fn injectivity_violation(f: &VertexLabeling) -> Option<Violation> {
    let mut owner: std::collections::HashMap<u32, usize> = Default::default();
    for (v, &label) in f.as_slice().iter().enumerate() {
        if let Some(&first) = owner.get(&label) {
            return Some(Violation::NonInjective {
                label,
                first,
                second: v,
            });
        }
        owner.insert(label, v);
    }
    None
}

fn domain_violation(f: &VertexLabeling, max: u32) -> Option<Violation> {
    f.as_slice()
        .iter()
        .enumerate()
        .find(|(_, &label)| label > max)
        .map(|(vertex, &label)| Violation::OutOfDomain { vertex, label, max })
}

fn edge_violation(
    graph: &SignedGraph,
    induced: &[InducedLabel],
    mode: LabelingMode,
) -> Option<Violation> {
    let caps = mode.caps(graph);
    let mut seen: [std::collections::HashMap<i64, Edge>; 2] = Default::default();
    for (e, ind) in graph.edges().iter().zip(induced) {
        let class = mode.class(e.sign);
        let magnitude = ind.label.unsigned_abs() as usize;
        if magnitude == 0 || magnitude > caps[class] {
            return Some(Violation::EdgeLabelOutOfRange {
                edge: *e,
                label: ind.label,
                cap: caps[class],
            });
        }
        if let Some(&earlier) = seen[class].get(&ind.label) {
            return Some(Violation::DuplicateEdgeLabel {
                edge: *e,
                label: ind.label,
                earlier,
            });
        }
        seen[class].insert(ind.label, *e);
    }
    // Each class has exactly `cap` edges, so distinct labels in 1..=cap
    // cover the whole range.
    None
}

/// `q >= 2p - 4`, the necessary condition for an additively graceful graph.
/// `false` certifies that no additively graceful labeling exists.
pub fn check_additive_bound(graph: &SignedGraph) -> Result<bool> {
    LabelingMode::AdditivelyGraceful.check_compatible(graph)?;
    Ok(additive_bound_holds(graph))
}

pub(crate) fn additive_bound_holds(graph: &SignedGraph) -> bool {
    graph.q() as i64 >= 2 * graph.p() as i64 - 4
}

/// Allocation-free validity check for repeated use on one graph.
///
/// Agrees with `verify(..).valid` on every input of the right length.
pub struct Checker {
    edges: Vec<(usize, usize, usize, EdgeRule)>,
    caps: [usize; 2],
    max_label: u32,
    vertex_stamp: Vec<u32>,
    edge_stamp: [Vec<u32>; 2],
    stamp: u32,
}

impl Checker {
    pub fn new(graph: &SignedGraph, mode: LabelingMode) -> Result<Self> {
        mode.check_compatible(graph)?;
        let caps = mode.caps(graph);
        let max_label = mode.max_label(graph);
        Ok(Checker {
            edges: graph
                .edges()
                .iter()
                .map(|e| (e.u, e.v, mode.class(e.sign), mode.rule(e.sign)))
                .collect(),
            caps,
            max_label,
            vertex_stamp: vec![0; max_label as usize + 1],
            edge_stamp: [vec![0; caps[0] + 1], vec![0; caps[1] + 1]],
            stamp: 0,
        })
    }

    pub fn check(&mut self, labels: &[u32]) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.vertex_stamp.fill(0);
            self.edge_stamp.iter_mut().for_each(|s| s.fill(0));
            self.stamp = 1;
        }
        let stamp = self.stamp;
        // Domain and injectivity are checked together here; only the
        // verdict matters, not which failure comes first.
        for &label in labels {
            if label > self.max_label {
                return false;
            }
            let slot = &mut self.vertex_stamp[label as usize];
            if *slot == stamp {
                return false;
            }
            *slot = stamp;
        }
        for &(u, v, class, rule) in &self.edges {
            let label = rule.apply(labels[u], labels[v]) as usize;
            if label == 0 || label > self.caps[class] {
                return false;
            }
            let slot = &mut self.edge_stamp[class][label];
            if *slot == stamp {
                return false;
            }
            *slot = stamp;
        }
        true
    }
}

/// Convenience wrapper around [`Checker`].
pub fn is_valid(graph: &SignedGraph, f: &VertexLabeling, mode: LabelingMode) -> Result<bool> {
    if f.len() != graph.p() {
        return Err(Error::LengthMismatch {
            expected: graph.p(),
            found: f.len(),
        });
    }
    Ok(Checker::new(graph, mode)?.check(f.as_slice()))
}
