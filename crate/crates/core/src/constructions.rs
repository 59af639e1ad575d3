//! Labeled signed graph families with closed-form labelings, and the
//! catalogue of hand-transcribed figure graphs.
//!
//! Every generator returns a [`ConstructedGraph`] whose labeling verifies in
//! its `expected_mode`; the tests check this for `m` up to 200.
//!
//! Vertex id assignment per family (pendants are numbered from 1):
//!
//! | family   | ids                                              |
//! |----------|--------------------------------------------------|
//! | `p3`     | `u=0, v=1, w=2, p_i=2+i`                         |
//! | `star`   | `u=0` (centre), `v1=1` (negative leaf), `v_{i+1}=i+1` |
//! | `bistar` | `u=0, v=1, w=2, w_i=2+i` (`i < m`)               |
//! | `st`     | `u=0, v=1, w=2, w_i=2+i`                         |
//! | `ste`    | `u=0, v=1, w=2, w_i=2+i`                         |
//! | `k4`     | `u=0, v=1, w=2, x=3, w_i=3+i`                    |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, GraphDocument, Role, Sign, SignedGraph, VertexLabeling};
use crate::ndsg::{build_gmn, NdsgParams};
use crate::verify::LabelingMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Negative path `u-v-w` with `m` positive pendants at `w`.
    P3Pendants,
    /// Star with one negative and `m` positive spokes.
    StarOneNeg,
    /// Positive edge `uv`, `m-1` positive pendants at `u`, negative pendant at `v`.
    Bistar,
    /// Negative triangle with `m` positive pendants at `w`.
    St,
    /// Triangle with one negative edge `uw` and `m` positive pendants at `w`.
    Ste,
    /// Negative `K4` with `m` positive pendants at `x`.
    K4Pendants,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::P3Pendants,
        FamilyKind::StarOneNeg,
        FamilyKind::Bistar,
        FamilyKind::St,
        FamilyKind::Ste,
        FamilyKind::K4Pendants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::P3Pendants => "p3",
            FamilyKind::StarOneNeg => "star",
            FamilyKind::Bistar => "bistar",
            FamilyKind::St => "st",
            FamilyKind::Ste => "ste",
            FamilyKind::K4Pendants => "k4",
        }
    }

    pub fn build(self, m: usize) -> Result<ConstructedGraph> {
        match self {
            FamilyKind::P3Pendants => build_p3_pendants(m),
            FamilyKind::StarOneNeg => build_star_one_neg(m),
            FamilyKind::Bistar => build_bistar(m),
            FamilyKind::St => build_st(m),
            FamilyKind::Ste => build_ste(m),
            FamilyKind::K4Pendants => build_k4_pendants(m),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5a,
    Fig5b,
    Fig5c,
    Fig6a,
    Fig6b,
    Fig7a,
    Fig7b,
    Fig8a,
    Fig8b,
    Fig9,
    Fig10G23,
    Fig10G63,
    Fig10G64,
}

impl FixtureId {
    pub const ALL: [FixtureId; 17] = [
        FixtureId::Fig1,
        FixtureId::Fig2,
        FixtureId::Fig3,
        FixtureId::Fig4,
        FixtureId::Fig5a,
        FixtureId::Fig5b,
        FixtureId::Fig5c,
        FixtureId::Fig6a,
        FixtureId::Fig6b,
        FixtureId::Fig7a,
        FixtureId::Fig7b,
        FixtureId::Fig8a,
        FixtureId::Fig8b,
        FixtureId::Fig9,
        FixtureId::Fig10G23,
        FixtureId::Fig10G63,
        FixtureId::Fig10G64,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Fig1 => "fig1",
            FixtureId::Fig2 => "fig2",
            FixtureId::Fig3 => "fig3",
            FixtureId::Fig4 => "fig4",
            FixtureId::Fig5a => "fig5a",
            FixtureId::Fig5b => "fig5b",
            FixtureId::Fig5c => "fig5c",
            FixtureId::Fig6a => "fig6a",
            FixtureId::Fig6b => "fig6b",
            FixtureId::Fig7a => "fig7a",
            FixtureId::Fig7b => "fig7b",
            FixtureId::Fig8a => "fig8a",
            FixtureId::Fig8b => "fig8b",
            FixtureId::Fig9 => "fig9",
            FixtureId::Fig10G23 => "fig10-g23",
            FixtureId::Fig10G63 => "fig10-g63",
            FixtureId::Fig10G64 => "fig10-g64",
        }
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionFamily {
    Family { kind: FamilyKind, m: usize },
    Fixture(FixtureId),
}

impl fmt::Display for ConstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionFamily::Family { kind, m } => write!(f, "{}(m={m})", kind.name()),
            ConstructionFamily::Fixture(id) => write!(f, "fixture:{}", id.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructedGraph {
    pub family: ConstructionFamily,
    pub graph: SignedGraph,
    pub labeling: VertexLabeling,
    pub roles: Vec<Role>,
    pub expected_mode: LabelingMode,
}

impl ConstructedGraph {
    pub fn role(&self, name: &str) -> Option<usize> {
        self.roles.iter().find(|r| r.name == name).map(|r| r.vertex)
    }

    pub fn document(&self) -> GraphDocument {
        let mut doc = GraphDocument::from_graph(&self.graph, Some(&self.labeling));
        doc.family = Some(self.family.to_string());
        doc.mode = Some(self.expected_mode);
        if !self.roles.is_empty() {
            doc.roles = Some(self.roles.clone());
        }
        doc
    }
}

fn require_m(m: usize) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "pendant count m must be at least 1, got {m}"
        )));
    }
    Ok(())
}

fn named(names: &[&str]) -> Vec<Role> {
    names
        .iter()
        .enumerate()
        .map(|(vertex, name)| Role {
            name: name.to_string(),
            vertex,
        })
        .collect()
}

fn pendant_roles(prefix: &str, first_id: usize, first_index: usize, count: usize) -> Vec<Role> {
    (0..count)
        .map(|k| Role {
            name: format!("{prefix}{}", first_index + k),
            vertex: first_id + k,
        })
        .collect()
}

fn assemble(
    kind: FamilyKind,
    m: usize,
    p: usize,
    edges: Vec<Edge>,
    labels: Vec<u32>,
    roles: Vec<Role>,
) -> Result<ConstructedGraph> {
    let built = ConstructedGraph {
        family: ConstructionFamily::Family { kind, m },
        graph: SignedGraph::new(p, edges)?,
        labeling: VertexLabeling::new(labels),
        roles,
        expected_mode: LabelingMode::AdditivelyGracefulSigned,
    };
    debug_assert!(
        crate::verify::is_valid(&built.graph, &built.labeling, built.expected_mode).unwrap(),
        "{} does not self-certify",
        built.family
    );
    Ok(built)
}

/// Negative path `u-v-w` plus `m` positive pendants `p_i` at `w`;
/// `f(v)=0, f(u)=1, f(w)=2, f(p_i)=2+i`.
pub fn build_p3_pendants(m: usize) -> Result<ConstructedGraph> {
    require_m(m)?;
    let (u, v, w) = (0, 1, 2);
    let mut edges = vec![Edge::negative(u, v), Edge::negative(v, w)];
    let mut labels = vec![1, 0, 2];
    for i in 1..=m {
        edges.push(Edge::positive(w, 2 + i));
        labels.push(2 + i as u32);
    }
    let mut roles = named(&["u", "v", "w"]);
    roles.extend(pendant_roles("p", 3, 1, m));
    assemble(FamilyKind::P3Pendants, m, m + 3, edges, labels, roles)
}

/// Star `K(1, m+1)` with centre `u`, one negative spoke to `v1` and `m`
/// positive spokes; `f(u)=1, f(v1)=0`, positive leaves `f(u)+i`.
pub fn build_star_one_neg(m: usize) -> Result<ConstructedGraph> {
    require_m(m)?;
    let (u, v1) = (0, 1);
    let mut edges = vec![Edge::negative(u, v1)];
    let mut labels = vec![1, 0];
    for i in 1..=m {
        edges.push(Edge::positive(u, 1 + i));
        labels.push(1 + i as u32);
    }
    let mut roles = named(&["u", "v1"]);
    roles.extend(pendant_roles("v", 2, 2, m));
    assemble(FamilyKind::StarOneNeg, m, m + 2, edges, labels, roles)
}

/// Bistar with positive centre edge `uv`, `m-1` positive pendants `w_i` at
/// `u` and a negative pendant `w` at `v`; `f(v)=1, f(w)=0, f(u)=m+1,
/// f(w_i)=f(u)-i`. Exactly one negative edge.
pub fn build_bistar(m: usize) -> Result<ConstructedGraph> {
    require_m(m)?;
    let (u, v, w) = (0, 1, 2);
    let top = m as u32 + 1;
    let mut edges = vec![Edge::positive(u, v), Edge::negative(v, w)];
    let mut labels = vec![top, 1, 0];
    for i in 1..m {
        edges.push(Edge::positive(u, 2 + i));
        labels.push(top - i as u32);
    }
    let mut roles = named(&["u", "v", "w"]);
    roles.extend(pendant_roles("w", 3, 1, m - 1));
    assemble(FamilyKind::Bistar, m, m + 2, edges, labels, roles)
}

/// Negative triangle `uvw` with `m` positive pendants at `w`;
/// `f(u)=0, f(v)=1, f(w)=2, f(w_i)=2+i`.
pub fn build_st(m: usize) -> Result<ConstructedGraph> {
    require_m(m)?;
    let (u, v, w) = (0, 1, 2);
    let mut edges = vec![
        Edge::negative(u, v),
        Edge::negative(u, w),
        Edge::negative(v, w),
    ];
    let mut labels = vec![0, 1, 2];
    for i in 1..=m {
        edges.push(Edge::positive(w, 2 + i));
        labels.push(2 + i as u32);
    }
    let mut roles = named(&["u", "v", "w"]);
    roles.extend(pendant_roles("w", 3, 1, m));
    assemble(FamilyKind::St, m, m + 3, edges, labels, roles)
}

/// Triangle with negative edge `uw`, positive `uv` and `vw`, and `m`
/// positive pendants at `w`; `f(u)=1, f(v)=2, f(w)=0, f(w_i)=i+2`.
pub fn build_ste(m: usize) -> Result<ConstructedGraph> {
    require_m(m)?;
    let (u, v, w) = (0, 1, 2);
    let mut edges = vec![
        Edge::negative(u, w),
        Edge::positive(u, v),
        Edge::positive(v, w),
    ];
    let mut labels = vec![1, 2, 0];
    for i in 1..=m {
        edges.push(Edge::positive(w, 2 + i));
        labels.push(2 + i as u32);
    }
    let mut roles = named(&["u", "v", "w"]);
    roles.extend(pendant_roles("w", 3, 1, m));
    assemble(FamilyKind::Ste, m, m + 3, edges, labels, roles)
}

/// Negative `K4` on `u, v, w, x` with `m` positive pendants at `x`;
/// `f(u)=0, f(v)=1, f(w)=2, f(x)=4, f(w_i)=4+i`.
pub fn build_k4_pendants(m: usize) -> Result<ConstructedGraph> {
    require_m(m)?;
    let x = 3;
    let mut edges = Vec::with_capacity(m + 6);
    for a in 0..4 {
        for b in a + 1..4 {
            edges.push(Edge::negative(a, b));
        }
    }
    let mut labels = vec![0, 1, 2, 4];
    for i in 1..=m {
        edges.push(Edge::positive(x, 3 + i));
        labels.push(4 + i as u32);
    }
    let mut roles = named(&["u", "v", "w", "x"]);
    roles.extend(pendant_roles("w", 4, 1, m));
    assemble(FamilyKind::K4Pendants, m, m + 4, edges, labels, roles)
}

/// A drawn graph given by its vertex labels (all distinct within a figure)
/// and its edges as pairs of labels.
struct Drawing {
    labels: &'static [u32],
    edges: &'static [(u32, u32, Sign)],
}

const P: Sign = Sign::Positive;
const N: Sign = Sign::Negative;

// Vertex ids follow the order in which the figure declares its vertices.
const FIG1: Drawing = Drawing {
    labels: &[0, 1, 2, 3, 4, 5, 6],
    edges: &[
        (2, 0, N),
        (2, 5, P),
        (2, 3, P),
        (0, 1, N),
        (2, 4, P),
        (2, 6, P),
    ],
};
const FIG2: Drawing = Drawing {
    labels: &[1, 0, 5, 2, 3, 4],
    edges: &[(5, 1, P), (5, 4, P), (5, 2, P), (1, 0, N), (5, 3, P)],
};
const FIG3: Drawing = Drawing {
    labels: &[6, 5, 2, 4, 3, 0, 1],
    edges: &[
        (2, 6, P),
        (2, 0, N),
        (0, 1, N),
        (2, 5, P),
        (2, 3, P),
        (2, 1, N),
        (2, 4, P),
    ],
};
const FIG4: Drawing = Drawing {
    labels: &[6, 5, 0, 4, 3, 2, 1],
    edges: &[
        (0, 6, P),
        (0, 2, P),
        (2, 1, P),
        (0, 5, P),
        (0, 3, P),
        (0, 1, N),
        (0, 4, P),
    ],
};
const FIG5A: Drawing = Drawing {
    labels: &[0, 4, 3, 2, 1],
    edges: &[(0, 2, N), (2, 1, P), (0, 3, N), (0, 1, N), (0, 4, N)],
};
const FIG5B: Drawing = Drawing {
    labels: &[6, 5, 0, 4, 1, 3, 2],
    edges: &[
        (0, 6, P),
        (0, 3, P),
        (3, 2, P),
        (0, 5, P),
        (0, 1, N),
        (0, 2, P),
        (0, 4, P),
    ],
};
const FIG5C: Drawing = Drawing {
    labels: &[1, 2, 0, 4, 3],
    edges: &[(1, 4, P), (4, 3, P), (1, 0, N), (1, 3, P), (0, 2, N)],
};
const FIG6A: Drawing = Drawing {
    labels: &[4, 8, 0, 6, 5, 1, 2, 9, 7],
    edges: &[
        (1, 2, N),
        (0, 1, N),
        (0, 2, N),
        (4, 6, P),
        (0, 4, N),
        (1, 4, N),
        (2, 4, N),
        (4, 8, P),
        (4, 5, P),
        (4, 7, P),
        (4, 9, P),
    ],
};
const FIG6B: Drawing = Drawing {
    labels: &[0, 10, 1, 8, 5, 3, 7, 11, 9],
    edges: &[
        (3, 7, P),
        (1, 3, P),
        (1, 7, P),
        (0, 8, P),
        (1, 0, P),
        (3, 0, P),
        (7, 0, P),
        (0, 10, P),
        (0, 5, P),
        (0, 9, P),
        (0, 11, P),
    ],
};
const FIG7A: Drawing = Drawing {
    labels: &[3, 8, 1, 6, 5, 0, 2, 9, 7],
    edges: &[
        (0, 2, N),
        (1, 0, N),
        (1, 2, P),
        (3, 6, P),
        (1, 3, N),
        (0, 3, N),
        (2, 3, N),
        (3, 8, P),
        (3, 5, P),
        (3, 7, P),
        (3, 9, P),
    ],
};
const FIG7B: Drawing = Drawing {
    labels: &[3, 10, 0, 6, 7, 1, 2, 4, 5, 9, 8],
    edges: &[
        (1, 2, N),
        (0, 1, N),
        (0, 2, N),
        (0, 6, N),
        (0, 3, P),
        (1, 3, P),
        (2, 3, P),
        (3, 10, P),
        (3, 7, P),
        (3, 9, P),
        (0, 4, N),
        (0, 5, N),
        (3, 8, P),
    ],
};
const FIG8A: Drawing = Drawing {
    labels: &[4, 7, 0, 3, 8, 1, 2],
    edges: &[
        (1, 2, P),
        (0, 1, N),
        (0, 2, N),
        (0, 3, N),
        (0, 4, P),
        (1, 4, P),
        (2, 4, P),
        (2, 7, P),
        (2, 8, P),
    ],
};
const FIG8B: Drawing = Drawing {
    labels: &[5, 10, 0, 7, 8, 1, 2, 6, 9],
    edges: &[
        (1, 2, P),
        (0, 1, N),
        (0, 2, P),
        (0, 7, P),
        (0, 5, P),
        (1, 5, P),
        (2, 5, P),
        (0, 10, P),
        (0, 8, P),
        (0, 9, P),
        (0, 6, P),
    ],
};
const FIG9: Drawing = Drawing {
    labels: &[3, 10, 0, 6, 7, 5, 2, 1, 4, 9, 8],
    edges: &[
        (5, 2, N),
        (0, 5, N),
        (0, 2, N),
        (0, 6, N),
        (0, 3, P),
        (5, 3, P),
        (2, 3, P),
        (3, 10, P),
        (3, 7, P),
        (3, 9, P),
        (0, 1, N),
        (0, 4, N),
        (3, 8, P),
    ],
};

fn from_drawing(id: FixtureId, drawing: &Drawing, mode: LabelingMode) -> Result<ConstructedGraph> {
    let id_of = |label: u32| {
        drawing
            .labels
            .iter()
            .position(|&l| l == label)
            .unwrap_or_else(|| panic!("{}: no vertex labeled {label}", id.name()))
    };
    let edges = drawing
        .edges
        .iter()
        .map(|&(a, b, sign)| Edge::new(id_of(a), id_of(b), sign));
    Ok(ConstructedGraph {
        family: ConstructionFamily::Fixture(id),
        graph: SignedGraph::new(drawing.labels.len(), edges)?,
        labeling: VertexLabeling::new(drawing.labels.to_vec()),
        roles: Vec::new(),
        expected_mode: mode,
    })
}

/// Non-divisible sum graph fixture; roles name each vertex by its integer.
fn from_gmn(id: FixtureId, m: u64, n: u64, labels: &[u32]) -> Result<ConstructedGraph> {
    let graph = build_gmn(NdsgParams::new(m, n)?)?;
    Ok(ConstructedGraph {
        family: ConstructionFamily::Fixture(id),
        graph,
        labeling: VertexLabeling::new(labels.to_vec()),
        roles: (0..n as usize)
            .map(|vertex| Role {
                name: (vertex + 1).to_string(),
                vertex,
            })
            .collect(),
        expected_mode: LabelingMode::AdditivelyGraceful,
    })
}

pub fn fixture(id: FixtureId) -> Result<ConstructedGraph> {
    use LabelingMode::*;
    match id {
        FixtureId::Fig1 => from_drawing(id, &FIG1, AdditivelyGracefulSigned),
        FixtureId::Fig2 => from_drawing(id, &FIG2, AdditivelyGracefulSigned),
        FixtureId::Fig3 => from_drawing(id, &FIG3, AdditivelyGracefulSigned),
        FixtureId::Fig4 => from_drawing(id, &FIG4, AdditivelyGracefulSigned),
        FixtureId::Fig5a => from_drawing(id, &FIG5A, AdditivelyGracefulSigned),
        FixtureId::Fig5b => from_drawing(id, &FIG5B, AdditivelyGracefulSigned),
        FixtureId::Fig5c => from_drawing(id, &FIG5C, AdditivelyGracefulSigned),
        FixtureId::Fig6a => from_drawing(id, &FIG6A, AdditivelyGracefulSigned),
        FixtureId::Fig6b => from_drawing(id, &FIG6B, Graceful),
        FixtureId::Fig7a => from_drawing(id, &FIG7A, AdditivelyGracefulSigned),
        FixtureId::Fig7b => from_drawing(id, &FIG7B, AdditivelyGracefulSigned),
        FixtureId::Fig8a => from_drawing(id, &FIG8A, AdditivelyGracefulSigned),
        FixtureId::Fig8b => from_drawing(id, &FIG8B, AdditivelyGracefulSigned),
        FixtureId::Fig9 => from_drawing(id, &FIG9, GracefulSigned),
        // Integers 1, 2, 3: the centre 2 carries label 0.
        FixtureId::Fig10G23 => from_gmn(id, 2, 3, &[1, 0, 2]),
        FixtureId::Fig10G63 => from_gmn(id, 6, 3, &[0, 1, 2]),
        // Integers 1..4 with 2+4 missing; 1 and 3 are the degree-3 vertices.
        FixtureId::Fig10G64 => from_gmn(id, 6, 4, &[0, 2, 3, 1]),
    }
}

pub fn fixture_by_name(name: &str) -> Result<ConstructedGraph> {
    fixture(name.parse()?)
}
