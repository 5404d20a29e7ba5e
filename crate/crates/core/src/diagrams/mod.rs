//! Data model for closed MOY graphs, knotted MOY graphs, and colored link
//! diagrams, plus the diagram surgeries (mirror, orientation reversal, color
//! complement).
//!
//! Crossing convention, fixed once and used everywhere: the four incident
//! arcs sit at corners a1 = lower-left (incoming), a2 = lower-right
//! (incoming), a3 = upper-right (outgoing), a4 = upper-left (outgoing). The
//! strand a1→a3 crosses the strand a2→a4. Sign +1 means the strand ending at
//! the upper-right corner (a1→a3) is the over-strand; −1 means the strand
//! ending at the upper-left corner (a2→a4) is the over-strand.

pub mod braid;
pub mod pd;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use braid::{parse_braid, BraidError, ColoredBraid};
pub use pd::PdDocument;

pub type ArcId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arc {arc}: color {color} exceeds N = {n}")]
    ColorOutOfRange { arc: ArcId, color: usize, n: usize },
    #[error("arc id {0} out of range")]
    BadArcId(ArcId),
    #[error("vertex {vertex}: in-colors sum to {ins}, out-colors to {outs}")]
    FlowViolation {
        vertex: usize,
        ins: usize,
        outs: usize,
    },
    #[error("crossing {crossing}: opposite corners carry different colors")]
    CrossingColorMismatch { crossing: usize },
    #[error("arc {arc} is used {heads} times as a head and {tails} times as a tail")]
    OpenOrOverusedArc {
        arc: ArcId,
        heads: usize,
        tails: usize,
    },
    #[error("vertex {0} has an empty side")]
    EmptyVertexSide(usize),
}

/// Crossing sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.as_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            v => Err(serde::de::Error::custom(format!(
                "sign must be ±1, got {v}"
            ))),
        }
    }
}

/// A MOY vertex with ordered in- and out-edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub ins: Vec<ArcId>,
    pub outs: Vec<ArcId>,
}

/// A crossing; see the module docs for the corner convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub sign: Sign,
    /// [a1, a2, a3, a4] in rotational order.
    pub corners: [ArcId; 4],
}

impl Crossing {
    pub fn a1(&self) -> ArcId {
        self.corners[0]
    }
    pub fn a2(&self) -> ArcId {
        self.corners[1]
    }
    pub fn a3(&self) -> ArcId {
        self.corners[2]
    }
    pub fn a4(&self) -> ArcId {
        self.corners[3]
    }
}

/// A closed knotted MOY graph: colored arcs, flow-conserving vertices, and
/// signed crossings. Colored link diagrams are the vertex-free case; plain
/// MOY graphs are the crossing-free case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnottedMoyGraph {
    n: usize,
    colors: Vec<usize>,
    vertices: Vec<Vertex>,
    crossings: Vec<Crossing>,
}

/// A closed MOY graph (no crossings).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoyGraph {
    inner: KnottedMoyGraph,
}

impl KnottedMoyGraph {
    pub fn new(
        n: usize,
        colors: Vec<usize>,
        vertices: Vec<Vertex>,
        crossings: Vec<Crossing>,
    ) -> Result<Self, DiagramError> {
        let g = KnottedMoyGraph {
            n,
            colors,
            vertices,
            crossings,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let arcs = self.colors.len();
        for (arc, &color) in self.colors.iter().enumerate() {
            if color > self.n {
                return Err(DiagramError::ColorOutOfRange {
                    arc,
                    color,
                    n: self.n,
                });
            }
        }

        let mut heads = vec![0usize; arcs];
        let mut tails = vec![0usize; arcs];
        let mut touch = |id: ArcId, is_head: bool| -> Result<(), DiagramError> {
            if id >= arcs {
                return Err(DiagramError::BadArcId(id));
            }
            if is_head {
                heads[id] += 1;
            } else {
                tails[id] += 1;
            }
            Ok(())
        };
        for (vi, v) in self.vertices.iter().enumerate() {
            if v.ins.is_empty() || v.outs.is_empty() {
                return Err(DiagramError::EmptyVertexSide(vi));
            }
            for &a in &v.ins {
                touch(a, true)?;
            }
            for &a in &v.outs {
                touch(a, false)?;
            }
        }
        for c in &self.crossings {
            touch(c.a1(), true)?;
            touch(c.a2(), true)?;
            touch(c.a3(), false)?;
            touch(c.a4(), false)?;
        }
        for arc in 0..arcs {
            if heads[arc] != tails[arc] || heads[arc] > 1 {
                return Err(DiagramError::OpenOrOverusedArc {
                    arc,
                    heads: heads[arc],
                    tails: tails[arc],
                });
            }
        }

        for (vi, v) in self.vertices.iter().enumerate() {
            let ins: usize = v.ins.iter().map(|&a| self.colors[a]).sum();
            let outs: usize = v.outs.iter().map(|&a| self.colors[a]).sum();
            if ins != outs {
                return Err(DiagramError::FlowViolation {
                    vertex: vi,
                    ins,
                    outs,
                });
            }
        }
        for (ci, c) in self.crossings.iter().enumerate() {
            if self.colors[c.a1()] != self.colors[c.a3()]
                || self.colors[c.a2()] != self.colors[c.a4()]
            {
                return Err(DiagramError::CrossingColorMismatch { crossing: ci });
            }
        }
        Ok(())
    }

    /// A single m-colored circle.
    pub fn circle(n: usize, color: usize) -> Result<Self, DiagramError> {
        KnottedMoyGraph::new(n, vec![color], vec![], vec![])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, arc: ArcId) -> usize {
        self.colors[arc]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn is_link_diagram(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_moy_graph(&self) -> bool {
        self.crossings.is_empty()
    }

    /// View as a plain MOY graph; `None` if there are crossings.
    pub fn as_moy(&self) -> Option<MoyGraph> {
        if self.is_moy_graph() {
            Some(MoyGraph {
                inner: self.clone(),
            })
        } else {
            None
        }
    }

    /// Arc classes forced equal by crossing admissibility (a1 ≡ a3, a2 ≡ a4):
    /// the strands. Returns a representative index per arc.
    pub fn strand_classes(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.arc_count()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for c in &self.crossings {
            for (a, b) in [(c.a1(), c.a3()), (c.a2(), c.a4())] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        (0..self.arc_count())
            .map(|a| find(&mut parent, a))
            .collect()
    }

    /// Link components (for diagrams without vertices): groups of arcs
    /// joined through crossings, ordered by smallest arc id.
    pub fn components(&self) -> Vec<Vec<ArcId>> {
        let classes = self.strand_classes();
        let mut groups: Vec<Vec<ArcId>> = Vec::new();
        let mut seen: Vec<Option<usize>> = vec![None; self.arc_count()];
        for (arc, &root) in classes.iter().enumerate() {
            match seen[root] {
                Some(g) => groups[g].push(arc),
                None => {
                    seen[root] = Some(groups.len());
                    groups.push(vec![arc]);
                }
            }
        }
        groups
    }

    /// Mirror image: every crossing sign flipped.
    pub fn mirror(&self) -> KnottedMoyGraph {
        let mut g = self.clone();
        for c in &mut g.crossings {
            c.sign = c.sign.flip();
        }
        g
    }

    /// Reverses the orientation of every arc. Crossing corners rotate by
    /// half a turn (in-corners become out-corners); the sign is unchanged.
    pub fn reverse_orientation(&self) -> KnottedMoyGraph {
        let mut g = self.clone();
        for v in &mut g.vertices {
            std::mem::swap(&mut v.ins, &mut v.outs);
        }
        for c in &mut g.crossings {
            let [a1, a2, a3, a4] = c.corners;
            c.corners = [a3, a4, a1, a2];
        }
        g
    }

    /// Changes every color k to N − k. Flow conservation is re-validated;
    /// it can fail at vertices with different in- and out-degrees.
    pub fn color_complement(&self) -> Result<KnottedMoyGraph, DiagramError> {
        let colors = self.colors.iter().map(|&c| self.n - c).collect();
        KnottedMoyGraph::new(
            self.n,
            colors,
            self.vertices.clone(),
            self.crossings.clone(),
        )
    }

    /// Disjoint union; arcs of `other` are re-indexed after ours.
    pub fn disjoint_union(&self, other: &KnottedMoyGraph) -> Result<KnottedMoyGraph, DiagramError> {
        assert_eq!(self.n, other.n, "N must agree");
        let offset = self.arc_count();
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| Vertex {
            ins: v.ins.iter().map(|a| a + offset).collect(),
            outs: v.outs.iter().map(|a| a + offset).collect(),
        }));
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            sign: c.sign,
            corners: [
                c.a1() + offset,
                c.a2() + offset,
                c.a3() + offset,
                c.a4() + offset,
            ],
        }));
        KnottedMoyGraph::new(self.n, colors, vertices, crossings)
    }
}

impl MoyGraph {
    pub fn new(n: usize, colors: Vec<usize>, vertices: Vec<Vertex>) -> Result<Self, DiagramError> {
        Ok(MoyGraph {
            inner: KnottedMoyGraph::new(n, colors, vertices, vec![])?,
        })
    }

    pub fn circle(n: usize, color: usize) -> Result<Self, DiagramError> {
        MoyGraph::new(n, vec![color], vec![])
    }

    /// The theta graph: two vertices joined by edges of colors a, b and a+b.
    /// Edge 0 (color a) and edge 1 (color b) run from v1 to v2; edge 2
    /// (color a+b) runs from v2 back to v1.
    pub fn theta(n: usize, a: usize, b: usize) -> Result<Self, DiagramError> {
        MoyGraph::new(
            n,
            vec![a, b, a + b],
            vec![
                Vertex {
                    ins: vec![2],
                    outs: vec![0, 1],
                },
                Vertex {
                    ins: vec![0, 1],
                    outs: vec![2],
                },
            ],
        )
    }

    pub fn graph(&self) -> &KnottedMoyGraph {
        &self.inner
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    pub fn color(&self, arc: ArcId) -> usize {
        self.inner.color(arc)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.inner.vertices
    }

    pub fn disjoint_union(&self, other: &MoyGraph) -> Result<MoyGraph, DiagramError> {
        Ok(MoyGraph {
            inner: self.inner.disjoint_union(&other.inner)?,
        })
    }
}

impl From<MoyGraph> for KnottedMoyGraph {
    fn from(g: MoyGraph) -> KnottedMoyGraph {
        g.inner
    }
}
