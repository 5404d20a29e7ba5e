//! Colored PD-code JSON interchange format.
//!
//! ```json
//! {
//!   "N": 3,
//!   "arcs": [{"id": 0, "color": 1}, ...],
//!   "crossings": [{"sign": 1, "a1": 0, "a2": 1, "a3": 2, "a4": 3}, ...],
//!   "vertices": [{"in": [0, 1], "out": [2]}, ...]
//! }
//! ```
//!
//! Arc ids are stable: emission lists arcs sorted by id, and a document
//! emitted by this module re-parses and re-emits byte-identically.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagrams::{ArcId, Crossing, DiagramError, KnottedMoyGraph, Sign, Vertex};

#[derive(Debug, Error)]
pub enum PdError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate arc id {0}")]
    DuplicateArc(usize),
    #[error("unknown arc id {0}")]
    UnknownArc(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PdArc {
    pub id: usize,
    pub color: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PdCrossing {
    pub sign: Sign,
    pub a1: usize,
    pub a2: usize,
    pub a3: usize,
    pub a4: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PdVertex {
    #[serde(rename = "in")]
    pub ins: Vec<usize>,
    #[serde(rename = "out")]
    pub outs: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PdDocument {
    #[serde(rename = "N")]
    pub n: usize,
    pub arcs: Vec<PdArc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossings: Vec<PdCrossing>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<PdVertex>,
}

impl PdDocument {
    pub fn parse(text: &str) -> Result<PdDocument, PdError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical emission: arcs sorted by id, fixed field order, two-space
    /// indentation. Re-emitting a parsed emission is byte-identical.
    pub fn emit(&self) -> String {
        let mut doc = self.clone();
        doc.arcs.sort_by_key(|a| a.id);
        serde_json::to_string_pretty(&doc).expect("PD document serializes")
    }

    /// Converts to the internal graph. Arc ids may be arbitrary distinct
    /// integers; internal indices follow ascending id order.
    pub fn to_graph(&self) -> Result<(KnottedMoyGraph, Vec<usize>), PdError> {
        let mut ids: Vec<usize> = self.arcs.iter().map(|a| a.id).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(PdError::DuplicateArc(w[0]));
        }
        let index_of = |id: usize| -> Result<ArcId, PdError> {
            ids.binary_search(&id).map_err(|_| PdError::UnknownArc(id))
        };
        let mut colors = vec![0usize; ids.len()];
        for arc in &self.arcs {
            colors[index_of(arc.id)?] = arc.color;
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                Ok(Crossing {
                    sign: c.sign,
                    corners: [
                        index_of(c.a1)?,
                        index_of(c.a2)?,
                        index_of(c.a3)?,
                        index_of(c.a4)?,
                    ],
                })
            })
            .collect::<Result<Vec<_>, PdError>>()?;
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                Ok(Vertex {
                    ins: v
                        .ins
                        .iter()
                        .map(|&id| index_of(id))
                        .collect::<Result<_, _>>()?,
                    outs: v
                        .outs
                        .iter()
                        .map(|&id| index_of(id))
                        .collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<Vec<_>, PdError>>()?;
        let graph = KnottedMoyGraph::new(self.n, colors, vertices, crossings)?;
        Ok((graph, ids))
    }

    /// Builds a document from a graph, using arc indices as ids.
    pub fn from_graph(graph: &KnottedMoyGraph) -> PdDocument {
        PdDocument {
            n: graph.n(),
            arcs: (0..graph.arc_count())
                .map(|id| PdArc {
                    id,
                    color: graph.color(id),
                })
                .collect(),
            crossings: graph
                .crossings()
                .iter()
                .map(|c| PdCrossing {
                    sign: c.sign,
                    a1: c.a1(),
                    a2: c.a2(),
                    a3: c.a3(),
                    a4: c.a4(),
                })
                .collect(),
            vertices: graph
                .vertices()
                .iter()
                .map(|v| PdVertex {
                    ins: v.ins.clone(),
                    outs: v.outs.clone(),
                })
                .collect(),
        }
    }
}
