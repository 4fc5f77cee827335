//! Cubic multipoles: graphs whose edges may have free ends (semiedges).
//!
//! A [`CubicMultipole`] stores a vertex count and an ordered edge list. Each
//! edge has two ends; an end is either attached to a vertex or is a semiedge
//! carrying a slot number. Slots `0..k` give the fixed semiedge order of a
//! k-pole. A multipole with no semiedges is an ordinary cubic graph.

mod fixtures;
mod graph6;
mod junction;
mod ops;

pub use fixtures::*;
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use junction::{close_with_two_vertices, complete_junction, join_within, partial_junction, JunctionPairing};
pub use ops::{extract_four_pole, i_extension, reduce_i_extension, FourPoleMode};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Largest order for which adjacency is kept as one `u64` bit row per vertex.
pub const BITROW_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum End {
    Vertex(VertexId),
    Semiedge(usize),
}

impl End {
    pub fn vertex(self) -> Option<VertexId> {
        match self {
            End::Vertex(v) => Some(v),
            End::Semiedge(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub ends: [End; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Proper,
    Dangling,
    Isolated,
}

impl Edge {
    pub fn proper(u: VertexId, v: VertexId) -> Self {
        Edge { ends: [End::Vertex(u), End::Vertex(v)] }
    }

    pub fn dangling(u: VertexId, slot: usize) -> Self {
        Edge { ends: [End::Vertex(u), End::Semiedge(slot)] }
    }

    pub fn isolated(s: usize, t: usize) -> Self {
        Edge { ends: [End::Semiedge(s), End::Semiedge(t)] }
    }

    pub fn kind(&self) -> EdgeKind {
        match (self.ends[0], self.ends[1]) {
            (End::Vertex(_), End::Vertex(_)) => EdgeKind::Proper,
            (End::Semiedge(_), End::Semiedge(_)) => EdgeKind::Isolated,
            _ => EdgeKind::Dangling,
        }
    }

    /// Endpoints of a proper edge.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        match (self.ends[0], self.ends[1]) {
            (End::Vertex(u), End::Vertex(v)) => Some((u, v)),
            _ => None,
        }
    }

    pub fn is_loop(&self) -> bool {
        matches!(self.endpoints(), Some((u, v)) if u == v)
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.ends.contains(&End::Vertex(v))
    }

    /// The end opposite to end index `side`.
    pub fn other(&self, side: usize) -> End {
        self.ends[1 - side]
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("semiedge slots must be exactly 0..{count}, each used once")]
    BadSemiedgeSlots { count: usize },
    #[error("edge {0} not found")]
    EdgeNotFound(EdgeId),
    #[error("edge {0} is not a proper edge")]
    NotProperEdge(EdgeId),
    #[error("the two edges are equal")]
    EqualEdges,
    #[error("vertices {0} and {1} are not adjacent")]
    VerticesNotAdjacent(VertexId, VertexId),
    #[error("edges {0} and {1} share a vertex")]
    AdjacentEdgesInEdgeMode(EdgeId, EdgeId),
    #[error("operation requires a cubic multipole: {0}")]
    NotCubic(String),
    #[error("operation requires a simple graph")]
    NotSimple,
    #[error("operation requires a graph without semiedges")]
    HasSemiedges,
    #[error("expected a {expected}-pole, found {found} semiedges")]
    SemiedgeCountMismatch { expected: usize, found: usize },
    #[error("complete junction needs every semiedge of both sides paired")]
    IncompletePairing,
    #[error("junction pairing is empty")]
    EmptyPairing,
    #[error("semiedge slot {0} is used twice in the pairing")]
    OverlappingSlots(usize),
    #[error("semiedge slot {0} does not exist")]
    SlotOutOfRange(usize),
    #[error("junction closes a circuit that contains no vertex")]
    VertexlessCircuit,
    #[error("edge {0} cannot be reduced: {1}")]
    NotReducible(EdgeId, &'static str),
}

/// Incidence of a vertex: the edge and which of its two ends sits at the vertex.
pub type Incidence = (EdgeId, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicMultipole {
    vertex_count: usize,
    edges: Vec<Edge>,
    semiedges: Vec<Incidence>,
    incidence: Vec<SmallVec<[Incidence; 3]>>,
    rows: Vec<u64>,
}

impl CubicMultipole {
    /// Builds a multipole, checking vertex ranges and that semiedge slots are
    /// exactly `0..k`. Cubicity is not enforced here; see [`Self::validate`].
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut incidence: Vec<SmallVec<[Incidence; 3]>> = vec![SmallVec::new(); vertex_count];
        let mut slots: Vec<(usize, Incidence)> = Vec::new();
        for (id, edge) in edges.iter().enumerate() {
            for (side, end) in edge.ends.iter().enumerate() {
                match *end {
                    End::Vertex(v) => {
                        if v >= vertex_count {
                            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count });
                        }
                        incidence[v].push((id, side));
                    }
                    End::Semiedge(s) => slots.push((s, (id, side))),
                }
            }
        }
        slots.sort_unstable();
        let count = slots.len();
        if slots.iter().enumerate().any(|(i, (s, _))| *s != i) {
            return Err(GraphError::BadSemiedgeSlots { count });
        }
        let semiedges = slots.into_iter().map(|(_, inc)| inc).collect();
        let mut rows = Vec::new();
        if vertex_count <= BITROW_LIMIT {
            rows = vec![0u64; vertex_count];
            for edge in &edges {
                if let Some((u, v)) = edge.endpoints() {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
        }
        Ok(CubicMultipole { vertex_count, edges, semiedges, incidence, rows })
    }

    /// A closed graph from an edge list of vertex pairs.
    pub fn from_pairs(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::new(vertex_count, pairs.iter().map(|&(u, v)| Edge::proper(u, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge, GraphError> {
        self.edges.get(id).ok_or(GraphError::EdgeNotFound(id))
    }

    /// Number of semiedges, i.e. the `k` of a k-pole.
    pub fn semiedge_count(&self) -> usize {
        self.semiedges.len()
    }

    /// Semiedges in slot order, as (edge, end index).
    pub fn semiedges(&self) -> &[Incidence] {
        &self.semiedges
    }

    pub fn is_closed(&self) -> bool {
        self.semiedges.is_empty()
    }

    pub fn incidences(&self, v: VertexId) -> &[Incidence] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// Neighbours of `v` along proper edges, with multiplicity, in incidence order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v].iter().filter_map(move |&(e, side)| self.edges[e].other(side).vertex())
    }

    /// Vertex at the far end of edge `e` seen from end `side`, if any.
    pub fn far_vertex(&self, e: EdgeId, side: usize) -> Option<VertexId> {
        self.edges[e].other(side).vertex()
    }

    /// Vertex carrying semiedge `slot`, if the semiedge belongs to a dangling edge.
    pub fn semiedge_vertex(&self, slot: usize) -> Option<VertexId> {
        let (e, side) = self.semiedges[slot];
        self.edges[e].other(side).vertex()
    }

    /// Adjacency bit rows (proper edges only); empty when the order exceeds [`BITROW_LIMIT`].
    pub fn adjacency_rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        if !self.rows.is_empty() {
            return self.rows[u] >> v & 1 == 1;
        }
        self.neighbors(u).any(|w| w == v)
    }

    /// Proper edges joining `u` and `v`.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidence[u].iter().filter(move |&&(e, side)| self.edges[e].other(side) == End::Vertex(v)).map(|&(e, _)| e)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges_between(u, v).next()
    }

    /// Two edges are adjacent when they share a vertex.
    pub fn edges_adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = (&self.edges[e], &self.edges[f]);
        a.ends.iter().filter_map(|x| x.vertex()).any(|v| b.touches(v))
    }

    pub fn proper_edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().enumerate().filter_map(|(i, e)| e.endpoints().map(|(u, v)| (i, u, v)))
    }

    pub fn validate(&self) -> ValidationReport {
        let degree_violations: Vec<(VertexId, usize)> =
            (0..self.vertex_count).filter(|&v| self.degree(v) != 3).map(|v| (v, self.degree(v))).collect();
        let loops = self.edges.iter().filter(|e| e.is_loop()).count();
        let mut pairs: Vec<(VertexId, VertexId)> =
            self.proper_edges().filter(|&(_, u, v)| u != v).map(|(_, u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        let multi_edges = pairs.windows(2).filter(|w| w[0] == w[1]).count();
        ValidationReport {
            vertex_count: self.vertex_count,
            semiedge_count: self.semiedge_count(),
            cubic: degree_violations.is_empty(),
            degree_violations,
            loops,
            multi_edges,
            simple: loops == 0 && multi_edges == 0,
            connected: self.is_connected(),
        }
    }

    /// Connectivity of the vertex set along proper edges (vacuously true without vertices).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn is_simple(&self) -> bool {
        let r = self.validate();
        r.simple
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 3)
    }

    pub(crate) fn require_cubic(&self) -> Result<(), GraphError> {
        match (0..self.vertex_count).find(|&v| self.degree(v) != 3) {
            None => Ok(()),
            Some(v) => Err(GraphError::NotCubic(format!("vertex {v} has degree {}", self.degree(v)))),
        }
    }

    pub(crate) fn require_closed_simple(&self) -> Result<(), GraphError> {
        if !self.is_closed() {
            return Err(GraphError::HasSemiedges);
        }
        if !self.is_simple() {
            return Err(GraphError::NotSimple);
        }
        Ok(())
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. Edge order is kept.
    pub fn relabel(&self, perm: &[VertexId]) -> CubicMultipole {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                ends: e.ends.map(|end| match end {
                    End::Vertex(v) => End::Vertex(perm[v]),
                    s => s,
                }),
            })
            .collect();
        CubicMultipole::new(self.vertex_count, edges).expect("relabelling preserves validity")
    }

    /// Vertex pairs of the proper edges, normalised to `u < v` and sorted.
    pub fn sorted_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self.proper_edges().map(|(_, u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs
    }

    /// Renumbers semiedge slots: slot `s` becomes `order.iter().position(s)`.
    pub fn with_semiedge_order(&self, order: &[usize]) -> Result<CubicMultipole, GraphError> {
        let k = self.semiedge_count();
        let mut new_slot = vec![usize::MAX; k];
        if order.len() != k {
            return Err(GraphError::SemiedgeCountMismatch { expected: k, found: order.len() });
        }
        for (pos, &s) in order.iter().enumerate() {
            if s >= k {
                return Err(GraphError::SlotOutOfRange(s));
            }
            if new_slot[s] != usize::MAX {
                return Err(GraphError::OverlappingSlots(s));
            }
            new_slot[s] = pos;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                ends: e.ends.map(|end| match end {
                    End::Semiedge(s) => End::Semiedge(new_slot[s]),
                    v => v,
                }),
            })
            .collect();
        CubicMultipole::new(self.vertex_count, edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub semiedge_count: usize,
    pub cubic: bool,
    pub degree_violations: Vec<(VertexId, usize)>,
    pub loops: usize,
    pub multi_edges: usize,
    pub simple: bool,
    pub connected: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.cubic
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_valid_closed_simple() {
        let r = petersen().validate();
        assert!(r.is_valid());
        assert_eq!(r.semiedge_count, 0);
        assert!(r.connected && r.simple);
    }

    #[test]
    fn two_isolated_edges_form_a_valid_four_pole() {
        let m = isolated_edge_pair();
        let r = m.validate();
        assert!(r.is_valid());
        assert_eq!((r.semiedge_count, r.vertex_count), (4, 0));
    }

    #[test]
    fn vertex_with_two_ends_is_not_cubic() {
        let m = CubicMultipole::new(2, vec![Edge::proper(0, 1), Edge::proper(0, 1), Edge::dangling(1, 0)]).unwrap();
        let r = m.validate();
        assert!(!r.is_valid());
        assert_eq!(r.degree_violations, vec![(0, 2)]);
        assert_eq!(r.multi_edges, 1);
    }

    #[test]
    fn slots_must_be_contiguous() {
        let err = CubicMultipole::new(1, vec![Edge::dangling(0, 0), Edge::dangling(0, 2), Edge::dangling(0, 1), Edge::dangling(0, 4)]);
        assert_eq!(err.unwrap_err(), GraphError::BadSemiedgeSlots { count: 4 });
        assert!(CubicMultipole::new(1, vec![Edge::proper(0, 3)]).is_err());
    }

    #[test]
    fn semiedge_reordering() {
        let m = single_vertex_pole();
        let r = m.with_semiedge_order(&[2, 0, 1]).unwrap();
        assert_eq!(r.semiedges()[0], m.semiedges()[2]);
        assert!(m.with_semiedge_order(&[0, 0, 1]).is_err());
    }
}
