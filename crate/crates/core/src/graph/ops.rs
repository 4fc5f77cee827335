use serde::{Deserialize, Serialize};

use super::{CubicMultipole, Edge, EdgeId, End, GraphError, VertexId};

/// I-extension across proper edges `e` and `f`.
///
/// Edge `e = ab` keeps its id as `a v_e`, and `v_e b` is appended; likewise for
/// `f`. The new vertices are `n` and `n + 1` and the edge `v_e v_f` comes last.
pub fn i_extension(g: &CubicMultipole, e: EdgeId, f: EdgeId) -> Result<CubicMultipole, GraphError> {
    if e == f {
        return Err(GraphError::EqualEdges);
    }
    let (a, b) = g.edge(e)?.endpoints().ok_or(GraphError::NotProperEdge(e))?;
    let (c, d) = g.edge(f)?.endpoints().ok_or(GraphError::NotProperEdge(f))?;
    let (ve, vf) = (g.vertex_count(), g.vertex_count() + 1);
    let mut edges = g.edges().to_vec();
    edges[e] = Edge::proper(a, ve);
    edges[f] = Edge::proper(c, vf);
    edges.push(Edge::proper(ve, b));
    edges.push(Edge::proper(vf, d));
    edges.push(Edge::proper(ve, vf));
    CubicMultipole::new(g.vertex_count() + 2, edges)
}

/// Inverse of [`i_extension`]: deletes edge `x = uv` and suppresses `u` and `v`.
///
/// At each suppressed vertex the lower-numbered of its two remaining edges
/// absorbs the other one. Applied to the last edge of an I-extension this
/// restores the original labelled graph exactly.
pub fn reduce_i_extension(g: &CubicMultipole, x: EdgeId) -> Result<CubicMultipole, GraphError> {
    let (u, v) = g.edge(x)?.endpoints().ok_or(GraphError::NotProperEdge(x))?;
    if u == v {
        return Err(GraphError::NotReducible(x, "loop"));
    }
    if g.degree(u) != 3 || g.degree(v) != 3 {
        return Err(GraphError::NotReducible(x, "endpoint not cubic"));
    }
    let mut edges: Vec<Option<Edge>> = g.edges().iter().copied().map(Some).collect();
    edges[x] = None;
    for w in [u, v] {
        let rest: Vec<(EdgeId, usize)> = g.incidences(w).iter().copied().filter(|&(id, _)| id != x).collect();
        if rest.len() != 2 || rest[0].0 == rest[1].0 {
            return Err(GraphError::NotReducible(x, "suppressed vertex carries a loop or parallel edge to x"));
        }
        let (keep, drop) = if rest[0].0 < rest[1].0 { (rest[0], rest[1]) } else { (rest[1], rest[0]) };
        let far = edges[drop.0].ok_or(GraphError::NotReducible(x, "edge already absorbed"))?.ends[1 - drop.1];
        let mut kept = edges[keep.0].ok_or(GraphError::NotReducible(x, "edge already absorbed"))?;
        // `keep.1` is the end at w, unless an earlier suppression moved it.
        let side = if kept.ends[keep.1] == End::Vertex(w) { keep.1 } else { 1 - keep.1 };
        kept.ends[side] = far;
        edges[keep.0] = Some(kept);
        edges[drop.0] = None;
    }
    let mut map = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for (w, slot) in map.iter_mut().enumerate() {
        if w != u && w != v {
            *slot = next;
            next += 1;
        }
    }
    let mut out = Vec::with_capacity(g.edge_count() - 3);
    for e in edges.into_iter().flatten() {
        let ends = e.ends.map(|end| match end {
            End::Vertex(w) => End::Vertex(map[w]),
            s => s,
        });
        if ends.contains(&End::Vertex(usize::MAX)) {
            return Err(GraphError::NotReducible(x, "edge chain closes on a suppressed vertex"));
        }
        out.push(Edge { ends });
    }
    CubicMultipole::new(next, out)
}

/// How a 4-pole is cut out of a cubic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourPoleMode {
    /// Remove the adjacent vertices `u`, `v` and the edge between them.
    AdjacentVertices(VertexId, VertexId),
    /// Sever the non-adjacent edges `e` and `f`.
    NonadjacentEdges(EdgeId, EdgeId),
}

impl FourPoleMode {
    /// Vertices lost by the extraction.
    pub fn removed_vertices(&self) -> usize {
        match self {
            FourPoleMode::AdjacentVertices(..) => 2,
            FourPoleMode::NonadjacentEdges(..) => 0,
        }
    }
}

/// Cuts a 4-pole out of a simple cubic graph.
///
/// Semiedge order: in vertex mode, the two other neighbours of `u` ascending
/// and then those of `v`; in edge mode, with `e` the edge whose sorted endpoint
/// pair is smaller, `(e low, e high, f low, f high)`.
pub fn extract_four_pole(g: &CubicMultipole, mode: FourPoleMode) -> Result<CubicMultipole, GraphError> {
    if !g.is_closed() {
        return Err(GraphError::HasSemiedges);
    }
    g.require_cubic()?;
    match mode {
        FourPoleMode::AdjacentVertices(u, v) => remove_adjacent_vertices(g, u, v),
        FourPoleMode::NonadjacentEdges(e, f) => sever_edges(g, e, f),
    }
}

fn remove_adjacent_vertices(g: &CubicMultipole, u: VertexId, v: VertexId) -> Result<CubicMultipole, GraphError> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: n });
        }
    }
    let uv: Vec<EdgeId> = g.edges_between(u, v).collect();
    if u == v || uv.is_empty() {
        return Err(GraphError::VerticesNotAdjacent(u, v));
    }
    if uv.len() > 1 {
        return Err(GraphError::NotSimple);
    }
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for (w, slot) in map.iter_mut().enumerate() {
        if w != u && w != v {
            *slot = next;
            next += 1;
        }
    }
    // (old far vertex, edge id) for each of the four edges leaving {u, v}.
    let mut outgoing = Vec::with_capacity(4);
    for w in [u, v] {
        let mut here: Vec<(VertexId, EdgeId)> = g
            .incidences(w)
            .iter()
            .filter(|&&(e, _)| e != uv[0])
            .map(|&(e, side)| (g.far_vertex(e, side).expect("closed graph"), e))
            .collect();
        if here.iter().any(|&(x, _)| x == u || x == v) {
            return Err(GraphError::NotSimple);
        }
        here.sort_unstable();
        outgoing.extend(here);
    }
    let mut slot_of_edge = vec![usize::MAX; g.edge_count()];
    for (slot, &(_, e)) in outgoing.iter().enumerate() {
        slot_of_edge[e] = slot;
    }
    let mut edges = Vec::with_capacity(g.edge_count() - 1);
    for (id, e) in g.edges().iter().enumerate() {
        if id == uv[0] {
            continue;
        }
        if slot_of_edge[id] != usize::MAX {
            let far = outgoing[slot_of_edge[id]].0;
            edges.push(Edge::dangling(map[far], slot_of_edge[id]));
        } else {
            let (a, b) = e.endpoints().expect("closed graph");
            edges.push(Edge::proper(map[a], map[b]));
        }
    }
    CubicMultipole::new(n - 2, edges)
}

fn sever_edges(g: &CubicMultipole, e: EdgeId, f: EdgeId) -> Result<CubicMultipole, GraphError> {
    if e == f {
        return Err(GraphError::EqualEdges);
    }
    let sorted = |id: EdgeId| -> Result<(VertexId, VertexId), GraphError> {
        let (a, b) = g.edge(id)?.endpoints().ok_or(GraphError::NotProperEdge(id))?;
        Ok((a.min(b), a.max(b)))
    };
    let (pe, pf) = (sorted(e)?, sorted(f)?);
    if g.edges_adjacent(e, f) {
        return Err(GraphError::AdjacentEdgesInEdgeMode(e, f));
    }
    let ((e, pe), (f, pf)) = if (pe, e) <= (pf, f) { ((e, pe), (f, pf)) } else { ((f, pf), (e, pe)) };
    let mut edges = g.edges().to_vec();
    edges[e] = Edge::dangling(pe.0, 0);
    edges[f] = Edge::dangling(pf.0, 2);
    edges.push(Edge::dangling(pe.1, 1));
    edges.push(Edge::dangling(pf.1, 3));
    CubicMultipole::new(g.vertex_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_junction, isolated_edge_pair, k4, petersen, JunctionPairing};

    #[test]
    fn i_extension_adds_two_vertices() {
        let g = k4();
        let h = i_extension(&g, 0, 5).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert!(h.validate().cubic && h.validate().simple);
        assert_eq!(i_extension(&g, 2, 2).unwrap_err(), GraphError::EqualEdges);
        assert_eq!(i_extension(&g, 2, 60).unwrap_err(), GraphError::EdgeNotFound(60));
    }

    #[test]
    fn reduction_inverts_extension() {
        let p = petersen();
        let h = i_extension(&p, 0, 7).unwrap();
        let back = reduce_i_extension(&h, h.edge_count() - 1).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn vertex_mode_on_petersen() {
        let p = petersen();
        let i = extract_four_pole(&p, FourPoleMode::AdjacentVertices(0, 1)).unwrap();
        assert_eq!(i.vertex_count(), 8);
        assert_eq!(i.semiedge_count(), 4);
        assert!(i.validate().cubic);
        // 0's other neighbours are 4 and 5; 1's are 2 and 6; relabelled by removing 0 and 1.
        let at: Vec<_> = (0..4).map(|s| i.semiedge_vertex(s).unwrap()).collect();
        assert_eq!(at, vec![4 - 2, 5 - 2, 2 - 2, 6 - 2]);
        assert_eq!(extract_four_pole(&p, FourPoleMode::AdjacentVertices(0, 2)).unwrap_err(), GraphError::VerticesNotAdjacent(0, 2));
    }

    #[test]
    fn edge_mode_round_trip() {
        let p = petersen();
        // edges 0 = (0,1) and 2 = (2,3) are non-adjacent
        let h = extract_four_pole(&p, FourPoleMode::NonadjacentEdges(2, 0)).unwrap();
        assert_eq!(h.vertex_count(), 10);
        let at: Vec<_> = (0..4).map(|s| h.semiedge_vertex(s).unwrap()).collect();
        assert_eq!(at, vec![0, 1, 2, 3]);
        let back = complete_junction(&h, &isolated_edge_pair(), &JunctionPairing::identity(4)).unwrap();
        assert_eq!(back.sorted_pairs(), p.sorted_pairs());
        assert_eq!(extract_four_pole(&p, FourPoleMode::NonadjacentEdges(0, 1)).unwrap_err(), GraphError::AdjacentEdgesInEdgeMode(0, 1));
    }
}
