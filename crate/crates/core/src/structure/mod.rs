//! Girth, cycle rank, bridges, cyclic connectivity, cycle-separating cuts,
//! fragments and atoms.

mod comparable;
mod cuts;

pub use comparable::{check_comparable_two_cuts, ComparabilityReport, TwoCut};
pub use cuts::{
    atoms, bonds, cycle_separating_cuts, cyclic_connectivity, is_cyclically_k_edge_connected, CutReport, CyclicConnectivity, Fragment,
    ZetaWitness,
};

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{CubicMultipole, EdgeId, End, GraphError, VertexId, BITROW_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph has no cycle")]
    AcyclicInput,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {0} exceeds the supported limit of {BITROW_LIMIT} vertices")]
    OrderTooLarge(usize),
    #[error("edge set is not a cycle-separating cut")]
    NotCycleSeparating,
    #[error("precondition cannot be verified: {0}")]
    PreconditionUnverifiable(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureRecord {
    pub girth: usize,
    pub cycle_rank: usize,
    pub cyclic_connectivity: usize,
}

pub fn structure_record(g: &CubicMultipole) -> Result<StructureRecord, StructureError> {
    Ok(StructureRecord { girth: girth(g)?, cycle_rank: cycle_rank(g), cyclic_connectivity: cyclic_connectivity(g)?.zeta })
}

/// Length of a shortest cycle over proper edges (loops count 1, parallel edges 2).
pub fn girth(g: &CubicMultipole) -> Result<usize, StructureError> {
    if g.edges().iter().any(|e| e.is_loop()) {
        return Ok(1);
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for &(e, side) in g.incidences(v) {
                let Some(w) = g.far_vertex(e, side) else { continue };
                if e == parent[v] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(StructureError::AcyclicInput)
    } else {
        Ok(best)
    }
}

/// `|E| - |V| + c` over proper edges, where `c` is the number of components.
pub fn cycle_rank(g: &CubicMultipole) -> usize {
    let proper = g.proper_edges().count();
    proper + components(g).len() - g.vertex_count()
}

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
pub fn components(g: &CubicMultipole) -> Vec<Vec<VertexId>> {
    components_avoiding(g, &[])
}

/// Components of `g` with the given edges deleted.
pub(crate) fn components_avoiding(g: &CubicMultipole, removed: &[EdgeId]) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &(e, side) in g.incidences(v) {
                if removed.contains(&e) {
                    continue;
                }
                if let Some(w) = g.far_vertex(e, side) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

struct LowLink {
    bridges: Vec<EdgeId>,
    articulation: Vec<bool>,
}

fn low_link(g: &CubicMultipole) -> LowLink {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut articulation = vec![false; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter, next incidence index)
        let mut stack: Vec<(VertexId, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(&mut (v, via, ref mut next)) = stack.last_mut() {
            let inc = g.incidences(v);
            if *next < inc.len() {
                let (e, side) = inc[*next];
                *next += 1;
                if e == via {
                    continue;
                }
                let Some(w) = g.far_vertex(e, side) else { continue };
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push(via);
                    }
                    if p != root && low[v] >= disc[p] {
                        articulation[p] = true;
                    }
                }
            }
        }
        articulation[root] = root_children > 1;
    }
    bridges.sort_unstable();
    LowLink { bridges, articulation }
}

/// Proper edges whose removal disconnects their component, ascending.
pub fn bridges(g: &CubicMultipole) -> Vec<EdgeId> {
    low_link(g).bridges
}

pub fn is_bridgeless(g: &CubicMultipole) -> bool {
    bridges(g).is_empty()
}

/// Connected with no cut vertex (and at least three vertices, or two joined by parallel edges).
pub fn is_two_connected(g: &CubicMultipole) -> bool {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return false;
    }
    if n == 2 {
        return g.edges_between(0, 1).count() >= 2;
    }
    !low_link(g).articulation.iter().any(|&a| a)
}

pub(crate) fn require_closed_cubic_connected(g: &CubicMultipole) -> Result<(), StructureError> {
    if !g.is_closed() {
        return Err(GraphError::HasSemiedges.into());
    }
    g.require_cubic()?;
    if g.vertex_count() > BITROW_LIMIT {
        return Err(StructureError::OrderTooLarge(g.vertex_count()));
    }
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    Ok(())
}

/// Number of edges from `v` to vertices in `mask` (loops excluded).
pub(crate) fn edges_into(g: &CubicMultipole, v: VertexId, mask: u64) -> usize {
    g.incidences(v)
        .iter()
        .filter(|&&(e, side)| matches!(g.edges()[e].ends[1 - side], End::Vertex(w) if w != v && mask >> w & 1 == 1))
        .count()
}

/// Whether the vertices in `mask` induce a connected subgraph.
pub(crate) fn mask_connected(rows: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut seen = 1u64 << mask.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= mask & !seen;
        seen |= next;
        frontier = next;
    }
    seen == mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{c4_pole, cube_q3, flower_snark, k33, k4, petersen, prism};

    #[test]
    fn girths() {
        assert_eq!(girth(&k4()).unwrap(), 3);
        assert_eq!(girth(&k33()).unwrap(), 4);
        assert_eq!(girth(&petersen()).unwrap(), 5);
        assert_eq!(girth(&cube_q3()).unwrap(), 4);
        assert_eq!(girth(&flower_snark(7)).unwrap(), 6);
        assert_eq!(girth(&prism(3)).unwrap(), 3);
        let theta = CubicMultipole::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(girth(&theta).unwrap(), 2);
    }

    #[test]
    fn acyclic_is_an_error() {
        let pole = crate::graph::single_vertex_pole();
        assert_eq!(girth(&pole).unwrap_err(), StructureError::AcyclicInput);
    }

    #[test]
    fn ranks() {
        assert_eq!(cycle_rank(&k4()), 3);
        assert_eq!(cycle_rank(&petersen()), 6);
        assert_eq!(cycle_rank(&c4_pole()), 1);
    }

    #[test]
    fn bridges_and_two_connectivity() {
        assert!(bridges(&petersen()).is_empty());
        assert!(is_two_connected(&petersen()));
        // two K4-minus-an-edge blocks joined by a bridge
        let g = CubicMultipole::from_pairs(
            8,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (3, 7)],
        )
        .unwrap();
        assert!(g.is_cubic());
        assert_eq!(bridges(&g), Vec::<EdgeId>::new());
        let h = CubicMultipole::from_pairs(
            10,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (8, 9), (9, 9)],
        )
        .unwrap();
        assert_eq!(bridges(&h), vec![7, 13]);
        assert!(!is_two_connected(&h));
        assert!(is_two_connected(&c4_pole()));
    }

    #[test]
    fn connected_masks() {
        let p = petersen();
        assert!(mask_connected(p.adjacency_rows(), 0b11111));
        assert!(!mask_connected(p.adjacency_rows(), 0b101));
    }
}
