//! Junctions of multipoles.
//!
//! Joining two semiedges `s` and `t` fuses the edges carrying them into one
//! edge. Chains through isolated edges collapse until both ends reach a
//! vertex or an unjoined semiedge.

use super::{CubicMultipole, Edge, End, GraphError};

/// Pairs of semiedge slots `(slot in M, slot in N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JunctionPairing {
    pairs: Vec<(usize, usize)>,
}

impl JunctionPairing {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut left: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let mut right: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        for side in [&mut left, &mut right] {
            side.sort_unstable();
            if let Some(w) = side.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::OverlappingSlots(w[0]));
            }
        }
        Ok(JunctionPairing { pairs })
    }

    /// `s_i * t_i` for every `i < k`.
    pub fn identity(k: usize) -> Self {
        JunctionPairing { pairs: (0..k).map(|i| (i, i)).collect() }
    }

    /// `s_i * t_{perm[i]}`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self, GraphError> {
        Self::new(perm.iter().copied().enumerate().collect())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `M * N` over all semiedges; the result is a closed graph.
pub fn complete_junction(m: &CubicMultipole, n: &CubicMultipole, pairing: &JunctionPairing) -> Result<CubicMultipole, GraphError> {
    if m.semiedge_count() != n.semiedge_count() {
        return Err(GraphError::SemiedgeCountMismatch { expected: m.semiedge_count(), found: n.semiedge_count() });
    }
    if pairing.len() != m.semiedge_count() {
        return Err(GraphError::IncompletePairing);
    }
    junction(m, n, pairing)
}

/// Junction on a subset of semiedges. Unjoined semiedges of `m` come first,
/// then those of `n`, each in original order.
pub fn partial_junction(m: &CubicMultipole, n: &CubicMultipole, pairing: &JunctionPairing) -> Result<CubicMultipole, GraphError> {
    if pairing.is_empty() {
        return Err(GraphError::EmptyPairing);
    }
    junction(m, n, pairing)
}

fn junction(m: &CubicMultipole, n: &CubicMultipole, pairing: &JunctionPairing) -> Result<CubicMultipole, GraphError> {
    let km = m.semiedge_count();
    for &(s, t) in pairing.pairs() {
        if s >= km {
            return Err(GraphError::SlotOutOfRange(s));
        }
        if t >= n.semiedge_count() {
            return Err(GraphError::SlotOutOfRange(t));
        }
    }
    // Put both sides into one slot space: m keeps its slots, n's are shifted by km.
    let shift = m.vertex_count();
    let mut edges = m.edges().to_vec();
    edges.extend(n.edges().iter().map(|e| Edge {
        ends: e.ends.map(|end| match end {
            End::Vertex(v) => End::Vertex(v + shift),
            End::Semiedge(s) => End::Semiedge(s + km),
        }),
    }));
    let total_slots = km + n.semiedge_count();
    let mut partner = vec![usize::MAX; total_slots];
    for &(s, t) in pairing.pairs() {
        partner[s] = t + km;
        partner[t + km] = s;
    }
    fuse(m.vertex_count() + n.vertex_count(), edges, &partner)
}

/// Joins semiedges of one multipole pairwise, e.g. the couples of a heterochromatic 4-pole.
pub fn join_within(m: &CubicMultipole, pairs: &[(usize, usize)]) -> Result<CubicMultipole, GraphError> {
    let k = m.semiedge_count();
    let mut partner = vec![usize::MAX; k];
    for &(s, t) in pairs {
        for x in [s, t] {
            if x >= k {
                return Err(GraphError::SlotOutOfRange(x));
            }
            if partner[x] != usize::MAX || s == t {
                return Err(GraphError::OverlappingSlots(x));
            }
        }
        partner[s] = t;
        partner[t] = s;
    }
    fuse(m.vertex_count(), m.edges().to_vec(), &partner)
}

/// Closes a 4-pole with two new adjacent vertices: the first new vertex takes the
/// semiedges of `first`, the second those of `second`.
pub fn close_with_two_vertices(m: &CubicMultipole, first: [usize; 2], second: [usize; 2]) -> Result<CubicMultipole, GraphError> {
    let k = m.semiedge_count();
    if k != 4 {
        return Err(GraphError::SemiedgeCountMismatch { expected: 4, found: k });
    }
    let mut seen = [false; 4];
    for s in first.into_iter().chain(second) {
        if s >= 4 {
            return Err(GraphError::SlotOutOfRange(s));
        }
        if seen[s] {
            return Err(GraphError::OverlappingSlots(s));
        }
        seen[s] = true;
    }
    let (x1, x2) = (m.vertex_count(), m.vertex_count() + 1);
    let gadget = CubicMultipole::new(
        x2 + 1,
        vec![
            Edge::proper(x1, x2),
            Edge::dangling(x1, first[0]),
            Edge::dangling(x1, first[1]),
            Edge::dangling(x2, second[0]),
            Edge::dangling(x2, second[1]),
        ],
    )?;
    // Keep the original vertices at their ids: glue through a shared id space.
    let mut edges = m.edges().to_vec();
    edges.extend(gadget.edges().iter().map(|e| Edge {
        ends: e.ends.map(|end| match end {
            End::Semiedge(s) => End::Semiedge(s + 4),
            v => v,
        }),
    }));
    let mut partner = vec![usize::MAX; 8];
    for s in 0..4 {
        partner[s] = s + 4;
        partner[s + 4] = s;
    }
    fuse(x2 + 1, edges, &partner)
}

/// Collapses edge chains along `partner` links (slot -> slot, `usize::MAX` if unjoined).
/// Unjoined slots are renumbered in increasing order of their old slot.
fn fuse(vertex_count: usize, pieces: Vec<Edge>, partner: &[usize]) -> Result<CubicMultipole, GraphError> {
    let slots = partner.len();
    let mut slot_owner = vec![(usize::MAX, 0usize); slots];
    for (id, e) in pieces.iter().enumerate() {
        for (side, end) in e.ends.iter().enumerate() {
            if let End::Semiedge(s) = *end {
                slot_owner[s] = (id, side);
            }
        }
    }
    let mut renumber = vec![usize::MAX; slots];
    let mut next = 0;
    for s in 0..slots {
        if partner[s] == usize::MAX {
            renumber[s] = next;
            next += 1;
        }
    }
    // Walk from end `side` of `piece` outwards, returning the terminal end.
    let walk = |mut piece: usize, mut side: usize, visited: &mut Vec<bool>| -> Result<End, GraphError> {
        loop {
            match pieces[piece].ends[side] {
                End::Vertex(v) => return Ok(End::Vertex(v)),
                End::Semiedge(s) if partner[s] == usize::MAX => return Ok(End::Semiedge(renumber[s])),
                End::Semiedge(s) => {
                    let (p, ps) = slot_owner[partner[s]];
                    if visited[p] {
                        return Err(GraphError::VertexlessCircuit);
                    }
                    visited[p] = true;
                    piece = p;
                    side = 1 - ps;
                }
            }
        }
    };
    let mut visited = vec![false; pieces.len()];
    let mut edges = Vec::with_capacity(pieces.len());
    for id in 0..pieces.len() {
        if visited[id] {
            continue;
        }
        visited[id] = true;
        let a = walk(id, 0, &mut visited)?;
        let b = walk(id, 1, &mut visited)?;
        edges.push(Edge { ends: [a, b] });
    }
    CubicMultipole::new(vertex_count, edges)
}
