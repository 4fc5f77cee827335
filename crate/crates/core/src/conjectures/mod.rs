//! Checkers for the dominating circuit, total colouring and Petersen
//! colouring conjectures, each with an independent witness validator.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{three_edge_coloring, ColoringError};
use crate::graph::{petersen, CubicMultipole, EdgeId, GraphError, VertexId};
use crate::structure::bridges;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has loops or parallel edges")]
    NotSimple,
    #[error("edge {0} is a bridge")]
    BridgePresent(EdgeId),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjecture {
    DominatingCircuit,
    TotalColoring,
    PetersenColoring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Vertices in cyclic order.
    Circuit(Vec<VertexId>),
    /// Colours 0..4 of vertices and of edges.
    TotalColoring { vertices: Vec<u8>, edges: Vec<u8> },
    /// Image of every edge among the edges of [`petersen`].
    EdgeMap(Vec<EdgeId>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub conjecture: Conjecture,
    pub holds: bool,
    pub witness: Option<Witness>,
}

fn require_cubic(g: &CubicMultipole) -> Result<(), ConjectureError> {
    if !g.is_closed() {
        return Err(GraphError::HasSemiedges.into());
    }
    g.require_cubic()?;
    Ok(())
}

// ---- dominating circuit ----

/// A circuit meeting every edge, found by extending paths from a start
/// vertex. If vertex 0 is off the circuit, all its neighbours are on it, so
/// the starts are vertex 0 and then its first neighbour with vertex 0 banned.
pub fn has_dominating_circuit(g: &CubicMultipole) -> Result<ConjectureVerdict, ConjectureError> {
    require_cubic(g)?;
    if !g.is_connected() {
        return Err(ConjectureError::Disconnected);
    }
    if !g.is_simple() {
        return Err(ConjectureError::NotSimple);
    }
    let n = g.vertex_count();
    let rows = g.adjacency_rows();
    let mut found = None;
    if n > 0 {
        let mut search = CircuitSearch { rows, n, path: Vec::new() };
        found = search.from(0, 1 << 0);
        if found.is_none() {
            let a = rows[0].trailing_zeros() as usize;
            found = search.from(a, (1 << a) | 1);
        }
    }
    Ok(ConjectureVerdict { conjecture: Conjecture::DominatingCircuit, holds: found.is_some(), witness: found.map(Witness::Circuit) })
}

struct CircuitSearch<'a> {
    rows: &'a [u64],
    n: usize,
    path: Vec<VertexId>,
}

impl CircuitSearch<'_> {
    /// `used` holds the path vertices and any banned ones.
    fn from(&mut self, s: VertexId, used: u64) -> Option<Vec<VertexId>> {
        self.path = vec![s];
        let banned = used & !(1 << s);
        self.extend(s, used, banned).then(|| self.path.clone())
    }

    fn extend(&mut self, s: VertexId, used: u64, banned: u64) -> bool {
        let tail = *self.path.last().unwrap();
        let on = used & !banned;
        if self.path.len() >= 3 && self.rows[tail] >> s & 1 == 1 && self.dominates(on) {
            return true;
        }
        if self.hopeless(tail, used, on) {
            return false;
        }
        let mut next = self.rows[tail] & !used;
        while next != 0 {
            let x = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path.push(x);
            if self.extend(s, used | 1 << x, banned) {
                return true;
            }
            self.path.pop();
        }
        false
    }

    /// Every vertex off the circuit has all neighbours on it.
    fn dominates(&self, on: u64) -> bool {
        (0..self.n).all(|v| on >> v & 1 == 1 || self.rows[v] & !on == 0)
    }

    /// Some edge has both ends off the path and out of reach of the tail.
    fn hopeless(&self, tail: VertexId, used: u64, on: u64) -> bool {
        let free = self.full() & !used;
        let mut reach = self.rows[tail] & free;
        let mut frontier = reach;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[v] & free & !reach;
            reach |= new;
            frontier |= new;
        }
        let stuck = self.full() & !on & !reach;
        (0..self.n).any(|v| stuck >> v & 1 == 1 && self.rows[v] & stuck != 0)
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

/// Checks a dominating circuit against the definition.
pub fn verify_dominating_circuit(g: &CubicMultipole, circuit: &[VertexId]) -> bool {
    let n = g.vertex_count();
    if circuit.len() < 3 {
        return false;
    }
    let mut on = vec![false; n];
    for (i, &v) in circuit.iter().enumerate() {
        if v >= n || on[v] {
            return false;
        }
        on[v] = true;
        if !g.is_adjacent(v, circuit[(i + 1) % circuit.len()]) {
            return false;
        }
    }
    g.proper_edges().all(|(_, u, v)| on[u] || on[v])
}

// ---- total colouring ----

/// 4 with a witness when a total 4-colouring exists, otherwise 5.
///
/// Elements of the total graph are coloured most-constrained first with
/// forward checking. Vertex 0 and its edges receive 0, 1, 2, 3, which loses
/// nothing since colours can be permuted.
pub fn total_chromatic_number(g: &CubicMultipole) -> Result<(usize, Option<Witness>), ConjectureError> {
    require_cubic(g)?;
    if !g.is_simple() {
        return Err(ConjectureError::NotSimple);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    // Elements 0..n are vertices, n..n+m edges.
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for (e, u, v) in g.proper_edges() {
        for (a, b) in [(u, v), (u, n + e), (v, n + e)] {
            conflicts[a].push(b);
            conflicts[b].push(a);
        }
    }
    for v in 0..n {
        let inc: Vec<usize> = g.incidences(v).iter().map(|&(e, _)| n + e).collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                conflicts[a].push(b);
                conflicts[b].push(a);
            }
        }
    }
    let mut s = TotalSearch { conflicts, domain: vec![0b1111; n + m], colour: vec![u8::MAX; n + m] };
    if n > 0 {
        let mut inc: Vec<usize> = g.incidences(0).iter().map(|&(e, _)| n + e).collect();
        inc.sort_unstable();
        let pre = [(0, 0u8), (inc[0], 1), (inc[1], 2), (inc[2], 3)];
        for (x, c) in pre {
            if !s.assign(x, c) {
                return Ok((5, None));
            }
        }
    }
    if !s.solve() {
        return Ok((5, None));
    }
    let (vertices, edges) = s.colour.split_at(n);
    Ok((4, Some(Witness::TotalColoring { vertices: vertices.to_vec(), edges: edges.to_vec() })))
}

struct TotalSearch {
    conflicts: Vec<Vec<usize>>,
    domain: Vec<u8>,
    colour: Vec<u8>,
}

impl TotalSearch {
    fn assign(&mut self, x: usize, c: u8) -> bool {
        if self.domain[x] >> c & 1 == 0 {
            return false;
        }
        self.colour[x] = c;
        let mut ok = true;
        for &y in &self.conflicts[x] {
            self.domain[y] &= !(1 << c);
            if self.colour[y] == u8::MAX && self.domain[y] == 0 {
                ok = false;
            }
        }
        ok
    }

    fn solve(&mut self) -> bool {
        let pick = (0..self.colour.len()).filter(|&x| self.colour[x] == u8::MAX).min_by_key(|&x| self.domain[x].count_ones());
        let Some(x) = pick else { return true };
        let saved = self.domain.clone();
        for c in 0..4u8 {
            if saved[x] >> c & 1 == 0 {
                continue;
            }
            if self.assign(x, c) && self.solve() {
                return true;
            }
            self.colour[x] = u8::MAX;
            self.domain.copy_from_slice(&saved);
        }
        false
    }
}

/// Checks a total colouring with colours below `k` against the definition.
pub fn verify_total_coloring(g: &CubicMultipole, vertices: &[u8], edges: &[u8], k: u8) -> bool {
    if vertices.len() != g.vertex_count() || edges.len() != g.edge_count() {
        return false;
    }
    if vertices.iter().chain(edges).any(|&c| c >= k) {
        return false;
    }
    for (e, u, v) in g.proper_edges() {
        if vertices[u] == vertices[v] || edges[e] == vertices[u] || edges[e] == vertices[v] {
            return false;
        }
    }
    (0..g.vertex_count()).all(|v| {
        let cs: Vec<u8> = g.incidences(v).iter().map(|&(e, _)| edges[e]).collect();
        cs.iter().enumerate().all(|(i, a)| cs[i + 1..].iter().all(|b| a != b))
    })
}

// ---- Petersen colouring ----

/// The three edges at each vertex of [`petersen`], sorted.
pub fn petersen_star_table() -> Vec<[EdgeId; 3]> {
    let p = petersen();
    (0..10)
        .map(|v| {
            let mut s: Vec<EdgeId> = p.incidences(v).iter().map(|&(e, _)| e).collect();
            s.sort_unstable();
            [s[0], s[1], s[2]]
        })
        .collect()
}

/// An edge map to the Petersen graph under which the three edges at every
/// vertex go to the three edges at some vertex of the Petersen graph.
///
/// Colourable graphs map colour class `i` to the `i`-th edge of a star.
/// Otherwise edges are assigned in depth-first order; the Petersen graph is
/// transitive on ordered stars, so the edges at vertex 0 go to a fixed one.
pub fn has_petersen_coloring(g: &CubicMultipole) -> Result<ConjectureVerdict, ConjectureError> {
    require_cubic(g)?;
    if let Some(&b) = bridges(g).first() {
        return Err(ConjectureError::BridgePresent(b));
    }
    if !g.is_simple() {
        return Err(ConjectureError::NotSimple);
    }
    let stars = petersen_star_table();
    let found = match three_edge_coloring(g)? {
        Some(c) => Some((0..g.edge_count()).map(|e| stars[0][c.get(e).0 as usize - 1]).collect()),
        None => PetersenSearch::new(g).run(),
    };
    Ok(ConjectureVerdict { conjecture: Conjecture::PetersenColoring, holds: found.is_some(), witness: found.map(Witness::EdgeMap) })
}

struct PetersenSearch<'a> {
    g: &'a CubicMultipole,
    order: Vec<EdgeId>,
    image: Vec<Option<EdgeId>>,
    /// Petersen edge endpoints.
    ends: Vec<(VertexId, VertexId)>,
}

impl<'a> PetersenSearch<'a> {
    fn new(g: &'a CubicMultipole) -> Self {
        let p = petersen();
        let ends = p.proper_edges().map(|(_, u, v)| (u, v)).collect();
        // Depth-first edge order from vertex 0.
        let mut order = Vec::with_capacity(g.edge_count());
        let mut seen_e = vec![false; g.edge_count()];
        let mut seen_v = vec![false; g.vertex_count()];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if seen_v[v] {
                continue;
            }
            seen_v[v] = true;
            for &(e, side) in g.incidences(v) {
                if !seen_e[e] {
                    seen_e[e] = true;
                    order.push(e);
                }
                if let Some(w) = g.far_vertex(e, side) {
                    if !seen_v[w] {
                        stack.push(w);
                    }
                }
            }
        }
        PetersenSearch { g, order, image: vec![None; g.edge_count()], ends }
    }

    fn run(mut self) -> Option<Vec<EdgeId>> {
        if self.g.vertex_count() == 0 {
            return Some(Vec::new());
        }
        let star0 = petersen_star_table()[0];
        for (i, &(e, _)) in self.g.incidences(0).iter().enumerate() {
            self.image[e] = Some(star0[i]);
        }
        self.assign(0).then(|| self.image.iter().map(|x| x.unwrap()).collect())
    }

    fn assign(&mut self, k: usize) -> bool {
        let Some(&e) = self.order.get(k) else { return true };
        if self.image[e].is_some() {
            return self.assign(k + 1);
        }
        let (u, v) = self.g.edges()[e].endpoints().expect("closed graph");
        for img in 0..15 {
            self.image[e] = Some(img);
            if self.consistent(u) && self.consistent(v) && self.assign(k + 1) {
                return true;
            }
        }
        self.image[e] = None;
        false
    }

    /// The images assigned so far at `v` are distinct and share a common vertex.
    fn consistent(&self, v: VertexId) -> bool {
        let imgs: Vec<EdgeId> = self.g.incidences(v).iter().filter_map(|&(e, _)| self.image[e]).collect();
        let mut common = [true; 10];
        for (i, &a) in imgs.iter().enumerate() {
            if imgs[i + 1..].contains(&a) {
                return false;
            }
            let (x, y) = self.ends[a];
            for (w, c) in common.iter_mut().enumerate() {
                *c &= w == x || w == y;
            }
        }
        common.iter().any(|&c| c)
    }
}

/// Checks a Petersen colouring against the definition: at every vertex the
/// three images are distinct and pairwise share an end in the Petersen graph.
pub fn verify_petersen_coloring(g: &CubicMultipole, map: &[EdgeId]) -> bool {
    let p = petersen();
    if map.len() != g.edge_count() || map.iter().any(|&x| x >= p.edge_count()) {
        return false;
    }
    let ends = |e: EdgeId| p.edges()[e].endpoints().unwrap();
    let touch = |a: EdgeId, b: EdgeId| {
        let ((a0, a1), (b0, b1)) = (ends(a), ends(b));
        a != b && (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1)
    };
    (0..g.vertex_count()).all(|v| {
        let imgs: Vec<EdgeId> = g.incidences(v).iter().map(|&(e, _)| map[e]).collect();
        imgs.len() == 3 && touch(imgs[0], imgs[1]) && touch(imgs[0], imgs[2]) && touch(imgs[1], imgs[2])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cube_q3, k33, k4};

    #[test]
    fn petersen_verdicts() {
        let p = petersen();
        let d = has_dominating_circuit(&p).unwrap();
        assert!(d.holds);
        let Some(Witness::Circuit(c)) = d.witness else { panic!() };
        assert!(verify_dominating_circuit(&p, &c));
        let (t, w) = total_chromatic_number(&p).unwrap();
        assert_eq!(t, 4);
        let Some(Witness::TotalColoring { vertices, edges }) = w else { panic!() };
        assert!(verify_total_coloring(&p, &vertices, &edges, 4));
        let pc = has_petersen_coloring(&p).unwrap();
        let Some(Witness::EdgeMap(m)) = pc.witness else { panic!() };
        assert!(verify_petersen_coloring(&p, &m));
    }

    #[test]
    fn identity_is_a_petersen_coloring() {
        let p = petersen();
        assert!(verify_petersen_coloring(&p, &(0..15).collect::<Vec<_>>()));
    }

    #[test]
    fn k4_needs_five_colours() {
        assert_eq!(total_chromatic_number(&k4()).unwrap().0, 5);
        assert_eq!(total_chromatic_number(&k33()).unwrap().0, 5);
        assert_eq!(total_chromatic_number(&cube_q3()).unwrap().0, 4);
        assert!(has_dominating_circuit(&k4()).unwrap().holds);
    }
}
