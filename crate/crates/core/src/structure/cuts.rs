use serde::Serialize;

use super::{cycle_rank, edges_into, mask_connected, require_closed_cubic_connected, StructureError};
use crate::graph::{CubicMultipole, Edge, EdgeId, End, VertexId};

/// One side of an edge cut as a multipole: the induced subgraph with every
/// cut edge turned into a dangling edge. Semiedge slot `i` is the `i`-th cut
/// edge in ascending edge id; vertex `j` of the multipole is `vertices[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fragment {
    pub vertices: Vec<VertexId>,
    #[serde(skip)]
    pub multipole: CubicMultipole,
}

impl Fragment {
    pub fn from_vertices(g: &CubicMultipole, vertices: &[VertexId], cut: &[EdgeId]) -> Fragment {
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (j, &v) in vertices.iter().enumerate() {
            index[v] = j;
        }
        let inside = |end: End| matches!(end, End::Vertex(v) if index[v] != usize::MAX);
        let mut edges = Vec::new();
        for (id, e) in g.edges().iter().enumerate() {
            let [a, b] = e.ends;
            match (inside(a), inside(b)) {
                (true, true) => edges.push(Edge::proper(index[a.vertex().unwrap()], index[b.vertex().unwrap()])),
                (true, false) | (false, true) => {
                    let v = if inside(a) { a } else { b }.vertex().unwrap();
                    let slot = cut.iter().position(|&c| c == id).expect("edge leaving the side must be in the cut");
                    edges.push(Edge::dangling(index[v], slot));
                }
                (false, false) => {}
            }
        }
        let multipole = CubicMultipole::new(vertices.len(), edges).expect("fragment slots are 0..|cut|");
        Fragment { vertices: vertices.to_vec(), multipole }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// An edge cut `delta(X)` whose two sides are both connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutReport {
    /// Cut edges, ascending.
    pub cut: Vec<EdgeId>,
    /// Side 0 contains vertex 0.
    pub fragments: [Fragment; 2],
    /// No two cut edges share a vertex.
    pub independent: bool,
    pub cycle_separating: bool,
}

impl CutReport {
    pub fn size(&self) -> usize {
        self.cut.len()
    }

    pub(crate) fn from_mask(g: &CubicMultipole, x: u64) -> CutReport {
        let n = g.vertex_count();
        let side0: Vec<VertexId> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
        let side1: Vec<VertexId> = (0..n).filter(|&v| x >> v & 1 == 0).collect();
        let mut cut: Vec<EdgeId> = g.proper_edges().filter(|&(_, u, v)| (x >> u & 1) != (x >> v & 1)).map(|(e, _, _)| e).collect();
        cut.sort_unstable();
        let independent = cut.iter().enumerate().all(|(i, &e)| cut[i + 1..].iter().all(|&f| !g.edges_adjacent(e, f)));
        let cycle_separating = has_cycle(side0.len(), cut.len()) && has_cycle(side1.len(), cut.len());
        CutReport {
            fragments: [Fragment::from_vertices(g, &side0, &cut), Fragment::from_vertices(g, &side1, &cut)],
            cut,
            independent,
            cycle_separating,
        }
    }

    /// Builds the report for an explicit edge set, which must leave exactly two components.
    pub fn from_edges(g: &CubicMultipole, edges: &[EdgeId]) -> Result<CutReport, StructureError> {
        require_closed_cubic_connected(g)?;
        for &e in edges {
            g.edge(e)?;
        }
        let comps = super::components_avoiding(g, edges);
        if comps.len() != 2 {
            return Err(StructureError::NotCycleSeparating);
        }
        let x = comps[0].iter().fold(0u64, |m, &v| m | 1 << v);
        let report = CutReport::from_mask(g, x);
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if report.cut != sorted {
            return Err(StructureError::NotCycleSeparating);
        }
        Ok(report)
    }
}

/// A connected side of a cubic graph with `size` vertices and `cut` leaving
/// edges has `(3 size - cut) / 2` inner edges, so it contains a cycle
/// exactly when `size >= cut`.
fn has_cycle(size: usize, cut: usize) -> bool {
    size >= cut
}

/// Enumerates connected vertex sets `X` containing vertex 0 whose complement
/// is nonempty and connected, with `|delta(X)| <= bound`. Sets are grown by
/// branching on the least frontier vertex (include or exclude); edges from
/// `X` to excluded vertices are already in the cut and bound the search.
struct BondSearch<'a> {
    g: &'a CubicMultipole,
    rows: &'a [u64],
    all: u64,
    bound: usize,
    stop: bool,
}

impl BondSearch<'_> {
    fn run(&mut self, visit: &mut dyn FnMut(u64, usize) -> Step) {
        self.rec(1, 0, self.rows[0], 0, visit);
    }

    fn rec(&mut self, x: u64, out: u64, nbr: u64, lb: usize, visit: &mut dyn FnMut(u64, usize) -> Step) {
        if self.stop {
            return;
        }
        let frontier = nbr & !x & !out;
        if frontier == 0 {
            let rest = self.all & !x;
            if rest != 0 && mask_connected(self.rows, rest) {
                match visit(x, lb) {
                    Step::Continue => {}
                    Step::Tighten(b) => self.bound = b,
                    Step::Stop => self.stop = true,
                }
            }
            return;
        }
        let v = frontier.trailing_zeros() as usize;
        let add = edges_into(self.g, v, out);
        if lb + add <= self.bound {
            self.rec(x | 1 << v, out, nbr | self.rows[v], lb + add, visit);
        }
        let add = edges_into(self.g, v, x);
        if lb + add <= self.bound {
            self.rec(x, out | 1 << v, nbr, lb + add, visit);
        }
    }
}

enum Step {
    Continue,
    Tighten(usize),
    Stop,
}

fn search(g: &CubicMultipole, bound: usize, visit: &mut dyn FnMut(u64, usize) -> Step) {
    let n = g.vertex_count();
    if n < 2 {
        return;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = BondSearch { g, rows: g.adjacency_rows(), all, bound, stop: false };
    s.run(visit);
}

/// All bonds (cuts with both sides connected) of exactly `k` edges,
/// cycle-separating or not, in search order.
pub fn bonds(g: &CubicMultipole, k: usize) -> Result<Vec<CutReport>, StructureError> {
    require_closed_cubic_connected(g)?;
    let mut found = Vec::new();
    search(g, k, &mut |x, size| {
        if size == k {
            found.push(x);
        }
        Step::Continue
    });
    Ok(found.into_iter().map(|x| CutReport::from_mask(g, x)).collect())
}

/// Cycle-separating cuts of exactly `k` edges that leave two components.
pub fn cycle_separating_cuts(g: &CubicMultipole, k: usize) -> Result<Vec<CutReport>, StructureError> {
    Ok(bonds(g, k)?.into_iter().filter(|c| c.cycle_separating).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ZetaWitness {
    Cut(Box<CutReport>),
    CappedAtCycleRank,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicConnectivity {
    pub zeta: usize,
    pub witness: ZetaWitness,
}

/// Cyclic connectivity with a minimum cycle-separating cut, or the cycle rank
/// when no smaller cycle-separating cut exists.
pub fn cyclic_connectivity(g: &CubicMultipole) -> Result<CyclicConnectivity, StructureError> {
    require_closed_cubic_connected(g)?;
    let beta = cycle_rank(g);
    let mut best: Option<(u64, usize)> = None;
    if beta > 1 {
        let n = g.vertex_count();
        search(g, beta - 1, &mut |x, size| {
            let inside = x.count_ones() as usize;
            if has_cycle(inside, size) && has_cycle(n - inside, size) {
                best = Some((x, size));
                if size <= 1 {
                    return Step::Stop;
                }
                return Step::Tighten(size - 1);
            }
            Step::Continue
        });
    }
    Ok(match best {
        Some((x, size)) => CyclicConnectivity { zeta: size, witness: ZetaWitness::Cut(Box::new(CutReport::from_mask(g, x))) },
        None => CyclicConnectivity { zeta: beta, witness: ZetaWitness::CappedAtCycleRank },
    })
}

/// No set of fewer than `k` edges is cycle-separating.
pub fn is_cyclically_k_edge_connected(g: &CubicMultipole, k: usize) -> Result<bool, StructureError> {
    require_closed_cubic_connected(g)?;
    if k <= 1 {
        return Ok(true);
    }
    let n = g.vertex_count();
    let mut ok = true;
    search(g, k - 1, &mut |x, size| {
        let inside = x.count_ones() as usize;
        if has_cycle(inside, size) && has_cycle(n - inside, size) {
            ok = false;
            return Step::Stop;
        }
        Step::Continue
    });
    Ok(ok)
}

/// Inclusion-minimal fragments over all minimum cycle-separating cuts
/// (empty when no cycle-separating cut exists), ordered by vertex list.
pub fn atoms(g: &CubicMultipole) -> Result<Vec<Fragment>, StructureError> {
    let cc = cyclic_connectivity(g)?;
    if cc.witness == ZetaWitness::CappedAtCycleRank {
        return Ok(Vec::new());
    }
    let mut fragments: Vec<Fragment> = cycle_separating_cuts(g, cc.zeta)?.into_iter().flat_map(|c| c.fragments).collect();
    fragments.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    fragments.dedup_by(|a, b| a.vertices == b.vertices);
    let subset = |a: &[VertexId], b: &[VertexId]| a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok());
    let minimal: Vec<Fragment> =
        fragments.iter().filter(|f| !fragments.iter().any(|h| subset(&h.vertices, &f.vertices))).cloned().collect();
    Ok(minimal)
}
