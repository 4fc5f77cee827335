//! Canonical labelling, isomorphism testing and automorphism orbits.
//!
//! Vertices are coloured by isomorphism invariants (distance profile, short
//! cycle counts), the colouring is refined to an equitable one, and a search
//! tree individualises one vertex of the first non-singleton cell at a time.
//! The least relabelled adjacency matrix over all leaves is the canonical
//! form. Leaves that reproduce the first or the best matrix yield
//! automorphisms, which prune sibling branches lying in one orbit.

mod orbits;

pub use orbits::{automorphism_orbits, OrbitElement, OrbitKind, OrbitPartition};

use std::hash::{Hash, Hasher};

use serde::Serialize;
use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::{encode_graph6, CubicMultipole, GraphError, VertexId, BITROW_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonicalError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {0} exceeds the supported limit of {BITROW_LIMIT} vertices")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Identifies an isomorphism class. Equality and hashing look only at
/// `canonical_adjacency`; `relabeling` maps each input vertex to its
/// canonical position.
#[derive(Clone, Debug, Serialize)]
pub struct CanonicalCertificate {
    /// graph6 encoding of the canonically relabelled graph.
    pub canonical_adjacency: String,
    pub relabeling: Vec<VertexId>,
}

impl PartialEq for CanonicalCertificate {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_adjacency == other.canonical_adjacency
    }
}

impl Eq for CanonicalCertificate {}

impl Hash for CanonicalCertificate {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_adjacency.hash(state);
    }
}

/// Certificate together with generators of the automorphism group.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub certificate: CanonicalCertificate,
    /// Each generator maps vertex `v` to `gen[v]`.
    pub generators: Vec<Vec<VertexId>>,
}

pub fn canonical_certificate(g: &CubicMultipole) -> Result<CanonicalCertificate, CanonicalError> {
    Ok(canonical_form(g)?.certificate)
}

pub fn are_isomorphic(g1: &CubicMultipole, g2: &CubicMultipole) -> Result<bool, CanonicalError> {
    let (a, b) = (canonical_certificate(g1)?, canonical_certificate(g2)?);
    Ok(a == b)
}

pub fn canonical_form(g: &CubicMultipole) -> Result<CanonicalForm, CanonicalError> {
    g.require_closed_simple()?;
    let n = g.vertex_count();
    if n > BITROW_LIMIT {
        return Err(CanonicalError::OrderTooLarge(n));
    }
    if !g.is_connected() {
        return Err(CanonicalError::Disconnected);
    }
    let rows = g.adjacency_rows();
    let mut search = Search { rows, n, first: None, best: None, generators: Vec::new() };
    let mut colors = rank(&invariants(rows));
    refine(rows, &mut colors);
    search.explore(colors, &mut Vec::new());
    let (enc, lab) = search.best.expect("search reaches at least one leaf");
    let mut pairs = Vec::with_capacity(g.edge_count());
    for (i, &row) in enc.iter().enumerate() {
        let mut r = row >> i >> 1 << i << 1;
        while r != 0 {
            let j = r.trailing_zeros() as usize;
            r &= r - 1;
            pairs.push((i, j));
        }
    }
    let canon = CubicMultipole::from_pairs(n, &pairs).expect("relabelled graph is valid");
    let canonical_adjacency = encode_graph6(&canon).expect("relabelled graph is simple");
    let relabeling = lab.iter().map(|&c| c as usize).collect();
    Ok(CanonicalForm { certificate: CanonicalCertificate { canonical_adjacency, relabeling }, generators: search.generators })
}

/// Per-vertex invariant key: triangles and 4-cycles through the vertex, then
/// its distance profile.
fn invariants(rows: &[u64]) -> Vec<Vec<u32>> {
    let n = rows.len();
    (0..n)
        .map(|v| {
            let nb: SmallVec<[usize; 4]> = bits(rows[v]).collect();
            let (mut tri, mut quad) = (0u32, 0u32);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (a, b) = (nb[i], nb[j]);
                    tri += (rows[a] >> b & 1) as u32;
                    quad += (rows[a] & rows[b] & !(1u64 << v)).count_ones();
                }
            }
            let mut key = vec![tri, quad];
            let mut seen = 1u64 << v;
            let mut layer = seen;
            loop {
                let mut next = 0;
                for u in bits(layer) {
                    next |= rows[u];
                }
                next &= !seen;
                if next == 0 {
                    break;
                }
                key.push(next.count_ones());
                seen |= next;
                layer = next;
            }
            key
        })
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Dense ranks of the keys in sorted order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

fn count_colors(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Refines until every vertex of a cell sees the same multiset of neighbour colours.
fn refine(rows: &[u64], colors: &mut Vec<u32>) {
    let mut k = count_colors(colors);
    loop {
        let keys: Vec<(u32, SmallVec<[u32; 4]>)> = (0..rows.len())
            .map(|v| {
                let mut nb: SmallVec<[u32; 4]> = bits(rows[v]).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&keys);
        let k2 = count_colors(&next);
        *colors = next;
        if k2 == k {
            return;
        }
        k = k2;
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(Vec<u64>, Vec<u32>)>,
    best: Option<(Vec<u64>, Vec<u32>)>,
    generators: Vec<Vec<VertexId>>,
}

impl Search<'_> {
    fn explore(&mut self, colors: Vec<u32>, path: &mut Vec<VertexId>) {
        let k = count_colors(&colors);
        if k == self.n {
            self.leaf(colors);
            return;
        }
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let cell: Vec<VertexId> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<VertexId> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, path) {
                continue;
            }
            let keys: Vec<(u32, u8)> = (0..self.n).map(|u| (colors[u], (colors[u] == target && u != v) as u8)).collect();
            let mut child = rank(&keys);
            refine(self.rows, &mut child);
            path.push(v);
            self.explore(child, path);
            path.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `path` pointwise.
    fn equivalent_to_explored(&self, v: VertexId, explored: &[VertexId], path: &[VertexId]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in self.generators.iter().filter(|g| path.iter().all(|&p| g[p] == p)) {
            any = true;
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, lab: Vec<u32>) {
        let mut enc = vec![0u64; self.n];
        for v in 0..self.n {
            enc[lab[v] as usize] = bits(self.rows[v]).fold(0u64, |m, w| m | 1 << lab[w]);
        }
        let Some((first_enc, first_lab)) = &self.first else {
            self.first = Some((enc.clone(), lab.clone()));
            self.best = Some((enc, lab));
            return;
        };
        if enc == *first_enc {
            let gen = automorphism(first_lab, &lab);
            self.add_generator(gen);
            return;
        }
        let (best_enc, best_lab) = self.best.as_ref().unwrap();
        match enc.cmp(best_enc) {
            std::cmp::Ordering::Equal => {
                let gen = automorphism(best_lab, &lab);
                self.add_generator(gen);
            }
            std::cmp::Ordering::Less => self.best = Some((enc, lab)),
            std::cmp::Ordering::Greater => {}
        }
    }

    fn add_generator(&mut self, gen: Vec<VertexId>) {
        if gen.iter().enumerate().any(|(i, &x)| i != x) && !self.generators.contains(&gen) {
            self.generators.push(gen);
        }
    }
}

/// The automorphism taking each vertex to the vertex with the same position
/// under `target` as it has under `source`.
fn automorphism(target: &[u32], source: &[u32]) -> Vec<VertexId> {
    let mut inv = vec![0usize; target.len()];
    for (v, &p) in target.iter().enumerate() {
        inv[p as usize] = v;
    }
    source.iter().map(|&p| inv[p as usize]).collect()
}

/// Whether `perm` is an automorphism of `g`.
pub fn is_automorphism(g: &CubicMultipole, perm: &[VertexId]) -> bool {
    let n = g.vertex_count();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    g.proper_edges().all(|(_, u, v)| g.is_adjacent(perm[u], perm[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cube_q3, flower_snark, i_extension, k33, k4, petersen, prism};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(g: &CubicMultipole, seed: u64) -> CubicMultipole {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        g.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabelling() {
        for g in [petersen(), k4(), k33(), cube_q3(), flower_snark(5), prism(7)] {
            let c = canonical_certificate(&g).unwrap();
            for seed in 0..20 {
                let h = shuffled(&g, seed);
                let d = canonical_certificate(&h).unwrap();
                assert_eq!(c, d);
                // the relabelling reproduces the canonical graph
                let back = h.relabel(&d.relabeling);
                assert_eq!(encode_graph6(&back).unwrap(), d.canonical_adjacency);
            }
        }
    }

    #[test]
    fn distinguishes_classes() {
        assert!(!are_isomorphic(&k4(), &k33()).unwrap());
        assert!(are_isomorphic(&prism(4), &cube_q3()).unwrap());
        assert!(!are_isomorphic(&flower_snark(5), &prism(10)).unwrap());
        let kk = i_extension(&k4(), 0, 5).unwrap();
        assert!(are_isomorphic(&kk, &k33()).unwrap());
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [petersen(), cube_q3(), flower_snark(5)] {
            let f = canonical_form(&g).unwrap();
            assert!(!f.generators.is_empty());
            assert!(f.generators.iter().all(|p| is_automorphism(&g, p)));
        }
    }

    #[test]
    fn rejects_bad_input() {
        let theta = CubicMultipole::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(canonical_certificate(&theta).unwrap_err(), CanonicalError::Graph(GraphError::NotSimple));
        assert_eq!(canonical_certificate(&crate::graph::c4_pole()).unwrap_err(), CanonicalError::Graph(GraphError::HasSemiedges));
    }
}
