use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use super::{canonical_form, CanonicalError};
use crate::graph::{CubicMultipole, EdgeId, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrbitKind {
    Edge,
    NonadjacentEdgePair,
    AdjacentVertexPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OrbitElement {
    Edge(EdgeId),
    /// Two non-adjacent edges, smaller id first.
    EdgePair(EdgeId, EdgeId),
    /// The ends of an edge, smaller vertex first.
    VertexPair(VertexId, VertexId),
}

/// Orbits of one kind of element under the full automorphism group. Classes
/// are sorted internally and ordered by their least element.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitPartition {
    pub kind: OrbitKind,
    pub classes: Vec<Vec<OrbitElement>>,
    #[serde(skip)]
    generators: Vec<Vec<VertexId>>,
    #[serde(skip)]
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
}

pub fn automorphism_orbits(g: &CubicMultipole, kind: OrbitKind) -> Result<OrbitPartition, CanonicalError> {
    let form = canonical_form(g)?;
    Ok(OrbitPartition::from_generators(g, form.generators, kind))
}

impl OrbitPartition {
    /// Orbits of the group generated by `generators`.
    pub fn from_generators(g: &CubicMultipole, generators: Vec<Vec<VertexId>>, kind: OrbitKind) -> OrbitPartition {
        let edge_index: HashMap<(VertexId, VertexId), EdgeId> = g.proper_edges().map(|(e, u, v)| ((u.min(v), u.max(v)), e)).collect();
        let elements = universe(g, kind);
        let index: HashMap<OrbitElement, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut parent: Vec<usize> = (0..elements.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gen in &generators {
            for (i, &x) in elements.iter().enumerate() {
                let y = image(&edge_index, g, gen, x);
                let (a, b) = (find(&mut parent, i), find(&mut parent, index[&y]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<OrbitElement>> = BTreeMap::new();
        for (i, &x) in elements.iter().enumerate() {
            let r = find(&mut parent, i);
            classes.entry(r).or_default().push(x);
        }
        let mut classes: Vec<Vec<OrbitElement>> = classes.into_values().collect();
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_unstable();
        OrbitPartition { kind, classes, generators, edge_index }
    }

    /// First element of each class.
    pub fn representatives(&self) -> Vec<OrbitElement> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn generators(&self) -> &[Vec<VertexId>] {
        &self.generators
    }

    /// An automorphism mapping `a` to `b`, composed from the generators, or
    /// `None` when they lie in different orbits.
    pub fn witness(&self, g: &CubicMultipole, a: OrbitElement, b: OrbitElement) -> Option<Vec<VertexId>> {
        let n = g.vertex_count();
        let identity: Vec<VertexId> = (0..n).collect();
        let mut seen: HashMap<OrbitElement, Vec<VertexId>> = HashMap::from([(a, identity)]);
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                return seen.remove(&b);
            }
            let to_x = seen[&x].clone();
            for gen in &self.generators {
                let y = image(&self.edge_index, g, gen, x);
                if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(y) {
                    slot.insert(to_x.iter().map(|&v| gen[v]).collect());
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

fn universe(g: &CubicMultipole, kind: OrbitKind) -> Vec<OrbitElement> {
    let proper: Vec<(EdgeId, VertexId, VertexId)> = g.proper_edges().collect();
    match kind {
        OrbitKind::Edge => proper.iter().map(|&(e, _, _)| OrbitElement::Edge(e)).collect(),
        OrbitKind::AdjacentVertexPair => proper.iter().map(|&(_, u, v)| OrbitElement::VertexPair(u.min(v), u.max(v))).collect(),
        OrbitKind::NonadjacentEdgePair => {
            let mut out = Vec::new();
            for (i, &(e, _, _)) in proper.iter().enumerate() {
                for &(f, _, _) in &proper[i + 1..] {
                    if !g.edges_adjacent(e, f) {
                        out.push(OrbitElement::EdgePair(e.min(f), e.max(f)));
                    }
                }
            }
            out
        }
    }
}

pub(crate) fn edge_image(edge_index: &HashMap<(VertexId, VertexId), EdgeId>, g: &CubicMultipole, perm: &[VertexId], e: EdgeId) -> EdgeId {
    let (u, v) = g.edges()[e].endpoints().expect("proper edge");
    let (a, b) = (perm[u], perm[v]);
    edge_index[&(a.min(b), a.max(b))]
}

fn image(edge_index: &HashMap<(VertexId, VertexId), EdgeId>, g: &CubicMultipole, perm: &[VertexId], x: OrbitElement) -> OrbitElement {
    match x {
        OrbitElement::Edge(e) => OrbitElement::Edge(edge_image(edge_index, g, perm, e)),
        OrbitElement::EdgePair(e, f) => {
            let (a, b) = (edge_image(edge_index, g, perm, e), edge_image(edge_index, g, perm, f));
            OrbitElement::EdgePair(a.min(b), a.max(b))
        }
        OrbitElement::VertexPair(u, v) => {
            let (a, b) = (perm[u], perm[v]);
            OrbitElement::VertexPair(a.min(b), a.max(b))
        }
    }
}
