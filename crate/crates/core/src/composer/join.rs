use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::ComposeError;
use crate::canonical::{canonical_certificate, canonical_form, CanonicalCertificate, OrbitElement, OrbitKind, OrbitPartition};
use crate::graph::{complete_junction, extract_four_pole, CubicMultipole, FourPoleMode, GraphError, JunctionPairing};

const fn permutations4() -> [[usize; 4]; 24] {
    let mut out = [[0usize; 4]; 24];
    let mut idx = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c {
                    out[idx] = [a, b, c, 6 - a - b - c];
                    idx += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

/// All permutations of four semiedge positions, in lexicographic order.
pub const BIJECTIONS: [[usize; 4]; 24] = permutations4();

/// Left semiedge `i` is joined to right semiedge `bijection[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoinSpec {
    pub left: FourPoleMode,
    pub right: FourPoleMode,
    pub bijection: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinOptions {
    pub orbit_pruning: bool,
    pub dedupe: bool,
    pub max_order: Option<usize>,
}

impl Default for JoinOptions {
    fn default() -> Self {
        JoinOptions { orbit_pruning: true, dedupe: true, max_order: None }
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub mode: FourPoleMode,
    pub pole: CubicMultipole,
}

impl Extraction {
    /// Every way of cutting a 4-pole out of `g`, or one per automorphism
    /// orbit when `generators` is given. Vertex-mode extractions come first.
    pub fn all(g: &CubicMultipole, generators: Option<Vec<Vec<usize>>>) -> Result<Vec<Extraction>, ComposeError> {
        let modes: Vec<FourPoleMode> = match generators {
            Some(gens) => {
                let v = OrbitPartition::from_generators(g, gens.clone(), OrbitKind::AdjacentVertexPair);
                let e = OrbitPartition::from_generators(g, gens, OrbitKind::NonadjacentEdgePair);
                v.representatives().into_iter().chain(e.representatives()).map(to_mode).collect()
            }
            None => {
                let mut modes: Vec<FourPoleMode> =
                    g.proper_edges().map(|(_, u, v)| FourPoleMode::AdjacentVertices(u.min(v), u.max(v))).collect();
                let proper: Vec<usize> = g.proper_edges().map(|(e, _, _)| e).collect();
                for (i, &e) in proper.iter().enumerate() {
                    for &f in &proper[i + 1..] {
                        if !g.edges_adjacent(e, f) {
                            modes.push(FourPoleMode::NonadjacentEdges(e, f));
                        }
                    }
                }
                modes
            }
        };
        modes.into_iter().map(|mode| Ok(Extraction { mode, pole: extract_four_pole(g, mode)? })).collect()
    }
}

fn to_mode(x: OrbitElement) -> FourPoleMode {
    match x {
        OrbitElement::VertexPair(u, v) => FourPoleMode::AdjacentVertices(u, v),
        OrbitElement::EdgePair(e, f) => FourPoleMode::NonadjacentEdges(e, f),
        OrbitElement::Edge(_) => unreachable!("edge orbits are not extraction modes"),
    }
}

/// Enumeration order of the joins between two graphs: extraction pairs
/// (left-major) whose output fits the order bound, times the 24 bijections.
#[derive(Clone, Debug)]
pub struct JoinPlan {
    left: Vec<Extraction>,
    right: Vec<Extraction>,
    combos: Vec<(usize, usize)>,
}

impl JoinPlan {
    pub fn new(g1: &CubicMultipole, g2: &CubicMultipole, options: &JoinOptions) -> Result<JoinPlan, ComposeError> {
        for g in [g1, g2] {
            g.require_closed_simple()?;
            g.require_cubic()?;
        }
        let gens = |g: &CubicMultipole| -> Result<Option<Vec<Vec<usize>>>, ComposeError> {
            Ok(if options.orbit_pruning { Some(canonical_form(g)?.generators) } else { None })
        };
        let left = Extraction::all(g1, gens(g1)?)?;
        let right = Extraction::all(g2, gens(g2)?)?;
        Ok(JoinPlan::from_extractions(left, right, options.max_order))
    }

    pub fn from_extractions(left: Vec<Extraction>, right: Vec<Extraction>, max_order: Option<usize>) -> JoinPlan {
        let mut combos = Vec::new();
        for (i, l) in left.iter().enumerate() {
            for (j, r) in right.iter().enumerate() {
                let order = l.pole.vertex_count() + r.pole.vertex_count();
                if max_order.is_none_or(|m| order <= m) {
                    combos.push((i, j));
                }
            }
        }
        JoinPlan { left, right, combos }
    }

    pub fn len(&self) -> usize {
        self.combos.len() * BIJECTIONS.len()
    }

    pub fn is_empty(&self) -> bool {
        self.combos.is_empty()
    }

    pub fn spec(&self, index: usize) -> JoinSpec {
        let (i, j) = self.combos[index / 24];
        JoinSpec { left: self.left[i].mode, right: self.right[j].mode, bijection: BIJECTIONS[index % 24] }
    }

    /// The join with the given index in enumeration order.
    pub fn join(&self, index: usize) -> Result<(JoinSpec, CubicMultipole), GraphError> {
        let (i, j) = self.combos[index / 24];
        let bijection = BIJECTIONS[index % 24];
        let pairing = JunctionPairing::from_permutation(&bijection)?;
        let g = complete_junction(&self.left[i].pole, &self.right[j].pole, &pairing)?;
        Ok((JoinSpec { left: self.left[i].mode, right: self.right[j].mode, bijection }, g))
    }
}

#[derive(Clone, Debug)]
pub struct JoinOutput {
    pub graph: CubicMultipole,
    pub spec: JoinSpec,
    /// Present when deduplication is on.
    pub certificate: Option<CanonicalCertificate>,
}

/// Simple connected 4-joins of two graphs, optionally one per isomorphism class.
pub struct FourJoinStream {
    plan: JoinPlan,
    cursor: usize,
    dedupe: bool,
    seen: HashSet<String>,
    pub joins_enumerated: usize,
    pub simple_outputs: usize,
}

pub fn four_join_stream(g1: &CubicMultipole, g2: &CubicMultipole, options: JoinOptions) -> Result<FourJoinStream, ComposeError> {
    Ok(FourJoinStream {
        plan: JoinPlan::new(g1, g2, &options)?,
        cursor: 0,
        dedupe: options.dedupe,
        seen: HashSet::new(),
        joins_enumerated: 0,
        simple_outputs: 0,
    })
}

impl FourJoinStream {
    pub fn plan(&self) -> &JoinPlan {
        &self.plan
    }
}

impl Iterator for FourJoinStream {
    type Item = Result<JoinOutput, ComposeError>;

    fn next(&mut self) -> Option<Self::Item> {
        while self.cursor < self.plan.len() {
            let index = self.cursor;
            self.cursor += 1;
            self.joins_enumerated += 1;
            let (spec, graph) = match self.plan.join(index) {
                Ok(x) => x,
                Err(e) => return Some(Err(e.into())),
            };
            if !graph.is_simple() || !graph.is_connected() {
                continue;
            }
            self.simple_outputs += 1;
            if !self.dedupe {
                return Some(Ok(JoinOutput { graph, spec, certificate: None }));
            }
            let cert = match canonical_certificate(&graph) {
                Ok(c) => c,
                Err(e) => return Some(Err(e.into())),
            };
            if self.seen.insert(cert.canonical_adjacency.clone()) {
                return Some(Ok(JoinOutput { graph, spec, certificate: Some(cert) }));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen;

    #[test]
    fn bijections_are_distinct_permutations() {
        let mut all = BIJECTIONS.to_vec();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 24);
        assert_eq!(BIJECTIONS[0], [0, 1, 2, 3]);
    }

    #[test]
    fn petersen_extractions() {
        let p = petersen();
        assert_eq!(Extraction::all(&p, None).unwrap().len(), 15 + 75);
        let gens = canonical_form(&p).unwrap().generators;
        let pruned = Extraction::all(&p, Some(gens)).unwrap();
        assert_eq!(pruned.iter().filter(|x| matches!(x.mode, FourPoleMode::AdjacentVertices(..))).count(), 1);
    }

    #[test]
    fn order_arithmetic() {
        let p = petersen();
        let opts = JoinOptions { max_order: Some(16), ..JoinOptions::default() };
        let stream = four_join_stream(&p, &p, opts).unwrap();
        assert!(!stream.plan().is_empty());
        for out in stream {
            assert_eq!(out.unwrap().graph.vertex_count(), 16);
        }
        let opts = JoinOptions { max_order: Some(15), ..JoinOptions::default() };
        assert_eq!(four_join_stream(&p, &p, opts).unwrap().count(), 0);
    }
}
