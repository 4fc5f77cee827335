//! Isomorph-free generation of cyclically 4-edge-connected cubic graphs by
//! I-extensions, starting from K4 with the cube added at order 8.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::{canonical_form, CanonicalError, OrbitElement, OrbitKind, OrbitPartition};
use crate::coloring::{is_three_edge_colorable, ColoringError};
use crate::graph::{cube_q3, i_extension, k4, reduce_i_extension, CubicMultipole, GraphError, VertexId};
use crate::structure::{cyclic_connectivity, girth, is_cyclically_k_edge_connected, StructureError};

pub const DEFAULT_ORDER_BOUND: usize = 24;

/// Parents expanded per parallel batch.
const BATCH: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerationError {
    #[error("target order {0} is odd")]
    OddOrder(usize),
    #[error("target order {0} is below 4")]
    OrderTooSmall(usize),
    #[error("target order {order} exceeds the bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationFilters {
    pub zeta_min: usize,
    pub girth_min: usize,
    pub snarks_only: bool,
}

impl Default for GenerationFilters {
    fn default() -> Self {
        GenerationFilters { zeta_min: 4, girth_min: 0, snarks_only: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationTask {
    pub target_order: usize,
    pub filters: GenerationFilters,
    pub order_bound: usize,
}

impl GenerationTask {
    pub fn new(target_order: usize) -> Self {
        GenerationTask { target_order, filters: GenerationFilters::default(), order_bound: DEFAULT_ORDER_BOUND }
    }

    pub fn snarks(target_order: usize) -> Self {
        GenerationTask { filters: GenerationFilters { snarks_only: true, ..GenerationFilters::default() }, ..Self::new(target_order) }
    }
}

/// The graphs of one order that pass the filters.
#[derive(Clone, Debug)]
pub struct Level {
    pub order: usize,
    pub graphs: Vec<CubicMultipole>,
    /// All classes of this order; unknown on a snarks-only final level,
    /// where colourable children are dropped before deduplication.
    pub total_classes: Option<usize>,
}

struct Class {
    graph: CubicMultipole,
    generators: Vec<Vec<VertexId>>,
}

/// Level-by-level generation up to the target order.
pub struct Generation {
    task: GenerationTask,
    order: usize,
    classes: Vec<Class>,
    pending: std::vec::IntoIter<CubicMultipole>,
}

pub fn generate_c4ec_cubic(task: &GenerationTask) -> Result<Generation, GenerationError> {
    let n = task.target_order;
    if n % 2 == 1 {
        return Err(GenerationError::OddOrder(n));
    }
    if n < 4 {
        return Err(GenerationError::OrderTooSmall(n));
    }
    if n > task.order_bound {
        return Err(GenerationError::OrderBoundExceeded { order: n, bound: task.order_bound });
    }
    Ok(Generation { task: *task, order: 2, classes: Vec::new(), pending: Vec::new().into_iter() })
}

impl Generation {
    /// The next order's filtered graphs, or `None` past the target.
    pub fn next_level(&mut self) -> Option<Result<Level, GenerationError>> {
        if self.order >= self.task.target_order {
            return None;
        }
        self.order += 2;
        Some(self.expand())
    }

    fn expand(&mut self) -> Result<Level, GenerationError> {
        let order = self.order;
        let last = order == self.task.target_order;
        let snark_shortcut = last && self.task.filters.snarks_only;
        let mut seen: HashSet<String> = HashSet::new();
        let mut next: Vec<Class> = Vec::new();
        let mut admit = |cert: String, class: Class, next: &mut Vec<Class>| {
            if seen.insert(cert) {
                next.push(class);
            }
        };
        if order == 4 {
            let g = k4();
            let form = canonical_form(&g)?;
            admit(form.certificate.canonical_adjacency, Class { graph: g, generators: form.generators }, &mut next);
        }
        for batch in self.classes.chunks(BATCH) {
            let children: Vec<Vec<(String, Class)>> =
                batch.par_iter().map(|p| children(p, snark_shortcut)).collect::<Result<_, GenerationError>>()?;
            for (cert, class) in children.into_iter().flatten() {
                admit(cert, class, &mut next);
            }
        }
        if order == 8 {
            let g = cube_q3();
            let form = canonical_form(&g)?;
            admit(form.certificate.canonical_adjacency, Class { graph: g, generators: form.generators }, &mut next);
        }
        let total_classes = (!snark_shortcut).then_some(next.len());
        let filters = self.task.filters;
        let graphs: Vec<CubicMultipole> = next
            .par_iter()
            .map(|c| passes(&c.graph, &filters).map(|ok| ok.then(|| c.graph.clone())))
            .collect::<Result<Vec<_>, GenerationError>>()?
            .into_iter()
            .flatten()
            .collect();
        self.classes = if last { Vec::new() } else { next };
        Ok(Level { order, graphs, total_classes })
    }
}

impl Iterator for Generation {
    type Item = Result<CubicMultipole, GenerationError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(g) = self.pending.next() {
                return Some(Ok(g));
            }
            match self.next_level()? {
                Ok(level) => self.pending = level.graphs.into_iter(),
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

/// Cyclically 4-edge-connected I-extensions of `p` over orbit representatives
/// of non-adjacent edge pairs, one per class. With `snarks_only` colourable
/// children are skipped before any canonical labelling.
fn children(p: &Class, snarks_only: bool) -> Result<Vec<(String, Class)>, GenerationError> {
    let orbits = OrbitPartition::from_generators(&p.graph, p.generators.clone(), OrbitKind::NonadjacentEdgePair);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rep in orbits.representatives() {
        let OrbitElement::EdgePair(e, f) = rep else { unreachable!() };
        let g = i_extension(&p.graph, e, f)?;
        if snarks_only && is_three_edge_colorable(&g)? {
            continue;
        }
        if !is_cyclically_k_edge_connected(&g, 4)? {
            continue;
        }
        let form = canonical_form(&g)?;
        let cert = form.certificate.canonical_adjacency;
        if seen.insert(cert.clone()) {
            out.push((cert, Class { graph: g, generators: form.generators }));
        }
    }
    Ok(out)
}

fn passes(g: &CubicMultipole, f: &GenerationFilters) -> Result<bool, GenerationError> {
    if f.girth_min > 0 && !girth(g).is_ok_and(|x| x >= f.girth_min) {
        return Ok(false);
    }
    if f.zeta_min > 4 && cyclic_connectivity(g)?.zeta < f.zeta_min {
        return Ok(false);
    }
    if f.snarks_only && is_three_edge_colorable(g)? {
        return Ok(false);
    }
    Ok(true)
}

/// Keeps the uncolourable graphs of girth at least `girth_min`.
pub fn filter_snarks<I>(graphs: I, girth_min: usize) -> impl Iterator<Item = CubicMultipole>
where
    I: IntoIterator<Item = CubicMultipole>,
{
    graphs.into_iter().filter(move |g| girth(g).is_ok_and(|x| x >= girth_min) && matches!(is_three_edge_colorable(g), Ok(false)))
}

/// Whether some edge of `g` is the middle edge of an I-extension of a
/// cyclically 4-edge-connected simple graph.
pub fn has_c4ec_reduction(g: &CubicMultipole) -> Result<bool, GenerationError> {
    for (x, _, _) in g.proper_edges() {
        let Ok(h) = reduce_i_extension(g, x) else { continue };
        if h.is_simple() && h.is_connected() && is_cyclically_k_edge_connected(&h, 4)? {
            return Ok(true);
        }
    }
    Ok(false)
}
