//! Snark extensions of 4-poles, decomposition along 4-edge-cuts, the 4-join
//! and the oddness search over 4-joins of a snark pool.

mod decompose;
mod join;
mod pipeline;

pub use decompose::{decompose_along_cut, CaseKind, DecompositionCase, ExtensionReport, SideReport};
pub use join::{four_join_stream, Extraction, FourJoinStream, JoinOptions, JoinOutput, JoinPlan, JoinSpec, BIJECTIONS};
pub use pipeline::{oddness4_search, ClassRecord, JoinPipeline, PairAudit, PipelineConfig, PipelineResult, PipelineState};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::CanonicalError;
use crate::coloring::{classify_four_pole, ColoringError, Couples, OpenKind, PoleClassification};
use crate::graph::{close_with_two_vertices, join_within, CubicMultipole, Graph6Error, GraphError};
use crate::measures::MeasuresError;
use crate::structure::{is_cyclically_k_edge_connected, StructureError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error("4-pole is not colour-open ({0:?})")]
    NotColourOpen(PoleClassification),
    #[error("no attachment pairing yields a cyclically 4-edge-connected graph")]
    NoValidPairing,
    #[error("cut is not cycle-separating")]
    NotCycleSeparating,
    #[error("cut has {0} edges, expected 4")]
    NotAFourCut(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(transparent)]
    Measures(#[from] MeasuresError),
}

/// A way of closing a 4-pole with at most two new vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Completion {
    /// Join the two semiedges of each pair; no new vertex.
    JoinPairs(Couples),
    /// Attach each pair to its own new vertex and join the new vertices.
    TwoVertices(Couples),
}

pub fn complete(m: &CubicMultipole, c: Completion) -> Result<CubicMultipole, GraphError> {
    match c {
        Completion::JoinPairs(Couples([a, b])) => join_within(m, &[(a[0], a[1]), (b[0], b[1])]),
        Completion::TwoVertices(Couples([a, b])) => close_with_two_vertices(m, a, b),
    }
}

/// All six completions of a 4-pole, joins first, each in [`Couples::ALL`] order.
pub fn small_completions(m: &CubicMultipole) -> Result<Vec<(Completion, CubicMultipole)>, GraphError> {
    let kinds = Couples::ALL.map(Completion::JoinPairs).into_iter().chain(Couples::ALL.map(Completion::TwoVertices));
    kinds.map(|c| complete(m, c).map(|g| (c, g))).collect()
}

/// The snark a colour-open 4-pole extends to: joining within couples when
/// heterochromatic, two new vertices on the couples when isochromatic.
pub fn extend_colour_open(m: &CubicMultipole) -> Result<CubicMultipole, ComposeError> {
    Ok(complete(m, colour_open_completion(m)?)?)
}

pub fn colour_open_completion(m: &CubicMultipole) -> Result<Completion, ComposeError> {
    match classify_four_pole(m)? {
        PoleClassification::ColourOpen { kind: OpenKind::Heterochromatic, couples } => Ok(Completion::JoinPairs(couples)),
        PoleClassification::ColourOpen { kind: OpenKind::Isochromatic, couples } => Ok(Completion::TwoVertices(couples)),
        other => Err(ComposeError::NotColourOpen(other)),
    }
}

/// Closes a fragment with two adjacent new vertices so that the result is
/// cyclically 4-edge-connected, trying the three attachment pairings in
/// [`Couples::ALL`] order.
pub fn extend_with_two_vertices(fragment: &CubicMultipole) -> Result<(CubicMultipole, Couples), ComposeError> {
    if fragment.semiedge_count() != 4 {
        return Err(GraphError::SemiedgeCountMismatch { expected: 4, found: fragment.semiedge_count() }.into());
    }
    for couples in Couples::ALL {
        let g = complete(fragment, Completion::TwoVertices(couples))?;
        if g.is_connected() && is_cyclically_k_edge_connected(&g, 4)? {
            return Ok((g, couples));
        }
    }
    Err(ComposeError::NoValidPairing)
}
