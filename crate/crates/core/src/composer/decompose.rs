use serde::Serialize;

use super::{colour_open_completion, complete, extend_with_two_vertices, small_completions, Completion, ComposeError};
use crate::coloring::{classify_four_pole, is_three_edge_colorable, ColoringError, OpenKind, PoleClassification};
use crate::graph::CubicMultipole;
use crate::measures::oddness;
use crate::structure::{cyclic_connectivity, CutReport, Fragment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseKind {
    BothUncolourable,
    UncolourableAndHeterochromatic,
    UncolourableAndIsochromatic,
    /// One side uncolourable, the other colourable but colour-closed.
    UncolourableAndColourClosed,
    /// Both sides colourable; the graph then has oddness at most 2.
    BothColourable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub completion: Completion,
    #[serde(skip)]
    pub graph: CubicMultipole,
    pub order: usize,
    pub zeta: usize,
    pub colourable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub fragment: Fragment,
    pub class: PoleClassification,
    /// Uncolourable sides get the cyclically 4-edge-connected two-vertex
    /// closure (absent if no pairing achieves it), colour-open sides their
    /// snark completion, colour-closed sides nothing.
    pub extension: Option<ExtensionReport>,
    /// How many of the six small completions are uncolourable.
    pub snark_completions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCase {
    pub cut: Vec<usize>,
    pub kind: CaseKind,
    /// Sides in an order where an uncolourable side comes first.
    pub sides: [SideReport; 2],
    /// Every side has exactly one uncolourable small completion.
    pub unique: bool,
    /// Oddness of the whole graph, computed when both sides are colourable.
    pub oddness_when_both_colourable: Option<usize>,
}

/// Classifies both sides of a cycle-separating 4-edge-cut and builds the
/// extensions their classes call for.
pub fn decompose_along_cut(g: &CubicMultipole, cut: &CutReport) -> Result<DecompositionCase, ComposeError> {
    if cut.size() != 4 {
        return Err(ComposeError::NotAFourCut(cut.size()));
    }
    if !cut.cycle_separating {
        return Err(ComposeError::NotCycleSeparating);
    }
    let mut sides = [side(&cut.fragments[0])?, side(&cut.fragments[1])?];
    let unc = |s: &SideReport| s.class == PoleClassification::Uncolourable;
    if !unc(&sides[0]) && unc(&sides[1]) {
        sides.swap(0, 1);
    }
    let kind = match (&sides[0].class, &sides[1].class) {
        (PoleClassification::Uncolourable, PoleClassification::Uncolourable) => CaseKind::BothUncolourable,
        (PoleClassification::Uncolourable, PoleClassification::ColourOpen { kind: OpenKind::Heterochromatic, .. }) => {
            CaseKind::UncolourableAndHeterochromatic
        }
        (PoleClassification::Uncolourable, PoleClassification::ColourOpen { kind: OpenKind::Isochromatic, .. }) => {
            CaseKind::UncolourableAndIsochromatic
        }
        (PoleClassification::Uncolourable, PoleClassification::ColourClosed) => CaseKind::UncolourableAndColourClosed,
        _ => CaseKind::BothColourable,
    };
    let oddness_when_both_colourable = match kind {
        CaseKind::BothColourable => Some(oddness(g)?.oddness),
        _ => None,
    };
    let unique = sides.iter().all(|s| s.snark_completions == 1);
    Ok(DecompositionCase { cut: cut.cut.clone(), kind, sides, unique, oddness_when_both_colourable })
}

fn side(fragment: &Fragment) -> Result<SideReport, ComposeError> {
    let m = &fragment.multipole;
    let class = classify_four_pole(m)?;
    let completion = match class {
        PoleClassification::Uncolourable => match extend_with_two_vertices(m) {
            Ok((_, couples)) => Some(Completion::TwoVertices(couples)),
            Err(ComposeError::NoValidPairing) => None,
            Err(e) => return Err(e),
        },
        PoleClassification::ColourOpen { .. } => Some(colour_open_completion(m)?),
        PoleClassification::ColourClosed => None,
    };
    let extension = match completion {
        Some(c) => {
            let graph = complete(m, c)?;
            Some(ExtensionReport {
                completion: c,
                order: graph.vertex_count(),
                zeta: cyclic_connectivity(&graph)?.zeta,
                colourable: colourable(&graph)?,
                graph,
            })
        }
        None => None,
    };
    let mut snark_completions = 0;
    for (_, h) in small_completions(m)? {
        if !colourable(&h)? {
            snark_completions += 1;
        }
    }
    Ok(SideReport { fragment: fragment.clone(), class, extension, snark_completions })
}

/// 3-edge-colourability where a loop simply makes the graph uncolourable.
fn colourable(g: &CubicMultipole) -> Result<bool, ComposeError> {
    match is_three_edge_colorable(g) {
        Err(ColoringError::LoopPresent) => Ok(false),
        r => Ok(r?),
    }
}
