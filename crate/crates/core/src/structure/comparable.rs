use serde::Serialize;

use super::{components_avoiding, StructureError};
use crate::graph::{CubicMultipole, EdgeId, EdgeKind, VertexId};

/// A nontrivial 2-edge-cut of a fragment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoCut {
    pub edges: [EdgeId; 2],
    /// Side 0 contains the vertex carrying semiedge 0 (or vertex 0 if that is not on either side).
    pub sides: [Vec<VertexId>; 2],
    /// Semiedge slots whose attachment vertex lies on each side.
    pub attachment_split: [Vec<usize>; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparabilityReport {
    /// Attachment vertex of each semiedge slot.
    pub attachments: [VertexId; 4],
    pub cuts: Vec<TwoCut>,
    pub four_cycle: bool,
    /// Index pairs into `cuts` that are not comparable.
    pub incomparable: Vec<(usize, usize)>,
    /// The common split of the semiedge slots, when every cut induces the same 2+2 split.
    pub bipartition: Option<[[usize; 2]; 2]>,
}

impl ComparabilityReport {
    /// Pairwise comparability, or the 4-cycle exception.
    pub fn comparability_holds(&self) -> bool {
        self.four_cycle || self.incomparable.is_empty()
    }
}

/// Nontrivial 2-edge-cuts of a 4-pole fragment and their pairwise comparability.
///
/// Only the shape of the input is checked (four dangling edges at four
/// distinct vertices, cubic, connected); that it was cut out of a cyclically
/// 4-edge-connected graph along a cycle-separating 4-edge-cut is the caller's claim.
pub fn check_comparable_two_cuts(k: &CubicMultipole) -> Result<ComparabilityReport, StructureError> {
    let bad = |why: &str| StructureError::PreconditionUnverifiable(why.to_string());
    if k.semiedge_count() != 4 {
        return Err(bad("fragment must be a 4-pole"));
    }
    if !k.is_cubic() || !k.is_connected() || k.vertex_count() == 0 || k.vertex_count() > 64 {
        return Err(bad("fragment must be a connected cubic multipole on at most 64 vertices"));
    }
    let mut attachments = [0; 4];
    for (slot, a) in attachments.iter_mut().enumerate() {
        *a = k.semiedge_vertex(slot).ok_or_else(|| bad("fragment has an isolated edge"))?;
    }
    let mut distinct = attachments;
    distinct.sort_unstable();
    if distinct.windows(2).any(|w| w[0] == w[1]) {
        return Err(bad("attachment vertices must be distinct"));
    }

    let proper: Vec<EdgeId> = k.proper_edges().map(|(e, _, _)| e).collect();
    let mut cuts = Vec::new();
    for (i, &e) in proper.iter().enumerate() {
        for &f in &proper[i + 1..] {
            let comps = components_avoiding(k, &[e, f]);
            if comps.len() < 2 {
                continue;
            }
            // trivial: the two edges at a degree-2 vertex of the fragment
            if comps.iter().any(|c| c.len() == 1 && k.edges()[e].touches(c[0]) && k.edges()[f].touches(c[0])) {
                continue;
            }
            let anchor = attachments[0];
            let (first, second) = if comps[0].contains(&anchor) { (0, 1) } else { (1, 0) };
            let mut sides = [comps[first].clone(), comps[second].clone()];
            if comps.len() > 2 {
                // cannot happen in a 2-connected fragment; keep the rest with side 1
                for (j, c) in comps.iter().enumerate() {
                    if j != first && j != second {
                        sides[1].extend(c);
                    }
                }
                sides[1].sort_unstable();
            }
            let split = [0, 1].map(|s| (0..4).filter(|&slot| sides[s].contains(&attachments[slot])).collect::<Vec<usize>>());
            cuts.push(TwoCut { edges: [e, f], sides, attachment_split: split });
        }
    }

    let mask = |vs: &[VertexId]| vs.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut incomparable = Vec::new();
    for i in 0..cuts.len() {
        for j in i + 1..cuts.len() {
            let xs = [mask(&cuts[i].sides[0]), mask(&cuts[i].sides[1])];
            let ys = [mask(&cuts[j].sides[0]), mask(&cuts[j].sides[1])];
            let comparable = xs.iter().any(|&x| ys.iter().any(|&y| x & y == 0));
            if !comparable {
                incomparable.push((i, j));
            }
        }
    }

    let four_cycle =
        k.vertex_count() == 4 && k.proper_edges().count() == 4 && k.edges().iter().all(|e| e.kind() != EdgeKind::Isolated) && k.is_simple();

    let bipartition = match cuts.first() {
        Some(c0) if c0.attachment_split.iter().all(|s| s.len() == 2) => {
            let split = [[c0.attachment_split[0][0], c0.attachment_split[0][1]], [c0.attachment_split[1][0], c0.attachment_split[1][1]]];
            cuts.iter().all(|c| c.attachment_split == c0.attachment_split).then_some(split)
        }
        _ => None,
    };

    Ok(ComparabilityReport { attachments, cuts, four_cycle, incomparable, bipartition })
}
