//! Oddness and resistance with witnesses.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{is_colorable_without, three_edge_coloring, Color, ColoringError};
use crate::graph::{CubicMultipole, EdgeId, GraphError, VertexId};
use crate::structure::bridges;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeasuresError {
    #[error("edge {0} is a bridge; oddness is defined for bridgeless graphs")]
    BridgePresent(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Oddness {
    pub oddness: usize,
    /// Circuits of a 2-factor attaining the minimum, each as a closed vertex walk.
    pub two_factor: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resistance {
    pub resistance: usize,
    pub removal: Vec<EdgeId>,
    /// No two removed edges share a vertex.
    pub removal_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeasuresRecord {
    pub oddness: usize,
    pub resistance: usize,
    pub witness_two_factor: Vec<Vec<VertexId>>,
    pub witness_removal: Vec<EdgeId>,
    pub removal_independent: bool,
}

pub fn measures(g: &CubicMultipole) -> Result<MeasuresRecord, MeasuresError> {
    let o = oddness(g)?;
    let r = resistance(g)?;
    Ok(MeasuresRecord {
        oddness: o.oddness,
        resistance: r.resistance,
        witness_two_factor: o.two_factor,
        witness_removal: r.removal,
        removal_independent: r.removal_independent,
    })
}

fn require_closed_cubic(g: &CubicMultipole) -> Result<(), MeasuresError> {
    if !g.is_closed() {
        return Err(GraphError::HasSemiedges.into());
    }
    g.require_cubic()?;
    Ok(())
}

/// Minimum number of odd circuits over all 2-factors.
///
/// A colourable graph gives oddness 0 directly (colours 1 and 2 span even
/// circuits). Otherwise complements of perfect matchings are enumerated,
/// stopping early at the lower bound 2.
pub fn oddness(g: &CubicMultipole) -> Result<Oddness, MeasuresError> {
    require_closed_cubic(g)?;
    if !g.is_connected() {
        return Err(MeasuresError::Disconnected);
    }
    if let Some(&b) = bridges(g).first() {
        return Err(MeasuresError::BridgePresent(b));
    }
    if let Some(c) = three_edge_coloring(g)? {
        let keep: Vec<bool> = (0..g.edge_count()).map(|e| c.get(e) != Color(3)).collect();
        return Ok(Oddness { oddness: 0, two_factor: circuits(g, &keep) });
    }
    let mut best: Option<(usize, Vec<bool>)> = None;
    let mut in_matching = vec![false; g.edge_count()];
    let mut covered = vec![false; g.vertex_count()];
    for_each_perfect_matching(g, &mut covered, &mut in_matching, &mut |m| {
        let keep: Vec<bool> = m.iter().map(|&x| !x).collect();
        let odd = odd_circuit_count(g, &keep);
        if best.as_ref().is_none_or(|(b, _)| odd < *b) {
            best = Some((odd, keep));
        }
        best.as_ref().unwrap().0 > 2
    });
    let (odd, keep) = best.expect("bridgeless cubic graphs have a perfect matching");
    Ok(Oddness { oddness: odd, two_factor: circuits(g, &keep) })
}

/// Calls `visit` on each perfect matching (as an edge mask) until it returns false.
/// The lowest uncovered vertex is matched along each of its edges in turn.
fn for_each_perfect_matching(
    g: &CubicMultipole,
    covered: &mut [bool],
    in_matching: &mut [bool],
    visit: &mut dyn FnMut(&[bool]) -> bool,
) -> bool {
    let Some(v) = covered.iter().position(|&c| !c) else {
        return visit(in_matching);
    };
    covered[v] = true;
    for &(e, side) in g.incidences(v) {
        let Some(w) = g.far_vertex(e, side) else { continue };
        if w == v || covered[w] {
            continue;
        }
        covered[w] = true;
        in_matching[e] = true;
        let go_on = for_each_perfect_matching(g, covered, in_matching, visit);
        in_matching[e] = false;
        covered[w] = false;
        if !go_on {
            covered[v] = false;
            return false;
        }
    }
    covered[v] = false;
    true
}

fn odd_circuit_count(g: &CubicMultipole, keep: &[bool]) -> usize {
    circuits(g, keep).iter().filter(|c| c.len() % 2 == 1).count()
}

/// Circuits of the 2-regular spanning subgraph given by `keep`, each as a
/// vertex walk starting at its least vertex.
pub(crate) fn circuits(g: &CubicMultipole, keep: &[bool]) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut walk = vec![s];
        seen[s] = true;
        let mut prev_edge = usize::MAX;
        let mut v = s;
        loop {
            let &(e, side) =
                g.incidences(v).iter().find(|&&(e, _)| keep[e] && e != prev_edge).expect("2-factor has two kept edges at every vertex");
            let w = g.far_vertex(e, side).expect("proper edge");
            if w == s {
                break;
            }
            seen[w] = true;
            walk.push(w);
            prev_edge = e;
            v = w;
        }
        out.push(walk);
    }
    out
}

/// Checks that `circuits` is a spanning set of disjoint circuits of `g` and
/// returns its number of odd circuits.
pub fn verify_two_factor(g: &CubicMultipole, circuits: &[Vec<VertexId>]) -> Option<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut used = vec![false; g.edge_count()];
    for c in circuits {
        if c.len() < 2 {
            return None;
        }
        for (i, &v) in c.iter().enumerate() {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
            let w = c[(i + 1) % c.len()];
            let e = g.edges_between(v, w).find(|&e| !used[e])?;
            used[e] = true;
        }
    }
    seen.iter().all(|&s| s).then(|| circuits.iter().filter(|c| c.len() % 2 == 1).count())
}

/// Fewest edges whose removal leaves a 3-edge-colourable graph.
///
/// Sizes 0, 2, 3, ... are tried in turn; size 1 is skipped because removing
/// one edge leaves a 2-pole, whose colourings would violate the parity lemma.
/// That exclusion is re-checked on every call.
pub fn resistance(g: &CubicMultipole) -> Result<Resistance, MeasuresError> {
    require_closed_cubic(g)?;
    let m = g.edge_count();
    let mut removed = vec![false; m];
    for size in (0..=m).filter(|&s| s != 1) {
        let mut chosen = Vec::with_capacity(size);
        if search_removal(g, size, 0, &mut chosen, &mut removed)? {
            if size >= 2 {
                for e in 0..m {
                    removed[e] = true;
                    assert!(!is_colorable_without(g, &removed)?, "removing edge {e} alone leaves a colourable graph");
                    removed[e] = false;
                }
            }
            let independent = chosen.iter().enumerate().all(|(i, &e)| chosen[i + 1..].iter().all(|&f| !g.edges_adjacent(e, f)));
            return Ok(Resistance { resistance: size, removal: chosen, removal_independent: independent });
        }
    }
    unreachable!("removing every edge leaves a colourable graph")
}

fn search_removal(
    g: &CubicMultipole,
    size: usize,
    from: usize,
    chosen: &mut Vec<EdgeId>,
    removed: &mut [bool],
) -> Result<bool, MeasuresError> {
    if chosen.len() == size {
        return Ok(is_colorable_without(g, removed)?);
    }
    for e in from..g.edge_count() {
        if g.edge_count() - e < size - chosen.len() {
            break;
        }
        chosen.push(e);
        removed[e] = true;
        if search_removal(g, size, e + 1, chosen, removed)? {
            removed[e] = false;
            return Ok(true);
        }
        removed[e] = false;
        chosen.pop();
    }
    Ok(false)
}
