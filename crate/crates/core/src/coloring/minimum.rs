use serde::Serialize;

use super::kernel::Instance;
use super::{edge_vertices, require_loopless, Color, ColoringError, EdgeColoring};
use crate::graph::{CubicMultipole, EdgeId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimumColoring {
    pub coloring: EdgeColoring,
    pub zero_edges: Vec<EdgeId>,
    /// Always true for a proper colouring; reported rather than assumed.
    pub zero_class_independent: bool,
}

impl MinimumColoring {
    /// For each 0-edge, the non-zero colour that appears twice around it.
    pub fn repeated_colors(&self, g: &CubicMultipole) -> Vec<Option<Color>> {
        self.zero_edges
            .iter()
            .map(|&e| {
                let mut seen = [0usize; 4];
                for v in edge_vertices(g, e) {
                    for &(f, _) in g.incidences(v) {
                        if f != e {
                            seen[self.coloring.get(f).0 as usize] += 1;
                        }
                    }
                }
                (1..4).find(|&c| seen[c] == 2).map(|c| Color(c as u8))
            })
            .collect()
    }
}

/// A proper 4-edge-colouring whose colour-0 class is as small as possible.
///
/// Candidate 0-classes are matchings tried by increasing size (a single
/// 0-edge is skipped: the parity lemma on the resulting 2-pole rules it out),
/// each tested by 3-colouring the rest of the graph.
pub fn minimum_zero_class_coloring(g: &CubicMultipole) -> Result<MinimumColoring, ColoringError> {
    require_loopless(g)?;
    g.require_cubic()?;
    let m = g.edge_count();
    let proper: Vec<EdgeId> = g.proper_edges().map(|(e, _, _)| e).collect();
    for size in (0..=m).filter(|&s| s != 1) {
        let mut chosen = Vec::with_capacity(size);
        if let Some(found) = search_matchings(g, &proper, size, 0, &mut chosen) {
            let zero_edges = chosen_sorted(&found.1);
            let independent = zero_edges.iter().enumerate().all(|(i, &e)| zero_edges[i + 1..].iter().all(|&f| !g.edges_adjacent(e, f)));
            return Ok(MinimumColoring { coloring: found.0, zero_edges, zero_class_independent: independent });
        }
    }
    unreachable!("every loopless cubic multipole has a proper 4-edge-colouring")
}

fn chosen_sorted(v: &[EdgeId]) -> Vec<EdgeId> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn search_matchings(
    g: &CubicMultipole,
    proper: &[EdgeId],
    size: usize,
    from: usize,
    chosen: &mut Vec<EdgeId>,
) -> Option<(EdgeColoring, Vec<EdgeId>)> {
    if chosen.len() == size {
        let mut removed = vec![false; g.edge_count()];
        for &e in chosen.iter() {
            removed[e] = true;
        }
        return Instance::new(g, Some(&removed)).solve().map(|c| (c, chosen.clone()));
    }
    for idx in from..proper.len() {
        let e = proper[idx];
        if chosen.iter().any(|&f| g.edges_adjacent(e, f)) {
            continue;
        }
        chosen.push(e);
        if let Some(r) = search_matchings(g, proper, size, idx + 1, chosen) {
            return Some(r);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{flower_snark, k4, petersen};

    fn check_min(g: &CubicMultipole, expected: usize) {
        let r = minimum_zero_class_coloring(g).unwrap();
        assert_eq!(r.zero_edges.len(), expected);
        assert!(r.zero_class_independent);
        assert!(r.coloring.is_proper(g));
        assert_eq!(r.coloring.count(Color::ZERO), expected);
        let reps = r.repeated_colors(g);
        assert!(reps.iter().all(|c| c.is_some()), "each 0-edge sees all three colours with one repeated");
        // m1 = m2 = m3 = m (mod 2)
        for c in Color::NONZERO {
            let mi = reps.iter().filter(|&&x| x == Some(c)).count();
            assert_eq!(mi % 2, expected % 2);
        }
    }

    #[test]
    fn colourable_graph_has_empty_zero_class() {
        check_min(&k4(), 0);
    }

    #[test]
    fn petersen_needs_two_zero_edges() {
        let p = petersen();
        check_min(&p, 2);
        let r = minimum_zero_class_coloring(&p).unwrap();
        let reps = r.repeated_colors(&p);
        assert_eq!(reps[0], reps[1]);
        assert!(!p.edges_adjacent(r.zero_edges[0], r.zero_edges[1]));
    }

    #[test]
    fn flower_j7_needs_two() {
        check_min(&flower_snark(7), 2);
    }
}
