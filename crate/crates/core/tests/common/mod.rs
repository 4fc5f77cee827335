#![allow(dead_code)]

pub mod invariants;

use std::collections::HashSet;

use itertools::Itertools;
use snarkkit::canonical::canonical_certificate;
use snarkkit::graph::{complete_junction, extract_four_pole, partial_junction, petersen, CubicMultipole, FourPoleMode, JunctionPairing};
use snarkkit::structure::CutReport;

pub struct Construction {
    /// Petersen with edges 0 and 2 severed.
    pub h: CubicMultipole,
    /// Petersen with the adjacent vertices 0 and 1 removed.
    pub i: CubicMultipole,
    /// Two copies of `h` joined along one couple.
    pub h2: CubicMultipole,
    /// `i` closed off by `h2`; 28 vertices.
    pub g: CubicMultipole,
}

pub fn construction() -> Construction {
    let p = petersen();
    let h = extract_four_pole(&p, FourPoleMode::NonadjacentEdges(0, 2)).unwrap();
    let i = extract_four_pole(&p, FourPoleMode::AdjacentVertices(0, 1)).unwrap();
    let h2 = partial_junction(&h, &h, &JunctionPairing::new(vec![(2, 0), (3, 1)]).unwrap()).unwrap();
    let g = complete_junction(&i, &h2, &JunctionPairing::identity(4)).unwrap();
    Construction { h, i, h2, g }
}

/// Edges of `g` with exactly one end among the first `k` vertices.
pub fn cut_around_prefix(g: &CubicMultipole, k: usize) -> CutReport {
    let edges: Vec<usize> = g.proper_edges().filter(|&(_, u, v)| (u < k) != (v < k)).map(|(e, _, _)| e).collect();
    CutReport::from_edges(g, &edges).unwrap()
}

/// Dot product of two Petersen graphs: edges `e`, `f` severed on one side,
/// adjacent vertices 0 and 1 removed on the other.
pub fn dot_product(e: usize, f: usize) -> CubicMultipole {
    let p = petersen();
    let h = extract_four_pole(&p, FourPoleMode::NonadjacentEdges(e, f)).unwrap();
    let i = extract_four_pole(&p, FourPoleMode::AdjacentVertices(0, 1)).unwrap();
    complete_junction(&h, &i, &JunctionPairing::identity(4)).unwrap()
}

/// Connected simple cubic graphs on `n` vertices, labelled in discovery order:
/// the lowest vertex with spare degree picks its remaining neighbours in
/// increasing order among discovered vertices or the next undiscovered one.
pub fn naive_cubic(n: usize) -> Vec<CubicMultipole> {
    fn rec(n: usize, adj: &mut Vec<Vec<usize>>, discovered: usize, v: usize, min_w: usize, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(v) = (v..n).find(|&u| adj[u].len() < 3) else {
            out.push((0..n).flat_map(|u| adj[u].iter().filter(move |&&w| u < w).map(move |&w| (u, w))).collect());
            return;
        };
        if v >= discovered {
            return;
        }
        let lo = min_w.max(v + 1);
        for w in lo..=discovered.min(n - 1) {
            if adj[w].len() >= 3 || adj[v].contains(&w) {
                continue;
            }
            let next_discovered = if w == discovered { discovered + 1 } else { discovered };
            adj[v].push(w);
            adj[w].push(v);
            let (nv, nmin) = if adj[v].len() == 3 { (v + 1, 0) } else { (v, w + 1) };
            rec(n, adj, next_discovered, nv, nmin, out);
            adj[v].pop();
            adj[w].pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, &mut vec![Vec::new(); n], 1, 0, 0, &mut raw);
    let mut seen = HashSet::new();
    raw.into_iter()
        .map(|pairs| CubicMultipole::from_pairs(n, &pairs).unwrap())
        .filter(|g| seen.insert(canonical_certificate(g).unwrap().canonical_adjacency))
        .collect()
}

/// No set of at most three edges splits the graph into two parts that both
/// contain a cycle.
pub fn naive_c4ec(g: &CubicMultipole) -> bool {
    let pairs: Vec<(usize, usize)> = g.proper_edges().map(|(_, u, v)| (u, v)).collect();
    let n = g.vertex_count();
    for k in 1..=3 {
        for cut in (0..pairs.len()).combinations(k) {
            let mut comp = vec![usize::MAX; n];
            let mut c = 0;
            for s in 0..n {
                if comp[s] != usize::MAX {
                    continue;
                }
                let mut stack = vec![s];
                comp[s] = c;
                while let Some(x) = stack.pop() {
                    for (i, &(a, b)) in pairs.iter().enumerate() {
                        if cut.contains(&i) {
                            continue;
                        }
                        let y = if a == x {
                            b
                        } else if b == x {
                            a
                        } else {
                            continue;
                        };
                        if comp[y] == usize::MAX {
                            comp[y] = c;
                            stack.push(y);
                        }
                    }
                }
                c += 1;
            }
            if c < 2 {
                continue;
            }
            // A part has a cycle iff it has at least as many internal edges as vertices.
            let has_cycle = (0..c).all(|p| {
                let verts = comp.iter().filter(|&&x| x == p).count();
                let inner = pairs.iter().enumerate().filter(|&(i, &(a, _))| !cut.contains(&i) && comp[a] == p).count();
                inner >= verts
            });
            if has_cycle {
                return false;
            }
        }
    }
    true
}

/// Every level of a generation run, unwrapped.
pub fn levels(task: &snarkkit::generator::GenerationTask) -> Vec<snarkkit::generator::Level> {
    let mut g = snarkkit::generator::generate_c4ec_cubic(task).unwrap();
    std::iter::from_fn(|| g.next_level()).map(Result::unwrap).collect()
}
