//! Named graphs and small multipoles used throughout the crate and its tests.

use super::{CubicMultipole, Edge};

/// Petersen graph: outer cycle 0..4, inner pentagram 5-7-9-6-8-5, spokes i -- i+5.
pub fn petersen() -> CubicMultipole {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
    }
    for (a, b) in [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)] {
        pairs.push((a, b));
    }
    for i in 0..5 {
        pairs.push((i, i + 5));
    }
    CubicMultipole::from_pairs(10, &pairs).unwrap()
}

pub fn k4() -> CubicMultipole {
    CubicMultipole::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// K_{3,3} with parts {0,1,2} and {3,4,5}.
pub fn k33() -> CubicMultipole {
    let mut pairs = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            pairs.push((a, b));
        }
    }
    CubicMultipole::from_pairs(6, &pairs).unwrap()
}

/// The 3-cube on bit strings 0..8.
pub fn cube_q3() -> CubicMultipole {
    let mut pairs = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                pairs.push((v, w));
            }
        }
    }
    CubicMultipole::from_pairs(8, &pairs).unwrap()
}

/// Flower snark J_n for odd n >= 3 (J_3 is the Tietze graph).
///
/// Vertex `4i` is the star centre c_i, `4i+1` is x_i, `4i+2` is y_i, `4i+3` is z_i.
pub fn flower_snark(n: usize) -> CubicMultipole {
    assert!(n >= 3 && n % 2 == 1, "flower snarks need odd n >= 3");
    let (c, x, y, z) = (|i: usize| 4 * i, |i: usize| 4 * i + 1, |i: usize| 4 * i + 2, |i: usize| 4 * i + 3);
    let mut pairs = Vec::new();
    for i in 0..n {
        pairs.extend([(c(i), x(i)), (c(i), y(i)), (c(i), z(i))]);
        pairs.push((x(i), x((i + 1) % n)));
    }
    for i in 0..n - 1 {
        pairs.push((y(i), y(i + 1)));
        pairs.push((z(i), z(i + 1)));
    }
    pairs.push((y(n - 1), z(0)));
    pairs.push((z(n - 1), y(0)));
    CubicMultipole::from_pairs(4 * n, &pairs).unwrap()
}

/// Prism over an n-cycle (circular ladder), a colourable cubic graph on 2n vertices.
pub fn prism(n: usize) -> CubicMultipole {
    let mut pairs = Vec::new();
    for i in 0..n {
        pairs.push((i, (i + 1) % n));
        pairs.push((n + i, n + (i + 1) % n));
        pairs.push((i, n + i));
    }
    CubicMultipole::from_pairs(2 * n, &pairs).unwrap()
}

/// A 4-cycle 0-1-2-3 with one dangling edge per vertex, semiedge i at vertex i.
pub fn c4_pole() -> CubicMultipole {
    let mut edges: Vec<Edge> = (0..4).map(|i| Edge::proper(i, (i + 1) % 4)).collect();
    edges.extend((0..4).map(|i| Edge::dangling(i, i)));
    CubicMultipole::new(4, edges).unwrap()
}

/// Two isolated edges with semiedge order (a1, a2, b1, b2).
pub fn isolated_edge_pair() -> CubicMultipole {
    CubicMultipole::new(0, vec![Edge::isolated(0, 1), Edge::isolated(2, 3)]).unwrap()
}

/// One vertex with three dangling edges.
pub fn single_vertex_pole() -> CubicMultipole {
    CubicMultipole::new(1, (0..3).map(|s| Edge::dangling(0, s)).collect()).unwrap()
}

/// Two adjacent vertices each carrying two dangling edges (slots 0,1 at vertex 0).
pub fn two_vertex_pole() -> CubicMultipole {
    CubicMultipole::new(2, vec![Edge::proper(0, 1), Edge::dangling(0, 0), Edge::dangling(0, 1), Edge::dangling(1, 2), Edge::dangling(1, 3)])
        .unwrap()
}
