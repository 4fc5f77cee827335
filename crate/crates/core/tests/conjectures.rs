use std::collections::BTreeSet;

use itertools::Itertools;
use snarkkit::conjectures::{
    has_dominating_circuit, has_petersen_coloring, petersen_star_table, total_chromatic_number, verify_dominating_circuit,
    verify_petersen_coloring, verify_total_coloring, ConjectureError, Witness,
};
use snarkkit::generator::{generate_c4ec_cubic, GenerationTask};
use snarkkit::graph::{cube_q3, flower_snark, k33, k4, petersen, prism, CubicMultipole};

/// Whether some edge set forms one circuit touching every edge.
fn naive_dominating(g: &CubicMultipole) -> bool {
    let edges: Vec<(usize, usize)> = g.proper_edges().map(|(_, u, v)| (u, v)).collect();
    let n = g.vertex_count();
    (1u64..1 << edges.len()).any(|mask| {
        let chosen: Vec<(usize, usize)> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut deg = vec![0; n];
        for &(u, v) in &chosen {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        // One circuit: its vertices are connected through chosen edges.
        let on: Vec<usize> = (0..n).filter(|&v| deg[v] == 2).collect();
        let mut reached = vec![false; n];
        let mut stack = vec![on[0]];
        reached[on[0]] = true;
        while let Some(x) = stack.pop() {
            for &(u, v) in &chosen {
                for (a, b) in [(u, v), (v, u)] {
                    if a == x && !reached[b] {
                        reached[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        on.iter().all(|&v| reached[v]) && edges.iter().all(|&(u, v)| deg[u] == 2 || deg[v] == 2)
    })
}

/// All 4^(n+m) total colourings tried directly.
fn naive_total_four(g: &CubicMultipole) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    (0..n + m).map(|_| 0..4u8).multi_cartesian_product().any(|c| verify_total_coloring(g, &c[..n], &c[n..], 4))
}

#[test]
fn dominating_circuit_matches_naive_search() {
    let mut graphs = vec![k4(), k33(), prism(3), prism(4), prism(5), petersen(), flower_snark(3)];
    let mut gen = generate_c4ec_cubic(&GenerationTask::new(12)).unwrap();
    while let Some(l) = gen.next_level() {
        graphs.extend(l.unwrap().graphs);
    }
    for g in &graphs {
        let v = has_dominating_circuit(g).unwrap();
        assert_eq!(v.holds, naive_dominating(g));
        if let Some(Witness::Circuit(c)) = &v.witness {
            assert!(verify_dominating_circuit(g, c));
        }
    }
}

#[test]
fn total_colouring_of_small_graphs_matches_exhaustion() {
    let (k, w) = total_chromatic_number(&k4()).unwrap();
    assert!(!naive_total_four(&k4()));
    assert_eq!((k, w), (5, None));
    // Complete bipartite K_{n,n} has total chromatic number n + 2.
    assert_eq!(total_chromatic_number(&k33()).unwrap().0, 5);
    for g in [prism(3), prism(4), cube_q3(), petersen()] {
        let (k, w) = total_chromatic_number(&g).unwrap();
        if let Some(Witness::TotalColoring { vertices, edges }) = w {
            assert!(verify_total_coloring(&g, &vertices, &edges, 4));
        } else {
            assert_eq!(k, 5);
        }
    }
}

#[test]
fn star_table_is_the_mutually_adjacent_triples() {
    let p = petersen();
    let ends: Vec<(usize, usize)> = p.proper_edges().map(|(_, u, v)| (u, v)).collect();
    let touch = |a: usize, b: usize| {
        let ((a0, a1), (b0, b1)) = (ends[a], ends[b]);
        a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1
    };
    let triples: BTreeSet<[usize; 3]> =
        (0..15).tuple_combinations().filter(|&(a, b, c)| touch(a, b) && touch(a, c) && touch(b, c)).map(|(a, b, c)| [a, b, c]).collect();
    let stars: BTreeSet<[usize; 3]> = petersen_star_table().into_iter().collect();
    assert_eq!(triples, stars);
}

#[test]
fn petersen_colourings_verify() {
    for g in [petersen(), flower_snark(5), cube_q3(), k4(), flower_snark(3)] {
        let v = has_petersen_coloring(&g).unwrap();
        assert!(v.holds);
        let Some(Witness::EdgeMap(m)) = v.witness else { panic!("missing witness") };
        assert!(verify_petersen_coloring(&g, &m));
    }
}

#[test]
fn preconditions() {
    let bridged = CubicMultipole::from_pairs(
        10,
        &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (8, 9), (9, 9)],
    )
    .unwrap();
    assert!(matches!(has_petersen_coloring(&bridged), Err(ConjectureError::BridgePresent(_))));
    let two =
        CubicMultipole::from_pairs(8, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)])
            .unwrap();
    assert_eq!(has_dominating_circuit(&two).unwrap_err(), ConjectureError::Disconnected);
    let theta = CubicMultipole::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
    assert_eq!(total_chromatic_number(&theta).unwrap_err(), ConjectureError::NotSimple);
}
