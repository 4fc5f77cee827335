//! Invariant checks shared by the property suites and the acceptance run.
//! Each case returns the first violation it finds.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use snarkkit::canonical::canonical_certificate;
use snarkkit::coloring::{
    boundary_colorings, is_colorable_without, is_three_edge_colorable, kempe_chain, kempe_switch, minimum_zero_class_coloring,
    three_edge_coloring, Color,
};
use snarkkit::composer::{decompose_along_cut, CaseKind};
use snarkkit::generator::GenerationTask;
use snarkkit::graph::{encode_graph6, flower_snark, petersen, CubicMultipole, End};
use snarkkit::measures::{oddness, resistance, verify_two_factor};
use snarkkit::structure::{
    bonds, check_comparable_two_cuts, components, cycle_separating_cuts, cyclic_connectivity, girth, is_bridgeless, Fragment,
};

use super::{construction, dot_product, levels, naive_cubic};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Connected simple cubic graphs on 4 to 12 vertices, bridged ones included.
pub fn cubic_small() -> &'static [CubicMultipole] {
    static POOL: OnceLock<Vec<CubicMultipole>> = OnceLock::new();
    POOL.get_or_init(|| (4..=12).step_by(2).flat_map(naive_cubic).collect())
}

/// Cyclically 4-edge-connected cubic graphs on up to 16 vertices.
pub fn c4ec() -> &'static [CubicMultipole] {
    static POOL: OnceLock<Vec<CubicMultipole>> = OnceLock::new();
    POOL.get_or_init(|| levels(&GenerationTask::new(16)).into_iter().flat_map(|l| l.graphs).collect())
}

pub fn snarks() -> &'static [CubicMultipole] {
    static POOL: OnceLock<Vec<CubicMultipole>> = OnceLock::new();
    POOL.get_or_init(|| vec![petersen(), dot_product(0, 2), dot_product(0, 6), flower_snark(5), flower_snark(7), construction().g])
}

pub fn shuffled(g: &CubicMultipole, rng: &mut StdRng) -> CubicMultipole {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Every proper 3-edge-colouring, by plain backtracking in edge order.
pub fn naive_colourings(m: &CubicMultipole) -> Vec<Vec<u8>> {
    fn rec(m: &CubicMultipole, e: usize, colours: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if e == m.edge_count() {
            out.push(colours.clone());
            return;
        }
        for c in 1..=3 {
            let clash = m.edges()[e].ends.iter().any(|end| match end {
                End::Vertex(v) => m.incidences(*v).iter().any(|&(f, _)| f < e && colours[f] == c),
                End::Semiedge(_) => false,
            });
            if !clash {
                colours.push(c);
                rec(m, e + 1, colours, out);
                colours.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, 0, &mut Vec::new(), &mut out);
    out
}

/// Least number of odd circuits over all spanning 2-regular subgraphs.
pub fn naive_oddness(g: &CubicMultipole) -> usize {
    fn rec(g: &CubicMultipole, e: usize, chosen: &mut Vec<bool>, deg: &mut Vec<usize>, best: &mut usize) {
        if e == g.edge_count() {
            if deg.iter().all(|&d| d == 2) {
                *best = (*best).min(odd_circuits(g, chosen));
            }
            return;
        }
        let (u, v) = g.edges()[e].endpoints().unwrap();
        // Every vertex whose last edge is `e` must already be settled.
        let last = |w: usize| g.incidences(w).iter().all(|&(f, _)| f <= e);
        for take in [true, false] {
            let (du, dv) = (deg[u] + take as usize, deg[v] + take as usize);
            if du > 2 || dv > 2 || (last(u) && du != 2) || (last(v) && dv != 2) {
                continue;
            }
            chosen[e] = take;
            deg[u] = du;
            deg[v] = dv;
            rec(g, e + 1, chosen, deg, best);
            deg[u] -= take as usize;
            deg[v] -= take as usize;
        }
        chosen[e] = false;
    }
    fn odd_circuits(g: &CubicMultipole, chosen: &[bool]) -> usize {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        let mut odd = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut size = 0;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                size += 1;
                for &(f, _) in g.incidences(x) {
                    if chosen[f] {
                        let (a, b) = g.edges()[f].endpoints().unwrap();
                        let y = if a == x { b } else { a };
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            odd += size % 2;
        }
        odd
    }
    let mut best = usize::MAX;
    rec(g, 0, &mut vec![false; g.edge_count()], &mut vec![0; g.vertex_count()], &mut best);
    best
}

/// The graph has no cycle: it is a forest on its vertices.
pub fn is_forest(m: &CubicMultipole) -> bool {
    let inner = m.proper_edges().count();
    inner + components(m).len() == m.vertex_count()
}

fn g6(g: &CubicMultipole) -> String {
    encode_graph6(g).unwrap_or_else(|_| "<multigraph>".into())
}

/// A random induced sub-multipole of a small cubic graph: its proper
/// colourings, enumerated naively, obey the parity congruences and give
/// exactly the boundary set the kernel reports.
pub fn parity_case(index: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let pool = cubic_small();
    let g = shuffled(&pool[index % pool.len()], &mut rng);
    let n = g.vertex_count();
    let removed = rng.gen_range(1..=3.min(n - 1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let gone: HashSet<usize> = order[..removed].iter().copied().collect();
    let keep: Vec<usize> = (0..n).filter(|v| !gone.contains(v)).collect();
    let cut: Vec<usize> = g.proper_edges().filter(|&(_, u, v)| gone.contains(&u) != gone.contains(&v)).map(|(e, ..)| e).collect();
    let m = Fragment::from_vertices(&g, &keep, &cut).multipole;
    let k = m.semiedge_count();

    let all = naive_colourings(&m);
    let mut tuples = BTreeSet::new();
    for c in &all {
        let t: Vec<u8> = m.semiedges().iter().map(|&(e, _)| c[e]).collect();
        for colour in 1..=3u8 {
            let count = t.iter().filter(|&&x| x == colour).count();
            ensure!(count % 2 == k % 2, "boundary {t:?} of {} breaks parity", g6(&g));
        }
        tuples.insert(t);
    }
    let set = boundary_colorings(&m).map_err(|e| e.to_string())?;
    ensure!(set.tuples == tuples, "boundary set differs from enumeration on {}", g6(&g));
    ensure!(is_three_edge_colorable(&m).unwrap() == !all.is_empty(), "colourability differs on {}", g6(&g));
    if let Some(types) = set.types {
        ensure!(types.len() != 1, "colourable 4-pole with a single type");
    }
    Ok(())
}

/// Oddness and resistance of a relabelled bridgeless graph, one case in
/// five a snark.
pub fn measures_case(pick: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let g = if pick.is_multiple_of(5) {
        let s = snarks();
        s[pick / 5 % s.len()].clone()
    } else {
        let pool: Vec<&CubicMultipole> = cubic_small().iter().filter(|g| is_bridgeless(g)).collect();
        pool[pick % pool.len()].clone()
    };
    let g = shuffled(&g, &mut rng);
    let name = g6(&g);
    let colourable = is_three_edge_colorable(&g).unwrap();
    let w = oddness(&g).map_err(|e| e.to_string())?;
    let r = resistance(&g).map_err(|e| e.to_string())?;
    let (omega, rho) = (w.oddness, r.resistance);
    ensure!(verify_two_factor(&g, &w.two_factor) == Some(omega), "bad 2-factor witness on {name}");
    ensure!(rho <= omega, "resistance {rho} above oddness {omega} on {name}");
    ensure!(omega % 2 == 0, "odd oddness on {name}");
    ensure!(rho != 1, "resistance 1 on {name}");
    ensure!((rho == 2) == (omega == 2), "resistance {rho}, oddness {omega} on {name}");
    ensure!((rho == 0) == colourable && (omega == 0) == colourable, "zero values disagree with colourability on {name}");
    let mut removed = vec![false; g.edge_count()];
    for &e in &r.removal {
        removed[e] = true;
    }
    ensure!(r.removal.len() == rho, "removal size on {name}");
    ensure!(is_colorable_without(&g, &removed).unwrap(), "removal witness fails on {name}");
    let min = minimum_zero_class_coloring(&g).map_err(|e| e.to_string())?;
    ensure!(min.zero_edges.len() == rho && min.zero_class_independent, "minimum colouring on {name}");
    if g.vertex_count() <= 20 {
        ensure!(omega == naive_oddness(&g), "oddness differs from 2-factor enumeration on {name}");
    }
    Ok(())
}

/// The certificate of a random relabelling equals the original's, and the
/// reported relabelling reproduces it.
pub fn certificate_case(index: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let g = if seed.is_multiple_of(4) { &snarks()[index % snarks().len()] } else { &c4ec()[index % c4ec().len()] };
    let h = shuffled(g, &mut rng);
    let a = canonical_certificate(g).map_err(|e| e.to_string())?;
    let b = canonical_certificate(&h).map_err(|e| e.to_string())?;
    ensure!(a.canonical_adjacency == b.canonical_adjacency, "certificate changed under relabelling of {}", g6(g));
    ensure!(encode_graph6(&h.relabel(&b.relabeling)).unwrap() == b.canonical_adjacency, "relabelling does not reach the certificate");
    Ok(())
}

/// A Kempe switch in a random colouring keeps it proper, undoes itself and
/// changes exactly the chain, an even circuit.
pub fn kempe_case(index: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let colourable: Vec<&CubicMultipole> = c4ec().iter().filter(|g| is_three_edge_colorable(g).unwrap()).collect();
    let g = shuffled(colourable[index % colourable.len()], &mut rng);
    let c = three_edge_coloring(&g).unwrap().ok_or("colourable graph without colouring")?;
    let e = rng.gen_range(0..g.edge_count());
    let i = c.get(e);
    let others: Vec<Color> = Color::NONZERO.into_iter().filter(|&x| x != i).collect();
    let j = others[rng.gen_range(0..2)];
    let chain = kempe_chain(&g, &c, e, i, j).map_err(|e| e.to_string())?;
    let switched = kempe_switch(&g, &c, e, i, j).map_err(|e| e.to_string())?;
    ensure!(switched.is_proper_three_coloring(&g), "switch broke properness on {}", g6(&g));
    ensure!(kempe_switch(&g, &switched, e, i, j).unwrap() == c, "switch is not an involution on {}", g6(&g));
    ensure!(chain.len() % 2 == 0, "odd chain");
    let changed: BTreeSet<usize> = (0..g.edge_count()).filter(|&f| switched.get(f) != c.get(f)).collect();
    ensure!(changed == chain.iter().copied().collect::<BTreeSet<_>>(), "switch changed edges off the chain");
    Ok(())
}

/// Cyclic connectivity never exceeds girth. Returns the number of graphs.
pub fn zeta_at_most_girth() -> Result<usize, String> {
    let mut checked = 0;
    for g in cubic_small().iter().chain(c4ec()).chain(snarks()) {
        let zeta = cyclic_connectivity(g).unwrap().zeta;
        ensure!(zeta <= girth(g).unwrap(), "zeta {zeta} above girth on {}", g6(g));
        checked += 1;
    }
    Ok(checked)
}

/// Every bond of at most five edges is cycle-separating unless a side is a
/// tree, and such a side has `k - 2` vertices. Returns the acyclic sides seen.
pub fn acyclic_sides() -> Result<usize, String> {
    let mut checked = 0;
    for g in cubic_small().iter().chain(snarks().iter().take(4)) {
        for k in 1..=5 {
            for cut in bonds(g, k).unwrap() {
                let forests: Vec<&Fragment> = cut.fragments.iter().filter(|f| is_forest(&f.multipole)).collect();
                ensure!(cut.cycle_separating == forests.is_empty(), "cut {:?} of {} misflagged", cut.cut, g6(g));
                for f in forests {
                    ensure!(f.len() + 2 == k, "acyclic side of {} has {} vertices for a {k}-cut", g6(g), f.len());
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Both fragments of every cycle-separating 4-cut satisfy the
/// comparability check. Returns the fragments seen.
pub fn comparability() -> Result<usize, String> {
    let mut checked = 0;
    for g in c4ec().iter().chain(snarks()) {
        for cut in cycle_separating_cuts(g, 4).unwrap() {
            for f in &cut.fragments {
                let report = check_comparable_two_cuts(&f.multipole).map_err(|e| e.to_string())?;
                ensure!(report.comparability_holds(), "incomparable 2-cuts in a fragment of {}", g6(g));
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Whenever both sides of a cycle-separating 4-cut are colourable, the
/// oddness is at most 2. Returns the cuts seen.
pub fn colourable_sides_bound_oddness() -> Result<usize, String> {
    let mut checked = 0;
    for g in c4ec().iter().filter(|g| g.vertex_count() <= 14).chain(snarks()) {
        let colourable = is_three_edge_colorable(g).unwrap();
        for cut in cycle_separating_cuts(g, 4).unwrap() {
            let case = decompose_along_cut(g, &cut).map_err(|e| e.to_string())?;
            ensure!(!colourable || case.kind == CaseKind::BothColourable, "colourable graph with an uncolourable side");
            if case.kind == CaseKind::BothColourable {
                let omega = case.oddness_when_both_colourable.unwrap();
                ensure!(omega <= 2, "oddness {omega} with colourable sides on {}", g6(g));
                ensure!(omega == oddness(g).unwrap().oddness, "reported oddness differs");
            }
            checked += 1;
        }
    }
    Ok(checked)
}
