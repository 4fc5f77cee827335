use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, Result};
use rayon::prelude::*;
use serde::Serialize;
use snarkkit::coloring::{classify_four_pole, is_three_edge_colorable, PoleClassification};
use snarkkit::graph::{decode_graph6, CubicMultipole};
use snarkkit::measures::{oddness, resistance};
use snarkkit::structure::{cycle_separating_cuts, is_bridgeless, structure_record};

use crate::input;

#[derive(Debug, Serialize)]
pub struct AnalysisRecord {
    pub line: usize,
    pub graph6: String,
    pub order: usize,
    pub girth: usize,
    pub cycle_rank: usize,
    pub zeta: usize,
    pub colorable: bool,
    /// Null for bridged graphs.
    pub oddness: Option<usize>,
    pub resistance: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cuts: Option<Vec<CutRecord>>,
}

#[derive(Debug, Serialize)]
pub struct CutRecord {
    pub edges: Vec<usize>,
    pub fragment_orders: [usize; 2],
    pub classes: [PoleClassification; 2],
}

fn analyze_one(g: &CubicMultipole, graph6: &str, line: usize, cuts: bool) -> Result<AnalysisRecord> {
    if !g.is_cubic() {
        return Err(anyhow!("graph is not cubic"));
    }
    let s = structure_record(g)?;
    let colorable = is_three_edge_colorable(g)?;
    let (oddness, resistance) = if is_bridgeless(g) { (Some(oddness(g)?.oddness), Some(resistance(g)?.resistance)) } else { (None, None) };
    let cuts = if cuts {
        let mut out = Vec::new();
        for c in cycle_separating_cuts(g, 4)?.into_iter().filter(|c| c.size() == 4) {
            let classes = [classify_four_pole(&c.fragments[0].multipole)?, classify_four_pole(&c.fragments[1].multipole)?];
            out.push(CutRecord { fragment_orders: [c.fragments[0].len(), c.fragments[1].len()], edges: c.cut, classes });
        }
        Some(out)
    } else {
        None
    };
    Ok(AnalysisRecord {
        line,
        graph6: graph6.to_string(),
        order: g.vertex_count(),
        girth: s.girth,
        cycle_rank: s.cycle_rank,
        zeta: s.cyclic_connectivity,
        colorable,
        oddness,
        resistance,
        cuts,
    })
}

/// Prints one JSON line per input line; returns whether every line succeeded.
pub fn run(file: &Path, cuts: bool, out: &mut impl Write) -> Result<bool> {
    let lines = input::lines(file)?;
    let results: Vec<Result<AnalysisRecord>> = lines
        .par_iter()
        .map(|(n, l)| {
            let g = decode_graph6(l).map_err(|e| anyhow!("malformed graph6: {e}"))?;
            analyze_one(&g, l, *n, cuts)
        })
        .collect();
    let mut ok = true;
    for ((n, _), r) in lines.iter().zip(results) {
        match r {
            Ok(rec) => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
            Err(e) => {
                ok = false;
                eprintln!("{}:{n}: {e:#}", file.display());
            }
        }
    }
    Ok(ok)
}
