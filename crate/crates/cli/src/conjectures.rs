use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, Result};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use snarkkit::conjectures::{
    has_dominating_circuit, has_petersen_coloring, total_chromatic_number, Conjecture, ConjectureVerdict, Witness,
};
use snarkkit::graph::{decode_graph6, CubicMultipole};

use crate::input;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Dominating circuit.
    Dc,
    /// Total chromatic number 4.
    Tc,
    /// Petersen colouring.
    Pc,
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    index: usize,
    graph6: &'a str,
    conjecture: Conjecture,
    holds: bool,
    witness: Option<Witness>,
}

fn check(g: &CubicMultipole, w: Which) -> Result<ConjectureVerdict> {
    Ok(match w {
        Which::Dc => has_dominating_circuit(g)?,
        Which::Pc => has_petersen_coloring(g)?,
        Which::Tc => {
            let (k, witness) = total_chromatic_number(g)?;
            ConjectureVerdict { conjecture: Conjecture::TotalColoring, holds: k == 4, witness }
        }
    })
}

/// One JSON line per graph and conjecture, in input order. Returns whether
/// every line could be checked.
pub fn run(file: &Path, which: &[Which], out: &mut impl Write) -> Result<bool> {
    let lines = input::lines(file)?;
    let results: Vec<Result<Vec<ConjectureVerdict>>> = lines
        .par_iter()
        .map(|(_, l)| {
            let g = decode_graph6(l).map_err(|e| anyhow!("malformed graph6: {e}"))?;
            if !g.is_cubic() {
                return Err(anyhow!("graph is not cubic"));
            }
            which.iter().map(|&w| check(&g, w)).collect()
        })
        .collect();
    let mut ok = true;
    for (index, ((n, l), r)) in lines.iter().zip(results).enumerate() {
        match r {
            Ok(verdicts) => {
                for v in verdicts {
                    let rec = VerdictRecord { index, graph6: l, conjecture: v.conjecture, holds: v.holds, witness: v.witness };
                    writeln!(out, "{}", serde_json::to_string(&rec)?)?;
                }
            }
            Err(e) => {
                ok = false;
                eprintln!("{}:{n}: {e:#}", file.display());
            }
        }
    }
    Ok(ok)
}
