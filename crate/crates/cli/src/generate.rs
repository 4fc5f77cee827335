use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use snarkkit::canonical::canonical_certificate;
use snarkkit::generator::{generate_c4ec_cubic, GenerationFilters, GenerationTask, DEFAULT_ORDER_BOUND};

use crate::config::Config;

#[derive(Serialize)]
struct LevelSummary {
    order: usize,
    emitted: usize,
    /// All classes at this order before filtering, when known.
    classes: Option<usize>,
}

#[derive(Serialize)]
struct Summary {
    config_hash: String,
    target_order: usize,
    filters: GenerationFilters,
    levels: Vec<LevelSummary>,
}

/// Writes `order-NN.g6` per order (canonical forms, sorted) and `summary.json`.
pub fn run(config: &Config, outdir: &Path) -> Result<()> {
    let order: usize = config.get("order")?.context("missing --order")?;
    let filters = GenerationFilters {
        zeta_min: config.get_or("zeta_min", 4)?,
        girth_min: config.get_or("girth_min", 0)?,
        snarks_only: config.get_or("snarks_only", false)?,
    };
    let task = GenerationTask { target_order: order, filters, order_bound: DEFAULT_ORDER_BOUND };
    fs::create_dir_all(outdir)?;
    let mut generation = generate_c4ec_cubic(&task)?;
    let mut levels = Vec::new();
    while let Some(level) = generation.next_level() {
        let level = level?;
        let mut lines: Vec<String> =
            level.graphs.par_iter().map(|g| canonical_certificate(g).map(|c| c.canonical_adjacency)).collect::<Result<_, _>>()?;
        lines.sort_unstable();
        let mut body = lines.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        fs::write(outdir.join(format!("order-{:02}.g6", level.order)), body)?;
        eprintln!("order {}: {} graphs", level.order, lines.len());
        levels.push(LevelSummary { order: level.order, emitted: lines.len(), classes: level.total_classes });
    }
    let summary =
        Summary { config_hash: config.hash(&["order", "snarks_only", "girth_min", "zeta_min"], b""), target_order: order, filters, levels };
    fs::write(outdir.join("summary.json"), serde_json::to_string_pretty(&summary)? + "\n")?;
    Ok(())
}
