use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use snarkkit::coloring::is_three_edge_colorable;
use snarkkit::composer::{ClassRecord, JoinPipeline, PairAudit, PipelineConfig, PipelineState};
use snarkkit::graph::encode_graph6;
use snarkkit::structure::is_cyclically_k_edge_connected;

use crate::config::Config;
use crate::{checkpoint, input};

#[derive(Serialize)]
struct Summary {
    config_hash: String,
    pool_size: usize,
    pairs: usize,
    joins_enumerated: usize,
    simple_outputs: usize,
    snarks: usize,
    zeta_ge_4: usize,
    omega_ge_4: usize,
    classes_by_order: BTreeMap<usize, usize>,
    hits: Vec<String>,
}

pub struct JoinArgs {
    pub pool: Vec<PathBuf>,
    pub outdir: PathBuf,
    /// Stop after writing this many checkpoints (for exercising resume).
    pub halt_after_checkpoints: Option<usize>,
}

/// Runs or resumes the oddness search. Returns false if halted early.
pub fn run(config: &Config, args: &JoinArgs) -> Result<bool> {
    let max_order: usize = config.get("max_order")?.context("missing --max-order")?;
    let mut pool = Vec::new();
    let mut pool_bytes = Vec::new();
    for path in &args.pool {
        for g in input::graphs(path)? {
            pool_bytes.extend(encode_graph6(&g)?.bytes());
            pool_bytes.push(b'\n');
            pool.push(g);
        }
    }
    for (i, g) in pool.iter().enumerate() {
        if !g.is_cubic() || !g.is_connected() || is_three_edge_colorable(g)? || !is_cyclically_k_edge_connected(g, 4)? {
            bail!("pool graph {i} is not a cyclically 4-edge-connected snark");
        }
    }
    let pipeline_config = PipelineConfig {
        max_order,
        orbit_pruning: config.get_or("orbit_pruning", true)?,
        chunk_size: config.get_or("chunk_size", 4096)?,
        checkpoint_every: config.get_or("checkpoint_every", 100_000)?,
    };
    let hash = config.hash(&["max_order", "orbit_pruning"], &pool_bytes);
    fs::create_dir_all(&args.outdir)?;
    let ckpt = args.outdir.join("checkpoint.bin");
    let state = checkpoint::read(&ckpt, &hash)?.unwrap_or_default();
    if state.pair_index > 0 || state.join_cursor > 0 {
        eprintln!("resuming at pair {} join {}", state.pair_index, state.join_cursor);
    }
    let audit_path = args.outdir.join("audit.jsonl");
    let mut audit = File::create(&audit_path)?;
    for a in &state.audits {
        writeln!(audit, "{}", serde_json::to_string(a)?)?;
    }
    let mut written = state.audits.len();
    let mut pipeline = JoinPipeline::resume(&pool, pipeline_config, state)?;
    let pairs = pipeline.pairs().len();
    let mut checkpoints = 0;
    let mut failure = None;
    let result = pipeline.run_with(|s: &PipelineState| {
        let step = || -> Result<()> {
            let mut log = OpenOptions::new().append(true).open(&audit_path)?;
            for a in &s.audits[written..] {
                writeln!(log, "{}", serde_json::to_string(a)?)?;
            }
            checkpoint::write(&ckpt, &hash, s)
        };
        if let Err(e) = step() {
            failure = Some(e);
            return false;
        }
        written = s.audits.len();
        checkpoints += 1;
        args.halt_after_checkpoints.is_none_or(|k| checkpoints < k)
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let Some(result) = result else {
        eprintln!("halted after {checkpoints} checkpoints; rerun to resume");
        return Ok(false);
    };
    let mut classes = result.classes.clone();
    classes.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    write_g6(&args.outdir.join("classes.g6"), &classes)?;
    let hits: Vec<ClassRecord> = classes.iter().filter(|c| c.oddness >= 4).cloned().collect();
    write_g6(&args.outdir.join("hits.g6"), &hits)?;
    let total = |f: fn(&PairAudit) -> usize| result.audits.iter().map(f).sum();
    let mut classes_by_order = BTreeMap::new();
    for c in &classes {
        *classes_by_order.entry(c.order).or_insert(0) += 1;
    }
    let summary = Summary {
        config_hash: hash,
        pool_size: pool.len(),
        pairs,
        joins_enumerated: total(|a| a.joins_enumerated),
        simple_outputs: total(|a| a.simple_outputs),
        snarks: total(|a| a.snarks),
        zeta_ge_4: total(|a| a.zeta_ge_4),
        omega_ge_4: total(|a| a.omega_ge_4),
        classes_by_order,
        hits: hits.iter().map(|c| c.certificate.clone()).collect(),
    };
    fs::write(args.outdir.join("summary.json"), serde_json::to_string_pretty(&summary)? + "\n")?;
    eprintln!("{} classes with zeta >= 4, {} with oddness >= 4", classes.len(), hits.len());
    Ok(true)
}

fn write_g6(path: &Path, classes: &[ClassRecord]) -> Result<()> {
    let mut f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    for c in classes {
        writeln!(f, "{}", c.certificate)?;
    }
    Ok(())
}
