use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::join::{Extraction, JoinPlan, JoinSpec};
use super::ComposeError;
use crate::canonical::{canonical_certificate, canonical_form};
use crate::coloring::{is_three_edge_colorable, ColoringError};
use crate::graph::{encode_graph6, CubicMultipole};
use crate::measures::oddness;
use crate::structure::{cyclic_connectivity, is_cyclically_k_edge_connected};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub max_order: usize,
    pub orbit_pruning: bool,
    /// Join indices handed to the thread pool at a time.
    pub chunk_size: usize,
    /// Simple outputs between two checkpoint callbacks.
    pub checkpoint_every: usize,
}

impl PipelineConfig {
    pub fn new(max_order: usize) -> Self {
        PipelineConfig { max_order, orbit_pruning: true, chunk_size: 4096, checkpoint_every: 100_000 }
    }
}

/// Counts for one unordered pool pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAudit {
    pub left: usize,
    pub right: usize,
    pub joins_enumerated: usize,
    /// Joins that are simple and connected.
    pub simple_outputs: usize,
    /// Simple outputs that are not 3-edge-colourable, with repetitions.
    pub snarks: usize,
    /// Snark classes first met in this pair that are cyclically 4-edge-connected.
    pub zeta_ge_4: usize,
    /// Of those, the ones with oddness at least 4.
    pub omega_ge_4: usize,
    /// Microseconds.
    pub elapsed: u64,
}

/// One isomorphism class of cyclically 4-edge-connected snarks met by the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub graph6: String,
    pub certificate: String,
    pub order: usize,
    pub zeta: usize,
    pub oddness: usize,
    pub left: usize,
    pub right: usize,
    pub spec: JoinSpec,
}

/// Everything needed to continue a search exactly where it stopped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineState {
    pub pair_index: usize,
    pub join_cursor: usize,
    /// Certificates of every snark class seen so far.
    pub seen: BTreeSet<String>,
    pub classes: Vec<ClassRecord>,
    pub audits: Vec<PairAudit>,
    pub current: PairAudit,
    pub outputs_since_checkpoint: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineResult {
    /// Classes with oddness at least 4.
    pub hits: Vec<ClassRecord>,
    pub classes: Vec<ClassRecord>,
    pub audits: Vec<PairAudit>,
}

/// The oddness search over 4-joins of unordered pairs of a snark pool.
pub struct JoinPipeline<'a> {
    pool: &'a [CubicMultipole],
    config: PipelineConfig,
    pairs: Vec<(usize, usize)>,
    extractions: Vec<Option<Vec<Extraction>>>,
    state: PipelineState,
}

impl<'a> JoinPipeline<'a> {
    pub fn new(pool: &'a [CubicMultipole], config: PipelineConfig) -> Result<Self, ComposeError> {
        Self::resume(pool, config, PipelineState::default())
    }

    pub fn resume(pool: &'a [CubicMultipole], config: PipelineConfig, state: PipelineState) -> Result<Self, ComposeError> {
        for g in pool {
            g.require_closed_simple()?;
            g.require_cubic()?;
        }
        let pairs: Vec<(usize, usize)> = (0..pool.len()).flat_map(|i| (i..pool.len()).map(move |j| (i, j))).collect();
        Ok(JoinPipeline { pool, config, pairs, extractions: vec![None; pool.len()], state })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn state(&self) -> &PipelineState {
        &self.state
    }

    pub fn into_state(self) -> PipelineState {
        self.state
    }

    fn extractions(&mut self, i: usize) -> Result<Vec<Extraction>, ComposeError> {
        if self.extractions[i].is_none() {
            let g = &self.pool[i];
            let gens = if self.config.orbit_pruning { Some(canonical_form(g)?.generators) } else { None };
            self.extractions[i] = Some(Extraction::all(g, gens)?);
        }
        Ok(self.extractions[i].clone().unwrap())
    }

    /// Runs to completion.
    pub fn run(&mut self) -> Result<PipelineResult, ComposeError> {
        Ok(self.run_with(|_| true)?.expect("never interrupted"))
    }

    /// Runs, handing the state to `checkpoint` every `checkpoint_every`
    /// simple outputs and after every pair. Returning false from the
    /// callback stops the run and yields `None`; the state then resumes it.
    pub fn run_with(&mut self, mut checkpoint: impl FnMut(&PipelineState) -> bool) -> Result<Option<PipelineResult>, ComposeError> {
        while self.state.pair_index < self.pairs.len() {
            let (i, j) = self.pairs[self.state.pair_index];
            let plan = JoinPlan::from_extractions(self.extractions(i)?, self.extractions(j)?, Some(self.config.max_order));
            if self.state.join_cursor == 0 {
                self.state.current = PairAudit { left: i, right: j, ..PairAudit::default() };
            }
            while self.state.join_cursor < plan.len() {
                let started = Instant::now();
                let end = (self.state.join_cursor + self.config.chunk_size.max(1)).min(plan.len());
                self.process_chunk(&plan, i, j, self.state.join_cursor..end)?;
                self.state.join_cursor = end;
                self.state.current.elapsed += started.elapsed().as_micros() as u64;
                if self.state.outputs_since_checkpoint >= self.config.checkpoint_every {
                    self.state.outputs_since_checkpoint = 0;
                    if !checkpoint(&self.state) {
                        return Ok(None);
                    }
                }
            }
            let done = std::mem::take(&mut self.state.current);
            self.state.audits.push(done);
            self.state.pair_index += 1;
            self.state.join_cursor = 0;
            if !checkpoint(&self.state) {
                return Ok(None);
            }
        }
        let hits = self.state.classes.iter().filter(|c| c.oddness >= 4).cloned().collect();
        Ok(Some(PipelineResult { hits, classes: self.state.classes.clone(), audits: self.state.audits.clone() }))
    }

    fn process_chunk(&mut self, plan: &JoinPlan, i: usize, j: usize, range: std::ops::Range<usize>) -> Result<(), ComposeError> {
        let len = range.len();
        // Per join: None if not simple+connected, else the certificate if it is a snark.
        let screened: Vec<Option<Option<(JoinSpec, CubicMultipole, String)>>> = range
            .into_par_iter()
            .map(|index| -> Result<_, ComposeError> {
                let (spec, g) = plan.join(index)?;
                if !g.is_simple() || !g.is_connected() {
                    return Ok(None);
                }
                match is_three_edge_colorable(&g) {
                    Ok(true) => Ok(Some(None)),
                    Ok(false) | Err(ColoringError::LoopPresent) => {
                        let cert = canonical_certificate(&g)?.canonical_adjacency;
                        Ok(Some(Some((spec, g, cert))))
                    }
                    Err(e) => Err(e.into()),
                }
            })
            .collect::<Result<_, _>>()?;
        self.state.current.joins_enumerated += len;
        let mut fresh = Vec::new();
        for s in screened.into_iter().flatten() {
            self.state.current.simple_outputs += 1;
            self.state.outputs_since_checkpoint += 1;
            if let Some((spec, g, cert)) = s {
                self.state.current.snarks += 1;
                if self.state.seen.insert(cert.clone()) {
                    fresh.push((spec, g, cert));
                }
            }
        }
        let records: Vec<Option<ClassRecord>> = fresh
            .into_par_iter()
            .map(|(spec, g, certificate)| -> Result<_, ComposeError> {
                if !is_cyclically_k_edge_connected(&g, 4)? {
                    return Ok(None);
                }
                Ok(Some(ClassRecord {
                    graph6: encode_graph6(&g)?,
                    certificate,
                    order: g.vertex_count(),
                    zeta: cyclic_connectivity(&g)?.zeta,
                    oddness: oddness(&g)?.oddness,
                    left: i,
                    right: j,
                    spec,
                }))
            })
            .collect::<Result<_, _>>()?;
        for r in records.into_iter().flatten() {
            self.state.current.zeta_ge_4 += 1;
            if r.oddness >= 4 {
                self.state.current.omega_ge_4 += 1;
            }
            self.state.classes.push(r);
        }
        Ok(())
    }
}

/// Cyclically 4-edge-connected snarks of oddness at least 4 among the 4-joins
/// of pool pairs with at most `max_order` vertices.
pub fn oddness4_search(pool: &[CubicMultipole], max_order: usize) -> Result<PipelineResult, ComposeError> {
    JoinPipeline::new(pool, PipelineConfig::new(max_order))?.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen;

    #[test]
    fn petersen_pool_to_eighteen() {
        let pool = [petersen()];
        let r = oddness4_search(&pool, 18).unwrap();
        assert!(r.hits.is_empty());
        assert_eq!(r.classes.len(), 2);
        assert!(r.classes.iter().all(|c| c.order == 18 && c.oddness == 2 && c.zeta >= 4));
        assert_eq!(r.audits.len(), 1);
        assert_eq!(r.audits[0].zeta_ge_4, 2);
    }

    #[test]
    fn below_sixteen_nothing_passes() {
        let r = oddness4_search(&[petersen()], 15).unwrap();
        assert_eq!(r.audits[0].joins_enumerated, 0);
        assert!(r.classes.is_empty());
    }

    #[test]
    fn resume_is_exact() {
        let pool = [petersen()];
        let config = PipelineConfig { chunk_size: 50, checkpoint_every: 1, ..PipelineConfig::new(18) };
        let full = JoinPipeline::new(&pool, config.clone()).unwrap().run().unwrap();
        let mut snapshots = Vec::new();
        let mut p = JoinPipeline::new(&pool, config.clone()).unwrap();
        let stopped = p
            .run_with(|s| {
                snapshots.push(s.clone());
                snapshots.len() < 3
            })
            .unwrap();
        assert!(stopped.is_none());
        let state = snapshots.pop().unwrap();
        let resumed = JoinPipeline::resume(&pool, config, state).unwrap().run().unwrap();
        assert_eq!(resumed.classes, full.classes);
        let strip = |a: &[PairAudit]| a.iter().map(|x| PairAudit { elapsed: 0, ..x.clone() }).collect::<Vec<_>>();
        assert_eq!(strip(&resumed.audits), strip(&full.audits));
    }
}
