//! graph6 line input.

use std::path::Path;

use anyhow::{Context, Result};
use snarkkit::graph::{decode_graph6, CubicMultipole};

/// Non-empty lines with their 1-based line numbers.
pub fn lines(path: &Path) -> Result<Vec<(usize, String)>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| (i + 1, l.trim().to_string())).collect())
}

/// Every graph in the file; any malformed line is an error.
pub fn graphs(path: &Path) -> Result<Vec<CubicMultipole>> {
    lines(path)?.into_iter().map(|(n, l)| decode_graph6(&l).with_context(|| format!("{}:{n}: malformed graph6", path.display()))).collect()
}
