//! Versioned binary checkpoints of the join pipeline.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use snarkkit::composer::PipelineState;

const MAGIC: &[u8; 8] = b"SNKJOIN\0";
const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Body {
    config_hash: String,
    state: PipelineState,
}

pub fn write(path: &Path, config_hash: &str, state: &PipelineState) -> Result<()> {
    let mut bytes = MAGIC.to_vec();
    bytes.extend(VERSION.to_le_bytes());
    bytes.extend(bincode::serialize(&Body { config_hash: config_hash.to_string(), state: state.clone() })?);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// The saved state, or `None` when there is no checkpoint. A checkpoint made
/// under a different configuration is an error.
pub fn read(path: &Path, config_hash: &str) -> Result<Option<PipelineState>> {
    if !path.exists() {
        return Ok(None);
    }
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if bytes.len() < 12 || &bytes[..8] != MAGIC {
        bail!("{} is not a join checkpoint", path.display());
    }
    let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if version != VERSION {
        bail!("checkpoint version {version} is not supported (expected {VERSION})");
    }
    let body: Body = bincode::deserialize(&bytes[12..]).context("decoding checkpoint")?;
    if body.config_hash != config_hash {
        bail!("config mismatch on resume: checkpoint was made with config {}, current config is {config_hash}", body.config_hash);
    }
    Ok(Some(body.state))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_guards() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("checkpoint.bin");
        assert!(read(&p, "h").unwrap().is_none());
        let state = PipelineState { pair_index: 3, join_cursor: 77, ..PipelineState::default() };
        write(&p, "h", &state).unwrap();
        assert_eq!(read(&p, "h").unwrap(), Some(state));
        assert!(read(&p, "other").unwrap_err().to_string().contains("config mismatch"));
        let mut bytes = fs::read(&p).unwrap();
        bytes[8] = 9;
        fs::write(&p, &bytes).unwrap();
        assert!(read(&p, "h").unwrap_err().to_string().contains("version"));
        fs::write(&p, b"junk").unwrap();
        assert!(read(&p, "h").is_err());
    }
}
