use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

/// Reproducibility record written next to every data file as
/// `<out>.manifest.json`: the invocation, its full configuration, and a
/// digest of each produced file.
#[derive(Debug, Serialize, Deserialize)]
pub struct ExperimentManifest {
    pub command: Vec<String>,
    pub config: serde_json::Value,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub outputs: Vec<OutputDigest>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}

/// Writes `data` to `out`, then the manifest beside it.
pub fn write_with_manifest(
    out: &Path,
    data: &[u8],
    command: Vec<String>,
    config: serde_json::Value,
    seed: Option<u64>,
) -> Result<()> {
    fs::write(out, data)?;
    let manifest = ExperimentManifest {
        command,
        config,
        seed,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        outputs: vec![OutputDigest {
            path: out.display().to_string(),
            sha256: sha256_hex(data),
        }],
    };
    let manifest_path = manifest_path_for(out);
    let body = serde_json::to_vec_pretty(&manifest)
        .map_err(|e| CliError::Usage(format!("manifest serialization: {e}")))?;
    fs::write(&manifest_path, body)?;
    Ok(())
}

pub fn manifest_path_for(out: &Path) -> std::path::PathBuf {
    let mut s = out.as_os_str().to_os_string();
    s.push(".manifest.json");
    std::path::PathBuf::from(s)
}
