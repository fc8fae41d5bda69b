use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Reproduction record written alongside every run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    /// SHA-256 of each named input.
    pub inputs: BTreeMap<String, String>,
    pub output_sha256: String,
    pub wall_time_ms: u64,
    pub exit_code: i32,
}

pub fn sha256_hex(data: &[u8]) -> String {
    hex::encode(Sha256::digest(data))
}

impl RunManifest {
    pub fn new(command: Vec<String>, inputs: &[(String, String)], output: &str, wall_time_ms: u64, exit_code: i32) -> Self {
        RunManifest {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command,
            inputs: inputs.iter().map(|(k, v)| (k.clone(), sha256_hex(v.as_bytes()))).collect(),
            output_sha256: sha256_hex(output.as_bytes()),
            wall_time_ms,
            exit_code,
        }
    }
}
