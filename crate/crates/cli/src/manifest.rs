use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use vessel_demand::FilterConfig;

/// Everything needed to reproduce a `demand` run. Contains no timestamps so
/// identical runs write identical manifests.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool_version: &'static str,
    pub input_path: String,
    pub input_sha256: String,
    pub filter: FilterSummary,
    pub scenario: String,
    pub output_dir: String,
    pub emitted_files: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct FilterSummary {
    pub window_start: String,
    pub window_end: String,
    pub max_length_m: f64,
    pub min_type_frequency: usize,
}

impl RunManifest {
    pub fn new(
        input: &Path,
        raw: &[u8],
        filter: &FilterConfig,
        scenario: String,
        out_dir: &Path,
        emitted_files: Vec<String>,
    ) -> Self {
        let digest = Sha256::digest(raw);
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION"),
            input_path: input.display().to_string(),
            input_sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
            filter: FilterSummary {
                window_start: filter.window_start.to_string(),
                window_end: filter.window_end.to_string(),
                max_length_m: filter.max_length_m,
                min_type_frequency: filter.min_type_frequency,
            },
            scenario,
            output_dir: out_dir.display().to_string(),
            emitted_files,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
