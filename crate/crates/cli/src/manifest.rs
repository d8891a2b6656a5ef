use crate::error::CliError;
use serde::Serialize;
use std::path::Path;

/// Record of one run, written next to its data files.
#[derive(Debug, Serialize)]
pub struct RunManifest<C: Serialize> {
    pub command: &'static str,
    pub config: C,
    pub tool_version: &'static str,
    pub master_seed: Option<u64>,
    pub started: String,
    pub finished: String,
    pub partial: bool,
    pub outputs: Vec<String>,
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

pub const TOOL_VERSION: &str = concat!("winding-atlas ", env!("CARGO_PKG_VERSION"));

pub fn write<C: Serialize>(dir: &Path, manifest: &RunManifest<C>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(manifest)?;
    std::fs::write(dir.join("manifest.json"), text + "\n")?;
    Ok(())
}

pub fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Resource(format!("cannot create {}: {e}", dir.display())))
}
