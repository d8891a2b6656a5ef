//! JSON configuration files. Every field mirrors a command-line flag; flags
//! given on the command line take precedence.

use crate::error::CliError;
use serde::de::DeserializeOwned;
use std::path::Path;

pub fn load<T: DeserializeOwned + Default>(path: Option<&Path>) -> Result<T, CliError> {
    match path {
        None => Ok(T::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", p.display())))
        }
    }
}
