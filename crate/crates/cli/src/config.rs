//! Modulus-table configuration.

use std::path::{Path, PathBuf};

use anyhow::Context;
use aqcc_core::galois::ModulusTable;

/// Environment variable naming a modulus-table file, used when no path is
/// given on the command line.
pub const MODULUS_TABLE_ENV: &str = "AQCC_MODULUS_TABLE";

/// Resolves the table path: explicit flag first, then the environment.
pub fn table_path(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(Path::to_path_buf)
        .or_else(|| std::env::var_os(MODULUS_TABLE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

/// Loads the modulus overrides, or the built-in defaults if no file is configured.
pub fn load_table(flag: Option<&Path>) -> anyhow::Result<ModulusTable> {
    let Some(path) = table_path(flag) else {
        return Ok(ModulusTable::builtin());
    };
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading modulus table {}", path.display()))?;
    ModulusTable::parse(&text).with_context(|| format!("parsing modulus table {}", path.display()))
}
