//! Manifests: one group spec per line, optionally followed by `as <name>`.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{CliError, Result};
use crate::spec::GroupSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub spec: GroupSpec,
}

/// The manifest shipped in `data/default.manifest`.
pub const DEFAULT_MANIFEST: &str = include_str!("../../../data/default.manifest");

/// Directory that relative paths in [`DEFAULT_MANIFEST`] resolve against.
pub fn default_data_root() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (spec_text, name) = match line.rsplit_once(" as ") {
            Some((s, n)) => (s.trim(), Some(n.trim().to_string())),
            None => (line, None),
        };
        let spec = GroupSpec::parse(spec_text)
            .map_err(|e| CliError::Manifest { line: i + 1, message: e.to_string() })?
            .rebase(base);
        let name = name.unwrap_or_else(|| spec.default_name());
        out.push(ManifestEntry { name, spec });
    }
    if out.is_empty() {
        return Err(CliError::EmptyManifest);
    }
    Ok(out)
}

pub fn read_manifest(path: &Path) -> Result<Vec<ManifestEntry>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_manifest(&text, base)
}

pub fn default_manifest() -> Vec<ManifestEntry> {
    parse_manifest(DEFAULT_MANIFEST, default_data_root()).expect("shipped manifest parses")
}
