//! Generator files: `degree <n>` followed by one permutation per line in
//! 1-based cycle notation; `#` starts a comment.

use std::fs;
use std::path::Path;

use codegree_core::{GroupError, Permutation};

use crate::error::{CliError, Result};

pub fn parse_gens(text: &str) -> std::result::Result<Vec<Permutation>, GroupError> {
    let mut degree = None;
    let mut gens = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let n = line
                    .strip_prefix("degree")
                    .and_then(|r| r.trim().parse::<usize>().ok())
                    .ok_or_else(|| GroupError::Parse(format!("expected `degree <n>`, got `{line}`")))?;
                degree = Some(n);
            }
            Some(n) => gens.push(Permutation::parse_cycles(line, n)?),
        }
    }
    if degree.is_none() {
        return Err(GroupError::Parse("missing `degree` line".into()));
    }
    if gens.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    Ok(gens)
}

pub fn format_gens(gens: &[Permutation], comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            out.push_str(&format!("# {l}\n"));
        }
    }
    let degree = gens.first().map_or(0, |g| g.degree());
    out.push_str(&format!("degree {degree}\n"));
    for g in gens {
        out.push_str(&g.to_cycle_string());
        out.push('\n');
    }
    out
}

pub fn read_gens(path: &Path) -> Result<Vec<Permutation>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_gens(&text)?)
}

pub fn write_gens(path: &Path, gens: &[Permutation], comment: Option<&str>) -> Result<()> {
    fs::write(path, format_gens(gens, comment)).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
