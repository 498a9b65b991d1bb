//! JSON-lines cache for search results, keyed by tool version and the
//! canonical search spec.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use cohomog7::classify::ClassificationReport;
use cohomog7::search::SearchSpec;
use sha2::{Digest, Sha256};

use crate::render;

pub const ENV_VAR: &str = "COHOMOG7_CACHE_DIR";

pub fn key(spec: &SearchSpec) -> String {
    let mut hasher = Sha256::new();
    hasher.update(concat!("cohomog7 ", env!("CARGO_PKG_VERSION"), "\n"));
    hasher.update(spec.canonical());
    hex::encode(hasher.finalize())
}

pub fn path(dir: &Path, spec: &SearchSpec) -> PathBuf {
    dir.join(format!("search-{}.jsonl", key(spec)))
}

/// `None` when the file is missing or unreadable as reports.
pub fn load(path: &Path) -> Option<Vec<ClassificationReport>> {
    let text = fs::read_to_string(path).ok()?;
    text.lines().map(|line| serde_json::from_str(line).ok()).collect()
}

pub fn store(path: &Path, reports: &[ClassificationReport]) -> io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("jsonl.{}.tmp", std::process::id()));
    fs::write(&tmp, render::json_lines(reports))?;
    fs::rename(&tmp, path)
}
