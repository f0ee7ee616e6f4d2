//! Enumeration cache: one text file per `(n, m)` under a directory.
//!
//! Format: a header line `vdfi-cache v1 n=<n> m=<m>`, then one graph6
//! record per line, bytewise sorted. The cache is an optimization only:
//! a missing, stale or damaged file is regenerated from scratch, and a
//! directory that cannot be written is simply not cached into.

use std::fs;
use std::path::{Path, PathBuf};

use vdfi_core::enumerate::EnumError;
use vdfi_core::{ChemGraph, Enumerator, GraphSource};

/// A [`GraphSource`] that memoizes enumeration results on disk.
pub struct CachedSource {
    enumerator: Enumerator,
    dir: Option<PathBuf>,
}

impl CachedSource {
    pub fn new(dir: Option<PathBuf>, workers: usize) -> Self {
        CachedSource {
            enumerator: Enumerator::with_workers(workers),
            dir,
        }
    }
}

impl GraphSource for CachedSource {
    fn connected_graphs(&mut self, n: usize, m: usize) -> Result<Vec<ChemGraph>, EnumError> {
        let Some(dir) = self.dir.clone() else {
            return self.enumerator.connected(n, m);
        };
        if let Some(graphs) = read_cache(&dir, n, m) {
            return Ok(graphs);
        }
        let graphs = self.enumerator.connected(n, m)?;
        write_cache(&dir, n, m, &graphs);
        Ok(graphs)
    }
}

fn cache_path(dir: &Path, n: usize, m: usize) -> PathBuf {
    dir.join(format!("n{n}-m{m}.g6"))
}

fn header(n: usize, m: usize) -> String {
    format!("vdfi-cache v1 n={n} m={m}")
}

/// Loads and fully validates one cache file. Any defect, from a bad header
/// to an out-of-order or non-canonical line, discards the file.
fn read_cache(dir: &Path, n: usize, m: usize) -> Option<Vec<ChemGraph>> {
    let text = fs::read_to_string(cache_path(dir, n, m)).ok()?;
    let mut lines = text.lines();
    if lines.next()? != header(n, m) {
        return None;
    }
    let mut graphs = Vec::new();
    let mut previous: Option<&str> = None;
    for line in lines {
        if line.is_empty() {
            return None;
        }
        if previous.is_some_and(|p| p >= line) {
            return None;
        }
        let g = ChemGraph::parse_graph6(line).ok()?;
        if g.n() != n || g.m() != m {
            return None;
        }
        if g.canonical_code().ok()?.as_str() != line {
            return None;
        }
        previous = Some(line);
        graphs.push(g);
    }
    Some(graphs)
}

fn write_cache(dir: &Path, n: usize, m: usize, graphs: &[ChemGraph]) {
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    let mut text = header(n, m);
    for g in graphs {
        text.push('\n');
        text.push_str(&g.to_graph6());
    }
    text.push('\n');
    let _ = fs::write(cache_path(dir, n, m), text);
}
