//! On-disk cache of zero tables.
//!
//! Computed tables are stored as `n<count>.zeros` or `t<height>.zeros`,
//! imported ones as `imported-<count>.zeros`, all in the zero-file format.
//! A count request is also served from the prefix of any larger cached
//! count table.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use zetadim_core::zeros::{find_zeros, SearchOptions, ZeroLimit, ZeroSource, ZeroTable};

use crate::error::{Error, Result};
use crate::zerofile::{format_zero_file, parse_zero_file};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "ZETADIM_CACHE";
/// Cache directory used when neither flag nor environment sets one.
pub const DEFAULT_CACHE_DIR: &str = ".zetadim-cache";

/// A cache rooted at a directory, created on first write.
#[derive(Debug, Clone)]
pub struct ZeroCache {
    root: PathBuf,
}

impl ZeroCache {
    /// Cache at `root`.
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self { root: root.into() }
    }

    /// Resolves the cache root: the flag, then `ZETADIM_CACHE`, then
    /// `./.zetadim-cache`.
    pub fn resolve(flag: Option<&Path>) -> Self {
        match (flag, env::var_os(CACHE_ENV)) {
            (Some(p), _) => Self::new(p),
            (None, Some(p)) if !p.is_empty() => Self::new(p),
            _ => Self::new(DEFAULT_CACHE_DIR),
        }
    }

    /// Root directory.
    pub fn root(&self) -> &Path {
        &self.root
    }

    /// File name under which a computed table for `limit` is stored.
    pub fn file_name(limit: ZeroLimit) -> String {
        match limit {
            ZeroLimit::Count(n) => format!("n{n}.zeros"),
            ZeroLimit::MaxHeight(t) => format!("t{t}.zeros"),
        }
    }

    /// Returns the computed zeros for `limit`, from the cache when present,
    /// otherwise by computing and storing them.
    pub fn zeros(&self, limit: ZeroLimit) -> Result<ZeroTable> {
        if let Some(table) = self.lookup(limit)? {
            return Ok(table);
        }
        let table = find_zeros(limit, &SearchOptions::default())?;
        self.store(&Self::file_name(limit), &table)?;
        Ok(table)
    }

    /// Stores an imported table and returns the path written.
    pub fn store_imported(&self, table: &ZeroTable) -> Result<PathBuf> {
        self.store(&format!("imported-{}.zeros", table.len()), table)
    }

    fn lookup(&self, limit: ZeroLimit) -> Result<Option<ZeroTable>> {
        let exact = self.root.join(Self::file_name(limit));
        if exact.is_file() {
            return self.load_computed(&exact).map(Some);
        }
        let ZeroLimit::Count(n) = limit else {
            return Ok(None);
        };
        let Ok(entries) = fs::read_dir(&self.root) else {
            return Ok(None);
        };
        let mut larger: Vec<(usize, PathBuf)> = entries
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                let count: usize = name
                    .strip_prefix('n')?
                    .strip_suffix(".zeros")?
                    .parse()
                    .ok()?;
                (count > n).then(|| (count, e.path()))
            })
            .collect();
        larger.sort();
        match larger.first() {
            Some((_, path)) => Ok(Some(self.load_computed(path)?.prefix(n))),
            None => Ok(None),
        }
    }

    fn load_computed(&self, path: &Path) -> Result<ZeroTable> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let heights = parse_zero_file(&text)
            .map_err(|e| Error::Invalid(format!("corrupt cache file {}: {e}", path.display())))?
            .heights()
            .to_vec();
        Ok(ZeroTable::new(
            heights,
            ZeroSource::Computed,
            SearchOptions::default().tolerance,
        )?)
    }

    fn store(&self, name: &str, table: &ZeroTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.root).map_err(|e| Error::io(&self.root, e))?;
        let path = self.root.join(name);
        let tmp = self
            .root
            .join(format!(".{name}.{}.tmp", std::process::id()));
        fs::write(&tmp, format_zero_file(table)).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn computes_then_reuses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ZeroCache::new(dir.path());
        let fresh = cache.zeros(ZeroLimit::Count(40)).unwrap();
        assert!(dir.path().join("n40.zeros").is_file());
        let cached = cache.zeros(ZeroLimit::Count(40)).unwrap();
        assert_eq!(fresh, cached);
        let prefix = cache.zeros(ZeroLimit::Count(25)).unwrap();
        assert_eq!(prefix, fresh.prefix(25));
        assert!(!dir.path().join("n25.zeros").exists());
        cache.zeros(ZeroLimit::MaxHeight(50.0)).unwrap();
        assert!(dir.path().join("t50.zeros").is_file());
    }

    #[test]
    fn flag_wins() {
        let c = ZeroCache::resolve(Some(Path::new("/x")));
        assert_eq!(c.root(), Path::new("/x"));
    }
}
