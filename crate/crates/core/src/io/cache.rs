//! JSON cache of computed tables, keyed by a hash of the metadata.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

use super::artifact::{Metadata, TableArtifact};

pub const CACHE_DIR_ENV: &str = "RENNER_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// An entry existed but carried different metadata (for example an old order version).
    Stale,
    Corrupt(String),
    Disabled,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// Explicit directory, else `$RENNER_CACHE_DIR`, else `$XDG_CACHE_HOME/renner`
    /// or `~/.cache/renner`.
    pub fn resolve(explicit: Option<PathBuf>) -> Self {
        let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        let dir = explicit
            .or_else(|| env(CACHE_DIR_ENV))
            .or_else(|| env("XDG_CACHE_HOME").map(|p| p.join("renner")))
            .or_else(|| env("HOME").map(|p| p.join(".cache").join("renner")));
        Cache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(meta: &Metadata) -> String {
        let canonical = serde_json::to_string(meta).expect("metadata serializes");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub fn path_for(&self, meta: &Metadata) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", Self::key(meta))))
    }

    pub fn load(&self, meta: &Metadata) -> (Option<TableArtifact>, CacheStatus) {
        let Some(path) = self.path_for(meta) else { return (None, CacheStatus::Disabled) };
        let Ok(text) = fs::read_to_string(&path) else { return (None, CacheStatus::Miss) };
        match TableArtifact::from_json(&text) {
            Ok(a) if a.metadata == *meta => (Some(a), CacheStatus::Hit),
            Ok(_) => (None, CacheStatus::Stale),
            Err(e) => (None, CacheStatus::Corrupt(e.to_string())),
        }
    }

    /// Atomic store: write a sibling temporary file, then rename over the entry.
    pub fn store(&self, a: &TableArtifact) -> Result<()> {
        let Some(path) = self.path_for(&a.metadata) else { return Ok(()) };
        let dir = path.parent().unwrap();
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{}.{}.tmp", Cache::key(&a.metadata), std::process::id()));
        fs::write(&tmp, a.to_json())?;
        fs::rename(&tmp, &path).map_err(|e| {
            let _ = fs::remove_file(&tmp);
            Error::from(e)
        })
    }

    /// Cached artifact if valid, otherwise computes and stores a fresh one.
    pub fn get_or_compute(
        &self,
        meta: &Metadata,
        compute: impl FnOnce() -> Result<TableArtifact>,
    ) -> Result<(TableArtifact, CacheStatus)> {
        let (hit, status) = self.load(meta);
        if let Some(a) = hit {
            return Ok((a, status));
        }
        let a = compute()?;
        if status != CacheStatus::Disabled {
            self.store(&a)?;
        }
        Ok((a, status))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::artifact::{compute_table, TableKind, DEFAULT_WORK_BOUND};
    use crate::partition::MonoidKind;

    fn meta() -> Metadata {
        Metadata::new(MonoidKind::Rook, 2, TableKind::Mq)
    }

    fn compute() -> Result<TableArtifact> {
        compute_table(MonoidKind::Rook, 2, TableKind::Mq, DEFAULT_WORK_BOUND)
    }

    #[test]
    fn second_read_hits_and_is_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let (a, s) = cache.get_or_compute(&meta(), compute).unwrap();
        assert_eq!(s, CacheStatus::Miss);
        let bytes = fs::read(cache.path_for(&meta()).unwrap()).unwrap();
        let (b, s) = cache.get_or_compute(&meta(), || panic!("should not recompute")).unwrap();
        assert_eq!(s, CacheStatus::Hit);
        assert_eq!(a.to_json().as_bytes(), bytes.as_slice());
        assert_eq!(a, b);
    }

    #[test]
    fn poisoned_entries_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let path = cache.path_for(&meta()).unwrap();
        let mut old = compute().unwrap();
        old.metadata.order_version = 0;
        fs::write(&path, old.to_json()).unwrap();
        let (a, s) = cache.get_or_compute(&meta(), compute).unwrap();
        assert_eq!(s, CacheStatus::Stale);
        assert_eq!(a, compute().unwrap());
        assert_eq!(cache.load(&meta()).1, CacheStatus::Hit);

        fs::write(&path, "{ not json").unwrap();
        let (_, s) = cache.get_or_compute(&meta(), compute).unwrap();
        assert!(matches!(s, CacheStatus::Corrupt(_)));
        assert_eq!(cache.load(&meta()).1, CacheStatus::Hit);
    }

    #[test]
    fn disabled_cache_writes_nothing() {
        let cache = Cache::disabled();
        let (_, s) = cache.get_or_compute(&meta(), compute).unwrap();
        assert_eq!(s, CacheStatus::Disabled);
        assert_eq!(Cache::at("/x").path_for(&meta()).unwrap().extension().unwrap(), "json");
    }
}
