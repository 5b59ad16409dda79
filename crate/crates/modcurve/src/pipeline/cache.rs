//! On-disk cache for per-level computation results.
//!
//! Entries are JSON files holding a payload string together with its
//! SHA-256 checksum.  Reads validate the checksum and treat a mismatch,
//! a parse failure, or a missing file as a miss; writes go through a
//! temporary file and an atomic rename so a concurrent reader never sees
//! a partial entry.  The format version is part of the file name, so
//! bumping it orphans every older entry at once.
//!
//! `MODCURVE_CACHE_DIR` overrides the cache location and
//! `MODCURVE_NO_CACHE=1` disables caching entirely.  An I/O failure on
//! write disables the cache for the rest of the process with a warning
//! on stderr rather than failing the computation.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};

/// Version stamp baked into entry file names.
pub const CACHE_VERSION: u32 = 1;

/// Identifies one cached artifact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey {
    pub kind: &'static str,
    pub level: u64,
    pub version: u32,
}

impl CacheKey {
    /// Key for an artifact kind at a level, under the current version.
    pub fn new(kind: &'static str, level: u64) -> Self {
        Self { kind, level, version: CACHE_VERSION }
    }

    /// Name of the file backing this key inside the cache directory.
    pub fn file_name(&self) -> String {
        format!("{}-{}-v{}.json", self.kind, self.level, self.version)
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    checksum: String,
    payload: String,
}

/// Cache handle; a disabled handle turns every operation into a no-op.
#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    broken: AtomicBool,
}

impl Cache {
    /// Cache honoring the environment: disabled by `MODCURVE_NO_CACHE=1`,
    /// rooted at `MODCURVE_CACHE_DIR` when set, otherwise at a `modcurve`
    /// directory under the user cache location.
    pub fn from_env() -> Self {
        if std::env::var("MODCURVE_NO_CACHE").is_ok_and(|v| v == "1") {
            return Self::disabled();
        }
        match std::env::var_os("MODCURVE_CACHE_DIR") {
            Some(dir) => Self::at(PathBuf::from(dir)),
            None => Self::at(default_dir()),
        }
    }

    /// Cache rooted at an explicit directory.
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: Some(dir.into()), broken: AtomicBool::new(false) }
    }

    /// Cache that never stores anything.
    pub fn disabled() -> Self {
        Self { dir: None, broken: AtomicBool::new(false) }
    }

    /// True while the cache still has a usable directory.
    pub fn is_enabled(&self) -> bool {
        self.active_dir().is_some()
    }

    /// Fetches a payload; any checksum or format problem counts as a miss.
    pub fn get(&self, key: &CacheKey) -> Option<String> {
        let dir = self.active_dir()?;
        let raw = std::fs::read_to_string(dir.join(key.file_name())).ok()?;
        let entry: Entry = serde_json::from_str(&raw).ok()?;
        (checksum(&entry.payload) == entry.checksum).then_some(entry.payload)
    }

    /// Stores a payload, best effort: on an I/O failure the cache is
    /// disabled for the rest of the process and a warning is printed.
    pub fn put(&self, key: &CacheKey, payload: &str) {
        let Some(dir) = self.active_dir() else {
            return;
        };
        let entry = Entry { checksum: checksum(payload), payload: payload.to_string() };
        let serialized = serde_json::to_string(&entry).expect("cache entry serializes");
        if let Err(e) = write_atomic(dir, &key.file_name(), &serialized) {
            self.broken.store(true, Ordering::Relaxed);
            eprintln!("warning: disabling result cache at {}: {e}", dir.display());
        }
    }

    fn active_dir(&self) -> Option<&Path> {
        if self.broken.load(Ordering::Relaxed) {
            return None;
        }
        self.dir.as_deref()
    }
}

fn checksum(payload: &str) -> String {
    let digest = Sha256::digest(payload.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn write_atomic(dir: &Path, name: &str, contents: &str) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, dir.join(name))
}

fn default_dir() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("modcurve")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_miss_semantics() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let key = CacheKey::new("unit", 39);
        assert_eq!(cache.get(&key), None);
        cache.put(&key, "{\"x\":1}");
        assert_eq!(cache.get(&key).as_deref(), Some("{\"x\":1}"));
        // Different kind, level, or version are distinct entries.
        assert_eq!(cache.get(&CacheKey::new("other", 39)), None);
        assert_eq!(cache.get(&CacheKey::new("unit", 40)), None);
        let bumped = CacheKey { version: CACHE_VERSION + 1, ..key };
        assert_eq!(cache.get(&bumped), None);
    }

    #[test]
    fn corruption_reads_as_absent() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let key = CacheKey::new("unit", 11);
        cache.put(&key, "payload");
        let path = dir.path().join("unit-11-v1.json");
        // Flip the payload without fixing the checksum.
        let tampered = std::fs::read_to_string(&path).unwrap().replace("payload", "poisoned");
        std::fs::write(&path, tampered).unwrap();
        assert_eq!(cache.get(&key), None);
        // Garbage that is not even JSON is also just a miss.
        std::fs::write(&path, "not json").unwrap();
        assert_eq!(cache.get(&key), None);
        // Overwriting repairs the entry.
        cache.put(&key, "payload");
        assert_eq!(cache.get(&key).as_deref(), Some("payload"));
    }

    #[test]
    fn disabled_cache_stores_nothing() {
        let cache = Cache::disabled();
        let key = CacheKey::new("unit", 39);
        cache.put(&key, "x");
        assert_eq!(cache.get(&key), None);
        assert!(!cache.is_enabled());
    }

    #[test]
    fn write_failure_degrades_without_failing() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("blocker");
        std::fs::write(&file, "occupied").unwrap();
        // Rooting the cache at a plain file makes every write fail.
        let cache = Cache::at(&file);
        assert!(cache.is_enabled());
        cache.put(&CacheKey::new("unit", 39), "x");
        assert!(!cache.is_enabled());
        assert_eq!(cache.get(&CacheKey::new("unit", 39)), None);
    }
}
