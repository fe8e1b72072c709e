//! One JSON document per computation, named by the SHA-256 of its key.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::engine::{BigradedTable, ENGINE_VERSION};
use crate::free_algebra::{AlgebraPresentation, Ring};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "LCSQ_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputationKey {
    pub ring: Ring,
    pub gens: usize,
    /// Canonical relation strings, sorted.
    pub relations: Vec<String>,
    pub i: usize,
    pub bound: u32,
    pub max_dim: usize,
    pub version: String,
}

impl ComputationKey {
    pub fn new(pres: &AlgebraPresentation, i: usize, bound: u32, max_dim: usize) -> Self {
        ComputationKey {
            ring: pres.ring(),
            gens: pres.gens(),
            relations: pres.canonical_relations(),
            i,
            bound,
            max_dim,
            version: ENGINE_VERSION.to_string(),
        }
    }

    /// Hex digest identifying the computation regardless of engine version,
    /// so that a stale record is found and replaced rather than orphaned.
    pub fn digest(&self) -> String {
        let unversioned = ComputationKey {
            version: String::new(),
            ..self.clone()
        };
        let json = serde_json::to_vec(&unversioned).expect("key serializes");
        hex::encode(Sha256::digest(&json))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: ComputationKey,
    pub table: BigradedTable,
    pub wall_time_secs: f64,
    /// Peak resident set size of the producing process, when known.
    pub peak_memory_bytes: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The cache named by `flag`, else by `LCSQ_CACHE_DIR`, else none.
    pub fn configured(flag: Option<&Path>) -> Option<Cache> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &ComputationKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// The stored record for `key`, if present, readable and current.
    pub fn get(&self, key: &ComputationKey) -> Option<CacheRecord> {
        let path = self.path_for(key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("cannot read cache entry {}: {e}", path.display());
                return None;
            }
        };
        let record: CacheRecord = match serde_json::from_slice(&bytes) {
            Ok(r) => r,
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {}: {e}", path.display());
                return None;
            }
        };
        if record.key != *key {
            log::info!("ignoring stale cache entry {}", path.display());
            return None;
        }
        Some(record)
    }

    /// Writes `record` atomically: a temporary file in the same directory is
    /// renamed over the final path.
    pub fn put(&self, record: &CacheRecord) -> std::io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&record.key);
        let json = serde_json::to_vec_pretty(record).map_err(std::io::Error::other)?;
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", record.key.digest(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&json)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

/// Peak resident set size from `/proc/self/status`, where available.
pub fn peak_memory_bytes() -> Option<u64> {
    let status = fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}
