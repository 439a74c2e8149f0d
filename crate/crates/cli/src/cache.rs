//! Content-addressed result cache for `analyze`. The key hashes the
//! canonical algebra JSON, the property, the sampler configuration, the
//! output format, and the schema version; a hit replays the stored payload
//! byte for byte together with its exit code.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    exit_code: i32,
    payload: String,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// The `ZPDLAB_CACHE` environment variable overrides any flag value.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        let dir = std::env::var_os("ZPDLAB_CACHE")
            .map(PathBuf::from)
            .or_else(|| flag.map(Path::to_path_buf))?;
        Some(Cache { dir })
    }

    pub fn key(parts: &[&str]) -> String {
        let mut hasher = Sha256::new();
        hasher.update(SCHEMA_VERSION.to_le_bytes());
        for part in parts {
            hasher.update((part.len() as u64).to_le_bytes());
            hasher.update(part.as_bytes());
        }
        hex::encode(hasher.finalize())
    }

    pub fn lookup(&self, key: &str) -> Option<(i32, String)> {
        let path = self.dir.join(format!("{key}.json"));
        let text = fs::read_to_string(path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        Some((entry.exit_code, entry.payload))
    }

    pub fn store(&self, key: &str, exit_code: i32, payload: &str) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let entry = CacheEntry {
            exit_code,
            payload: payload.to_string(),
        };
        let path = self.dir.join(format!("{key}.json"));
        let _ = fs::write(path, serde_json::to_string(&entry).expect("serializable"));
    }
}
