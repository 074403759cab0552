//! One JSON file per table key. Writes go to a temporary file in the same
//! directory and are renamed into place.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: String,
    pub n: u64,
    pub order: Option<usize>,
    pub restriction: String,
    pub version: String,
}

impl CacheKey {
    pub fn new(kind: &str, n: u64, order: Option<usize>, restriction: &str) -> Self {
        CacheKey {
            kind: kind.into(),
            n,
            order,
            restriction: restriction.into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    fn file_name(&self) -> String {
        let order = self.order.map_or("any".to_string(), |o| o.to_string());
        format!(
            "{}-n{}-{}-order-{}-v{}.json",
            self.kind, self.n, self.restriction, order, self.version
        )
    }
}

/// One row of a count or Hurwitz table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u64,
    pub l: usize,
    pub count: u64,
    /// Sum of `H_G` over the classes, as an exact decimal string.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum_hg: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub payload: Vec<TableRow>,
    pub created_unix: u64,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// The cached entry, or `None` when absent, unreadable or for another key.
    pub fn load(&self, key: &CacheKey) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == *key).then_some(entry)
    }

    pub fn store(&self, key: &CacheKey, payload: &[TableRow]) -> io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            key: key.clone(),
            payload: payload.to_vec(),
            created_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        };
        let path = self.path(key);
        let tmp = self.dir.join(format!(".{}.{}.tmp", key.file_name(), std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(&entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}
