//! Content-addressed cache of computed payloads. Files are named by the
//! hex SHA-256 of the serialized key and carry a checksum of the payload.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Result;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Bumped whenever a payload layout changes.
const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub artifact: String,
    pub command: String,
    pub weight: String,
    pub framing: String,
    pub order: String,
}

pub fn artifact_version() -> String {
    let tag = format!(
        "oklr-core {} / oklr-cli {} / schema {SCHEMA}",
        oklr_core::VERSION,
        env!("CARGO_PKG_VERSION")
    );
    sha256_hex(tag.as_bytes())
}

impl CacheKey {
    pub fn new(command: &str, weight: &str, framing: &str, order: &str) -> Self {
        CacheKey {
            artifact: artifact_version(),
            command: command.into(),
            weight: weight.into(),
            framing: framing.into(),
            order: order.into(),
        }
    }

    pub fn digest(&self) -> String {
        sha256_hex(serde_json::to_string(self).expect("key to json").as_bytes())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: CacheKey,
    checksum: String,
    payload: Value,
}

fn checksum(payload: &Value) -> String {
    sha256_hex(serde_json::to_string(payload).expect("payload to json").as_bytes())
}

pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(Value),
    Miss,
    /// present but unreadable, for another key, or failing its checksum
    Corrupt(String),
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    pub fn load(&self, key: &CacheKey) -> Lookup {
        let p = self.path(key);
        let Ok(text) = fs::read_to_string(&p) else {
            return Lookup::Miss;
        };
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", p.display())),
        };
        if &entry.key != key {
            return Lookup::Corrupt(format!("{}: key mismatch", p.display()));
        }
        if checksum(&entry.payload) != entry.checksum {
            return Lookup::Corrupt(format!("{}: checksum mismatch", p.display()));
        }
        Lookup::Hit(entry.payload)
    }

    pub fn store(&self, key: &CacheKey, payload: &Value) -> Result<()> {
        let entry = Entry {
            key: key.clone(),
            checksum: checksum(payload),
            payload: payload.clone(),
        };
        let p = self.path(key);
        let tmp = p.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, p)?;
        Ok(())
    }

    /// Cached payload for `key`, computing and storing it on a miss or a
    /// failed verification.
    pub fn get_or_compute(&self, key: &CacheKey, f: impl FnOnce() -> Result<Value>) -> Result<Value> {
        match self.load(key) {
            Lookup::Hit(v) => Ok(v),
            other => {
                if let Lookup::Corrupt(why) = other {
                    eprintln!("warning: discarding cache entry {why}");
                }
                let v = f()?;
                self.store(key, &v)?;
                Ok(v)
            }
        }
    }
}
