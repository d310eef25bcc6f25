//! On-disk character cache.
//!
//! One JSON file per key, named by the SHA-256 of the canonical key string.
//! Each file records the key, the SHA-256 of the serialized character, and
//! the character itself; anything that fails to parse or verify is treated as
//! a miss and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::character::{Character, CharacterJson};
use crate::root_system::{RootSystem, Weight};
use crate::Result;

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    key: String,
    checksum: String,
    character: CharacterJson,
}

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

/// Canonical key `TYPE|word|weight`, word 1-based.
pub fn cache_key(rs: &RootSystem, word: &[usize], lam: &Weight) -> String {
    let word: Vec<String> = word.iter().map(|i| (i + 1).to_string()).collect();
    let weight: Vec<String> = lam.coords().iter().map(i64::to_string).collect();
    format!("{}|{}|{}", rs.name(), word.join(","), weight.join(","))
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir
            .join(format!("{}.json", sha256_hex(key.as_bytes())))
    }

    /// Returns the cached character for `(rs, word, lam)`, or computes and
    /// stores it. Diagnostics go to `log`.
    pub fn get_or_compute<F>(
        &self,
        rs: &RootSystem,
        word: &[usize],
        lam: &Weight,
        log: &mut dyn Write,
        compute: F,
    ) -> Result<Character>
    where
        F: FnOnce() -> Result<Character>,
    {
        let key = cache_key(rs, word, lam);
        let path = self.path_for(&key);
        if path.exists() {
            match self.load(rs, &key, &path) {
                Ok(c) => {
                    let _ = writeln!(log, "cache hit: {key}");
                    return Ok(c);
                }
                Err(reason) => {
                    let _ = writeln!(
                        log,
                        "warning: corrupt cache entry {} ({reason}); recomputing",
                        path.display()
                    );
                }
            }
        }
        let c = compute()?;
        if let Err(e) = self.store(rs, &key, &path, &c) {
            let _ = writeln!(
                log,
                "warning: could not write cache entry {}: {e}",
                path.display()
            );
        } else {
            let _ = writeln!(log, "cache miss: {key}");
        }
        Ok(c)
    }

    fn load(
        &self,
        rs: &RootSystem,
        key: &str,
        path: &Path,
    ) -> std::result::Result<Character, String> {
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let entry: Entry = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if entry.key != key {
            return Err(format!("key mismatch {:?}", entry.key));
        }
        let body = serde_json::to_string(&entry.character).map_err(|e| e.to_string())?;
        if sha256_hex(body.as_bytes()) != entry.checksum {
            return Err("checksum mismatch".into());
        }
        Character::from_json(rs, &entry.character).map_err(|e| e.to_string())
    }

    fn store(&self, rs: &RootSystem, key: &str, path: &Path, c: &Character) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let character = c.to_json(rs);
        let body = serde_json::to_string(&character)?;
        let entry = Entry {
            key: key.to_string(),
            checksum: sha256_hex(body.as_bytes()),
            character,
        };
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)? + "\n")?;
        fs::rename(&tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::demazure_character;

    #[test]
    fn hit_miss_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let rs: RootSystem = "A2".parse().unwrap();
        let lam = Weight::from([1, 1]);
        let word = [0, 1, 0];
        let compute = || demazure_character(&rs, &word, &lam);
        let mut log = Vec::new();
        let a = cache
            .get_or_compute(&rs, &word, &lam, &mut log, compute)
            .unwrap();
        let b = cache
            .get_or_compute(&rs, &word, &lam, &mut log, compute)
            .unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(log.clone()).unwrap();
        assert!(text.contains("cache miss: A2|1,2,1|1,1"));
        assert!(text.contains("cache hit: A2|1,2,1|1,1"));

        // Change one coefficient but keep the file well-formed.
        let path = cache.path_for(&cache_key(&rs, &word, &lam));
        let stored = fs::read_to_string(&path).unwrap();
        fs::write(
            &path,
            stored.replacen("\"coeff\":\"2\"", "\"coeff\":\"3\"", 1),
        )
        .unwrap();
        log.clear();
        let c = cache
            .get_or_compute(&rs, &word, &lam, &mut log, compute)
            .unwrap();
        assert_eq!(c, a);
        assert!(String::from_utf8(log)
            .unwrap()
            .contains("checksum mismatch"));
        assert_eq!(fs::read_to_string(&path).unwrap(), stored);

        fs::write(&path, "not json").unwrap();
        let mut log = Vec::new();
        assert_eq!(
            cache
                .get_or_compute(&rs, &word, &lam, &mut log, compute)
                .unwrap(),
            a
        );
        assert!(String::from_utf8(log).unwrap().contains("corrupt"));
    }
}
