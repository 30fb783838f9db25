//! Content-addressed disk cache of reduced Groebner bases.
//!
//! One JSON file per ideal, named by the SHA-256 of the in-memory cache
//! key. Files are written to a temporary name and renamed into place.
//! Anything that fails to parse or validate is treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use permlab::groebner::{cache_key, prime_cache};
use permlab::{GroebnerBasis, Ideal, Polynomial};

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    key: String,
    basis: Vec<String>,
    digest: String,
}

fn sha256_hex(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn digest(key: &str, basis: &[String]) -> String {
    sha256_hex(&format!("{key}\n{}", basis.join("\n")))
}

pub struct DiskCache {
    dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    pub fn path_for(&self, ideal: &Ideal) -> PathBuf {
        self.dir
            .join(format!("{}.json", sha256_hex(&cache_key(ideal))))
    }

    /// Loads a stored basis for `ideal` into the in-memory cache. Returns
    /// whether a valid entry was found.
    pub fn load(&self, ideal: &Ideal) -> Lookup {
        match self.read(ideal) {
            Some(gb) => {
                prime_cache(ideal, gb);
                Lookup::Hit
            }
            None => Lookup::Miss,
        }
    }

    fn read(&self, ideal: &Ideal) -> Option<GroebnerBasis> {
        let text = fs::read_to_string(self.path_for(ideal)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        let key = cache_key(ideal);
        if entry.version != FORMAT_VERSION
            || entry.key != key
            || entry.digest != digest(&key, &entry.basis)
        {
            return None;
        }
        let ring = ideal.ring();
        let elements = entry
            .basis
            .iter()
            .map(|s| Polynomial::parse(s, ring))
            .collect::<permlab::Result<Vec<_>>>()
            .ok()?;
        let gb = GroebnerBasis::from_reduced(ring, elements).ok()?;
        // the stored basis must at least contain the ideal
        for g in ideal.generators() {
            if !gb.reduces_to_zero(g).ok()? {
                return None;
            }
        }
        Some(gb)
    }

    pub fn store(&self, ideal: &Ideal, gb: &Arc<GroebnerBasis>) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let key = cache_key(ideal);
        let basis: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        let entry = Entry {
            version: FORMAT_VERSION,
            digest: digest(&key, &basis),
            key,
            basis,
        };
        write_atomic(&self.path_for(ideal), &serde_json::to_vec(&entry)?)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use permlab::groebner::clear_cache;
    use permlab::permideal::{p2_generators, FamilySpec};

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let ideal = p2_generators(&FamilySpec::rationals(3).unwrap()).unwrap();
        assert_eq!(cache.load(&ideal), Lookup::Miss);
        let gb = ideal.groebner().unwrap();
        cache.store(&ideal, &gb).unwrap();
        clear_cache();
        assert_eq!(cache.load(&ideal), Lookup::Hit);
        assert_eq!(*ideal.groebner().unwrap(), *gb);

        let path = cache.path_for(&ideal);
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replacen("x1_1", "x1_2", 1)).unwrap();
        assert_eq!(cache.load(&ideal), Lookup::Miss);
        fs::write(&path, "{not json").unwrap();
        assert_eq!(cache.load(&ideal), Lookup::Miss);
    }
}
