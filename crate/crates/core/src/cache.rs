//! Content-addressed on-disk store for memoized chromatic polynomials.
//!
//! One file per exact canonical key, named by the key's hex encoding and
//! holding the coefficients as a JSON array of decimal strings. Writes go
//! through a temporary file in the same directory and are renamed into
//! place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::canon::CanonicalKey;
use crate::chromatic::PolyStore;
use crate::poly::IntPolynomial;

pub const CACHE_ENV_VAR: &str = "CHROMEX_CACHE";

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: impl AsRef<Path>) -> std::io::Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(DiskCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &CanonicalKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.to_hex()))
    }

    fn write(&self, key: &CanonicalKey, poly: &IntPolynomial) -> std::io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, poly)?;
        tmp.flush()?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

impl PolyStore for DiskCache {
    fn get(&self, key: &CanonicalKey) -> Option<IntPolynomial> {
        if !key.is_exact() {
            return None;
        }
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    fn put(&self, key: &CanonicalKey, poly: &IntPolynomial) {
        if !key.is_exact() || self.path_for(key).exists() {
            return;
        }
        // a failed write only costs a future recomputation
        let _ = self.write(key, poly);
    }
}
