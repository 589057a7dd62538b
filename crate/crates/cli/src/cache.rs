//! On-disk cache of computed tables, one JSON file per table.
//!
//! Layout: `<dir>/v<version>/<series><rank>-<isogeny>-<kind>.json`. Every
//! file records the version that wrote it; anything unreadable or stale is
//! ignored and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use log::{debug, warn};
use serde_json::{json, Value};

use orbitcalc::rootdata::CartanType;

use crate::Failure;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir }
    }

    fn path(&self, ct: CartanType, kind: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        Some(dir.join(format!("v{VERSION}")).join(format!("{}-{}-{kind}.json", ct.ty, ct.isogeny)))
    }

    /// The cached table if present and current, otherwise `compute()`,
    /// stored for next time when the directory allows it.
    pub fn table(
        &self,
        ct: CartanType,
        kind: &str,
        compute: impl FnOnce() -> Result<Value, Failure>,
    ) -> Result<Value, Failure> {
        let Some(path) = self.path(ct, kind) else {
            return compute();
        };
        if let Some(v) = load(&path) {
            debug!("cache hit {}", path.display());
            return Ok(v);
        }
        let data = compute()?;
        if let Err(e) = store(&path, &data) {
            warn!("cache at {} is not writable ({e}); keeping results in memory", path.display());
        }
        Ok(data)
    }
}

fn load(path: &Path) -> Option<Value> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => {
            warn!("cannot read cache file {}: {e}; recomputing", path.display());
            return None;
        }
    };
    let mut v: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            warn!("corrupt cache file {}: {e}; recomputing", path.display());
            return None;
        }
    };
    if v.get("version").and_then(Value::as_str) != Some(VERSION) || v.get("data").is_none() {
        warn!("stale cache file {}; recomputing", path.display());
        return None;
    }
    Some(v["data"].take())
}

fn store(path: &Path, data: &Value) -> std::io::Result<()> {
    let dir = path.parent().expect("cache files live in a directory");
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&json!({ "version": VERSION, "data": data }))?)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}
