use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::Result;

/// Process-wide memo table. Values are computed outside the lock, so a
/// builder may itself consult other memo tables (or this one, for a
/// different key) without deadlocking; if two threads race on the same key
/// the first stored value wins.
pub(crate) struct Memo<K, V> {
    map: OnceLock<Mutex<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: OnceLock::new() }
    }

    pub(crate) fn get_or_try(&self, key: &K, build: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        let map = self.map.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = map.lock().unwrap().get(key) {
            return Ok(v.clone());
        }
        let value = Arc::new(build()?);
        let mut guard = map.lock().unwrap();
        Ok(guard.entry(key.clone()).or_insert(value).clone())
    }
}
