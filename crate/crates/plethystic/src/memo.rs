use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use parking_lot::RwLock;

/// A concurrent memo table. Values are pure functions of their keys, so a
/// race between two writers only duplicates work.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().get(key) {
            return v.clone();
        }
        let v = Arc::new(compute());
        self.map.write().entry(key.clone()).or_insert(v).clone()
    }

    pub fn try_get_or_insert_with<E>(
        &self,
        key: &K,
        compute: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.map.read().get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(compute()?);
        Ok(self.map.write().entry(key.clone()).or_insert(v).clone())
    }
}
