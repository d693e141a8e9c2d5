use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// Write-once memo table. Each key owns a `OnceLock`, so readers only ever
/// see fully built values and the map lock is never held while building.
pub(crate) struct Memo<K, V> {
    slots: Mutex<HashMap<K, Arc<OnceLock<Arc<V>>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { slots: Mutex::new(HashMap::new()) }
    }

    pub(crate) fn get_or_init(&self, key: &K, build: impl FnOnce() -> V) -> Arc<V> {
        let slot = {
            let mut slots = self.slots.lock().unwrap_or_else(|e| e.into_inner());
            slots.entry(key.clone()).or_default().clone()
        };
        slot.get_or_init(|| Arc::new(build())).clone()
    }
}
