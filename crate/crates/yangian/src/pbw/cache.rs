//! Shared memo table for two-letter straightening results.
//!
//! Every rewrite step funnels through the super bracket of a generator
//! pair, so caching those normal forms per context is the single most
//! effective optimization in the engine.  The table only ever grows and
//! stores canonical results, so sharing it across threads is sound.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::field::FieldElement;
use crate::pbw::{Gen, Word};

/// Raw normal-form terms, before wrapping in a public element type.
pub(crate) type RawTerms = BTreeMap<Word, FieldElement>;

/// Concurrent memo table from generator pairs to straightened brackets.
pub(crate) struct PairCache {
    map: RwLock<HashMap<(Gen, Gen), Arc<RawTerms>>>,
}

impl PairCache {
    pub(crate) fn new() -> PairCache {
        PairCache {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, key: (Gen, Gen)) -> Option<Arc<RawTerms>> {
        self.map.read().expect("pair cache poisoned").get(&key).cloned()
    }

    pub(crate) fn insert(&self, key: (Gen, Gen), value: Arc<RawTerms>) {
        self.map.write().expect("pair cache poisoned").insert(key, value);
    }
}
