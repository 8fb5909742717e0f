use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use super::{GradedQuotientBasis, RelationPreset};
use crate::error::Result;

/// Shared, lazily built bases keyed by preset, optionally backed by a disk cache.
///
/// A request for a larger cap than the one held replaces the stored basis.
#[derive(Debug, Default)]
pub struct BasisStore {
    dir: Option<PathBuf>,
    bases: Mutex<HashMap<RelationPreset, Arc<GradedQuotientBasis>>>,
}

impl BasisStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        BasisStore {
            dir: Some(dir.into()),
            bases: Mutex::default(),
        }
    }

    /// A basis for `preset` valid at least to `cap`.
    pub fn get(&self, preset: RelationPreset, cap: usize) -> Result<Arc<GradedQuotientBasis>> {
        if let Some(b) = self.lookup(&preset, cap) {
            return Ok(b);
        }
        let built = Arc::new(match &self.dir {
            Some(dir) => GradedQuotientBasis::build_cached(preset.clone(), cap, dir)?,
            None => GradedQuotientBasis::build(preset.clone(), cap),
        });
        let mut bases = self.bases.lock().expect("basis store poisoned");
        let entry = bases.entry(preset).or_insert_with(|| Arc::clone(&built));
        if entry.cap() < cap {
            *entry = Arc::clone(&built);
        }
        Ok(Arc::clone(entry))
    }

    fn lookup(&self, preset: &RelationPreset, cap: usize) -> Option<Arc<GradedQuotientBasis>> {
        let bases = self.bases.lock().expect("basis store poisoned");
        bases.get(preset).filter(|b| b.cap() >= cap).cloned()
    }

    /// The chord algebra on `n` strands.
    pub fn chord(&self, n: usize, cap: usize) -> Result<Arc<GradedQuotientBasis>> {
        self.get(RelationPreset::InfinitesimalArtin(n), cap)
    }

    /// The oriented algebra on `n` strands.
    pub fn oriented(&self, n: usize, cap: usize) -> Result<Arc<GradedQuotientBasis>> {
        self.get(RelationPreset::OrientedArtin(n), cap)
    }
}
