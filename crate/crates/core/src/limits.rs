//! Process-wide caps on search effort and on the size of generated categories.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_NODES: u64 = 5_000_000;
pub const DEFAULT_MAX_OBJECTS: u64 = 512;
pub const DEFAULT_MAX_MORPHISMS: u64 = 8192;

static NODES: AtomicU64 = AtomicU64::new(DEFAULT_NODES);
static MAX_OBJECTS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_OBJECTS);
static MAX_MORPHISMS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_MORPHISMS);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Search nodes allowed per individual search.
    pub nodes: u64,
    pub max_objects: u64,
    pub max_morphisms: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { nodes: DEFAULT_NODES, max_objects: DEFAULT_MAX_OBJECTS, max_morphisms: DEFAULT_MAX_MORPHISMS }
    }
}

impl Limits {
    pub fn current() -> Self {
        Limits {
            nodes: NODES.load(Ordering::Relaxed),
            max_objects: MAX_OBJECTS.load(Ordering::Relaxed),
            max_morphisms: MAX_MORPHISMS.load(Ordering::Relaxed),
        }
    }

    pub fn install(self) {
        NODES.store(self.nodes, Ordering::Relaxed);
        MAX_OBJECTS.store(self.max_objects, Ordering::Relaxed);
        MAX_MORPHISMS.store(self.max_morphisms, Ordering::Relaxed);
    }

    pub fn check_size(&self, what: &str, objects: usize, morphisms: usize) -> Result<()> {
        if objects as u64 > self.max_objects {
            return Err(Error::BudgetExceeded(format!("{what} needs {objects} objects (cap {})", self.max_objects)));
        }
        if morphisms as u64 > self.max_morphisms {
            return Err(Error::BudgetExceeded(format!(
                "{what} needs {morphisms} morphisms (cap {})",
                self.max_morphisms
            )));
        }
        Ok(())
    }
}

/// Node counter for one backtracking search.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    visited: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, visited: 0 }
    }

    pub fn from_limits() -> Self {
        Budget::new(Limits::current().nodes)
    }

    pub fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            Err(Error::BudgetExceeded(format!("search exceeded {} nodes", self.limit)))
        } else {
            Ok(())
        }
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_limits()
    }
}
