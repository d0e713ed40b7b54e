use std::sync::atomic::{AtomicU64, Ordering};

use super::RingError;

pub const DEFAULT_BUDGET: u64 = 200_000;

/// Cap on monomial operations spent building spanning sets.
///
/// Exceeding it is a hard error; graded pieces are never silently truncated.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, ops: u64) -> Result<(), RingError> {
        let before = self.used.fetch_add(ops, Ordering::Relaxed);
        if before.saturating_add(ops) > self.limit {
            Err(RingError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}
