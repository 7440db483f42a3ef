//! Explicit work budgets for the exponential searches.

/// Returned when a search runs out of steps before reaching an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search budget of {limit} steps exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// A step counter shared by one search (or a pipeline of searches).
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    spent: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 200_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, spent: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.spend(1)
    }

    #[inline]
    pub fn spend(&mut self, steps: u64) -> Result<(), BudgetExceeded> {
        self.spent = self.spent.saturating_add(steps);
        if self.spent > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_STEPS)
    }
}
