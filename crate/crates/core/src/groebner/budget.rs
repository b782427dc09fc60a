//! Reduction-step budget shared by all Gröbner computations on a thread.

use std::cell::Cell;

use crate::error::{Error, Result};

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;
pub const BUDGET_ENV: &str = "SEMISMOOTH_STEP_BUDGET";

thread_local! {
    static LIMIT: Cell<Option<u64>> = const { Cell::new(None) };
}

/// Budget for a single Gröbner computation.
pub fn step_budget() -> u64 {
    LIMIT.with(|l| l.get()).unwrap_or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_STEP_BUDGET)
    })
}

/// Runs `f` with the per-computation budget set to `budget`.
pub fn with_step_budget<T>(budget: u64, f: impl FnOnce() -> T) -> T {
    let prev = LIMIT.with(|l| l.replace(Some(budget)));
    struct Restore(Option<u64>);
    impl Drop for Restore {
        fn drop(&mut self) {
            LIMIT.with(|l| l.set(self.0));
        }
    }
    let _restore = Restore(prev);
    f()
}

pub(crate) struct Meter {
    left: u64,
    budget: u64,
}

impl Meter {
    pub fn new() -> Self {
        let budget = step_budget();
        Meter { left: budget, budget }
    }

    pub fn tick(&mut self, context: &str) -> Result<()> {
        if self.left == 0 {
            return Err(Error::ResourceLimit { budget: self.budget, context: context.to_string() });
        }
        self.left -= 1;
        Ok(())
    }
}
