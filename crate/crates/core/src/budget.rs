//! Enumeration budgets.
//!
//! Every exhaustive search in the crate counts the candidates it inspects
//! against a [`Budget`]. Running out is reported as
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded), never as a
//! negative answer.

use std::cell::Cell;

use crate::error::{Error, Result};

/// Default budget for filler / lifting / natural-isomorphism searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;
/// Default budget for rewriting and coset enumeration on presentations.
pub const DEFAULT_REWRITE_BUDGET: u64 = 100_000;

/// Environment variable overriding the default budgets.
pub const BUDGET_ENV: &str = "HPK_BUDGET";

#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    /// The search budget, honouring `HPK_BUDGET` when set.
    pub fn search() -> Self {
        Self::new(env_override().unwrap_or(DEFAULT_SEARCH_BUDGET))
    }

    /// The rewriting budget, honouring `HPK_BUDGET` when set.
    pub fn rewrite() -> Self {
        Self::new(env_override().unwrap_or(DEFAULT_REWRITE_BUDGET))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    /// Charge `n` units; fails once the limit is passed.
    pub fn charge(&self, n: u64, context: &str) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(Error::BudgetExceeded {
                budget: self.limit,
                context: context.to_string(),
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::search()
    }
}

fn env_override() -> Option<u64> {
    std::env::var(BUDGET_ENV).ok()?.trim().parse().ok()
}
