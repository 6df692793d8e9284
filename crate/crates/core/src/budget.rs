//! Size and time limits for the exponential oracles.

use std::time::{Duration, Instant};

use crate::error::BudgetExceeded;

/// Limits applied by the exact oracles. Exceeding a limit is an explicit
/// [`BudgetExceeded`] error, never a silent slowdown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub chromatic_max_n: usize,
    pub perfect_max_n: usize,
    pub two_divisible_max_n: usize,
    pub homogeneous_exhaustive_max_n: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            chromatic_max_n: 16,
            perfect_max_n: 32,
            two_divisible_max_n: 12,
            homogeneous_exhaustive_max_n: 16,
            deadline: None,
        }
    }
}

impl Budget {
    /// Same limits, with a wall-clock deadline `limit` from now.
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_size(
        oracle: &'static str,
        limit: usize,
        n: usize,
    ) -> Result<(), BudgetExceeded> {
        if n > limit {
            Err(BudgetExceeded::TooLarge { oracle, limit, n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn ticker(&self, oracle: &'static str) -> Ticker {
        Ticker {
            deadline: self.deadline,
            oracle,
            count: 0,
        }
    }
}

/// Cheap periodic deadline check for recursive searches.
pub(crate) struct Ticker {
    deadline: Option<Instant>,
    oracle: &'static str,
    count: u32,
}

impl Ticker {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.count = self.count.wrapping_add(1);
        if self.count & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(BudgetExceeded::Deadline {
                        oracle: self.oracle,
                    });
                }
            }
        }
        Ok(())
    }
}
