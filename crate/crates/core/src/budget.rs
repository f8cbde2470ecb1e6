use std::time::{Duration, Instant};

/// Limits on an exact search. `None` means unbounded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SolverBudget {
    pub const fn unlimited() -> Self {
        SolverBudget {
            node_limit: None,
            time_limit: None,
        }
    }

    pub const fn nodes(limit: u64) -> Self {
        SolverBudget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub fn millis(ms: u64) -> Self {
        SolverBudget {
            node_limit: None,
            time_limit: Some(Duration::from_millis(ms)),
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            nodes: 0,
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }
}

/// Search-local node counter enforcing a [`SolverBudget`].
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    /// Counts one search node. Returns `false` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.exhausted = true;
                return false;
            }
        }
        if self.nodes & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    #[allow(dead_code)]
    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}
