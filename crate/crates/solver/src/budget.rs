use std::time::Duration;

/// Default cap on instance size; the search space is `(n!)^2` sequence pairs
/// and exhaustive proofs beyond this need more than desktop patience.
pub const DEFAULT_MAX_N: usize = 10;

/// Environment variable that fixes the worker-thread count.
pub const THREADS_ENV: &str = "PACKBOUND_THREADS";

/// Limits for one solver run. Exceeding a cap downgrades the result to
/// certified bounds (`proven_optimal = false`); it is never an error and
/// never a wrong answer.
#[derive(Debug, Clone)]
pub struct SolveBudget {
    /// Cap on explored placement nodes.
    pub max_nodes: Option<u64>,
    /// Wall-clock cap.
    pub max_time: Option<Duration>,
    /// Worker threads; `None` falls back to `PACKBOUND_THREADS`, then to
    /// the machine's available parallelism.
    pub threads: Option<usize>,
    /// Instance-size limit.
    pub max_n: usize,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_nodes: None,
            max_time: None,
            threads: None,
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl SolveBudget {
    pub fn unlimited() -> Self {
        SolveBudget::default()
    }

    pub fn with_nodes(max_nodes: u64) -> Self {
        SolveBudget {
            max_nodes: Some(max_nodes),
            ..SolveBudget::default()
        }
    }

    /// Resolves the number of worker threads: explicit setting, then the
    /// `PACKBOUND_THREADS` environment variable, then available parallelism.
    /// The solve result does not depend on this value, only the speed does.
    pub fn effective_threads(&self) -> usize {
        if let Some(t) = self.threads {
            return t.max(1);
        }
        if let Ok(raw) = std::env::var(THREADS_ENV) {
            if let Ok(t) = raw.trim().parse::<usize>() {
                if t >= 1 {
                    return t;
                }
            }
        }
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    }
}
