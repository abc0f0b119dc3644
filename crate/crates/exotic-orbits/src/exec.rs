//! Execution policy for the exhaustive sweeps in [`crate::verify`].
//!
//! The sweeps are embarrassingly parallel (independent checks over
//! enumerated families), so they take a [`Parallelism`] value and fan out
//! over rayon when it is [`Parallelism::Parallel`]. The sequential path is
//! always compiled and is the only one available when the crate is built
//! with `--no-default-features`; the bench suite runs both on the same
//! inputs to measure the difference.

/// How a sweep distributes its independent work items.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    /// Plain iterator loop on the calling thread.
    Sequential,
    /// Rayon work-stealing over the global thread pool.
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Parallel
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

impl Parallelism {
    /// Maps `f` over `items`, preserving input order in the output.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            Parallelism::Sequential => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Parallelism::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
        }
    }

    /// Whether `f` holds for every item. The parallel arm may stop early
    /// on a failure; the answer is the same either way.
    pub fn all<T, F>(self, items: Vec<T>, f: F) -> bool
    where
        T: Send + Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            Parallelism::Sequential => items.iter().all(f),
            #[cfg(feature = "parallel")]
            Parallelism::Parallel => {
                use rayon::prelude::*;
                items.par_iter().all(f)
            }
        }
    }
}
