use std::sync::Arc;

use mmsec_core::simulator::Executor;
use rayon::prelude::*;
use rayon::ThreadPool;

/// Runs sweep points on a rayon pool. Results come back in index order and
/// each point owns its random stream, so output does not depend on the
/// thread count.
#[derive(Clone, Default)]
pub struct Parallel {
    pool: Option<Arc<ThreadPool>>,
}

impl Parallel {
    /// Uses the global rayon pool.
    pub fn global() -> Self {
        Self::default()
    }

    pub fn with_threads(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(Self {
            pool: Some(Arc::new(pool)),
        })
    }
}

impl Executor for Parallel {
    fn map_indexed<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        let run = || (0..count).into_par_iter().map(&f).collect();
        match &self.pool {
            Some(pool) => pool.install(run),
            None => run(),
        }
    }
}
