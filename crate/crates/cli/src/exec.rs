use aqcc_core::weights::Executor;
use rayon::prelude::*;

/// Runs weight-search jobs on a rayon pool.
pub struct RayonExecutor {
    pool: Option<rayon::ThreadPool>,
}

impl RayonExecutor {
    /// `workers = 0` uses the global pool.
    pub fn new(workers: usize) -> anyhow::Result<RayonExecutor> {
        let pool = match workers {
            0 => None,
            w => Some(rayon::ThreadPoolBuilder::new().num_threads(w).build()?),
        };
        Ok(RayonExecutor { pool })
    }
}

impl Executor for RayonExecutor {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) + Sync)) {
        let go = || (0..jobs).into_par_iter().for_each(job);
        match &self.pool {
            Some(pool) => pool.install(go),
            None => go(),
        }
    }

    fn workers(&self) -> usize {
        match &self.pool {
            Some(pool) => pool.current_num_threads(),
            None => rayon::current_num_threads(),
        }
    }
}
