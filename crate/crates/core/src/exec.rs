//! Execution strategy for the data-parallel loops (grid enumeration, codeword
//! weight enumeration, oracle sweeps).
//!
//! With the `parallel` feature the loops run on rayon; without it, or with
//! [`Exec::Sequential`], they run on the calling thread. Results are identical
//! either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Caps shared by the enumeration-backed operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub exec: Exec,
    /// Maximum number of parameter-grid points `q^n` to evaluate.
    pub grid_cap: u64,
    /// Maximum number of points fed to the point-ideal intersection oracle.
    pub oracle_cap: usize,
    /// Maximum number of projective message classes for minimum distance.
    pub distance_cap: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { exec: Exec::default(), grid_cap: 10_000_000, oracle_cap: 64, distance_cap: 5_000_000 }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config { exec: Exec::Sequential, ..Config::default() }
    }
}

/// Order-preserving map over a slice.
pub fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Order-preserving map over `0..len`.
pub fn map_range<R, F>(exec: Exec, len: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Size the global worker pool. A no-op without the `parallel` feature.
pub fn init_thread_pool(jobs: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().map_err(|e| e.to_string())
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        Ok(())
    }
}
