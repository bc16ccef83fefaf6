//! Order-preserving data-parallel maps.
//!
//! With the `parallel` feature (on by default) these fan out over rayon's
//! global pool; without it they run sequentially. Results always come back in
//! input order, so callers never observe a difference beyond wall time.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `lo..=hi`.
pub fn map_range<R, F>(lo: i64, hi: i64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(i64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (lo..=hi).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..=hi).map(f).collect()
    }
}

/// Maps `f` over a slice.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential twin of [`map_range`], always available; used by the benches
/// and by tests that compare both paths.
pub fn map_range_sequential<R, F>(lo: i64, hi: i64, f: F) -> Vec<R>
where
    F: Fn(i64) -> R,
{
    (lo..=hi).map(f).collect()
}

/// Runs `op` on a pool with `jobs` threads, or inline when the crate is built
/// without the `parallel` feature.
pub fn with_jobs<R, F>(jobs: Option<usize>, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(k) if k > 0 => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool.install(op),
                Err(_) => op(),
            },
            _ => op(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        op()
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
