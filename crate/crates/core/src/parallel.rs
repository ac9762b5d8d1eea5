//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers run on the rayon global pool (or
//! whatever pool the caller installed); without it they are plain iterator
//! loops. Both paths return identical results: every reduction here is over
//! an ordered collection.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `items.map(f).collect()` preserving order.
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
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

/// `(0..len).map(f).collect()` preserving order.
pub fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// First `Some` in index order.
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

/// Run `f` with at most `threads` workers. `None` keeps the ambient pool.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

/// Size the global pool. Only the first call in a process has an effect.
pub fn init_global_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
