//! Data-parallel loop shapes with a sequential fallback.
//!
//! With the `parallel` feature (the default) these fan out with rayon;
//! without it they are plain loops. Callers must be pure per-index, so the
//! results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use std::ops::Range;

/// Maximum of `f` over the range.
pub(crate) fn max_over<F>(range: Range<usize>, f: F) -> Option<u64>
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).max()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).max()
    }
}

/// First `Some` produced over the range, in index order.
pub(crate) fn find_first_over<T, F>(range: Range<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.filter_map(f).next()
    }
}

/// `f` mapped over the range, collected in index order.
pub(crate) fn map_collect<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).collect()
    }
}
