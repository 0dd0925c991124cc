//! Thin switch between rayon and sequential execution for the scan loops.
//!
//! Call sites stay single-path; the `parallel` feature decides what runs
//! underneath. Both variants preserve the encounter order of results, so
//! enumeration output and witnesses are identical in either mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order-preserving filter_map over a rank range.
pub(crate) fn filter_map_ranks<T, F>(count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).filter_map(f).collect()
    }
}

/// First hit in rank order; parallel mode still returns the lowest rank.
pub(crate) fn find_map_first<T, F>(count: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).find_map(f)
    }
}

/// Execution mode label, used by benches and reports.
pub fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}
