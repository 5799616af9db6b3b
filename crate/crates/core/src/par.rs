//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature enabled, work is spread over the rayon pool unless
//! [`set_parallel`] has switched it off at runtime. Results are always returned in
//! input order, so output never depends on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Runtime switch; has no effect when compiled without the `parallel` feature.
pub fn set_parallel(on: bool) {
    ENABLED.store(on, Ordering::Relaxed);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && ENABLED.load(Ordering::Relaxed)
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, preserving order.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Runs two closures, concurrently when parallelism is on.
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return rayon::join(a, b);
    }
    (a(), b())
}

/// Sorts and deduplicates fixed-width records stored contiguously.
pub(crate) fn sort_dedup_records(width: usize, data: Vec<u32>) -> Vec<u32> {
    if width == 0 || data.is_empty() {
        return data;
    }
    let mut recs: Vec<&[u32]> = data.chunks_exact(width).collect();
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        recs.par_sort_unstable();
    } else {
        recs.sort_unstable();
    }
    #[cfg(not(feature = "parallel"))]
    recs.sort_unstable();
    recs.dedup();
    let mut out = Vec::with_capacity(recs.len() * width);
    for r in recs {
        out.extend_from_slice(r);
    }
    out
}
