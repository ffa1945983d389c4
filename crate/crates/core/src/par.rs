//! Data-parallel fan-out with a strictly sequential fallback.
//!
//! Candidate-level and enumeration-level parallelism both go through
//! `map_slice`, which preserves input order in its output, so results are
//! identical whatever the worker count. With the `parallel` feature disabled
//! (or `jobs <= 1`) everything runs on the calling thread.

#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(jobs: usize, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    pool.install(|| items.par_iter().map(f).collect())
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(_jobs: usize, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    items.iter().map(f).collect()
}

/// Worker count actually used for a request, for reporting.
pub fn effective_jobs(jobs: usize) -> usize {
    if cfg!(feature = "parallel") {
        jobs.max(1)
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<u32> = (0..100).collect();
        let doubled = map_slice(4, &items, |x| x * 2);
        assert_eq!(doubled, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}
