//! Data-parallel map over record indices.
//!
//! With the `parallel` feature (default) the work fans out across the rayon
//! thread pool; without it the same code runs sequentially. Results are
//! collected in index order either way, so output never depends on
//! scheduling. The sequential path stays available under the parallel build
//! as [`map_indexed_seq`] so the two can be benchmarked against each other.

/// Map `f` over `0..n`, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_indexed<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Map `f` over `0..n`, sequentially.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    map_indexed_seq(n, f)
}

/// Sequential reference implementation of [`map_indexed`].
pub fn map_indexed_seq<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_in_order() {
        let par = map_indexed(100, |i| i * i);
        let seq = map_indexed_seq(100, |i| i * i);
        assert_eq!(par, seq);
    }
}
