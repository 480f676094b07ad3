//! Data-parallel execution over chunks of an index range.
//!
//! Work is split into fixed-size chunks whose results are returned in chunk
//! order, so any reduction the caller performs afterwards sees the same
//! operands in the same order under both strategies. Floating-point sums are
//! therefore bit-identical whether or not the `parallel` feature is enabled.

use std::ops::Range;

/// Chunk width used by the metric kernels.
pub const DEFAULT_CHUNK: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential execution when built without `parallel`.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Runs `f` on consecutive sub-ranges of `0..len` of width `chunk` and
    /// returns the results in range order.
    pub fn map_chunks<T, F>(self, len: usize, chunk: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(Range<usize>) -> T + Sync + Send,
    {
        let chunk = chunk.max(1);
        let count = len.div_ceil(chunk);
        let range = move |i: usize| i * chunk..((i + 1) * chunk).min(len);
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..count).into_par_iter().map(|i| f(range(i))).collect();
        }
        (0..count).map(|i| f(range(i))).collect()
    }

    /// Maps every item independently, preserving order.
    pub fn map<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range_in_order() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let parts = exec.map_chunks(10, 3, |r| r.collect::<Vec<_>>());
            assert_eq!(parts.concat(), (0..10).collect::<Vec<_>>());
            assert_eq!(parts.len(), 4);
            assert!(exec.map_chunks(0, 3, |r| r.len()).is_empty());
        }
    }

    #[test]
    fn float_reduction_is_schedule_independent() {
        let f = |r: Range<usize>| r.map(|i| 1.0 / (i as f64 + 1.0)).sum::<f64>();
        let a: f64 = Exec::Sequential.map_chunks(10_000, 7, f).iter().sum();
        let b: f64 = Exec::Parallel.map_chunks(10_000, 7, f).iter().sum();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
