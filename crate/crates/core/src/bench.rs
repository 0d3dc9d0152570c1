//! Wall-clock scaling probe for the scorpion counter.

use std::time::Instant;

use crate::count::count_scorpions;
use crate::error::{Error, Result};
use crate::generate::random_graph;
use crate::num::loglog_slope;
use crate::BigCount;

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub times_us: Vec<u64>,
    pub median_us: u64,
    median_ns: u128,
    pub count: BigCount,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub ell: usize,
    pub k: usize,
    pub p: f64,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(median time) against log(n); absent with
    /// fewer than two sizes.
    pub slope: Option<f64>,
}

fn median<T: Copy + Ord>(values: &[T]) -> T {
    let mut v = values.to_vec();
    v.sort_unstable();
    v[(v.len() - 1) / 2]
}

/// Times [`count_scorpions`] on `G(n, p)` for every `n` in `sizes`, `repeats`
/// times each.
pub fn bench_scorpions(ell: usize, k: usize, sizes: &[usize], p: f64, seed: u64, repeats: usize) -> Result<BenchReport> {
    if repeats == 0 {
        return Err(Error::param("repeats must be positive"));
    }
    if sizes.is_empty() {
        return Err(Error::param("no sizes given"));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let g = random_graph(n, p, seed)?;
        let mut times_ns = Vec::with_capacity(repeats);
        let mut count = None;
        for _ in 0..repeats {
            let start = Instant::now();
            let c = count_scorpions(&g, ell, k)?;
            times_ns.push(start.elapsed().as_nanos());
            debug_assert!(count.as_ref().is_none_or(|prev| *prev == c));
            count = Some(c);
        }
        let median_ns = median(&times_ns);
        rows.push(BenchRow {
            n,
            times_us: times_ns.iter().map(|t| (t / 1000) as u64).collect(),
            median_us: (median_ns / 1000) as u64,
            median_ns,
            count: count.expect("at least one repeat"),
        });
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.median_ns.max(1) as f64)).collect();
    Ok(BenchReport {
        ell,
        k,
        p,
        seed,
        slope: loglog_slope(&points),
        rows,
    })
}
