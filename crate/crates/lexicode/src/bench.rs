//! Differential benchmark harness: serial reference vs. parallel engine.
//!
//! Every row first verifies that both constructions produce the identical
//! codeword sequence and refuses to report timings otherwise — a mismatch is
//! a correctness bug, not a data point. Timings cover construction only, no
//! file I/O. The comparison counters can only shrink going from serial to
//! parallel, since the parallel schedule adds early exit and the selective
//! first phase on top of the same scan.

use crate::greedy::{
    greedy_construct_with_stats, serial_reference_construct_with_stats, ConstructionParams,
};
use crate::ordering::OrderingSpec;
use crate::Result;
use crate::Error;
use serde::Serialize;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Instant;

/// One benchmark configuration and its measurements.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRecord {
    pub n: u32,
    pub d: u32,
    pub ordering: String,
    pub workers: usize,
    pub serial_seconds: f64,
    pub parallel_seconds: f64,
    /// serial_seconds / parallel_seconds.
    pub speedup: f64,
    pub comparisons_serial: u64,
    pub comparisons_parallel: u64,
}

/// Run one configuration; errors with [`Error::BenchMismatch`] when the two
/// constructions disagree.
pub fn bench_row(
    n: u32,
    d: u32,
    ordering: &OrderingSpec,
    workers: usize,
) -> Result<BenchRecord> {
    let mut params = ConstructionParams::new(n, d, ordering.clone());
    params.parallelism = workers;
    let effective_workers = params.effective_parallelism();

    let start = Instant::now();
    let (serial_code, serial_stats) = serial_reference_construct_with_stats(&params)?;
    let serial_seconds = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let (parallel_code, parallel_stats) = greedy_construct_with_stats(&params)?;
    let parallel_seconds = start.elapsed().as_secs_f64();

    if serial_code.words() != parallel_code.words() {
        return Err(Error::BenchMismatch {
            n,
            d,
            workers: effective_workers,
        });
    }

    Ok(BenchRecord {
        n,
        d,
        ordering: ordering.token().to_string(),
        workers: effective_workers,
        serial_seconds,
        parallel_seconds,
        speedup: serial_seconds / parallel_seconds,
        comparisons_serial: serial_stats.comparisons,
        comparisons_parallel: parallel_stats.comparisons,
    })
}

/// One row per (n, worker count) combination.
pub fn bench_matrix(
    n_range: RangeInclusive<u32>,
    d: u32,
    ordering: &OrderingSpec,
    worker_counts: &[usize],
) -> Result<Vec<BenchRecord>> {
    let mut rows = Vec::new();
    for n in n_range {
        for &workers in worker_counts {
            rows.push(bench_row(n, d, ordering, workers)?);
        }
    }
    Ok(rows)
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(
        "n,d,ordering,workers,serial_seconds,parallel_seconds,speedup,\
         comparisons_serial,comparisons_parallel\n",
    );
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{:.6},{:.3},{},{}",
            r.n,
            r.d,
            r.ordering,
            r.workers,
            r.serial_seconds,
            r.parallel_seconds,
            r.speedup,
            r.comparisons_serial,
            r.comparisons_parallel
        );
    }
    out
}

pub fn to_json(records: &[BenchRecord]) -> String {
    serde_json::to_string_pretty(records).expect("bench records always serialize")
}
