//! Aggregate reports behind the `ratio` and `bench` commands.

use std::hint::black_box;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::batch::batch_cover;
use crate::bounds::{certificate, certified_ratio};
use crate::error::Result;
use crate::oracle::{arc_two_center_with, ratio_against};
use crate::polygon::{gen_random_convex, ConvexPolygon};
use crate::stream::{stream_cover, StreamState, STREAM_STATE_BYTES};

/// Sample count used when none is given.
pub const DEFAULT_M: usize = 256;

/// Both covers of one polygon compared with the certificate and the oracle.
/// Ratios are `null` when their denominator is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub r_stream: f64,
    pub r_batch: f64,
    pub rho: f64,
    pub certified_ratio_stream: Option<f64>,
    pub certified_ratio_batch: Option<f64>,
    pub oracle_radius: f64,
    pub empirical_ratio_stream: Option<f64>,
    pub empirical_ratio_batch: Option<f64>,
    pub m: usize,
}

/// Builds the report. `m` is raised to the vertex count when smaller.
pub fn ratio_report(p: &ConvexPolygon, m: usize, parallel: bool) -> Result<RatioReport> {
    let m = m.max(p.len()).max(4);
    let stream = stream_cover(p.vertices().iter().copied())?;
    let batch = batch_cover(p)?;
    let cert = certificate(p);
    let oracle = arc_two_center_with(p, m, parallel)?;
    Ok(RatioReport {
        r_stream: stream.radius,
        r_batch: batch.radius,
        rho: cert.rho,
        certified_ratio_stream: certified_ratio(&stream, &cert).ok(),
        certified_ratio_batch: certified_ratio(&batch, &cert).ok(),
        oracle_radius: oracle.radius,
        empirical_ratio_stream: ratio_against(&stream, &oracle).ok(),
        empirical_ratio_batch: ratio_against(&batch, &oracle).ok(),
        m,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    /// Seconds per streaming pass over `n` vertices (best of several trials).
    pub seconds: f64,
    /// Seconds per batch cover of the same polygon.
    pub batch_seconds: f64,
    /// Serialized stream state size after the pass.
    pub state_bytes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub seed: u64,
    pub results: Vec<BenchRow>,
}

const TRIALS: usize = 5;
// Work per trial, in vertices processed.
const TRIAL_BUDGET: usize = 4_000_000;

fn best_per_run(runs: usize, mut f: impl FnMut()) -> f64 {
    (0..TRIALS)
        .map(|_| {
            let t = Instant::now();
            for _ in 0..runs {
                f();
            }
            t.elapsed().as_secs_f64() / runs as f64
        })
        .fold(f64::INFINITY, f64::min)
}

/// Times both algorithms on a random convex polygon of each size.
pub fn bench(n_list: &[usize], seed: u64) -> Result<BenchReport> {
    let mut results = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let p = gen_random_convex(n, seed)?;
        let v = p.vertices();
        let runs = (TRIAL_BUDGET / n).max(1);
        let mut state = StreamState::new();
        let seconds = best_per_run(runs, || {
            let mut s = StreamState::new();
            for &q in black_box(v) {
                s.push(q).expect("generated vertices are finite");
            }
            state = black_box(s);
        });
        let batch_seconds = best_per_run((runs / 8).max(1), || {
            black_box(batch_cover(black_box(&p)).expect("valid polygon"));
        });
        let bytes = state.to_bytes();
        debug_assert_eq!(bytes.len(), STREAM_STATE_BYTES);
        results.push(BenchRow {
            n,
            seconds,
            batch_seconds,
            state_bytes: bytes.len(),
        });
    }
    Ok(BenchReport { seed, results })
}
