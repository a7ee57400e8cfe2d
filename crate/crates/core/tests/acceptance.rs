//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twodisc::geom::{circumdisk_of_rect, Rect};
use twodisc::oracle::{arc_two_center_ring, ratio_against};
use twodisc::report::bench;
use twodisc::stream::{half_rect_radius, STREAM_STATE_BYTES};
use twodisc::{
    arc_two_center, batch_cover, brute_two_center, certificate, certified_ratio, diameter,
    gen_random_convex, gen_square_diamond, polygon_covered, stream_cover, ConvexPolygon, Point,
    StreamState,
};

use common::{brute_diameter, corpus, eq_triangle, unit_square, Case};

const CORPUS_SIZE: usize = 1000;
const M: usize = 256;
const SAMPLING_TOL: f64 = 0.03;
const STREAM_BOUND: f64 = 2.0;
const BATCH_BOUND: f64 = 1.84;
const EPS: f64 = 1e-9;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct CorpusRun {
    worst_stream: (f64, u64),
    worst_batch: (f64, u64),
    uncovered: Vec<String>,
    seconds: f64,
}

fn run_corpus(cases: &[Case]) -> CorpusRun {
    let t = Instant::now();
    let mut run = CorpusRun {
        worst_stream: (0.0, 0),
        worst_batch: (0.0, 0),
        uncovered: Vec::new(),
        seconds: 0.0,
    };
    for c in cases {
        let p = &c.poly;
        let stream = stream_cover(p.vertices().iter().copied()).unwrap();
        let batch = batch_cover(p).unwrap();
        // m must cover every vertex
        let m = M.max(p.len());
        let oracle = arc_two_center(p, m).unwrap();
        let rs = ratio_against(&stream, &oracle).unwrap();
        let rb = ratio_against(&batch, &oracle).unwrap();
        if rs > run.worst_stream.0 {
            run.worst_stream = (rs, c.seed);
        }
        if rb > run.worst_batch.0 {
            run.worst_batch = (rb, c.seed);
        }
        for sol in [&stream, &batch] {
            let cov = polygon_covered(p, sol, EPS);
            if !cov.covered {
                run.uncovered.push(format!(
                    "case {} ({:?}) {:?} at {:?}",
                    c.seed, c.family, sol.method, cov.witness
                ));
            }
        }
    }
    run.seconds = t.elapsed().as_secs_f64();
    run
}

fn streaming_ratio(run: &CorpusRun) -> Outcome {
    let (r, seed) = run.worst_stream;
    outcome(
        r <= STREAM_BOUND + SAMPLING_TOL,
        format!(
            "max empirical stream ratio {r:.4} (case {seed}) <= {:.2}; corpus took {:.1}s",
            STREAM_BOUND + SAMPLING_TOL,
            run.seconds
        ),
    )
}

fn batch_ratio(run: &CorpusRun) -> Outcome {
    let (r, seed) = run.worst_batch;
    outcome(
        r <= BATCH_BOUND + SAMPLING_TOL,
        format!(
            "max empirical batch ratio {r:.4} (case {seed}) <= {:.2}",
            BATCH_BOUND + SAMPLING_TOL
        ),
    )
}

fn square_case() -> Outcome {
    // the diamond with |ab'| = |ad'| = |b'd'| = |ac| = 1 inside the unit square
    let p = gen_square_diamond(1.0).unwrap();
    let sol = batch_cover(&p).unwrap();
    let cert = certificate(&p);
    let ratio = certified_ratio(&sol, &cert).unwrap();
    let want_r = 5f64.sqrt() / 4.0;
    let pass = (sol.radius - want_r).abs() <= 1e-9
        && (ratio - 1.118).abs() <= 1e-3
        && (cert.rho - 0.5).abs() <= 1e-12;
    outcome(
        pass,
        format!("batch radius {:.10} (want {want_r:.10}), rho {:.10}, certified ratio {ratio:.6} (want 1.118)", sol.radius, cert.rho),
    )
}

fn half_rect_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let length = rng.gen_range(1e-3..1e3);
        let width = rng.gen_range(0.0..=1.0) * length;
        let rect = Rect {
            frame_angle: rng.gen_range(0.0..std::f64::consts::PI),
            center: Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
            length,
            width,
        };
        let half = rect.halves()[0];
        let r = circumdisk_of_rect(&half).radius;
        let want = 0.25 * (length * length + 4.0 * width * width).sqrt();
        worst = worst.max((r - want).abs() / want);
        worst = worst.max((half_rect_radius(length, width) - want).abs() / want);
    }
    outcome(
        worst <= 1e-12,
        format!("max relative error {worst:.2e} <= 1e-12 over 1000 rectangles"),
    )
}

fn coverage(run: &CorpusRun) -> Outcome {
    let detail = match run.uncovered.first() {
        None => format!("all {} covers verified (eps {EPS:e})", 2 * CORPUS_SIZE),
        Some(f) => format!("{} failures, first: {f}", run.uncovered.len()),
    };
    outcome(run.uncovered.is_empty(), detail)
}

fn diameter_equivalence() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut mismatches = 0;
    for seed in 0..500 {
        let n = rng.gen_range(3..=200);
        let p = gen_random_convex(n, 10_000 + seed).unwrap();
        let d = diameter(&p).unwrap();
        let (i, j, len) = brute_diameter(&p);
        if d.length != len || (d.i, d.j) != (i, j) {
            mismatches += 1;
        }
    }
    let secs = t.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 10.0,
        format!("{mismatches} mismatches in 500 polygons, {secs:.2}s (< 10s)"),
    )
}

fn constant_space_and_linear_time() -> Outcome {
    let feed = |count: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut s = StreamState::new();
        for _ in 0..count {
            s.push(Point::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ))
            .unwrap();
        }
        s.to_bytes()
    };
    let (small, large) = (feed(10), feed(1_000_000));
    let same_size = small.len() == large.len() && small.len() == STREAM_STATE_BYTES;

    let report = bench(&[100_000, 200_000, 400_000], 3).unwrap();
    let rows = &report.results;
    let factors: Vec<f64> = rows
        .windows(2)
        .map(|w| w[1].seconds / w[0].seconds)
        .collect();
    let linear = factors.iter().all(|f| (1.4..=2.8).contains(f));
    let bytes_const = rows.iter().all(|r| r.state_bytes == STREAM_STATE_BYTES);
    outcome(
        same_size && linear && bytes_const,
        format!(
            "state {} bytes after 10 and {} after 1e6 updates; time factors n->2n {:?} in [1.4, 2.8]",
            small.len(),
            large.len(),
            factors.iter().map(|f| format!("{f:.2}")).collect::<Vec<_>>()
        ),
    )
}

fn oracle_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for k in 0..200 {
        let n = rng.gen_range(3..=12);
        let p = gen_random_convex(n, 20_000 + k).unwrap();
        let arc = arc_two_center_ring(p.vertices(), false).unwrap().radius;
        let brute = brute_two_center(p.vertices()).unwrap();
        worst = worst.max((arc - brute).abs());
    }
    let contiguity = worst <= 1e-9;

    let seg = ConvexPolygon::segment(Point::new(0.0, 0.0), Point::new(2.0, 0.0)).unwrap();
    let known = [
        ("square", unit_square(), 5f64.sqrt() / 4.0),
        ("triangle", eq_triangle(), 0.5),
        ("segment", seg, 0.5),
    ];
    let mut sandwich = true;
    let mut notes = Vec::new();
    for (name, p, r_opt) in known {
        let rho = certificate(&p).rho;
        let o = arc_two_center(&p, M).unwrap().radius;
        let ok = rho <= o + 1e-9 && o <= r_opt + 1e-9 && o >= (1.0 - SAMPLING_TOL) * r_opt;
        sandwich &= ok;
        notes.push(format!("{name}: {rho:.4} <= {o:.6} <= {r_opt:.6}"));
    }
    outcome(
        contiguity && sandwich,
        format!(
            "contiguity max |arc - brute| {worst:.1e} over 200 sets; {}",
            notes.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let cases = corpus(CORPUS_SIZE);
    let run = run_corpus(&cases);

    let results = [
        ("1 streaming ratio <= 2 (+0.03)", streaming_ratio(&run)),
        ("2 batch ratio <= 1.84 (+0.03)", batch_ratio(&run)),
        ("3 square special case", square_case()),
        ("4 half-rectangle radius identity", half_rect_identity()),
        ("5 coverage soundness", coverage(&run)),
        ("6 calipers = brute-force diameter", diameter_equivalence()),
        (
            "7 O(1) space and linear time",
            constant_space_and_linear_time(),
        ),
        ("8 oracle validity", oracle_validity()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!(
            "[{}] criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
