//! Wall-clock comparison of the three methods.
//!
//! Each point runs once untimed, then `reps` timed runs on the monotonic clock;
//! the median is reported. Medians below the measured clock granularity are
//! flagged rather than reported as meaningful numbers.

use std::time::{Duration, Instant};

use anyhow::Result;
use hypermap_core::{BigInt, EnumOptions};

use crate::args::Method;
use crate::commands::one_face_poly;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub method: Method,
    pub r: usize,
    /// Median wall time in milliseconds.
    pub wall_ms: f64,
    pub hypermap_count: BigInt,
    pub below_resolution: bool,
}

/// Smallest nonzero step observed between consecutive clock reads.
pub fn clock_resolution() -> Duration {
    let mut best = Duration::MAX;
    for _ in 0..1000 {
        let a = Instant::now();
        let mut b = Instant::now();
        while b == a {
            b = Instant::now();
        }
        best = best.min(b - a);
    }
    best
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

/// Times computing `P_r` by `method`.
pub fn time_method(
    method: Method,
    r: usize,
    reps: usize,
    opts: &EnumOptions,
) -> Result<BenchRecord> {
    let hypermap_count = one_face_poly(r, method, opts)?.coefficient_sum();
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let poly = one_face_poly(r, method, opts)?;
        samples.push(start.elapsed());
        std::hint::black_box(poly);
    }
    let med = median(samples);
    Ok(BenchRecord {
        method,
        r,
        wall_ms: med.as_secs_f64() * 1e3,
        hypermap_count,
        below_resolution: med < clock_resolution(),
    })
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("method,r,ms,count,below_resolution\n");
    for rec in records {
        out.push_str(&format!(
            "{},{},{:.3},{},{}\n",
            rec.method.name(),
            rec.r,
            rec.wall_ms,
            rec.hypermap_count,
            rec.below_resolution
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even() {
        let ms = |x: u64| Duration::from_millis(x);
        assert_eq!(median(vec![ms(5), ms(1), ms(3)]), ms(3));
        assert_eq!(
            median(vec![ms(4), ms(1), ms(3), ms(2)]),
            Duration::from_micros(2500)
        );
    }

    #[test]
    fn record_counts_hypermaps() {
        let rec = time_method(Method::Closed, 6, 1, &EnumOptions::default()).unwrap();
        assert_eq!(rec.hypermap_count, BigInt::from(720));
        assert!(rec.wall_ms >= 0.0);
        let csv = to_csv(&[rec]);
        assert!(csv.starts_with("method,r,ms,count,below_resolution\nclosed,6,"));
        assert!(csv.contains(",720,"));
    }

    #[test]
    fn clock_resolution_is_positive() {
        assert!(clock_resolution() > Duration::ZERO);
    }
}
