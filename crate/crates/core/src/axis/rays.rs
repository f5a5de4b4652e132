use super::functions::{phi, real_map};
use super::profile::{Axis, ExtraneousLayout};
use crate::Result;

use serde::{Deserialize, Serialize};

/// Upper end used for unbounded rays.
pub const RAY_HORIZON: f64 = 1e10;
pub const RAY_SAMPLES: usize = 64;
pub const RAY_MAX_ITERATIONS: usize = 500;
pub const RAY_TOLERANCE: f64 = 1e-9;

const EDGE_SAMPLES: usize = 16;

fn edge_offsets() -> impl Iterator<Item = f64> {
    (0..EDGE_SAMPLES).map(|k| 10f64.powf(-8.0 + 7.0 * k as f64 / (EDGE_SAMPLES - 1) as f64))
}

/// 64 points inside `(lo, hi)`.
///
/// Bounded intervals get 16 geometrically spaced points near each end
/// (offsets from `1e-8` to `1e-1` of the width) and 32 linearly spaced
/// points in between. An interval reaching `±RAY_HORIZON` is treated as a
/// ray: 16 geometric points near its finite end and 48 log-spaced points
/// out to the horizon.
pub fn sample_interval(lo: f64, hi: f64) -> Vec<f64> {
    if lo <= -RAY_HORIZON {
        let mut v: Vec<f64> = sample_interval(-hi, -lo).into_iter().map(|x| -x).collect();
        v.reverse();
        return v;
    }
    let mut out = Vec::with_capacity(RAY_SAMPLES);
    if hi >= RAY_HORIZON {
        let scale = lo.abs().max(f64::MIN_POSITIVE);
        out.extend(edge_offsets().map(|t| lo + scale * t));
        let far = RAY_SAMPLES - EDGE_SAMPLES;
        let start = (lo + scale * 0.2).ln();
        let end = RAY_HORIZON.ln();
        out.extend((0..far).map(|k| {
            (start + (end - start) * k as f64 / (far - 1) as f64).exp().min(RAY_HORIZON)
        }));
    } else {
        let w = hi - lo;
        out.extend(edge_offsets().map(|t| lo + w * t));
        let mid = RAY_SAMPLES - 2 * EDGE_SAMPLES;
        out.extend((0..mid).map(|k| lo + w * (0.1 + 0.8 * (k + 1) as f64 / (mid + 1) as f64)));
        out.extend(edge_offsets().map(|t| hi - w * t));
    }
    out.sort_by(f64::total_cmp);
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayViolation {
    pub sample: f64,
    pub final_point: f64,
    pub iterations: usize,
    pub error: Option<String>,
}

/// One interval claimed to lie in the basin of `target` (a coordinate on
/// `axis`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalCheck {
    pub label: String,
    pub axis: Axis,
    pub lo: f64,
    pub hi: f64,
    pub target: f64,
    pub samples: usize,
    pub violations: Vec<RayViolation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayReport {
    pub a: f64,
    pub intervals: Vec<IntervalCheck>,
}

impl RayReport {
    pub fn passed(&self) -> bool {
        self.intervals.iter().all(|c| c.violations.is_empty())
    }

    pub fn violation_count(&self) -> usize {
        self.intervals.iter().map(|c| c.violations.len()).sum()
    }
}

fn step(a: f64, axis: Axis, x: f64) -> Result<f64> {
    match axis {
        Axis::Real => real_map(a, x),
        Axis::Imaginary => phi(a, x),
    }
}

fn run(a: f64, axis: Axis, seed: f64, target: f64) -> Option<RayViolation> {
    let mut x = seed;
    for n in 0..=RAY_MAX_ITERATIONS {
        if (x - target).abs() <= RAY_TOLERANCE {
            return None;
        }
        if n == RAY_MAX_ITERATIONS {
            break;
        }
        match step(a, axis, x) {
            Ok(next) => x = next,
            Err(e) => {
                return Some(RayViolation {
                    sample: seed,
                    final_point: x,
                    iterations: n,
                    error: Some(e.to_string()),
                })
            }
        }
    }
    Some(RayViolation {
        sample: seed,
        final_point: x,
        iterations: RAY_MAX_ITERATIONS,
        error: None,
    })
}

fn check(a: f64, label: &str, axis: Axis, lo: f64, hi: f64, target: f64) -> IntervalCheck {
    let samples = sample_interval(lo, hi);
    let violations = samples
        .iter()
        .filter_map(|&x| run(a, axis, x, target))
        .collect();
    IntervalCheck {
        label: label.to_string(),
        axis,
        lo,
        hi,
        target,
        samples: samples.len(),
        violations,
    }
}

/// Samples every on-axis interval known to lie in an immediate basin and
/// iterates each sample with the one-dimensional dynamics.
///
/// For `a > 0`: `(a1, inf)` to 1, `(a3, a2)` to `sqrt(a)`, and their
/// mirror images. For `a = -b < 0`: `(b1, inf)` to 1 on the real axis,
/// `(b3, inf)` to `sqrt(b)` on the imaginary axis, and mirror images.
pub fn ray_checks(a: f64) -> Result<RayReport> {
    let h = RAY_HORIZON;
    let intervals = match ExtraneousLayout::new(a)? {
        ExtraneousLayout::Positive { a1, a2, a3 } => {
            let r = a.sqrt();
            vec![
                check(a, "(a1, inf) -> 1", Axis::Real, a1, h, 1.0),
                check(a, "(-inf, -a1) -> -1", Axis::Real, -h, -a1, -1.0),
                check(a, "(a3, a2) -> sqrt(a)", Axis::Real, a3, a2, r),
                check(a, "(-a2, -a3) -> -sqrt(a)", Axis::Real, -a2, -a3, -r),
            ]
        }
        ExtraneousLayout::Negative { b1, b3, .. } => {
            let r = (-a).sqrt();
            vec![
                check(a, "(b1, inf) -> 1", Axis::Real, b1, h, 1.0),
                check(a, "(-inf, -b1) -> -1", Axis::Real, -h, -b1, -1.0),
                check(a, "i(b3, inf) -> i sqrt(b)", Axis::Imaginary, b3, h, r),
                check(a, "i(-inf, -b3) -> -i sqrt(b)", Axis::Imaginary, -h, -b3, -r),
            ]
        }
    };
    Ok(RayReport { a, intervals })
}
