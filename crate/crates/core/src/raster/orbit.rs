use crate::chebyshev::{build_family_map, FamilyCoefficients, FamilyMap, Point, CHART_THRESHOLD};
use crate::numerics::Cx;
use crate::Result;

use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_ITERATIONS: usize = 500;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitOutcome {
    /// Index into the sorted roots of `p_a` (label minus one).
    ConvergedToRoot(usize),
    MaxIterations,
    /// Stuck at infinity, or an indeterminate `0/0`.
    EscapedChartLoop,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitResult {
    pub seed: Cx,
    pub outcome: OrbitOutcome,
    pub iterations: usize,
    pub final_point: Point,
    pub trajectory: Option<Vec<Point>>,
}

impl OrbitResult {
    /// Basin label: 1..=4 for the sorted roots, 0 otherwise.
    pub fn label(&self) -> u8 {
        match self.outcome {
            OrbitOutcome::ConvergedToRoot(k) => k as u8 + 1,
            _ => 0,
        }
    }
}

/// One step of `C_a`, with the numerator evaluated in `t = z^2`.
///
/// Matches [`FamilyMap::eval`] in its pole and indeterminate conventions;
/// far from the origin it defers to the `1/z` chart of the generic map.
#[derive(Clone, Debug)]
pub struct Stepper {
    family: FamilyMap,
    k: FamilyCoefficients,
    s: Cx,
    roots: [Cx; 4],
}

impl Stepper {
    pub fn new(a: Cx) -> Self {
        let family = build_family_map(a);
        let roots = family.roots();
        Stepper {
            family,
            k: FamilyCoefficients::new(a),
            s: a + 1.0,
            roots,
        }
    }

    pub fn roots(&self) -> &[Cx; 4] {
        &self.roots
    }

    pub fn step(&self, p: Point) -> Result<Point> {
        let z = match p {
            Point::Finite(z) if z.norm() <= CHART_THRESHOLD => z,
            _ => return self.family.eval_point(p),
        };
        let t = z * z;
        let k = &self.k;
        let num = ((((t * 42.0 + k.c8) * t + k.c6) * t + k.c4) * t + k.c2) * t + k.c0;
        let q = t * 2.0 - self.s;
        let den = z * t * q * q * q * 8.0;
        let (nn, dn) = (num.norm(), den.norm());
        if nn < 1e-300 && dn < 1e-300 {
            return Err(crate::Error::Indeterminate(z));
        }
        if dn <= 1e-14 * nn {
            return Ok(Point::Infinity);
        }
        let w = num / den;
        Ok(if w.re.is_finite() && w.im.is_finite() {
            Point::Finite(w)
        } else {
            Point::Infinity
        })
    }

    fn nearest_root(&self, p: Point, tol: f64) -> Option<usize> {
        let z = p.finite()?;
        self.roots.iter().position(|r| (z - r).norm() < tol)
    }

    /// Iterates from `seed` until two consecutive points lie within `tol`
    /// of the same root, or `max_iterations` steps have been taken.
    pub fn orbit(&self, seed: Cx, max_iterations: usize, tol: f64, trace: usize) -> OrbitResult {
        let mut z = Point::Finite(seed);
        let mut near = self.nearest_root(z, tol);
        let mut trajectory = (trace > 0).then(|| vec![z]);
        let done = |outcome, iterations, final_point, trajectory| OrbitResult {
            seed,
            outcome,
            iterations,
            final_point,
            trajectory,
        };
        for n in 0..max_iterations {
            let next = match self.step(z) {
                Ok(next) => next,
                Err(_) => return done(OrbitOutcome::EscapedChartLoop, n, z, trajectory),
            };
            if let Some(t) = trajectory.as_mut() {
                if t.len() < trace {
                    t.push(next);
                }
            }
            if z.is_infinite() && next.is_infinite() {
                return done(OrbitOutcome::EscapedChartLoop, n, next, trajectory);
            }
            let near_next = self.nearest_root(next, tol);
            if let (Some(k), Some(j)) = (near, near_next) {
                if k == j {
                    return done(OrbitOutcome::ConvergedToRoot(k), n, next, trajectory);
                }
            }
            z = next;
            near = near_next;
        }
        done(OrbitOutcome::MaxIterations, max_iterations, z, trajectory)
    }
}

pub fn iterate_orbit(a: Cx, seed: Cx, max_iterations: usize, tolerance: f64) -> OrbitResult {
    Stepper::new(a).orbit(seed, max_iterations, tolerance, 0)
}

/// As [`iterate_orbit`], also recording up to `cap` points of the orbit
/// (seed included).
pub fn iterate_orbit_traced(
    a: Cx,
    seed: Cx,
    max_iterations: usize,
    tolerance: f64,
    cap: usize,
) -> OrbitResult {
    Stepper::new(a).orbit(seed, max_iterations, tolerance, cap.max(1))
}

/// Basin label of `seed` under the default budget.
pub fn classify_point(a: Cx, seed: Cx) -> u8 {
    iterate_orbit(a, seed, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE).label()
}
