//! Individual verification checks. Each takes the parameters it sweeps
//! over and returns a [`Check`] with evidence and any offending samples.

use crate::axis::{
    find_two_cycle, lambda_profile, lambda_tilde_profile, phi, ray_checks, ExtraneousLayout,
};
use crate::chebyshev::{
    build_family_map, chebyshev_of, critical_points, fixed_points, Classification, CriticalKind,
    FamilyMap, FixedKind, Point,
};
use crate::numerics::{cx, family_polynomial, real, reduce_quartic, solve_cubic, CaseTag, Cx, Poly};
use crate::par::Execution;
use crate::raster::{raster_symmetry_report, render_basins, BasinGrid, GridSpec};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Cap on recorded failures per check.
const MAX_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
    pub failures: Vec<String>,
}

struct Tally {
    failures: Vec<String>,
    total: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            failures: Vec::new(),
            total: 0,
        }
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.total += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg());
        }
    }

    fn finish(self, name: &str, evidence: String) -> Check {
        let mut failures = self.failures;
        if self.total > failures.len() {
            failures.push(format!("... {} failures in total", self.total));
        }
        Check {
            name: name.to_string(),
            passed: self.total == 0,
            evidence,
            failures,
        }
    }
}

fn map_value(fam: &FamilyMap, z: Cx) -> Option<Cx> {
    fam.eval(z).ok().and_then(Point::finite)
}

fn random_point(rng: &mut ChaCha8Rng, a: Cx, clearance: f64) -> Cx {
    let poles = build_family_map(a).poles();
    loop {
        let z = cx(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        if poles.iter().all(|p| (z - p).norm() > clearance) {
            return z;
        }
    }
}

fn rel(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}

pub fn infinity_multiplier(params: &[Cx]) -> Check {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for &a in params {
        let m = build_family_map(a).map().multiplier_at_infinity();
        match m {
            Some(m) => {
                let d = (m - real(32.0 / 21.0)).norm();
                worst = worst.max(d);
                if d > 1e-12 {
                    t.fail(|| format!("a={a:.6}: multiplier {m}"));
                }
            }
            None => t.fail(|| format!("a={a:.6}: infinity is not a simple fixed point")),
        }
    }
    t.finish(
        "infinity-multiplier",
        format!("{} parameters, max |m - 32/21| = {worst:.3e}", params.len()),
    )
}

pub fn fixed_point_census(params: &[Cx]) -> Check {
    let mut t = Tally::new();
    for &a in params {
        let fam = build_family_map(a);
        match fixed_points(a) {
            Ok(fps) => {
                let expected = fam.map().degree() + 1;
                if fps.len() != expected {
                    t.fail(|| format!("a={a:.6}: {} fixed points, expected {expected}", fps.len()));
                }
            }
            Err(e) => t.fail(|| format!("a={a:.6}: {e}")),
        }
    }
    t.finish(
        "fixed-point-census",
        format!("{} parameters, 11 = degree + 1 each", params.len()),
    )
}

/// Extraneous points of one real parameter: six, each fixed, each
/// repelling, placed as the sign of `a` dictates.
fn extraneous_problems(a: f64) -> Vec<String> {
    let mut out = Vec::new();
    let fam = build_family_map(real(a));
    let fps = match fixed_points(real(a)) {
        Ok(f) => f,
        Err(e) => return vec![e.to_string()],
    };
    let ext: Vec<_> = fps.iter().filter(|f| f.kind == FixedKind::Extraneous).collect();
    if ext.len() != 6 {
        out.push(format!("{} extraneous points", ext.len()));
    }
    let (mut n_real, mut n_imag) = (0, 0);
    for f in &ext {
        let z = f.location.finite().unwrap_or_default();
        let res = map_value(&fam, z).map_or(f64::INFINITY, |w| (w - z).norm());
        if res > 1e-9 * z.norm().max(1.0) {
            out.push(format!("residual {res:.3e} at {z}"));
        }
        if f.multiplier.norm() <= 1.0 {
            out.push(format!("|multiplier| = {:.6} at {z}", f.multiplier.norm()));
        }
        if z.im.abs() <= 1e-12 {
            n_real += 1;
        } else if z.re.abs() <= 1e-12 {
            n_imag += 1;
        }
    }
    let want = if a > 0.0 { (6, 0) } else { (4, 2) };
    if (n_real, n_imag) != want {
        out.push(format!("{n_real} real and {n_imag} imaginary extraneous points"));
    }
    match ExtraneousLayout::new(a) {
        Ok(l) if l.ordering_holds(a) => {}
        Ok(l) => out.push(format!("ordering fails: {l:?}")),
        Err(e) => out.push(e.to_string()),
    }
    out
}

pub fn extraneous_census(params: &[f64]) -> Check {
    let mut t = Tally::new();
    for &a in params {
        for p in extraneous_problems(a) {
            t.fail(|| format!("a={a:.6}: {p}"));
        }
    }
    let (pos, neg) = (
        params.iter().filter(|&&a| a > 0.0).count(),
        params.iter().filter(|&&a| a < 0.0).count(),
    );
    t.finish(
        "extraneous-census",
        format!("{pos} positive parameters with 6 real, {neg} negative with 4 real + 2 imaginary; all repelling, ordering chains checked"),
    )
}

/// Roots and poles are double critical points, the four free ones are
/// simple, non-real, and satisfy `c^2 = (2 ± i sqrt 3)(a+1)/14`.
pub fn critical_structure(params: &[Cx]) -> Check {
    let mut t = Tally::new();
    for &a in params {
        let fam = build_family_map(a);
        let cps = critical_points(a);
        let total: u32 = cps.iter().map(|c| c.multiplicity).sum();
        if total != 18 {
            t.fail(|| format!("a={a:.6}: critical multiplicity {total}, expected 18"));
        }
        for c in &cps {
            let z = c.location;
            match c.kind {
                CriticalKind::RootOfP => {
                    let d = fam.derivative(z).map(|d| d.norm()).unwrap_or(f64::INFINITY);
                    if d > 1e-9 || c.multiplicity != 2 {
                        t.fail(|| format!("a={a:.6}: root {z} derivative {d:.3e}"));
                    }
                }
                CriticalKind::Pole => {
                    // Floating-point poles other than 0 are off by an ulp.
                    let v = fam.eval(z);
                    let blown_up = match v {
                        Ok(Point::Infinity) => true,
                        Ok(Point::Finite(w)) => w.norm() > 1e8,
                        Err(_) => false,
                    };
                    if !blown_up || c.multiplicity != 2 {
                        t.fail(|| format!("a={a:.6}: pole {z} maps to {v:?}"));
                    }
                }
                CriticalKind::Free => {
                    let d = fam.derivative(z).map(|d| d.norm()).unwrap_or(f64::INFINITY);
                    let sq = z * z * 14.0 / (a + 1.0);
                    let on_formula = (sq.re - 2.0).abs() < 1e-12 && (sq.im.abs() - 3f64.sqrt()).abs() < 1e-12;
                    if d > 1e-9 || z.im.abs() < 1e-9 || c.multiplicity != 1 || !on_formula {
                        t.fail(|| format!("a={a:.6}: free critical point {z}, |C'| = {d:.3e}"));
                    }
                }
            }
        }
    }
    t.finish(
        "critical-points",
        format!("{} parameters: roots and poles double, four simple non-real free points", params.len()),
    )
}

/// Sample `x_k = 1e-3 k`, `k = 1..=10^4`.
fn profile_grid() -> impl Iterator<Item = f64> {
    (1..=10_000).map(|k| 1e-3 * k as f64)
}

pub fn lambda_floor(params: &[f64], profile_params: &[f64]) -> Check {
    let mut t = Tally::new();
    let bound = 14.0 / 3.0;
    let mut min_profile = f64::INFINITY;
    for &a in profile_params {
        let xi2 = (a + 1.0) / 2.0;
        let pole = (xi2 / 3.0).sqrt();
        let mut prev = f64::INFINITY;
        for x in profile_grid() {
            let Ok(l) = lambda_profile(a, x) else { continue };
            min_profile = min_profile.min(l);
            if l <= bound - 1e-9 {
                t.fail(|| format!("a={a}: lambda({x}) = {l}"));
            }
            if x > pole {
                if l > prev {
                    t.fail(|| format!("a={a}: lambda increases at {x} beyond the profile pole"));
                }
                prev = l;
            }
        }
    }
    let mut min_fixed = f64::INFINITY;
    for &a in params {
        let Ok(fps) = fixed_points(real(a)) else {
            t.fail(|| format!("a={a:.6}: fixed points unavailable"));
            continue;
        };
        for f in fps.iter().filter(|f| f.kind == FixedKind::Extraneous) {
            let z = f.location.finite().unwrap_or_default();
            if z.im.abs() <= 1e-12 {
                let m = f.multiplier.re;
                min_fixed = min_fixed.min(m);
                if m <= bound - 1e-9 {
                    t.fail(|| format!("a={a:.6}: multiplier {m} at real {z}"));
                }
            }
        }
    }
    let mut parts = Vec::new();
    if !profile_params.is_empty() {
        parts.push(format!(
            "min sampled lambda = {min_profile:.6} over {} profiles, decreasing beyond the profile pole",
            profile_params.len()
        ));
    }
    if min_fixed.is_finite() {
        parts.push(format!("min real extraneous multiplier = {min_fixed:.6}"));
    }
    parts.push(format!("bound 14/3 = {bound:.6}"));
    t.finish("lambda-floor", parts.join("; "))
}

pub fn lambda_tilde_floor(params: &[f64], bs: &[f64]) -> Check {
    let mut t = Tally::new();
    let mut min_profile = f64::INFINITY;
    for &b in bs {
        let r = b.sqrt();
        for k in 1..10_000 {
            let y = r * k as f64 / 10_000.0;
            match lambda_tilde_profile(b, y) {
                Ok(l) => {
                    min_profile = min_profile.min(l);
                    if l < 4.5 - 1e-9 {
                        t.fail(|| format!("b={b}: lambda~({y}) = {l}"));
                    }
                }
                Err(e) => t.fail(|| format!("b={b}: {e}")),
            }
        }
    }
    let mut min_fixed = f64::INFINITY;
    for &a in params.iter().filter(|&&a| a < 0.0) {
        let Ok(fps) = fixed_points(real(a)) else { continue };
        for f in fps.iter().filter(|f| f.kind == FixedKind::Extraneous) {
            let z = f.location.finite().unwrap_or_default();
            if z.re.abs() <= 1e-12 {
                let m = f.multiplier.re;
                min_fixed = min_fixed.min(m);
                if m <= 1.0 {
                    t.fail(|| format!("a={a:.6}: multiplier {m} at imaginary {z}"));
                }
            }
        }
    }
    let mut evidence = Vec::new();
    if !bs.is_empty() {
        evidence.push(format!(
            "min sampled lambda~ on (0, sqrt b) = {min_profile:.6} over {} values of b",
            bs.len()
        ));
    }
    if min_fixed.is_finite() {
        evidence.push(format!("min imaginary extraneous multiplier = {min_fixed:.6}"));
    }
    evidence.push("bound 9/2".to_string());
    t.finish(
        "lambda-tilde-floor",
        evidence.join("; "),
    )
}

/// `C(-z) = -C(z)`, and for real `a` also `C(conj z) = conj C(z)`.
pub fn symmetry_pointwise(params: &[f64], rng: &mut ChaCha8Rng, n: usize, perturb: Option<f64>) -> Check {
    let mut t = Tally::new();
    let mut worst_odd = 0.0f64;
    let mut worst_conj = 0.0f64;
    for &a in params {
        let base = build_family_map(real(a));
        let fam = match perturb {
            Some(eps) => base.perturbed(eps),
            None => base,
        };
        for _ in 0..n {
            let z = random_point(rng, real(a), 1e-3);
            let (Some(w), Some(wm), Some(wc)) =
                (map_value(&fam, z), map_value(&fam, -z), map_value(&fam, z.conj()))
            else {
                continue;
            };
            let e_odd = rel((wm + w).norm(), w.norm());
            let e_conj = rel((wc - w.conj()).norm(), w.norm());
            worst_odd = worst_odd.max(e_odd);
            worst_conj = worst_conj.max(e_conj);
            if e_odd > 1e-12 {
                t.fail(|| format!("a={a:.6}: oddness error {e_odd:.3e} at {z}"));
            }
            if e_conj > 1e-12 {
                t.fail(|| format!("a={a:.6}: conjugation error {e_conj:.3e} at {z}"));
            }
        }
    }
    t.finish(
        "oddness-and-conjugation",
        format!("{n} points per parameter, max relative error: odd {worst_odd:.3e}, conjugate {worst_conj:.3e}"),
    )
}

/// `C_a(iy) = i phi(a, y)`.
pub fn axis_conjugacy(params: &[f64], rng: &mut ChaCha8Rng, n: usize) -> Check {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for &a in params {
        let fam = build_family_map(real(a));
        for _ in 0..n {
            let y: f64 = rng.random_range(-4.0..4.0);
            if y.abs() < 1e-3 {
                continue;
            }
            let (Some(w), Ok(p)) = (map_value(&fam, cx(0.0, y)), phi(a, y)) else {
                t.fail(|| format!("a={a:.6}: evaluation failed at y={y}"));
                continue;
            };
            let e = rel((w - cx(0.0, p)).norm(), p.abs());
            worst = worst.max(e);
            if e > 1e-10 {
                t.fail(|| format!("a={a:.6}: conjugacy error {e:.3e} at y={y}"));
            }
        }
    }
    t.finish(
        "imaginary-axis-conjugacy",
        format!("{n} points per parameter, max relative error {worst:.3e}"),
    )
}

/// Closed form against the map built from `p_a` by the definition.
pub fn closed_form_agreement(params: &[f64], rng: &mut ChaCha8Rng, n: usize, perturb: Option<f64>) -> Check {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for &a in params {
        let generic = match chebyshev_of(&family_polynomial(real(a))) {
            Ok(m) => m,
            Err(e) => {
                t.fail(|| format!("a={a:.6}: {e}"));
                continue;
            }
        };
        let base = build_family_map(real(a));
        let fam = match perturb {
            Some(eps) => base.perturbed(eps),
            None => base,
        };
        for _ in 0..n {
            let z = random_point(rng, real(a), 1e-3);
            let (Some(w1), Some(w2)) = (map_value(&fam, z), generic.eval(z).ok().and_then(Point::finite)) else {
                continue;
            };
            let e = rel((w1 - w2).norm(), w2.norm());
            worst = worst.max(e);
            if e > 1e-10 {
                t.fail(|| format!("a={a:.6}: closed form differs by {e:.3e} at {z}"));
            }
        }
    }
    t.finish(
        "closed-form-agreement",
        format!("{n} points per parameter, max relative difference {worst:.3e}"),
    )
}

/// Closed-form derivative against a fourth-order central difference.
pub fn derivative_check(params: &[f64], rng: &mut ChaCha8Rng, n: usize) -> Check {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for &a in params {
        let fam = build_family_map(real(a));
        for _ in 0..n {
            let z = random_point(rng, real(a), 0.05);
            let h = 1e-3 * z.norm().max(0.1);
            let f = |d: f64| map_value(&fam, z + d * h);
            let (Some(f2), Some(f1), Some(m1), Some(m2), Ok(d)) =
                (f(2.0), f(1.0), f(-1.0), f(-2.0), fam.derivative(z))
            else {
                continue;
            };
            let fd = (-f2 + f1 * 8.0 - m1 * 8.0 + m2) / (12.0 * h);
            let e = rel((fd - d).norm(), d.norm());
            worst = worst.max(e);
            if e > 1e-5 {
                t.fail(|| format!("a={a:.6}: derivative {d} vs difference {fd} at {z}"));
            }
        }
    }
    t.finish(
        "derivative-finite-difference",
        format!("{n} points per parameter, max relative error {worst:.3e}"),
    )
}

fn polar(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Cx {
    Cx::from_polar(rng.random_range(lo..hi), rng.random_range(0.0..std::f64::consts::TAU))
}

/// `C_g = T o C_h o T^-1` with `h = lambda g o T`, for random quartics `g`,
/// random affine `T` and random nonzero `lambda`. Points are kept at
/// distance 0.1 from the poles of `C_g` (zeros of `g'`).
pub fn scaling_theorem(rng: &mut ChaCha8Rng, n: usize) -> Check {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < n {
        let g = Poly::new((0..5).map(|_| polar(rng, 0.5, 2.0)).collect());
        let alpha = polar(rng, 0.5, 2.0);
        let beta = cx(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let lambda = polar(rng, 0.5, 2.0);
        let h = g.compose_affine(alpha, beta).scale(lambda);
        let d = g.derivative();
        let Ok(crit) = solve_cubic(d.coeff(3), d.coeff(2), d.coeff(1), d.coeff(0)) else {
            continue;
        };
        let w = cx(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let z = alpha * w + beta;
        if crit.iter().any(|c| (z - c).norm() < 0.1) {
            continue;
        }
        done += 1;
        let (Ok(cg), Ok(ch)) = (chebyshev_of(&g), chebyshev_of(&h)) else {
            t.fail(|| format!("no iteration map for {:?}", g.coeffs()));
            continue;
        };
        let lhs = cg.eval(z).ok().and_then(Point::finite);
        let inner = ch.eval(w).ok().and_then(Point::finite);
        let (Some(lhs), Some(inner)) = (lhs, inner) else {
            t.fail(|| format!("evaluation at a pole, z={z}"));
            continue;
        };
        let rhs = alpha * inner + beta;
        let e = rel((lhs - rhs).norm(), lhs.norm());
        worst = worst.max(e);
        if e > 1e-8 {
            t.fail(|| format!("conjugacy error {e:.3e} at z={z} for g={:?}", g.coeffs()));
        }
    }
    t.finish(
        "scaling-theorem",
        format!("{n} random quartics and affine maps, max relative error {worst:.3e}"),
    )
}

/// Quartics built as `p_a((z - shift)/scale) / lambda` are reduced back to
/// the family, and `C_p = T o C_a o T^-1` is checked with `T(w) = pre_scale
/// w + affine_shift` taken from the reduction. The error is measured
/// against `|C_p(z)| + |pre_scale C_a'(w)|`, since the recovered `a`
/// carries rounding that the derivative amplifies.
pub fn reduction_conjugacy(rng: &mut ChaCha8Rng, n: usize) -> Check {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    let mut recovered = 0.0f64;
    for _ in 0..n {
        let a = polar(rng, 0.05, 0.95);
        let lambda = polar(rng, 0.5, 2.0);
        let scale = polar(rng, 0.5, 2.0);
        let shift = cx(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let inv = scale.inv();
        let p = family_polynomial(a)
            .compose_affine(inv, -shift * inv)
            .scale(lambda.inv());
        let c: Vec<Cx> = (0..5).rev().map(|k| p.coeff(k)).collect();
        let red = match reduce_quartic([c[0], c[1], c[2], c[3], c[4]]) {
            Ok(r) => r,
            Err(e) => {
                t.fail(|| format!("a={a}: reduction failed: {e}"));
                continue;
            }
        };
        let (CaseTag::Case3Generic, Some(ra)) = (red.case_tag, red.a) else {
            t.fail(|| format!("a={a}: reduced to {:?}", red.case_tag));
            continue;
        };
        recovered = recovered.max((ra - a).norm().min((ra - a.inv()).norm()));
        let (Ok(cp), fam) = (chebyshev_of(&p), build_family_map(ra)) else {
            t.fail(|| format!("a={a}: no iteration map"));
            continue;
        };
        let w = random_point(rng, ra, 0.1);
        let z = red.pre_scale * w + red.affine_shift;
        let lhs = cp.eval(z).ok().and_then(Point::finite);
        let (Some(lhs), Some(inner), Ok(dw)) = (lhs, map_value(&fam, w), fam.derivative(w)) else {
            continue;
        };
        let rhs = red.pre_scale * inner + red.affine_shift;
        let scale = lhs.norm() + (red.pre_scale * dw).norm() * w.norm().max(1.0);
        let e = rel((lhs - rhs).norm(), scale);
        worst = worst.max(e);
        if e > 1e-8 {
            t.fail(|| format!("a={a}: conjugacy error {e:.3e} at z={z}"));
        }
    }
    t.finish(
        "reduction-conjugacy",
        format!("{n} affine images of the family reduced back, max parameter error {recovered:.3e}, max scaled conjugacy error {worst:.3e}"),
    )
}

/// For `a > 0`: the zero `ζ` of `phi` in `(0,1)` and a repelling two-cycle
/// in `(0, ζ)` confirmed through the complex map.
pub fn two_cycle(params: &[f64]) -> Check {
    let mut t = Tally::new();
    let mut min_mult = f64::INFINITY;
    let mut worst_res = 0.0f64;
    let pos: Vec<f64> = params.iter().copied().filter(|&a| a > 0.0).collect();
    for &a in &pos {
        match find_two_cycle(a) {
            Ok(c) => {
                min_mult = min_mult.min(c.cycle_multiplier);
                worst_res = worst_res.max(c.residual);
                let zero = phi(a, c.zeta).map(f64::abs).unwrap_or(f64::INFINITY);
                if !(c.zeta > 0.0 && c.zeta < 1.0) || zero > 1e-10 {
                    t.fail(|| format!("a={a:.6}: zeta = {}, |phi(zeta)| = {zero:.3e}", c.zeta));
                }
                if !(c.y_low > 0.0 && c.y_low < c.zeta) {
                    t.fail(|| format!("a={a:.6}: y = {} outside (0, zeta)", c.y_low));
                }
                if c.cycle_multiplier <= 1.0 {
                    t.fail(|| format!("a={a:.6}: cycle multiplier {}", c.cycle_multiplier));
                }
                if c.residual >= 1e-9 {
                    t.fail(|| format!("a={a:.6}: residual {:.3e}", c.residual));
                }
            }
            Err(e) => t.fail(|| format!("a={a:.6}: {e}")),
        }
    }
    t.finish(
        "imaginary-two-cycle",
        format!("{} positive parameters, min cycle multiplier {min_mult:.6}, max residual {worst_res:.3e}", pos.len()),
    )
}

pub fn rays(params: &[f64], exec: Execution) -> Check {
    let mut t = Tally::new();
    let mut intervals = 0;
    let mut samples = 0;
    let reports = crate::par::map(params, exec, |&a| ray_checks(a));
    for (&a, report) in params.iter().zip(reports) {
        match report {
            Ok(r) => {
                for c in &r.intervals {
                    intervals += 1;
                    samples += c.samples;
                    for v in &c.violations {
                        t.fail(|| format!("a={a:.6} {}: sample {} ended at {} after {} steps", c.label, v.sample, v.final_point, v.iterations));
                    }
                }
            }
            Err(e) => t.fail(|| format!("a={a:.6}: {e}")),
        }
    }
    t.finish(
        "rays-in-basins",
        format!("{} parameters, {intervals} intervals, {samples} samples, within 1e-9 of the claimed root in at most 500 steps", params.len()),
    )
}

/// Indices of rows whose centers are closest to the real axis.
fn axis_rows(g: &BasinGrid) -> Vec<usize> {
    let h = g.height();
    if h % 2 == 1 {
        vec![h / 2]
    } else {
        vec![h / 2 - 1, h / 2]
    }
}

/// Pixels on the rows next to the real axis, with center beyond the
/// outer extraneous point by more than a pixel, that do not carry the
/// label of `±1`.
pub fn axis_row_violations(g: &BasinGrid, outer: f64) -> (usize, usize) {
    let dx = g.spec.pixel_width();
    let plus = g.label_of_root(real(1.0));
    let minus = g.label_of_root(real(-1.0));
    let (mut bad, mut total) = (0, 0);
    for j in axis_rows(g) {
        for i in 0..g.width() {
            let x = g.spec.pixel_center(i, j).re;
            if x.abs() > outer + dx {
                total += 1;
                let want = if x > 0.0 { plus } else { minus };
                if g.label(i, j) != want {
                    bad += 1;
                }
            }
        }
    }
    (bad, total)
}

pub fn raster(params: &[f64], size: usize, exec: Execution) -> Check {
    let mut t = Tally::new();
    let mut notes = Vec::new();
    for &a in params {
        let spec = GridSpec::with_size(size, size);
        let g = match render_basins(real(a), &spec, exec) {
            Ok(g) => g,
            Err(e) => {
                t.fail(|| format!("a={a}: {e}"));
                continue;
            }
        };
        let s = match raster_symmetry_report(&g) {
            Ok(s) => s,
            Err(e) => {
                t.fail(|| format!("a={a}: {e}"));
                continue;
            }
        };
        let rot = s.rotation_fraction();
        let refl = s.reflection_fraction().unwrap_or(1.0);
        if rot >= 0.005 || refl >= 0.005 {
            t.fail(|| format!("a={a}: symmetry violations rotation {rot:.4}, reflection {refl:.4}"));
        }
        let outer = ExtraneousLayout::new(a).map(|l| l.outer()).unwrap_or(1.0);
        let (bad, total) = axis_row_violations(&g, outer);
        if bad > 0 {
            t.fail(|| format!("a={a}: {bad} of {total} pixels beyond the outer extraneous point off the basins of ±1"));
        }
        notes.push(format!("a={a}: rotation {rot:.4}, reflection {refl:.4}, axis rows {total} ok"));
    }
    t.finish("raster-symmetry", format!("{size}x{size}; {}", notes.join("; ")))
}

/// No fixed point is indifferent: every multiplier is classified as
/// attracting, superattracting or repelling.
pub fn no_indifferent(params: &[f64]) -> Check {
    let mut t = Tally::new();
    for &a in params {
        if let Ok(fps) = fixed_points(real(a)) {
            for f in fps {
                if matches!(
                    f.classification,
                    Classification::RationallyIndifferent | Classification::IrrationallyIndifferent
                ) {
                    t.fail(|| format!("a={a:.6}: indifferent fixed point {:?}", f.location));
                }
            }
        }
    }
    t.finish(
        "no-indifferent-fixed-point",
        format!("{} parameters: roots superattracting, extraneous and infinity repelling", params.len()),
    )
}
