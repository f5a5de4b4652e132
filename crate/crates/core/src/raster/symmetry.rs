use super::render::BasinGrid;
use crate::numerics::Cx;
use crate::{Error, Result};

use serde::{Deserialize, Serialize};

/// Pixel counts breaking the two symmetries of a basin raster.
///
/// Rotation: pixel `(i, j)` against `(w-1-i, h-1-j)` with labels paired by
/// `r <-> -r`. Reflection: `(i, j)` against `(w-1-i, j)` with labels
/// paired by `r <-> -conj(r)`; absent when that is not a permutation of
/// the roots (non-real `a`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub pixels: usize,
    pub rotation_violations: usize,
    pub reflection_violations: Option<usize>,
}

impl SymmetryReport {
    pub fn rotation_fraction(&self) -> f64 {
        self.rotation_violations as f64 / self.pixels as f64
    }

    pub fn reflection_fraction(&self) -> Option<f64> {
        self.reflection_violations
            .map(|v| v as f64 / self.pixels as f64)
    }
}

/// `pairing[l]` is the label of the image of root `l` under `f`; label 0
/// maps to 0.
fn pairing(roots: &[Cx; 4], f: impl Fn(Cx) -> Cx) -> Option<[u8; 5]> {
    let mut out = [0u8; 5];
    for (k, &r) in roots.iter().enumerate() {
        let img = f(r);
        let j = roots
            .iter()
            .position(|&s| (s - img).norm() <= 1e-9 * r.norm().max(1.0))?;
        out[k + 1] = j as u8 + 1;
    }
    Some(out)
}

fn count(g: &BasinGrid, pair: &[u8; 5], mirror: impl Fn(usize, usize) -> (usize, usize)) -> usize {
    let (w, h) = (g.width(), g.height());
    let mut bad = 0;
    for j in 0..h {
        for i in 0..w {
            let (mi, mj) = mirror(i, j);
            if pair[g.label(i, j) as usize] != g.label(mi, mj) {
                bad += 1;
            }
        }
    }
    bad
}

pub fn raster_symmetry_report(g: &BasinGrid) -> Result<SymmetryReport> {
    if !g.spec.viewport.is_symmetric() {
        return Err(Error::AsymmetricViewport);
    }
    let (w, h) = (g.width(), g.height());
    let rot = pairing(&g.roots, |r| -r).expect("roots come in opposite pairs");
    let rotation_violations = count(g, &rot, |i, j| (w - 1 - i, h - 1 - j));
    let reflection_violations =
        pairing(&g.roots, |r| -r.conj()).map(|p| count(g, &p, |i, j| (w - 1 - i, j)));
    Ok(SymmetryReport {
        pixels: w * h,
        rotation_violations,
        reflection_violations,
    })
}
