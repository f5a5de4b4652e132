use super::orbit::{Stepper, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE};
use crate::numerics::{cx, Cx};
use crate::par::{for_each_row, Execution};
use crate::{Error, Result};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Viewport {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport {
            re_min: -2.0,
            re_max: 2.0,
            im_min: -2.0,
            im_max: 2.0,
        }
    }
}

impl Viewport {
    /// Invariant under `z -> -z` (and hence under `z -> -conj(z)`).
    pub fn is_symmetric(&self) -> bool {
        let scale = [self.re_min, self.re_max, self.im_min, self.im_max]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()));
        (self.re_min + self.re_max).abs() <= 1e-12 * scale
            && (self.im_min + self.im_max).abs() <= 1e-12 * scale
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub width: usize,
    pub height: usize,
    pub viewport: Viewport,
    pub max_iterations: usize,
    pub tolerance: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            width: 800,
            height: 800,
            viewport: Viewport::default(),
            max_iterations: DEFAULT_MAX_ITERATIONS,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl GridSpec {
    pub fn with_size(width: usize, height: usize) -> Self {
        GridSpec {
            width,
            height,
            ..GridSpec::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let v = &self.viewport;
        let bad = if self.width == 0 || self.height == 0 {
            Some("width and height must be at least 1".to_string())
        } else if !(v.re_min < v.re_max && v.im_min < v.im_max) {
            Some(format!("empty viewport {v:?}"))
        } else if self.max_iterations == 0 {
            Some("iteration budget must be at least 1".to_string())
        } else if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            Some(format!("tolerance must be positive, got {}", self.tolerance))
        } else {
            None
        };
        bad.map_or(Ok(()), |m| Err(Error::InvalidGrid(m)))
    }

    pub fn pixel_width(&self) -> f64 {
        (self.viewport.re_max - self.viewport.re_min) / self.width as f64
    }

    pub fn pixel_height(&self) -> f64 {
        (self.viewport.im_max - self.viewport.im_min) / self.height as f64
    }

    /// Center of pixel `(i, j)`; row 0 is the top (largest imaginary part).
    ///
    /// Offsets are measured from the viewport center, so pixels mirrored
    /// through the center of a symmetric viewport have exactly opposite
    /// coordinates.
    pub fn pixel_center(&self, i: usize, j: usize) -> Cx {
        let v = &self.viewport;
        let cre = 0.5 * (v.re_min + v.re_max);
        let cim = 0.5 * (v.im_min + v.im_max);
        let x = (i as f64 + 0.5) - 0.5 * self.width as f64;
        let y = (j as f64 + 0.5) - 0.5 * self.height as f64;
        cx(cre + x * self.pixel_width(), cim - y * self.pixel_height())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasinGrid {
    pub a: Cx,
    pub spec: GridSpec,
    /// Roots of `p_a` in label order: `roots[k]` has label `k + 1`.
    pub roots: [Cx; 4],
    /// Row-major, top row first; 0 is unresolved.
    pub labels: Vec<u8>,
    pub iter_counts: Vec<u32>,
}

impl BasinGrid {
    pub fn width(&self) -> usize {
        self.spec.width
    }

    pub fn height(&self) -> usize {
        self.spec.height
    }

    pub fn label(&self, i: usize, j: usize) -> u8 {
        self.labels[j * self.spec.width + i]
    }

    /// Label of the root closest to `z`.
    pub fn label_of_root(&self, z: Cx) -> u8 {
        let k = (0..4)
            .min_by(|&x, &y| (self.roots[x] - z).norm().total_cmp(&(self.roots[y] - z).norm()))
            .unwrap();
        k as u8 + 1
    }

    pub fn counts(&self) -> [usize; 5] {
        let mut c = [0; 5];
        for &l in &self.labels {
            c[l as usize] += 1;
        }
        c
    }
}

/// Classifies the center of every pixel of `spec` under `C_a`.
pub fn render_basins(a: Cx, spec: &GridSpec, exec: Execution) -> Result<BasinGrid> {
    spec.validate()?;
    let stepper = Stepper::new(a);
    let w = spec.width;
    let mut cells = vec![(0u8, 0u32); w * spec.height];
    for_each_row(&mut cells, w, exec, |j, row| {
        for (i, cell) in row.iter_mut().enumerate() {
            let r = stepper.orbit(spec.pixel_center(i, j), spec.max_iterations, spec.tolerance, 0);
            *cell = (r.label(), r.iterations as u32);
        }
    });
    let (labels, iter_counts) = cells.into_iter().unzip();
    Ok(BasinGrid {
        a,
        spec: *spec,
        roots: *stepper.roots(),
        labels,
        iter_counts,
    })
}
