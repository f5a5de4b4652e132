use super::bisect::polish;
use super::functions::{phi, phi_prime, real_map};
use super::check_real_parameter;
use crate::chebyshev::{eval_derivative, extraneous_squares, FamilyCoefficients};
use crate::numerics::{real, real_roots};
use crate::{Error, Result};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    Real,
    Imaginary,
}

/// Extraneous fixed points of `C_a` for real `a`, in the naming of the
/// two sign cases.
///
/// For `a > 0` all six are real: `±a1, ±a2, ±a3` with `a1 > a2 > a3 > 0`.
/// For `a = -b < 0` four are real, `±b1, ±b2` with `b1 > b2 > 0`, and two
/// are purely imaginary, `±i b3` with `b3 > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtraneousLayout {
    Positive { a1: f64, a2: f64, a3: f64 },
    Negative { b1: f64, b2: f64, b3: f64 },
}

impl ExtraneousLayout {
    pub fn new(a: f64) -> Result<Self> {
        check_real_parameter(a)?;
        let w = extraneous_squares(real(a))?;
        let scale = w.iter().map(|w| w.norm()).fold(1.0, f64::max);
        if w.iter().any(|w| w.im.abs() > 1e-9 * scale) {
            return Err(Error::Indeterminate(real(a)));
        }
        let mut w = w.map(|w| w.re);
        w.sort_by(|x, y| y.total_cmp(x));
        if a > 0.0 {
            if w[2] <= 0.0 {
                return Err(Error::Indeterminate(real(a)));
            }
            Ok(ExtraneousLayout::Positive {
                a1: w[0].sqrt(),
                a2: w[1].sqrt(),
                a3: w[2].sqrt(),
            })
        } else {
            if !(w[1] > 0.0 && w[2] < 0.0) {
                return Err(Error::Indeterminate(real(a)));
            }
            Ok(ExtraneousLayout::Negative {
                b1: w[0].sqrt(),
                b2: w[1].sqrt(),
                b3: (-w[2]).sqrt(),
            })
        }
    }

    /// The largest extraneous fixed point on the positive real axis.
    pub fn outer(&self) -> f64 {
        match *self {
            ExtraneousLayout::Positive { a1, .. } => a1,
            ExtraneousLayout::Negative { b1, .. } => b1,
        }
    }

    /// Checks the interleaving with `sqrt(|a|)`, `sqrt((a+1)/2)` and 1:
    /// `0 < a3 < sqrt(a) < a2 < sqrt((a+1)/2) < a1 < 1` for `a > 0`;
    /// `0 < b2 < sqrt((1-b)/2) < b1 < 1` and `0 < b3 < sqrt(b)` for `a = -b`.
    pub fn ordering_holds(&self, a: f64) -> bool {
        let xi = ((a + 1.0) / 2.0).sqrt();
        match *self {
            ExtraneousLayout::Positive { a1, a2, a3 } => {
                let chain = [0.0, a3, a.sqrt(), a2, xi, a1, 1.0];
                chain.windows(2).all(|w| w[0] < w[1])
            }
            ExtraneousLayout::Negative { b1, b2, b3 } => {
                let b = -a;
                let chain = [0.0, b2, xi, b1, 1.0];
                chain.windows(2).all(|w| w[0] < w[1]) && 0.0 < b3 && b3 < b.sqrt()
            }
        }
    }
}

/// Zeros of `C_a` on the real and imaginary axes, as positive coordinates
/// on each: `C_a(±x) = 0` and `C_a(±iy) = 0`.
///
/// The numerator of `C_a` is a quintic `M` in `t = z^2`; positive roots of
/// `M` give real zeros, negative roots give imaginary ones.
pub fn axis_zeros(a: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_real_parameter(a)?;
    let k = FamilyCoefficients::new(real(a));
    let m = [k.c0.re, k.c2.re, k.c4.re, k.c6.re, k.c8.re, 42.0];
    let mut on_real = Vec::new();
    let mut on_imag = Vec::new();
    for t in real_roots(&m) {
        if t > 0.0 {
            let x = polish(|x| real_map(a, x), |x| real_derivative(a, x), t.sqrt());
            on_real.push(x);
        } else if t < 0.0 {
            let y = polish(|y| phi(a, y), |y| phi_prime(a, y), (-t).sqrt());
            on_imag.push(y);
        }
    }
    on_real.sort_by(f64::total_cmp);
    on_imag.sort_by(f64::total_cmp);
    Ok((on_real, on_imag))
}

fn real_derivative(a: f64, x: f64) -> Result<f64> {
    eval_derivative(real(a), real(x)).map(|d| d.re)
}

fn symmetric(mut positive: Vec<f64>) -> Vec<f64> {
    positive.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = positive.iter().rev().map(|x| -x).collect();
    out.extend(positive);
    out
}

/// The on-axis structure of `C_a` for real `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisProfile {
    pub axis: Axis,
    pub a: f64,
    pub extraneous_sorted: Vec<f64>,
    pub poles_on_axis: Vec<f64>,
    pub roots_on_axis: Vec<f64>,
}

impl AxisProfile {
    pub fn new(a: f64, axis: Axis) -> Result<Self> {
        let layout = ExtraneousLayout::new(a)?;
        let (zr, zi) = axis_zeros(a)?;
        let xi = ((a + 1.0) / 2.0).sqrt();
        let (extraneous, poles, zeros) = match (axis, layout) {
            (Axis::Real, ExtraneousLayout::Positive { a1, a2, a3 }) => {
                (vec![a1, a2, a3], vec![-xi, 0.0, xi], zr)
            }
            (Axis::Real, ExtraneousLayout::Negative { b1, b2, .. }) => {
                (vec![b1, b2], vec![-xi, 0.0, xi], zr)
            }
            (Axis::Imaginary, ExtraneousLayout::Positive { .. }) => (vec![], vec![0.0], zi),
            (Axis::Imaginary, ExtraneousLayout::Negative { b3, .. }) => {
                (vec![b3], vec![0.0], zi)
            }
        };
        Ok(AxisProfile {
            axis,
            a,
            extraneous_sorted: symmetric(extraneous),
            poles_on_axis: poles,
            roots_on_axis: symmetric(zeros),
        })
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.extraneous_sorted.windows(2).all(|w| w[0] < w[1])
    }
}
