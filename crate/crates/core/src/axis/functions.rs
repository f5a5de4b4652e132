use super::check_real_parameter;
use crate::chebyshev::{extraneous_squares, FamilyCoefficients};
use crate::numerics::real;
use crate::{Error, Result};

struct RealCoefficients {
    c8: f64,
    c6: f64,
    c4: f64,
    c2: f64,
    c0: f64,
    s: f64,
}

impl RealCoefficients {
    fn new(a: f64) -> Self {
        let k = FamilyCoefficients::new(real(a));
        RealCoefficients {
            c8: k.c8.re,
            c6: k.c6.re,
            c4: k.c4.re,
            c2: k.c2.re,
            c0: k.c0.re,
            s: a + 1.0,
        }
    }
}

fn finite_or_pole(v: f64, at: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Pole(real(at)))
    }
}

/// `C_a` restricted to the real line.
pub fn real_map(a: f64, x: f64) -> Result<f64> {
    let k = RealCoefficients::new(a);
    let s = k.s;
    let v = if x.abs() > 1.0 {
        let r = 1.0 / (x * x);
        let num = ((((k.c0 * r + k.c2) * r + k.c4) * r + k.c6) * r + k.c8) * r + 42.0;
        let den = ((-8.0 * s * s * s * r + 48.0 * s * s) * r - 96.0 * s) * r + 64.0;
        if den == 0.0 {
            return Err(Error::Pole(real(x)));
        }
        x * num / den
    } else {
        let t = x * x;
        let num = ((((42.0 * t + k.c8) * t + k.c6) * t + k.c4) * t + k.c2) * t + k.c0;
        let q = 2.0 * t - s;
        let den = 8.0 * x * t * q * q * q;
        if den == 0.0 {
            return Err(Error::Pole(real(x)));
        }
        num / den
    };
    finite_or_pole(v, x)
}

/// Conjugate of `C_a` on the imaginary axis: `C_a(iy) = i * phi(a, y)`.
pub fn phi(a: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Err(Error::Pole(real(0.0)));
    }
    let k = RealCoefficients::new(a);
    let s = k.s;
    let v = if y.abs() > 1.0 {
        let u = 1.0 / (y * y);
        let num = ((((-k.c0 * u + k.c2) * u - k.c4) * u + k.c6) * u - k.c8) * u + 42.0;
        let q = 2.0 + s * u;
        y * num / (8.0 * q * q * q)
    } else {
        let t = y * y;
        let num = ((((42.0 * t - k.c8) * t + k.c6) * t - k.c4) * t + k.c2) * t - k.c0;
        let q = 2.0 * t + s;
        num / (8.0 * y * t * q * q * q)
    };
    finite_or_pole(v, y)
}

/// `3 (y^2+1)^2 (y^2+a)^2 (28 y^4 + 8(a+1) y^2 + (a+1)^2) / (8 y^4 (2y^2 + (a+1))^4)`
pub fn phi_prime(a: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Err(Error::Pole(real(0.0)));
    }
    let s = a + 1.0;
    let (u, v) = if y.abs() > 1.0 {
        let r = 1.0 / (y * y);
        let q = 2.0 + s * r;
        (
            (1.0 + r) * (1.0 + a * r) / q,
            (28.0 + 8.0 * s * r + s * s * r * r) / (q * q),
        )
    } else {
        let t = y * y;
        let q = 2.0 * t + s;
        (
            (t + 1.0) * (t + a) / (t * q),
            (28.0 * t * t + 8.0 * s * t + s * s) / (q * q),
        )
    };
    finite_or_pole(0.375 * u * u * v, y)
}

/// `C_a(x) - x` in factored form:
/// `-11 (x^2-1)(x^2-a) prod_k (x^2 - w_k) / (32 x^3 (x^2 - (a+1)/2)^3)`,
/// where `w_k` are the squares of the extraneous fixed points.
pub fn displacement_real(a: f64, x: f64) -> Result<f64> {
    check_real_parameter(a)?;
    let w = extraneous_squares(real(a))?.map(|w| w.re);
    let half_s = (a + 1.0) / 2.0;
    let v = if x.abs() > 1.0 {
        let r = 1.0 / (x * x);
        let q = 1.0 - half_s * r;
        if q == 0.0 {
            return Err(Error::Pole(real(x)));
        }
        let prod: f64 = w.iter().map(|wk| 1.0 - wk * r).product();
        -11.0 * x * (1.0 - r) * (1.0 - a * r) * prod / (32.0 * q * q * q)
    } else {
        let t = x * x;
        let q = t - half_s;
        if x == 0.0 || q == 0.0 {
            return Err(Error::Pole(real(x)));
        }
        let prod: f64 = w.iter().map(|wk| t - wk).product();
        -11.0 * (t - 1.0) * (t - a) * prod / (32.0 * x * t * q * q * q)
    };
    finite_or_pole(v, x)
}

/// Multiplier formula for extraneous points, restricted to real `x`:
/// `2 (3 - 6 x^2 (x^2 - xi^2) / (3x^2 - xi^2)^2)` with `xi^2 = (a+1)/2`.
pub fn lambda_profile(a: f64, x: f64) -> Result<f64> {
    check_real_parameter(a)?;
    let xi2 = (a + 1.0) / 2.0;
    let frac = if x.abs() > 1.0 {
        let r = 1.0 / (x * x);
        let q = 3.0 - xi2 * r;
        6.0 * (1.0 - xi2 * r) / (q * q)
    } else {
        let t = x * x;
        let q = 3.0 * t - xi2;
        if q.abs() <= f64::EPSILON * xi2 {
            return Err(Error::Pole(real(x)));
        }
        6.0 * t * (t - xi2) / (q * q)
    };
    finite_or_pole(2.0 * (3.0 - frac), x)
}

/// Multiplier formula at `iy` for `a = -b`:
/// `2 (3 - 6 y^2 (y^2 + xi^2) / (3y^2 + xi^2)^2)` with `xi^2 = (1-b)/2`.
pub fn lambda_tilde_profile(b: f64, y: f64) -> Result<f64> {
    if !(b > 0.0 && b < 1.0) {
        return Err(Error::ParameterOutOfRange(real(-b)));
    }
    let xi2 = (1.0 - b) / 2.0;
    let frac = if y.abs() > 1.0 {
        let r = 1.0 / (y * y);
        let q = 3.0 + xi2 * r;
        6.0 * (1.0 + xi2 * r) / (q * q)
    } else {
        let t = y * y;
        let q = 3.0 * t + xi2;
        6.0 * t * (t + xi2) / (q * q)
    };
    Ok(2.0 * (3.0 - frac))
}
