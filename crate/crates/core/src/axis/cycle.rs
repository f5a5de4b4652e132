use super::bisect::{bisect, polish};
use super::functions::{phi, phi_prime, real_map};
use super::profile::ExtraneousLayout;
use super::check_positive_parameter;
use crate::chebyshev::{build_family_map, eval_derivative};
use crate::numerics::{cx, real};
use crate::{Error, Result};

/// A point just right of 0 where `f` is negative; `f` must tend to
/// `-inf` at `0+`.
fn negative_near_zero(f: impl Fn(f64) -> Result<f64>, start: f64) -> Result<f64> {
    let mut d = start;
    while d > 1e-12 {
        if f(d)? < 0.0 {
            return Ok(d);
        }
        d *= 0.5;
    }
    Err(Error::Bracket {
        what: "value near the pole at 0",
        lo: 0.0,
        hi: start,
    })
}

/// The unique positive zero `ζ` of `phi` for `a ∈ (0,1)`, so that
/// `C_a(±iζ) = 0`.
pub fn imaginary_root(a: f64) -> Result<f64> {
    check_positive_parameter(a)?;
    let f = |y| phi(a, y);
    let lo = negative_near_zero(f, 1e-3)?;
    let z = bisect(f, lo, 1.0, "imaginary root")?;
    Ok(polish(f, |y| phi_prime(a, y), z))
}

/// A period-two orbit `{iy, i phi(y)}` of `C_a` on the imaginary axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoCycle {
    pub zeta: f64,
    pub y_low: f64,
    /// `phi(y_low)`, the other point of the cycle.
    pub partner: f64,
    pub cycle_multiplier: f64,
    /// `|C_a(C_a(i y_low)) - i y_low|`, through the complex map.
    pub residual: f64,
}

/// Fixed point of `phi∘phi` in `(0, ζ)`.
///
/// On `(0, ζ)`, `phi` runs from `-inf` to 0 and `phi∘phi` from `-inf` to
/// `+inf`, so `phi(phi(y)) - y` changes sign.
pub fn find_two_cycle(a: f64) -> Result<TwoCycle> {
    let zeta = imaginary_root(a)?;
    let g = |y| phi(a, phi(a, y)?).map(|v| v - y);
    let lo = negative_near_zero(g, zeta * 1e-3)?;
    let mut hi = zeta * (1.0 - 1e-9);
    while g(hi)? <= 0.0 {
        hi = zeta - (zeta - hi) * 0.5;
        if hi >= zeta {
            return Err(Error::Bracket {
                what: "two-cycle",
                lo,
                hi: zeta,
            });
        }
    }
    let y_low = bisect(g, lo, hi, "two-cycle")?;
    let partner = phi(a, y_low)?;
    let cycle_multiplier = phi_prime(a, y_low)? * phi_prime(a, partner)?;
    let fam = build_family_map(real(a));
    let start = cx(0.0, y_low);
    let back = fam
        .eval_point(fam.eval(start)?)?
        .finite()
        .ok_or(Error::Pole(start))?;
    Ok(TwoCycle {
        zeta,
        y_low,
        partner,
        cycle_multiplier,
        residual: (back - start).norm(),
    })
}

/// The four real zeros of `C_a` for `a ∈ (0,1)`, sorted.
///
/// The positive ones lie in `(0, a3)` and `(sqrt((a+1)/2), a1)`; the map
/// tends to `-inf` at the left end of both brackets and is fixed at the
/// right end.
pub fn real_roots_of_map(a: f64) -> Result<Vec<f64>> {
    check_positive_parameter(a)?;
    let ExtraneousLayout::Positive { a1, a3, .. } = ExtraneousLayout::new(a)? else {
        return Err(Error::ParameterOutOfRange(real(a)));
    };
    let f = |x| real_map(a, x);
    let df = |x| eval_derivative(real(a), real(x)).map(|d| d.re);
    let lo = negative_near_zero(f, a3 * 0.5)?;
    let inner = polish(f, df, bisect(f, lo, a3, "inner real root")?);
    let xi = ((a + 1.0) / 2.0).sqrt();
    let mut lo = xi * (1.0 + 1e-9);
    while f(lo)? >= 0.0 {
        lo = xi + (lo - xi) * 0.5;
        if lo <= xi {
            return Err(Error::Bracket {
                what: "outer real root",
                lo: xi,
                hi: a1,
            });
        }
    }
    let outer = polish(f, df, bisect(f, lo, a1, "outer real root")?);
    Ok(vec![-outer, -inner, inner, outer])
}
