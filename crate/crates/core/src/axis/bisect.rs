use crate::{Error, Result};

/// Root of `f` in `[lo, hi]` by bisection down to floating-point resolution.
///
/// `f(lo)` and `f(hi)` must differ in sign. Errors raised by `f` inside the
/// bracket are propagated.
pub fn bisect(
    f: impl Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    what: &'static str,
) -> Result<f64> {
    let flo = f(lo)?;
    let fhi = f(hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracket { what, lo, hi });
    }
    let neg_lo = flo < 0.0;
    for _ in 0..2100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// One Newton step from `x`, kept only if it reduces `|f|`.
pub(crate) fn polish(
    f: impl Fn(f64) -> Result<f64>,
    df: impl Fn(f64) -> Result<f64>,
    x: f64,
) -> f64 {
    let (Ok(fx), Ok(d)) = (f(x), df(x)) else {
        return x;
    };
    if d.abs() <= 1e-6 {
        return x;
    }
    let next = x - fx / d;
    match f(next) {
        Ok(fn_) if fn_.abs() < fx.abs() => next,
        _ => x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0, "sqrt2").unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_bracket() {
        assert!(matches!(
            bisect(|x| Ok(x * x + 1.0), -1.0, 1.0, "none"),
            Err(Error::Bracket { .. })
        ));
    }
}
