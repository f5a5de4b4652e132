use crate::numerics::{Cx, Poly};
use crate::{Error, Result};

/// Switch to the `w = 1/z` chart above this modulus.
pub const CHART_THRESHOLD: f64 = 1e8;

/// `|den| <= POLE_RATIO * |num|` is reported as the point at infinity.
const POLE_RATIO: f64 = 1e-14;

/// Both `|num|` and `|den|` below this is an indeterminate form.
const UNDERFLOW: f64 = 1e-300;

/// A point of the Riemann sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Point {
    Finite(Cx),
    Infinity,
}

impl Point {
    pub fn finite(self) -> Option<Cx> {
        match self {
            Point::Finite(z) => Some(z),
            Point::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Point::Infinity)
    }
}

/// `num / den` with projective evaluation near infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    num: Poly,
    den: Poly,
    /// `p, p', p''` when the map came from [`chebyshev_of`]; finite values are
    /// then taken from the operator form, which stays accurate next to the
    /// zeros of `p'` where the expanded fraction cancels.
    source: Option<[Poly; 3]>,
}

impl RationalMap {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(RationalMap { num, den, source: None })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Degree as a self-map of the sphere.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn eval(&self, z: Cx) -> Result<Point> {
        let (n, d, factor) = if z.norm() > CHART_THRESHOLD {
            // num(z)/den(z) = z^(dn - dd) * rev_num(1/z) / rev_den(1/z)
            let w = z.inv();
            let dn = self.num.degree().map_or(0, |d| d as i32);
            let dd = self.den.degree().map_or(0, |d| d as i32);
            (
                self.num.eval_reversed(w),
                self.den.eval_reversed(w),
                z.powi(dn - dd),
            )
        } else {
            (self.num.eval(z), self.den.eval(z), Cx::new(1.0, 0.0))
        };
        let (nn, dn) = (n.norm(), d.norm());
        if nn < UNDERFLOW && dn < UNDERFLOW {
            return Err(Error::Indeterminate(z));
        }
        if dn <= POLE_RATIO * nn {
            return Ok(Point::Infinity);
        }
        let value = match (&self.source, z.norm() > CHART_THRESHOLD) {
            (Some([p, d1, d2]), false) => {
                let (v, g1, g2) = (p.eval(z), d1.eval(z), d2.eval(z));
                let w = z - (v * g2 / (g1 * g1 * 2.0) + 1.0) * v / g1;
                if w.re.is_finite() && w.im.is_finite() {
                    w
                } else {
                    n / d
                }
            }
            _ => n / d * factor,
        };
        if value.re.is_finite() && value.im.is_finite() {
            Ok(Point::Finite(value))
        } else {
            Ok(Point::Infinity)
        }
    }

    pub fn eval_point(&self, p: Point) -> Result<Point> {
        match p {
            Point::Finite(z) => self.eval(z),
            Point::Infinity => {
                let dn = self.num.degree().unwrap_or(0);
                let dd = self.den.degree().unwrap_or(0);
                Ok(match dn.cmp(&dd) {
                    std::cmp::Ordering::Greater => Point::Infinity,
                    std::cmp::Ordering::Equal => Point::Finite(
                        self.num.leading().unwrap_or_default() / self.den.leading().unwrap(),
                    ),
                    std::cmp::Ordering::Less => Point::Finite(Cx::default()),
                })
            }
        }
    }

    /// Derivative at 0 of `w -> 1 / R(1/w)`, when infinity is a simple-pole fixed point
    /// (numerator degree one above the denominator's).
    pub fn multiplier_at_infinity(&self) -> Option<Cx> {
        let dn = self.num.degree()?;
        let dd = self.den.degree()?;
        (dn == dd + 1).then(|| self.den.leading().unwrap() / self.num.leading().unwrap())
    }
}

/// `z - (1 + L/2) p/p'` with `L = p p'' / p'^2`, as a single fraction
/// `(2 z p'^3 - p (2 p'^2 + p p'')) / (2 p'^3)`.
///
/// A common power of `z` is divided out; no other cancellation is attempted.
pub fn chebyshev_of(p: &Poly) -> Result<RationalMap> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg < 2 {
        return Err(Error::DegreeTooSmall(deg));
    }
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let two = Cx::new(2.0, 0.0);
    let d1_sq = &d1 * &d1;
    let d1_cube2 = (&d1_sq * &d1).scale(two);
    let num = &(&Poly::z() * &d1_cube2) - &(p * &(&d1_sq.scale(two) + &(p * &d2)));
    let den = d1_cube2;
    let k = num
        .lowest_index()
        .unwrap_or(usize::MAX)
        .min(den.lowest_index().unwrap_or(usize::MAX));
    let (num, den) = if k > 0 && k != usize::MAX {
        (num.shift_down(k), den.shift_down(k))
    } else {
        (num, den)
    };
    let mut map = RationalMap::new(num, den)?;
    map.source = Some([p.clone(), d1, d2]);
    Ok(map)
}
