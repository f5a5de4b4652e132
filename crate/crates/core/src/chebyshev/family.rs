use super::map::{Point, RationalMap};
use crate::numerics::{cmp_re_im, Cx, Poly};
use crate::{Error, Result};

/// Even-power coefficients of the closed-form numerator
/// `42 z^10 + c8 z^8 + c6 z^6 + c4 z^4 + c2 z^2 + c0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyCoefficients {
    pub c8: Cx,
    pub c6: Cx,
    pub c4: Cx,
    pub c2: Cx,
    pub c0: Cx,
}

impl FamilyCoefficients {
    pub fn new(a: Cx) -> Self {
        let a2 = a * a;
        let a3 = a2 * a;
        FamilyCoefficients {
            c8: (a + 1.0) * -51.0,
            c6: (a2 * 5.0 + a * 3.0 + 5.0) * 4.0,
            c4: (a3 - a2 * 7.0 - a * 7.0 + 1.0) * -3.0,
            c2: a * (a2 + a * 3.0 + 1.0) * -6.0,
            c0: a2 * (a + 1.0),
        }
    }
}

/// The Chebyshev map `C_a` of `p_a(z) = (z^2 - 1)(z^2 - a)` in closed form:
/// numerator `42 z^10 + ... + a^2 (a+1)`, denominator `8 z^3 (2 z^2 - (a+1))^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMap {
    a: Cx,
    map: RationalMap,
    degenerate: bool,
}

/// Parameters closer than this to -1, 0 or 1 are flagged degenerate.
const DEGENERATE_TOL: f64 = 1e-12;

pub fn build_family_map(a: Cx) -> FamilyMap {
    let k = FamilyCoefficients::new(a);
    let zero = Cx::default();
    let num = Poly::new(vec![
        k.c0,
        zero,
        k.c2,
        zero,
        k.c4,
        zero,
        k.c6,
        zero,
        k.c8,
        zero,
        Cx::new(42.0, 0.0),
    ]);
    // 8 z^3 (2z^2 - s)^3 = 64 z^9 - 96 s z^7 + 48 s^2 z^5 - 8 s^3 z^3
    let s = a + 1.0;
    let den = Poly::new(vec![
        zero,
        zero,
        zero,
        s * s * s * -8.0,
        zero,
        s * s * 48.0,
        zero,
        s * -96.0,
        zero,
        Cx::new(64.0, 0.0),
    ]);
    let degenerate = [-1.0, 0.0, 1.0]
        .iter()
        .any(|&e| (a - e).norm() <= DEGENERATE_TOL);
    FamilyMap {
        a,
        map: RationalMap::new(num, den).expect("denominator is nonzero"),
        degenerate,
    }
}

impl FamilyMap {
    pub fn a(&self) -> Cx {
        self.a
    }

    pub fn map(&self) -> &RationalMap {
        &self.map
    }

    /// True for `a` in `{-1, 0, 1}`, where numerator and denominator share a factor.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn eval(&self, z: Cx) -> Result<Point> {
        self.map.eval(z)
    }

    pub fn eval_point(&self, p: Point) -> Result<Point> {
        self.map.eval_point(p)
    }

    pub fn derivative(&self, z: Cx) -> Result<Cx> {
        eval_derivative(self.a, z)
    }

    /// The polynomial `p_a`.
    pub fn polynomial(&self) -> Poly {
        crate::numerics::family_polynomial(self.a)
    }

    /// Roots of `p_a` sorted by real part then imaginary part: these are the
    /// basin labels 1..=4 in that order.
    pub fn roots(&self) -> [Cx; 4] {
        let r = self.a.sqrt();
        let one = Cx::new(1.0, 0.0);
        let mut roots = [-one, -r, r, one];
        roots.sort_by(cmp_re_im);
        roots
    }

    /// `0` and `±sqrt((a+1)/2)`.
    pub fn poles(&self) -> [Cx; 3] {
        let xi = ((self.a + 1.0) / 2.0).sqrt();
        [-xi, Cx::default(), xi]
    }

    /// Copy of the map with `eps` added to the linear numerator coefficient.
    /// This breaks oddness; used to check that the verification suite notices.
    pub fn perturbed(&self, eps: f64) -> FamilyMap {
        let mut coeffs = self.map.num().coeffs().to_vec();
        coeffs[1] += eps;
        FamilyMap {
            a: self.a,
            map: RationalMap::new(Poly::new(coeffs), self.map.den().clone())
                .expect("denominator is nonzero"),
            degenerate: self.degenerate,
        }
    }
}

/// Closed-form derivative of `C_a`:
/// `3 (z^2-1)^2 (z^2-a)^2 (28 z^4 - 8(a+1) z^2 + (a+1)^2) / (8 z^4 (2z^2 - (a+1))^4)`.
///
/// Evaluated as `3/8 * u^2 * v` with `u = (z^2-1)(z^2-a) / (z^2 (2z^2-s))` and
/// `v = (28 z^4 - 8 s z^2 + s^2) / (2z^2 - s)^2`, which stays finite for large `|z|`.
pub fn eval_derivative(a: Cx, z: Cx) -> Result<Cx> {
    let s = a + 1.0;
    let one = Cx::new(1.0, 0.0);
    let tiny = f64::EPSILON * s.norm().max(1.0);
    let (u, v) = if z.norm() > 1.0 {
        // same quotients divided through by powers of z^2
        let w = z.inv();
        let r = w * w;
        let q = Cx::new(2.0, 0.0) - s * r;
        if q.norm() <= tiny {
            return Err(Error::Pole(z));
        }
        (
            (one - r) * (one - a * r) / q,
            (Cx::new(28.0, 0.0) - s * r * 8.0 + s * s * r * r) / (q * q),
        )
    } else {
        let t = z * z;
        let q = t * 2.0 - s;
        if t.norm() <= tiny || q.norm() <= tiny {
            return Err(Error::Pole(z));
        }
        (
            (t - 1.0) * (t - a) / (t * q),
            (t * t * 28.0 - t * s * 8.0 + s * s) / (q * q),
        )
    };
    Ok(u * u * v * 0.375)
}
