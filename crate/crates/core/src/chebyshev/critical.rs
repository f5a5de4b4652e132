use super::family::build_family_map;
use super::map::Point;
use crate::numerics::Cx;
use crate::Result;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriticalKind {
    RootOfP,
    Pole,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalPoint {
    pub location: Cx,
    pub multiplicity: u32,
    pub kind: CriticalKind,
}

/// `[c1, -c1, c2, -c2]` where `c1`, `c2` are the principal square roots of
/// `(2 ± i sqrt(3)) (a+1) / 14`.
pub fn free_critical_points(a: Cx) -> [Cx; 4] {
    let r3 = 3f64.sqrt();
    let s = a + 1.0;
    let c1 = (Cx::new(2.0, r3) * s / 14.0).sqrt();
    let c2 = (Cx::new(2.0, -r3) * s / 14.0).sqrt();
    [c1, -c1, c2, -c2]
}

/// All eighteen critical points of `C_a` with multiplicity: the roots of
/// `p_a` and the three poles (double), and four simple free critical points.
pub fn critical_points(a: Cx) -> Vec<CriticalPoint> {
    let fam = build_family_map(a);
    let double = |location, kind| CriticalPoint {
        location,
        multiplicity: 2,
        kind,
    };
    let mut out: Vec<CriticalPoint> = fam
        .roots()
        .into_iter()
        .map(|r| double(r, CriticalKind::RootOfP))
        .collect();
    out.extend(fam.poles().into_iter().map(|p| double(p, CriticalKind::Pole)));
    out.extend(free_critical_points(a).into_iter().map(|c| CriticalPoint {
        location: c,
        multiplicity: 1,
        kind: CriticalKind::Free,
    }));
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FreeCriticalValue {
    pub point: Cx,
    pub value: Point,
    /// `R(a)`, real parameters only.
    pub r: Option<f64>,
    /// `S(a)`, real parameters only.
    pub s: Option<f64>,
    /// Critical value rebuilt from `R(a)` and `S(a)`, real parameters only.
    pub reconstructed: Option<Cx>,
}

fn is_real_parameter(a: Cx) -> bool {
    a.im == 0.0 && a.re > -1.0 && a.re < 1.0 && a.re != 0.0
}

fn r_poly(a: f64) -> f64 {
    -((((1345.0 * a + 28508.0) * a + 48838.0) * a + 28508.0) * a + 1345.0)
}

fn s_poly(a: f64) -> f64 {
    -3.0 * ((((111.0 * a - 732.0) * a + 3802.0) * a - 732.0) * a + 111.0)
}

/// Images of the free critical points, in the order of [`free_critical_points`].
pub fn free_critical_values(a: Cx) -> Result<Vec<FreeCriticalValue>> {
    let fam = build_family_map(a);
    let pts = free_critical_points(a);
    let real = is_real_parameter(a).then(|| {
        let x = a.re;
        let (r, s) = (r_poly(x), s_poly(x));
        let r3 = 3f64.sqrt();
        let scale = 512.0 * (x + 1.0).powi(3);
        let v1 = Cx::new(r, r3 * s) / (pts[0] * scale * Cx::new(-47.0, 8.0 * r3));
        let v2 = -Cx::new(r, -r3 * s) / (pts[2] * scale * Cx::new(47.0, 8.0 * r3));
        (r, s, [v1, -v1, v2, -v2])
    });
    pts.iter()
        .enumerate()
        .map(|(k, &c)| {
            Ok(FreeCriticalValue {
                point: c,
                value: fam.eval(c)?,
                r: real.map(|t| t.0),
                s: real.map(|t| t.1),
                reconstructed: real.map(|t| t.2[k]),
            })
        })
        .collect()
}
