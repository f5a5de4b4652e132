use super::family::{build_family_map, eval_derivative};
use super::map::Point;
use crate::numerics::{cmp_re_im, solve_cubic, Cx};
use crate::Result;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixedKind {
    Root,
    Extraneous,
    Infinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Superattracting,
    Attracting,
    RationallyIndifferent,
    IrrationallyIndifferent,
    Repelling,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FixedPointRecord {
    pub location: Point,
    pub kind: FixedKind,
    pub multiplier: Cx,
    pub classification: Classification,
}

const SUPERATTRACTING_TOL: f64 = 1e-9;
const INDIFFERENT_TOL: f64 = 1e-9;
const MAX_ROOT_OF_UNITY_ORDER: u32 = 1000;

pub fn classify_multiplier(lambda: Cx) -> Classification {
    let m = lambda.norm();
    if m < SUPERATTRACTING_TOL {
        Classification::Superattracting
    } else if m < 1.0 - INDIFFERENT_TOL {
        Classification::Attracting
    } else if (m - 1.0).abs() <= INDIFFERENT_TOL {
        let turns = lambda.arg() / std::f64::consts::TAU;
        let rational = (1..=MAX_ROOT_OF_UNITY_ORDER).any(|q| {
            let x = turns * q as f64;
            (x - x.round()).abs() <= INDIFFERENT_TOL
        });
        if rational {
            Classification::RationallyIndifferent
        } else {
            Classification::IrrationallyIndifferent
        }
    } else {
        Classification::Repelling
    }
}

/// Roots `w` of `22 w^3 - 23(a+1) w^2 + (5a^2 + 16a + 5) w - a(a+1)`;
/// the extraneous fixed points are their square roots.
///
/// For real `a` the cubic is real, and roots whose imaginary part is pure
/// rounding are put back on the real line.
pub fn extraneous_squares(a: Cx) -> Result<[Cx; 3]> {
    let s = a + 1.0;
    let mut w = solve_cubic(
        Cx::new(22.0, 0.0),
        s * -23.0,
        a * a * 5.0 + a * 16.0 + 5.0,
        -(a * s),
    )?;
    if a.im == 0.0 {
        for r in w.iter_mut() {
            if r.im.abs() <= 1e-12 * r.norm() {
                r.im = 0.0;
            }
        }
    }
    Ok(w)
}

/// Multiplier at an extraneous fixed point:
/// `2 (3 - 12 z^2 (2z^2 - (a+1)) / (6z^2 - (a+1))^2)`.
pub fn extraneous_multiplier(a: Cx, z: Cx) -> Cx {
    let s = a + 1.0;
    let t = z * z;
    let q = t * 6.0 - s;
    (Cx::new(3.0, 0.0) - t * 12.0 * (t * 2.0 - s) / (q * q)) * 2.0
}

pub fn multiplier_at(a: Cx, fp: &FixedPointRecord) -> Result<Cx> {
    match (fp.kind, fp.location) {
        (FixedKind::Extraneous, Point::Finite(z)) => Ok(extraneous_multiplier(a, z)),
        (_, Point::Finite(z)) => eval_derivative(a, z),
        (_, Point::Infinity) => Ok(build_family_map(a)
            .map()
            .multiplier_at_infinity()
            .expect("numerator degree exceeds denominator degree by one")),
    }
}

/// All eleven fixed points of `C_a`: four roots of `p_a`, six extraneous
/// points and infinity, sorted by kind, then real part, then imaginary part.
pub fn fixed_points(a: Cx) -> Result<Vec<FixedPointRecord>> {
    let fam = build_family_map(a);
    let mut finite: Vec<(FixedKind, Cx)> = fam
        .roots()
        .into_iter()
        .map(|r| (FixedKind::Root, r))
        .collect();
    for w in extraneous_squares(a)? {
        let r = w.sqrt();
        finite.push((FixedKind::Extraneous, r));
        finite.push((FixedKind::Extraneous, -r));
    }
    finite.sort_by(|x, y| x.0.cmp(&y.0).then(cmp_re_im(&x.1, &y.1)));

    let mut records = Vec::with_capacity(11);
    let entries = finite
        .into_iter()
        .map(|(k, z)| (k, Point::Finite(z)))
        .chain(std::iter::once((FixedKind::Infinity, Point::Infinity)));
    for (kind, location) in entries {
        let mut rec = FixedPointRecord {
            location,
            kind,
            multiplier: Cx::default(),
            classification: Classification::Superattracting,
        };
        rec.multiplier = multiplier_at(a, &rec)?;
        rec.classification = classify_multiplier(rec.multiplier);
        records.push(rec);
    }
    Ok(records)
}
