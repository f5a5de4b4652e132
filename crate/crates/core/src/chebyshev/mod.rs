//! The Chebyshev iteration map, generically and in closed form for the
//! family `p_a(z) = (z^2 - 1)(z^2 - a)`, with its critical and fixed points.

mod critical;
mod family;
mod fixed;
mod map;

pub use critical::{
    critical_points, free_critical_points, free_critical_values, CriticalKind, CriticalPoint,
    FreeCriticalValue,
};
pub use family::{build_family_map, eval_derivative, FamilyCoefficients, FamilyMap};
pub use fixed::{
    classify_multiplier, extraneous_multiplier, extraneous_squares, fixed_points, multiplier_at,
    Classification, FixedKind, FixedPointRecord,
};
pub use map::{chebyshev_of, Point, RationalMap, CHART_THRESHOLD};
