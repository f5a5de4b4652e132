//! One-dimensional dynamics of `C_a` for real `a` on its two invariant axes.
//!
//! On the imaginary axis `C_a(iy) = i * phi(a, y)`; on the real axis `C_a`
//! is a real increasing function away from its poles.

mod bisect;
mod cycle;
mod functions;
mod profile;
mod rays;

pub use bisect::bisect;
pub use cycle::{find_two_cycle, imaginary_root, real_roots_of_map, TwoCycle};
pub use functions::{
    displacement_real, lambda_profile, lambda_tilde_profile, phi, phi_prime, real_map,
};
pub use profile::{axis_zeros, Axis, AxisProfile, ExtraneousLayout};
pub use rays::{ray_checks, sample_interval, IntervalCheck, RayReport, RayViolation};

use crate::numerics::real;
use crate::{Error, Result};

/// Real parameters must lie in `(-1, 1)` and be nonzero.
pub(crate) fn check_real_parameter(a: f64) -> Result<()> {
    if a > -1.0 && a < 1.0 && a != 0.0 {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(real(a)))
    }
}

pub(crate) fn check_positive_parameter(a: f64) -> Result<()> {
    if a > 0.0 && a < 1.0 {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(real(a)))
    }
}
