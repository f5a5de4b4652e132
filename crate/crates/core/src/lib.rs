//! Chebyshev's root-finding iteration for quartic polynomials.
//!
//! Every quartic with a nontrivial rotational symmetry group either falls
//! into one of a few special shapes or reduces, by an affine change of
//! variable, to the one-parameter family `p_a(z) = (z^2 - 1)(z^2 - a)`.
//! This crate builds the degree-ten Chebyshev map `C_a` of that family,
//! classifies its fixed and critical points, studies its dynamics on the
//! two invariant axes, and renders basins of attraction.
//!
//! Module map:
//!
//! * [`numerics`]: complex polynomials, the cubic solver, quartic normalization.
//! * [`chebyshev`]: the rational map, its derivative, critical and fixed points.
//! * [`axis`]: one-dimensional dynamics on the real and imaginary axes.
//! * [`raster`]: orbits, basin classification, rasters and PPM output.
//! * [`report`], [`verify`], [`cli`]: JSON reports, the verification sweep, the command line.

pub mod axis;
pub mod chebyshev;
pub mod cli;
mod error;
pub mod numerics;
pub mod par;
pub mod raster;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::Cx;
