//! Orbits of `C_a` in the plane, basin classification and basin rasters.

mod orbit;
mod ppm;
mod render;
mod symmetry;

pub use orbit::{
    classify_point, iterate_orbit, iterate_orbit_traced, OrbitOutcome, OrbitResult, Stepper,
    DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE,
};
pub use ppm::{palette, to_ppm, write_ppm};
pub use render::{render_basins, BasinGrid, GridSpec, Viewport};
pub use symmetry::{raster_symmetry_report, SymmetryReport};
