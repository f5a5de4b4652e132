//! Complex scalars, dense polynomials, root solving and the quartic
//! normalization pipeline.

mod cubic;
mod poly;
mod quartic;
mod real_roots;

pub use cubic::solve_cubic;
pub use poly::Poly;
pub use quartic::{
    family_polynomial, normal_form, normalize_quartic, reduce_quartic, reduce_to_family, CaseTag, NormalForm,
    NormalizedQuartic, QuarticReduction,
};
pub use real_roots::real_roots;

/// Double-precision complex scalar used throughout the crate.
pub type Cx = num_complex::Complex64;

/// Coefficients with magnitude at most this fraction of the largest one are
/// treated as zero when classifying polynomial shapes.
pub const ZERO_REL: f64 = 1e-12;

#[inline]
pub fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Cx {
    Cx::new(re, 0.0)
}

/// Order on complex numbers by real part, then imaginary part; `-0.0 == 0.0`.
pub fn cmp_re_im(a: &Cx, b: &Cx) -> std::cmp::Ordering {
    use std::cmp::Ordering::Equal;
    a.re.partial_cmp(&b.re)
        .unwrap_or(Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Equal))
}
