use serde::{Deserialize, Serialize};

use super::{Cx, Poly, ZERO_REL};
use crate::{Error, Result};

/// A quartic made monic and centered: `poly(z) = lambda * g(z + shift)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedQuartic {
    pub poly: Poly,
    /// Centroid of the input, the `zeta` of `T(z) = z + zeta`.
    pub shift: Cx,
    /// Reciprocal of the input's leading coefficient.
    pub lambda: Cx,
}

impl NormalizedQuartic {
    /// Reconstructs the input: `g(z) = poly(z - shift) / lambda`.
    pub fn replay(&self) -> Poly {
        self.poly
            .compose_affine(Cx::new(1.0, 0.0), -self.shift)
            .scale(self.lambda.inv())
    }
}

/// Monic, centered form of `a4 z^4 + a3 z^3 + a2 z^2 + a1 z + a0`.
pub fn normalize_quartic(a4: Cx, a3: Cx, a2: Cx, a1: Cx, a0: Cx) -> Result<NormalizedQuartic> {
    if a4.norm_sqr() == 0.0 {
        return Err(Error::NotAQuartic(Poly::new(vec![a0, a1, a2, a3]).degree()));
    }
    let lambda = a4.inv();
    let shift = -a3 / (a4 * 4.0);
    let g = Poly::new(vec![a0, a1, a2, a3, a4]);
    let q = g.compose_affine(Cx::new(1.0, 0.0), shift).scale(lambda);
    let mut coeffs = q.coeffs().to_vec();
    coeffs[3] = Cx::default();
    coeffs[4] = Cx::new(1.0, 0.0);
    Ok(NormalizedQuartic {
        poly: Poly::new(coeffs),
        shift,
        lambda,
    })
}

/// `p(z) = z^alpha * p0(z^beta)` with `alpha`, `beta` maximal.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub alpha: usize,
    pub beta: usize,
    pub p0: Poly,
}

impl NormalForm {
    pub fn reconstruct(&self) -> Poly {
        &Poly::monomial(Cx::new(1.0, 0.0), self.alpha) * &self.p0.inflate(self.beta)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Normal form of a monic polynomial.
///
/// Coefficients below `ZERO_REL` times the largest are treated as zero.
/// `beta` is the gcd of the exponents that survive after factoring out
/// `z^alpha`; a monomial has no such exponents and gets `beta = 1`, `p0 = 1`.
pub fn normal_form(p: &Poly) -> Result<NormalForm> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    if (lead - 1.0).norm() > ZERO_REL {
        return Err(Error::NotMonic);
    }
    let thr = ZERO_REL * p.max_coeff_norm();
    let nonzero: Vec<usize> = (0..p.coeffs().len())
        .filter(|&k| p.coeff(k).norm() > thr)
        .collect();
    let alpha = nonzero[0];
    let beta = nonzero
        .iter()
        .map(|k| k - alpha)
        .fold(0, gcd)
        .max(1);
    let deg0 = (p.degree().unwrap() - alpha) / beta;
    let mut coeffs: Vec<Cx> = (0..=deg0)
        .map(|j| {
            let k = alpha + j * beta;
            if nonzero.contains(&k) {
                p.coeff(k)
            } else {
                Cx::default()
            }
        })
        .collect();
    coeffs[deg0] = Cx::new(1.0, 0.0);
    Ok(NormalForm {
        alpha,
        beta,
        p0: Poly::new(coeffs),
    })
}

/// Shape of a normalized quartic `z^4 + c z^2 + d z + e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    /// `z^4 + e`, unicritical.
    Case1,
    /// `z^2 (z^2 + c)`
    Case2,
    /// `(z^2 - g)^2`: two distinct double roots.
    Case3TwoRoots,
    /// Reduces to `(z^2 - 1)(z^2 - a)` with `a` outside `{-1, 0, 1}`.
    Case3Generic,
    /// `z (z^3 + d)`
    Case4,
    /// `d != 0` and not Case 4: no rotational symmetry.
    TrivialSymmetry,
    /// `z^4`
    Monomial,
}

impl CaseTag {
    /// What is already known about the iteration map for this shape.
    pub fn disposition(self) -> &'static str {
        match self {
            CaseTag::Case1 => {
                "unicritical quartic: the Julia set of the iteration map is connected and its \
                 symmetry group equals that of the polynomial"
            }
            CaseTag::Case2 | CaseTag::Case4 => {
                "root at the centroid with nontrivial symmetry: the Julia set of the iteration \
                 map is connected and its symmetry group equals that of the polynomial"
            }
            CaseTag::Case3TwoRoots => {
                "two distinct roots of equal multiplicity: the Julia set of the iteration map is \
                 connected and its symmetry group equals that of the polynomial"
            }
            CaseTag::Case3Generic => "member of the family (z^2 - 1)(z^2 - a)",
            CaseTag::TrivialSymmetry => {
                "trivial symmetry group: the iteration map is constructed but not analyzed"
            }
            CaseTag::Monomial => "monomial: the iteration map is linear",
        }
    }
}

/// Result of reducing a quartic to the family.
///
/// The input is `reduced((z - affine_shift) / pre_scale) / scale_lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticReduction {
    /// Family parameter, present only for `Case3Generic`; `|a| <= 1`.
    pub a: Option<Cx>,
    pub affine_shift: Cx,
    pub scale_lambda: Cx,
    pub pre_scale: Cx,
    pub case_tag: CaseTag,
    /// `p_a` for the generic case, `(z^2-1)^2` for two roots, the normalized input otherwise.
    pub reduced: Poly,
}

impl QuarticReduction {
    pub fn replay(&self) -> Poly {
        let inv = self.pre_scale.inv();
        self.reduced
            .compose_affine(inv, -self.affine_shift * inv)
            .scale(self.scale_lambda.inv())
    }
}

/// `(z^2 - 1)(z^2 - a)` expanded.
pub fn family_polynomial(a: Cx) -> Poly {
    Poly::new(vec![
        a,
        Cx::default(),
        -(a + 1.0),
        Cx::default(),
        Cx::new(1.0, 0.0),
    ])
}

/// Classifies a monic centered quartic and, in the generic even case,
/// rescales it onto `(z^2 - 1)(z^2 - a)` with `|a| <= 1`.
pub fn reduce_to_family(p: &Poly) -> Result<QuarticReduction> {
    if p.degree() != Some(4) {
        return Err(Error::NotAQuartic(p.degree()));
    }
    let thr = ZERO_REL * p.max_coeff_norm();
    if (p.coeff(4) - 1.0).norm() > ZERO_REL {
        return Err(Error::NotMonic);
    }
    if p.coeff(3).norm() > thr {
        return Err(Error::NotCentered(p.coeff(3)));
    }
    let is_zero = |z: Cx| z.norm() <= thr;
    let (c, d, e) = (p.coeff(2), p.coeff(1), p.coeff(0));
    let one = Cx::new(1.0, 0.0);
    let untouched = |case_tag| QuarticReduction {
        a: None,
        affine_shift: Cx::default(),
        scale_lambda: one,
        pre_scale: one,
        case_tag,
        reduced: p.clone(),
    };

    if !is_zero(d) {
        let tag = if is_zero(c) && is_zero(e) {
            CaseTag::Case4
        } else {
            CaseTag::TrivialSymmetry
        };
        return Ok(untouched(tag));
    }
    match (is_zero(c), is_zero(e)) {
        (true, true) => return Ok(untouched(CaseTag::Monomial)),
        (true, false) => return Ok(untouched(CaseTag::Case1)),
        (false, true) => return Ok(untouched(CaseTag::Case2)),
        (false, false) => {}
    }

    // (z^2 - g1)(z^2 - g2) with g1 + g2 = -c, g1 g2 = e
    let disc = (c * c - e * 4.0).sqrt();
    let s = if (-c + disc).norm() >= (-c - disc).norm() {
        -c + disc
    } else {
        -c - disc
    };
    let mut g1 = s / 2.0;
    let mut g2 = e / g1;
    if g2.norm() > g1.norm() || (g2.norm() == g1.norm() && g2.arg() > g1.arg()) {
        std::mem::swap(&mut g1, &mut g2);
    }
    let pre_scale = g1.sqrt();
    let scale_lambda = (g1 * g1).inv();
    let a = g2 / g1;

    if (a - 1.0).norm() <= ZERO_REL {
        return Ok(QuarticReduction {
            a: None,
            affine_shift: Cx::default(),
            scale_lambda,
            pre_scale,
            case_tag: CaseTag::Case3TwoRoots,
            reduced: family_polynomial(one),
        });
    }
    if (a + 1.0).norm() <= ZERO_REL {
        // g2 = -g1 forces c = 0, which was handled above; kept for round-off.
        return Ok(untouched(CaseTag::Case1));
    }
    Ok(QuarticReduction {
        a: Some(a),
        affine_shift: Cx::default(),
        scale_lambda,
        pre_scale,
        case_tag: CaseTag::Case3Generic,
        reduced: family_polynomial(a),
    })
}

/// Full pipeline from raw coefficients `[a4, a3, a2, a1, a0]`:
/// normalization followed by [`reduce_to_family`], transforms composed.
pub fn reduce_quartic(coeffs: [Cx; 5]) -> Result<QuarticReduction> {
    let [a4, a3, a2, a1, a0] = coeffs;
    let norm = normalize_quartic(a4, a3, a2, a1, a0)?;
    let mut red = reduce_to_family(&norm.poly)?;
    red.affine_shift = norm.shift;
    red.scale_lambda *= norm.lambda;
    Ok(red)
}
