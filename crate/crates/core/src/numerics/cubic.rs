use super::{cmp_re_im, Cx};
use crate::{Error, Result};

const POLISH_STEPS: usize = 3;

fn eval_cubic(c: &[Cx; 4], x: Cx) -> Cx {
    ((c[3] * x + c[2]) * x + c[1]) * x + c[0]
}

fn eval_cubic_derivative(c: &[Cx; 4], x: Cx) -> Cx {
    (c[3] * 3.0 * x + c[2] * 2.0) * x + c[1]
}

fn principal_cbrt(z: Cx) -> Cx {
    if z.norm_sqr() == 0.0 {
        return z;
    }
    let (r, theta) = z.to_polar();
    Cx::from_polar(r.cbrt(), theta / 3.0)
}

/// Roots of `c3 w^3 + c2 w^2 + c1 w + c0`, with multiplicity.
///
/// Cardano's formula on the depressed cubic; both square-root branches are
/// tried and the one with the smaller worst residual is kept. Each root then
/// gets up to three Newton steps, each accepted only if it lowers the residual.
/// Roots are returned sorted by real part, then imaginary part.
pub fn solve_cubic(c3: Cx, c2: Cx, c1: Cx, c0: Cx) -> Result<[Cx; 3]> {
    if c3.norm_sqr() == 0.0 {
        return Err(Error::DegenerateDegree);
    }
    let coeffs = [c0, c1, c2, c3];
    let b = c2 / c3;
    let c = c1 / c3;
    let d = c0 / c3;
    let shift = -b / 3.0;
    let p = c - b * b / 3.0;
    let q = b * b * b * (2.0 / 27.0) - b * c / 3.0 + d;
    let sq = (q * q / 4.0 + p * p * p / 27.0).sqrt();

    let omega = Cx::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let worst = |roots: &[Cx; 3]| {
        roots
            .iter()
            .map(|&r| eval_cubic(&coeffs, r).norm())
            .fold(0.0, f64::max)
    };

    let mut best: Option<([Cx; 3], f64)> = None;
    for sign in [1.0, -1.0] {
        let u3 = -q / 2.0 + sq * sign;
        let roots = if u3.norm_sqr() == 0.0 {
            // p = q = 0: triple root
            [shift; 3]
        } else {
            let u = principal_cbrt(u3);
            let mut roots = [Cx::default(); 3];
            let mut uk = u;
            for r in roots.iter_mut() {
                *r = uk - p / (uk * 3.0) + shift;
                uk *= omega;
            }
            roots
        };
        let res = worst(&roots);
        if best.as_ref().is_none_or(|(_, r)| res < *r) {
            best = Some((roots, res));
        }
    }
    let (mut roots, _) = best.expect("two branches evaluated");

    for root in roots.iter_mut() {
        let mut res = eval_cubic(&coeffs, *root).norm();
        for _ in 0..POLISH_STEPS {
            let d = eval_cubic_derivative(&coeffs, *root);
            if d.norm_sqr() == 0.0 || res == 0.0 {
                break;
            }
            let next = *root - eval_cubic(&coeffs, *root) / d;
            let next_res = eval_cubic(&coeffs, next).norm();
            if next_res.is_nan() || next_res >= res {
                break;
            }
            *root = next;
            res = next_res;
        }
    }
    roots.sort_by(cmp_re_im);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{cx, real};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn extraneous_cubic(a: f64) -> [Cx; 4] {
        [
            real(-a * (a + 1.0)),
            real(5.0 * a * a + 16.0 * a + 5.0),
            real(-23.0 * (a + 1.0)),
            real(22.0),
        ]
    }

    #[test]
    fn roots_of_unity() {
        let roots = solve_cubic(real(1.0), real(0.0), real(0.0), real(-1.0)).unwrap();
        let expected = [
            Cx::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0),
            Cx::from_polar(1.0, 4.0 * std::f64::consts::PI / 3.0),
            real(1.0),
        ];
        let mut expected = expected.to_vec();
        expected.sort_by(cmp_re_im);
        for (r, e) in roots.iter().zip(&expected) {
            assert!((r - e).norm() < 1e-14, "{r} vs {e}");
        }
    }

    #[test]
    fn zero_leading_coefficient_is_rejected() {
        assert_eq!(
            solve_cubic(real(0.0), real(1.0), real(0.0), real(1.0)),
            Err(Error::DegenerateDegree)
        );
    }

    #[test]
    fn triple_root() {
        // (w - 2)^3
        let roots = solve_cubic(real(1.0), real(-6.0), real(12.0), real(-8.0)).unwrap();
        for r in roots {
            assert!((r - 2.0).norm() < 1e-5);
        }
    }

    #[test]
    fn extraneous_cubic_positive_parameter_brackets() {
        let a = 0.5;
        let c = extraneous_cubic(a);
        let roots = solve_cubic(c[3], c[2], c[1], c[0]).unwrap();
        for r in &roots {
            assert!(r.im.abs() < 1e-12);
        }
        assert!(0.0 < roots[0].re && roots[0].re < a);
        assert!(a < roots[1].re && roots[1].re < (a + 1.0) / 2.0);
        assert!((a + 1.0) / 2.0 < roots[2].re && roots[2].re < 1.0);
    }

    #[test]
    fn extraneous_cubic_negative_parameter_brackets() {
        let b = 0.5;
        let c = extraneous_cubic(-b);
        let roots = solve_cubic(c[3], c[2], c[1], c[0]).unwrap();
        assert!(-b < roots[0].re && roots[0].re < 0.0);
        assert!(0.0 < roots[1].re && roots[1].re < (1.0 - b) / 2.0);
        assert!((1.0 - b) / 2.0 < roots[2].re && roots[2].re < 1.0);
    }

    #[test]
    fn random_cubic_residuals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let mut coeff = || {
                let mag: f64 = rng.random_range(1e-3..1e3);
                Cx::from_polar(mag, rng.random_range(0.0..std::f64::consts::TAU))
            };
            let c = [coeff(), coeff(), coeff(), coeff()];
            let roots = solve_cubic(c[3], c[2], c[1], c[0]).unwrap();
            let scale = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
            for r in roots {
                let res = eval_cubic(&c, r).norm();
                assert!(res < 1e-9 * scale, "residual {res} for root {r} of {c:?}");
            }
        }
    }

    #[test]
    fn complex_coefficients() {
        let roots_in = [cx(1.0, 1.0), cx(-2.0, 0.5), cx(0.0, -3.0)];
        // expand (w - r0)(w - r1)(w - r2)
        let [r0, r1, r2] = roots_in;
        let c2 = -(r0 + r1 + r2);
        let c1 = r0 * r1 + r0 * r2 + r1 * r2;
        let c0 = -(r0 * r1 * r2);
        let got = solve_cubic(real(1.0), c2, c1, c0).unwrap();
        let mut want = roots_in.to_vec();
        want.sort_by(cmp_re_im);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() < 1e-12);
        }
    }
}
