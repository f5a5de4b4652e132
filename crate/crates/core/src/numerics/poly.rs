use std::ops::{Add, Mul, Neg, Sub};

use super::Cx;

/// Dense polynomial with complex coefficients in ascending degree order.
///
/// Trailing exact zeros are trimmed on construction, so the last stored
/// coefficient is the leading one. The zero polynomial stores nothing.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly {
    coeffs: Vec<Cx>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Cx>) -> Self {
        while coeffs.last().is_some_and(|c| c.norm_sqr() == 0.0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Cx::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Cx) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`
    pub fn monomial(c: Cx, k: usize) -> Self {
        let mut coeffs = vec![Cx::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(Cx::new(1.0, 0.0), 1)
    }

    pub fn coeffs(&self) -> &[Cx] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Cx {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Cx> {
        self.coeffs.last().copied()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Index of the lowest nonzero coefficient, i.e. the multiplicity of the root at 0.
    pub fn lowest_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.norm_sqr() != 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Cx) -> Cx {
        self.coeffs
            .iter()
            .rev()
            .fold(Cx::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Evaluates the reversed polynomial `w^n p(1/w)` at `w`, where `n` is the degree.
    pub fn eval_reversed(&self, w: Cx) -> Cx {
        self.coeffs
            .iter()
            .fold(Cx::new(0.0, 0.0), |acc, &c| acc * w + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Cx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Divides by `z^k`; the low `k` coefficients are dropped.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly::new(self.coeffs.iter().skip(k).copied().collect())
    }

    /// `p(alpha * z + shift)`, computed by Horner's rule over polynomials.
    pub fn compose_affine(&self, alpha: Cx, shift: Cx) -> Poly {
        let inner = Poly::new(vec![shift, alpha]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, &c| &(&acc * &inner) + &Poly::constant(c))
    }

    /// `p(z^k)`
    pub fn inflate(&self, k: usize) -> Poly {
        assert!(k >= 1);
        let mut coeffs = vec![Cx::new(0.0, 0.0); self.degree().map_or(0, |d| d * k + 1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Poly::new(coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Cx::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{cx, real};
    use proptest::prelude::*;

    fn naive_eval(p: &Poly, z: Cx) -> Cx {
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &c)| c * z.powu(k as u32))
            .sum()
    }

    #[test]
    fn eval_constant_term() {
        let p = Poly::from_real(&[1.0, 0.0, 1.0, 0.0, 1.0]);
        assert_eq!(p.eval(real(0.0)), real(1.0));
    }

    #[test]
    fn eval_at_family_root() {
        // (z^2 - 1)(z^2 - 0.5) = z^4 - 1.5 z^2 + 0.5
        let p = Poly::from_real(&[0.5, 0.0, -1.5, 0.0, 1.0]);
        assert_eq!(p.eval(real(1.0)), real(0.0));
    }

    #[test]
    fn eval_extraneous_polynomial_at_zero() {
        // Q(z) for a = 0.5; constant term is -a(a+1)
        let a: f64 = 0.5;
        let q = Poly::from_real(&[
            -a * (a + 1.0),
            0.0,
            5.0 * a * a + 16.0 * a + 5.0,
            0.0,
            -23.0 * (a + 1.0),
            0.0,
            22.0,
        ]);
        assert_eq!(q.eval(real(0.0)), real(-0.75));
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(
            Poly::monomial(real(1.0), 4).derivative(),
            Poly::monomial(real(4.0), 3)
        );
        assert!(Poly::constant(cx(3.0, 2.0)).derivative().is_zero());
        let p = Poly::from_real(&[0.5, 0.0, -1.5, 0.0, 1.0]);
        assert_eq!(p.derivative(), Poly::from_real(&[0.0, -3.0, 0.0, 4.0]));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::from_real(&[0.0, 0.0]).degree(), None);
        assert_eq!(Poly::zero().leading(), None);
    }

    #[test]
    fn compose_affine_shifts_roots() {
        // (z - 1)^2 composed with z + 1 is z^2
        let p = Poly::from_real(&[1.0, -2.0, 1.0]);
        assert_eq!(p.compose_affine(real(1.0), real(1.0)), Poly::monomial(real(1.0), 2));
    }

    #[test]
    fn eval_reversed_matches_definition() {
        let p = Poly::new(vec![cx(1.0, 2.0), cx(-3.0, 0.5), cx(0.25, 1.0)]);
        let w = cx(0.3, -0.7);
        let expected = p.eval(w.inv()) * w.powu(2);
        assert!((p.eval_reversed(w) - expected).norm() < 1e-12 * expected.norm());
    }

    fn arb_cx(r: f64) -> impl Strategy<Value = Cx> {
        (-r..r, -r..r).prop_map(|(a, b)| cx(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn horner_agrees_with_naive_sum(
            coeffs in prop::collection::vec(arb_cx(10.0), 1..=11),
            z in arb_cx(10.0).prop_filter("|z| <= 10", |z| z.norm() <= 10.0),
        ) {
            let p = Poly::new(coeffs);
            let h = p.eval(z);
            let n = naive_eval(&p, z);
            // relative to the magnitude of the largest term, which bounds rounding in both
            let scale = p.coeffs().iter().enumerate()
                .map(|(k, c)| c.norm() * z.norm().powi(k as i32))
                .fold(0.0, f64::max)
                .max(f64::MIN_POSITIVE);
            prop_assert!((h - n).norm() <= 1e-12 * scale, "horner {h} naive {n}");
        }
    }
}
