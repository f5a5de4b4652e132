/// Real roots of a real polynomial given in ascending coefficient order.
///
/// Roots are isolated recursively: the real roots of the derivative split
/// the line into monotone pieces, each piece is bisected if its endpoints
/// differ in sign, and a critical point where the polynomial vanishes
/// exactly is reported as a (multiple) root. Returned sorted, without
/// repetition.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|&x| x == 0.0) {
        c.pop();
    }
    match c.len() {
        0 | 1 => return Vec::new(),
        2 => return vec![-c[0] / c[1]],
        _ => {}
    }
    let n = c.len() - 1;
    let lead = c[n];
    // Cauchy bound
    let bound = 1.0 + c[..n].iter().map(|x| (x / lead).abs()).fold(0.0, f64::max);
    let eval = |x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k);

    let deriv: Vec<f64> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &x)| x * k as f64)
        .collect();
    let mut knots = vec![-bound];
    knots.extend(real_roots(&deriv).into_iter().filter(|x| x.abs() < bound));
    knots.push(bound);

    let mut roots = Vec::new();
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(lo), eval(hi));
        if flo == 0.0 {
            roots.push(lo);
        } else if flo.signum() != fhi.signum() && fhi != 0.0 {
            roots.push(bisect_sign(&eval, lo, hi, flo));
        }
    }
    if eval(bound) == 0.0 {
        roots.push(bound);
    }
    roots.dedup();
    roots
}

fn bisect_sign(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, flo: f64) -> f64 {
    let neg_lo = flo < 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_and_cubic() {
        let r = real_roots(&[-2.0, 0.0, 1.0]);
        assert_eq!(r.len(), 2);
        assert!((r[0] + 2f64.sqrt()).abs() < 1e-15 && (r[1] - 2f64.sqrt()).abs() < 1e-15);
        // (x-1)(x-2)(x-3)
        let r = real_roots(&[-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots(&[1.0, 0.0, 1.0]).is_empty());
        assert!(real_roots(&[3.0]).is_empty());
    }

    #[test]
    fn quintic_mixed() {
        // (x+1)(x-0.5)(x-4)(x^2+1)
        let p = [2.0, -2.5, -1.5, -1.5, -3.5, 1.0];
        let r = real_roots(&p);
        assert_eq!(r.len(), 3, "{r:?}");
        for (got, want) in r.iter().zip([-1.0, 0.5, 4.0]) {
            assert!((got - want).abs() < 1e-12, "{got} {want}");
        }
    }
}
