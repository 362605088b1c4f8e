//! Orthogonal polynomials by three-term recurrence.
//!
//! Provides the pieces the hydrogen eigenfunctions are assembled from:
//!
//! * generalized Laguerre `L_k^{(alpha)}`, via
//!   `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`,
//! * associated Legendre `P_l^m` (Ferrers function, Condon-Shortley phase
//!   included, so `P_1^1(0) = -1`), seeded with
//!   `P_m^m = (-1)^m (2m-1)!! (1-u^2)^{m/2}` and raised in degree by
//!   `(l-m) P_l^m = u (2l-1) P_{l-1}^m - (l+m-1) P_{l-2}^m`,
//! * plain Legendre `P_n` with derivative, used by the Gauss-Legendre rule.

use crate::scalar::Real;

/// Generalized Laguerre polynomial `L_k^{(alpha)}(x)`.
///
/// Panics if `x < 0`; the polynomial itself is entire, but every use in this
/// crate is on the radial half-line and a negative argument is a caller bug.
pub fn assoc_laguerre<R: Real>(k: u32, alpha: u32, x: R) -> R {
    assert!(
        x >= R::zero(),
        "assoc_laguerre: x = {x} must be nonnegative"
    );
    let a = R::of_u32(alpha);
    let mut prev = R::one();
    if k == 0 {
        return prev;
    }
    let mut curr = R::one() + a - x;
    for j in 1..k {
        let jf = R::of_u32(j);
        let next =
            ((R::of(2.0) * jf + R::one() + a - x) * curr - (jf + a) * prev) / (jf + R::one());
        prev = curr;
        curr = next;
    }
    curr
}

/// Associated Legendre function `P_l^m(u)` for `0 <= m <= l`, `|u| <= 1`,
/// with the Condon-Shortley phase.
///
/// Panics if `m > l` or `|u| > 1`.
pub fn assoc_legendre<R: Real>(l: u32, m: u32, u: R) -> R {
    assert!(m <= l, "assoc_legendre: m = {m} must not exceed l = {l}");
    assert!(
        u.abs() <= R::one(),
        "assoc_legendre: u = {u} outside [-1, 1]"
    );
    // P_m^m, with (-1)^m folded into the double-factorial product.
    let sin_theta = ((R::one() - u) * (R::one() + u)).sqrt();
    let mut pmm = R::one();
    for j in 1..=m {
        pmm = pmm * -(R::of(2.0) * R::of_u32(j) - R::one()) * sin_theta;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut curr = u * R::of(2.0 * f64::from(m) + 1.0) * pmm;
    for deg in (m + 2)..=l {
        let df = R::of_u32(deg);
        let mf = R::of_u32(m);
        let next =
            (u * (R::of(2.0) * df - R::one()) * curr - (df + mf - R::one()) * prev) / (df - mf);
        prev = curr;
        curr = next;
    }
    curr
}

/// Legendre polynomial `P_n(x)` together with its derivative.
pub fn legendre_with_derivative<R: Real>(n: usize, x: R) -> (R, R) {
    if n == 0 {
        return (R::one(), R::zero());
    }
    let mut prev = R::one();
    let mut curr = x;
    for k in 1..n {
        let kf = R::of_usize(k);
        let next = ((R::of(2.0) * kf + R::one()) * x * curr - kf * prev) / (kf + R::one());
        prev = curr;
        curr = next;
    }
    // P'_n from the standard relation; only called at interior points.
    let deriv = R::of_usize(n) * (x * curr - prev) / (x * x - R::one());
    (curr, deriv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn laguerre_low_orders() {
        // L_0 = 1, L_1^(a) = 1 + a - x, L_2^(0) = 1 - 2x + x^2/2.
        assert_eq!(assoc_laguerre(0, 3, 0.7), 1.0);
        assert_abs_diff_eq!(assoc_laguerre(1, 2, 0.5), 2.5, epsilon = 1e-15);
        let x = 0.3_f64;
        assert_abs_diff_eq!(
            assoc_laguerre(2, 0, x),
            1.0 - 2.0 * x + x * x / 2.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn laguerre_series_oracle() {
        // Term-by-term series: L_k^(a)(x) = sum_j (-1)^j C(k+a, k-j) x^j / j!.
        fn series(k: u32, a: u32, x: f64) -> f64 {
            let mut total = 0.0;
            for j in 0..=k {
                let mut binom = 1.0;
                // C(k+a, k-j) = prod_{i=1}^{k-j} (a+j+i) / i
                for i in 1..=(k - j) {
                    binom *= f64::from(a + j + i) / f64::from(i);
                }
                let mut fact = 1.0;
                for i in 1..=j {
                    fact *= f64::from(i);
                }
                total += (-1.0_f64).powi(j as i32) * binom * x.powi(j as i32) / fact;
            }
            total
        }
        for &(k, a) in &[(3, 1), (4, 3), (6, 2), (7, 0)] {
            for &x in &[0.0, 0.4, 1.7, 6.3, 11.0] {
                let direct = assoc_laguerre::<f64>(k, a, x);
                assert_abs_diff_eq!(
                    direct,
                    series(k, a, x),
                    epsilon = 1e-10 * direct.abs().max(1.0)
                );
            }
        }
    }

    #[test]
    fn legendre_condon_shortley_sign() {
        assert_eq!(assoc_legendre::<f64>(1, 1, 0.0), -1.0);
    }

    #[test]
    fn assoc_legendre_explicit_forms() {
        // P_3^2(x) = 15 x (1 - x^2); P_2^1(x) = -3 x sqrt(1 - x^2).
        let x = 0.4_f64;
        assert_abs_diff_eq!(
            assoc_legendre(3, 2, x),
            15.0 * x * (1.0 - x * x),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            assoc_legendre(2, 1, x),
            -3.0 * x * (1.0 - x * x).sqrt(),
            epsilon = 1e-14
        );
        // m = 0 reduces to plain Legendre.
        let (p4, _) = legendre_with_derivative(4, x);
        assert_abs_diff_eq!(assoc_legendre(4, 0, x), p4, epsilon = 1e-14);
    }

    #[test]
    fn legendre_endpoint_values() {
        for n in 0..8 {
            let (p, _) = legendre_with_derivative::<f64>(n, 1.0);
            assert_abs_diff_eq!(p, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    #[should_panic(expected = "outside [-1, 1]")]
    fn assoc_legendre_rejects_bad_argument() {
        assoc_legendre::<f64>(2, 1, 1.5);
    }

    #[test]
    #[should_panic(expected = "must be nonnegative")]
    fn laguerre_rejects_negative_argument() {
        assoc_laguerre::<f64>(2, 1, -0.1);
    }
}
