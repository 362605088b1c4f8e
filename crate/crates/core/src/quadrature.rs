//! Gauss quadrature rules.
//!
//! Two rules cover every integral in this crate:
//!
//! * Gauss-Legendre on `[-1, 1]`, used for the polar angle after the
//!   substitution `u = cos(theta)`;
//! * generalized Gauss-Laguerre with weight `x^alpha e^{-x}`, used on the
//!   radial half-line. Nodes and weights come from the Golub-Welsch
//!   eigenproblem of the symmetrized Jacobi matrix, solved by implicit-shift
//!   QL while tracking only the first eigenvector components.
//!
//! The Laguerre rule is exposed in "flattened" form, weights `w_i e^{x_i}`,
//! so that `sum w_i f(x_i)` approximates `int_0^inf f(x) dx` directly. The
//! flattened weights are assembled in log space: the raw weights underflow
//! near n = 200 while `w_i e^{x_i}` itself stays O(1).

use crate::scalar::Real;
use crate::special::legendre_with_derivative;

/// Gauss-Legendre rule: `sum w_i f(x_i)` approximates `int_{-1}^{1} f`,
/// exact for polynomials of degree `2 count - 1`. Nodes ascending.
pub fn gauss_legendre<R: Real>(count: usize) -> (Vec<R>, Vec<R>) {
    assert!(count >= 1, "gauss_legendre: empty rule");
    let mut nodes = vec![R::zero(); count];
    let mut weights = vec![R::zero(); count];
    let nf = R::of_usize(count);
    for i in 0..count.div_ceil(2) {
        // Tricomi initial guess, then Newton.
        let mut x = (R::PI() * (R::of_usize(i) + R::of(0.75)) / (nf + R::of(0.5))).cos();
        let mut dp = R::one();
        for _ in 0..60 {
            let (p, d) = legendre_with_derivative(count, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= R::epsilon() * (x.abs() + R::one()) {
                let (_, d) = legendre_with_derivative(count, x);
                dp = d;
                break;
            }
        }
        let w = R::of(2.0) / ((R::one() - x * x) * dp * dp);
        // i = 0 is the largest root; store symmetrically, ascending.
        nodes[count - 1 - i] = x;
        nodes[i] = -x;
        weights[count - 1 - i] = w;
        weights[i] = w;
    }
    if count % 2 == 1 {
        nodes[count / 2] = R::zero();
    }
    (nodes, weights)
}

/// Generalized Gauss-Laguerre rule for weight `x^alpha e^{-x}` on `[0, inf)`.
///
/// `nodes[i]` are ascending; `flattened[i] = w_i e^{x_i}` where `w_i` are the
/// weight-function weights. Pairs whose flattened weight underflows to zero
/// (possible only for rules of several hundred nodes) are dropped, so every
/// returned weight is strictly positive.
pub fn gauss_laguerre_flattened<R: Real>(count: usize, alpha: u32) -> (Vec<R>, Vec<R>) {
    assert!(count >= 1, "gauss_laguerre: empty rule");
    // Symmetrized Jacobi matrix of the Laguerre recurrence.
    let af = R::of_u32(alpha);
    let mut diag: Vec<R> = (0..count)
        .map(|i| R::of(2.0) * R::of_usize(i) + af + R::one())
        .collect();
    let mut off: Vec<R> = (0..count)
        .map(|i| {
            if i == 0 {
                R::zero()
            } else {
                (R::of_usize(i) * (R::of_usize(i) + af)).sqrt()
            }
        })
        .collect();
    // off[i] couples rows i-1 and i; shift to the tqli convention
    // (off[i] couples i and i+1) by dropping the leading zero.
    off.rotate_left(1);
    let mut first_row = vec![R::zero(); count];
    first_row[0] = R::one();
    tridiagonal_eigen_first_components(&mut diag, &mut off, &mut first_row);

    let mut pairs: Vec<(R, R)> = diag.into_iter().zip(first_row).collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite eigenvalues"));

    // ln Gamma(alpha + 1) for integer alpha.
    let mut ln_mu0 = R::zero();
    for j in 2..=alpha {
        ln_mu0 += R::of_u32(j).ln();
    }

    let mut nodes = Vec::with_capacity(count);
    let mut flattened = Vec::with_capacity(count);
    for (x, z) in pairs {
        let w = (x + ln_mu0 + R::of(2.0) * z.abs().ln()).exp();
        if w > R::zero() && w.is_finite() {
            nodes.push(x);
            flattened.push(w);
        }
    }
    (nodes, flattened)
}

/// Eigenvalues (into `diag`) and first eigenvector components (into
/// `first_row`) of a symmetric tridiagonal matrix, implicit-shift QL.
/// `off[i]` couples rows `i` and `i+1`; `off[n-1]` is workspace.
fn tridiagonal_eigen_first_components<R: Real>(diag: &mut [R], off: &mut [R], first_row: &mut [R]) {
    let n = diag.len();
    if n <= 1 {
        return;
    }
    let two = R::of(2.0);
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= R::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 60, "tridiagonal QL failed to converge");
            let mut g = (diag[l + 1] - diag[l]) / (two * off[l]);
            let mut r = g.hypot(R::one());
            let signed_r = if g >= R::zero() { r } else { -r };
            g = diag[m] - diag[l] + off[l] / (g + signed_r);
            let mut s = R::one();
            let mut c = R::one();
            let mut p = R::zero();
            let mut early_deflation = false;
            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == R::zero() {
                    diag[i + 1] -= p;
                    off[m] = R::zero();
                    early_deflation = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + two * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = first_row[i + 1];
                first_row[i + 1] = s * first_row[i] + c * f;
                first_row[i] = c * first_row[i] - s * f;
            }
            if early_deflation {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = R::zero();
        }
    }
}
