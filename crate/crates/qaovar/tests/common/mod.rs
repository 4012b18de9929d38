//! Shared independent oracles for the integration suites: adaptive Simpson
//! quadrature and characteristic-polynomial root isolation. Nothing here
//! touches the moment algebra or the Jacobi solver being verified.
//!
//! Each test binary compiles this module separately and uses a different
//! subset of it.
#![allow(dead_code)]

use qaovar::model::{build_trial, Potential, TrialParams};
use qaovar::oracle::SymmetricMatrix;

pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        m: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> f64 {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + recurse(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    recurse(f, a, m, b, fa, fm, fb, whole, tol, 32)
}

/// `2 ∫_0^cutoff f` with the absolute tolerance anchored to a crude
/// midpoint estimate of the integral's magnitude. The range is cut into
/// fixed panels first so a bump much narrower than the range cannot slip
/// between the opening samples of the adaptive pass.
pub fn integrate_even(f: &dyn Fn(f64) -> f64, cutoff: f64) -> f64 {
    let slices = 2000;
    let step = cutoff / slices as f64;
    let rough: f64 = (0..slices)
        .map(|i| f((i as f64 + 0.5) * step).abs())
        .sum::<f64>()
        * step;
    let panels = 64;
    let panel = cutoff / panels as f64;
    let tol = 1e-12 * rough.max(f64::MIN_POSITIVE) / panels as f64;
    let total: f64 = (0..panels)
        .map(|i| adaptive_simpson(f, i as f64 * panel, (i + 1) as f64 * panel, tol))
        .sum();
    2.0 * total
}

/// Whole-line integral for integrands without parity: fold the negative
/// half onto the positive one.
pub fn integrate_line(f: &dyn Fn(f64) -> f64, cutoff: f64) -> f64 {
    let folded = move |x: f64| f(x) + f(-x);
    0.5 * integrate_even(&folded, cutoff)
}

/// ∫ x^{2k} e^{-βx²} dx over the real line by quadrature.
pub fn moment_by_quadrature(two_k: u32, beta: f64) -> f64 {
    let k = two_k as f64 / 2.0;
    let cutoff = 3.0 * (k / beta).sqrt().max(1.0) + 9.0 / beta.sqrt();
    let f = |x: f64| x.powi(two_k as i32) * (-beta * x * x).exp();
    integrate_even(&f, cutoff)
}

/// `(T + V) / S` by direct quadrature of the trial wavefunction.
pub fn quotient_by_quadrature(params: &TrialParams, pot: &Potential) -> f64 {
    let psi = build_trial(params).unwrap();
    let dpsi = psi.derivative();
    let deg = psi.poly().degree().unwrap_or(0) as f64;
    let cutoff = ((110.0 + 4.0 * deg) / (2.0 * psi.rate())).sqrt();
    let s = integrate_line(&|x| psi.eval(x) * psi.eval(x), cutoff);
    let t = integrate_line(&|x| 0.5 * dpsi.eval(x) * dpsi.eval(x), cutoff);
    let v = integrate_line(&|x| psi.eval(x) * psi.eval(x) * pot.eval(x), cutoff);
    (t + v) / s
}

/// det(A - xI) by Gaussian elimination with partial pivoting.
pub fn char_poly_det(m: &SymmetricMatrix, x: f64) -> f64 {
    let n = m.dim();
    let mut a = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m.get(i, j) - if i == j { x } else { 0.0 };
        }
    }
    let mut det = 1.0f64;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r1, &r2| a[r1 * n + col].abs().total_cmp(&a[r2 * n + col].abs()))
            .unwrap();
        if a[pivot * n + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        det *= a[col * n + col];
        for row in (col + 1)..n {
            let factor = a[row * n + col] / a[col * n + col];
            for j in col..n {
                a[row * n + j] -= factor * a[col * n + j];
            }
        }
    }
    det
}

/// All real roots of det(A - xI) within the Gershgorin bound, by sign-scan
/// and bisection. Returns `None` if the scan cannot isolate `dim` roots.
pub fn char_poly_roots(m: &SymmetricMatrix) -> Option<Vec<f64>> {
    let n = m.dim();
    let radius = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).abs()).sum::<f64>())
        .fold(0.0f64, f64::max)
        + 1.0;
    for scan in [4000usize, 16000, 64000] {
        let step = 2.0 * radius / scan as f64;
        let mut roots = Vec::new();
        let mut x_prev = -radius;
        let mut f_prev = char_poly_det(m, x_prev);
        for i in 1..=scan {
            let x = -radius + step * i as f64;
            let f = char_poly_det(m, x);
            if f_prev == 0.0 {
                // Landed exactly on a root; vanishingly rare for random input.
                roots.push(x_prev);
            } else if f != 0.0 && f_prev.signum() != f.signum() {
                let (mut lo, mut hi) = (x_prev, x);
                let mut flo = f_prev;
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    let fm = char_poly_det(m, mid);
                    if fm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            x_prev = x;
            f_prev = f;
        }
        if roots.len() == n {
            return Some(roots);
        }
    }
    None
}
