//! Property and invariant tests. The oracles here (adaptive Simpson
//! quadrature, characteristic-polynomial root bisection) are deliberately
//! independent of the implementation paths they check.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{char_poly_roots, moment_by_quadrature, quotient_by_quadrature};

use qaovar::model::{build_trial, rayleigh_quotient, Parity, Potential, TrialParams};
use qaovar::optimize::{solve_howf, solve_ppewf, PpewfOptions};
use qaovar::oracle::{
    build_hamiltonian, eigenvalues_symmetric, exact_spectrum, exact_spectrum_with_scale,
    SymmetricMatrix,
};
use qaovar::polygauss::{gaussian_moment, hermite, GaussPoly, Polynomial};
use qaovar::reference::LAMBDA_GRID;

#[test]
fn moment_matches_quadrature_on_a_grid() {
    for k in 0..=12u32 {
        for &beta in &[0.05, 0.3, 1.0, 4.7, 30.0] {
            let exact = gaussian_moment(2 * k, beta).unwrap();
            let quad = moment_by_quadrature(2 * k, beta);
            let rel = (exact - quad).abs() / exact.abs();
            assert!(
                rel < 1e-10,
                "2k = {}, beta = {beta}: closed {exact:e} vs quadrature {quad:e} (rel {rel:e})",
                2 * k
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn moment_matches_quadrature_random(k in 0u32..=12, beta in 0.05f64..30.0) {
        let exact = gaussian_moment(2 * k, beta).unwrap();
        let quad = moment_by_quadrature(2 * k, beta);
        let rel = (exact - quad).abs() / exact.abs();
        prop_assert!(rel < 1e-10, "rel = {rel:e}");
    }
}

// ---------------------------------------------------------------------------
// Polynomial algebra.

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn convolution_matches_pointwise_product(
        p in prop::collection::vec(-10.0f64..10.0, 0..11),
        q in prop::collection::vec(-10.0f64..10.0, 0..11),
        xseed in any::<u64>(),
    ) {
        let pp = Polynomial::new(p);
        let qq = Polynomial::new(q);
        let prod = pp.mul(&qq);
        let mut rng = ChaCha8Rng::seed_from_u64(xseed);
        for _ in 0..100 {
            let x: f64 = rng.gen_range(-5.0..5.0);
            let direct = pp.eval(x) * qq.eval(x);
            let via_product = prod.eval(x);
            // Condition-aware bound: coefficients up to 10 in magnitude and
            // |x| ≤ 5 make Σ|p_i||x|^i the natural scale.
            let bound: f64 = pp.coeffs().iter().enumerate()
                .map(|(i, c)| c.abs() * x.abs().powi(i as i32)).sum::<f64>()
                * qq.coeffs().iter().enumerate()
                    .map(|(i, c)| c.abs() * x.abs().powi(i as i32)).sum::<f64>();
            prop_assert!(
                (direct - via_product).abs() <= 1e-12 * (bound + direct.abs() + 1.0),
                "x = {x}: {direct} vs {via_product}"
            );
        }
    }

    #[test]
    fn derivative_matches_finite_differences(
        p in prop::collection::vec(-5.0f64..5.0, 1..9),
        x in -3.0f64..3.0,
    ) {
        let poly = Polynomial::new(p);
        let d = poly.derivative();
        let h = 1e-6;
        let fd = (poly.eval(x + h) - poly.eval(x - h)) / (2.0 * h);
        prop_assert!((d.eval(x) - fd).abs() < 1e-5 * (1.0 + fd.abs()));
    }
}

#[test]
fn hermite_parity_holds_through_thirty() {
    for n in 0..=30usize {
        for (k, &c) in hermite(n).coeffs().iter().enumerate() {
            if k % 2 != n % 2 {
                assert_eq!(c, 0.0, "H_{n} coefficient of x^{k}");
            }
        }
    }
}

#[test]
fn hermite_orthogonality_under_gaussian_weight() {
    // ∫ H_m H_n e^{-y²} dy = sqrt(π) 2ⁿ n! δ_{mn}
    for m in 0..=8usize {
        for n in 0..=8usize {
            let f = GaussPoly::new(hermite(m), 0.5).unwrap();
            let g = GaussPoly::new(hermite(n), 0.5).unwrap();
            let got = f.inner_product(&g);
            if m == n {
                let mut expect = std::f64::consts::PI.sqrt();
                for k in 1..=n {
                    expect *= 2.0 * k as f64;
                }
                assert!(
                    (got - expect).abs() <= 1e-10 * expect,
                    "diagonal m = n = {n}: {got} vs {expect}"
                );
            } else {
                // Off-diagonal entries must vanish relative to the larger
                // of the two norms.
                let norm = |j: usize| {
                    let mut v = std::f64::consts::PI.sqrt();
                    for k in 1..=j {
                        v *= 2.0 * k as f64;
                    }
                    v
                };
                assert!(
                    got.abs() <= 1e-10 * norm(m).max(norm(n)),
                    "⟨H_{m}, H_{n}⟩ = {got}"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Rayleigh quotient properties.

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quotient_matches_quadrature_howf(
        n in 0usize..=4,
        alpha in 0.4f64..1.8,
        lambda in prop::sample::select(vec![0.0, 0.25, 1.0]),
    ) {
        let pot = Potential::new(1.0, lambda).unwrap();
        let params = TrialParams::Howf { n, alpha };
        let exact = rayleigh_quotient(&params, &pot).unwrap();
        let quad = quotient_by_quadrature(&params, &pot);
        prop_assert!(
            (exact - quad).abs() <= 1e-9 * exact.abs(),
            "n={n} α={alpha} λ={lambda}: {exact} vs {quad}"
        );
    }

    #[test]
    fn quotient_matches_quadrature_ppewf(
        n in 0usize..=3,
        alpha_prime in 0.4f64..3.0,
        a in -0.5f64..0.5,
        b in -1.5f64..1.5,
        c in -0.5f64..0.5,
        d in -1.5f64..1.5,
        lambda in prop::sample::select(vec![0.25, 1.0]),
    ) {
        let pot = Potential::new(1.0, lambda).unwrap();
        let params = TrialParams::Ppewf { n, alpha_prime, a, b, c, d };
        let exact = match rayleigh_quotient(&params, &pot) {
            Ok(e) => e,
            Err(_) => return Ok(()),
        };
        let quad = quotient_by_quadrature(&params, &pot);
        prop_assert!(
            (exact - quad).abs() <= 1e-9 * exact.abs().max(1.0),
            "{params:?}: {exact} vs {quad}"
        );
    }

    #[test]
    fn quotient_is_invariant_under_polynomial_rescaling(
        alpha_prime in 0.4f64..3.0,
        b in -1.5f64..1.5,
        d in 0.0f64..1.5,
        scale in prop::sample::select(vec![1e-8, 0.003, 17.0, 4.2e6]),
    ) {
        let pot = Potential::new(1.0, 1.0).unwrap();
        let params = TrialParams::Ppewf { n: 0, alpha_prime, a: 0.0, b, c: 0.0, d };
        let base = match rayleigh_quotient(&params, &pot) {
            Ok(e) => e,
            Err(_) => return Ok(()),
        };
        let psi = build_trial(&params).unwrap().scale(scale);
        let t = 0.5 * psi.derivative().norm_squared();
        let v = GaussPoly::new(psi.poly().mul(&pot.as_polynomial()), psi.rate())
            .unwrap()
            .inner_product(&psi);
        let e = (t + v) / psi.norm_squared();
        prop_assert!((e - base).abs() <= 1e-12 * base.abs(), "{e} vs {base}");
    }
}

#[test]
fn variational_bound_on_random_draws() {
    // 50 random definite-parity trials per λ; even-parity quotients bound
    // the ground energy, odd-parity quotients the first excited energy.
    let lambdas = [0.1, 1.0, 10.0];
    for &lambda in &lambdas {
        let pot = Potential::new(1.0, lambda).unwrap();
        let spectrum = exact_spectrum(&pot, 2, 1e-8).unwrap();
        let (e0, e1) = (spectrum.eigenvalues[0], spectrum.eigenvalues[1]);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ lambda.to_bits());
        let mut checked = 0;
        while checked < 50 {
            let params = if rng.gen_bool(0.5) {
                TrialParams::Howf {
                    n: rng.gen_range(0..=6),
                    alpha: rng.gen_range(0.2..2.5),
                }
            } else {
                TrialParams::Ppewf {
                    n: rng.gen_range(0..=5),
                    alpha_prime: rng.gen_range(0.3..5.0),
                    a: 0.0,
                    b: rng.gen_range(-2.0..2.0),
                    c: 0.0,
                    d: rng.gen_range(-2.0..2.0),
                }
            };
            let Ok(e) = rayleigh_quotient(&params, &pot) else {
                continue;
            };
            let bound = match params.parity() {
                Some(Parity::Even) => e0,
                Some(Parity::Odd) => e1,
                None => unreachable!("draws are parity-definite"),
            };
            assert!(
                e >= bound - 1e-9 * bound.abs(),
                "λ = {lambda}, {params:?}: E = {e} below {bound}"
            );
            checked += 1;
        }
    }
}

#[test]
fn ppewf_never_loses_to_howf_on_the_ground_state() {
    // The five-parameter family contains every HOWF ground state, so its
    // optimum can never sit above the one-parameter optimum.
    for &lambda in LAMBDA_GRID.iter() {
        let pot = Potential::new(1.0, lambda).unwrap();
        let howf = solve_howf(0, &pot).unwrap();
        let ppewf = solve_ppewf(0, &pot, &PpewfOptions::default()).unwrap();
        let exact = exact_spectrum(&pot, 1, 1e-7).unwrap().eigenvalues[0];
        assert!(
            exact <= ppewf.energy + 1e-9,
            "λ = {lambda}: exact {exact} above PPEWF {}",
            ppewf.energy
        );
        assert!(
            ppewf.energy <= howf.energy + 1e-9,
            "λ = {lambda}: PPEWF {} above HOWF {}",
            ppewf.energy,
            howf.energy
        );
    }
}

// ---------------------------------------------------------------------------
// Eigensolver vs characteristic polynomial.

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jacobi_matches_characteristic_polynomial_roots(
        entries in prop::collection::vec(-1.0f64..1.0, 21),
    ) {
        let mut m = SymmetricMatrix::zeros(6);
        let mut it = entries.iter();
        for i in 0..6 {
            for j in i..6 {
                m.set(i, j, *it.next().unwrap());
            }
        }
        let Some(roots) = char_poly_roots(&m) else {
            // Clustered spectrum; the scan oracle cannot isolate the roots.
            return Ok(());
        };
        let eig = eigenvalues_symmetric(&m, 1e-14).unwrap();
        for (lhs, rhs) in eig.iter().zip(&roots) {
            prop_assert!(
                (lhs - rhs).abs() < 1e-10,
                "jacobi {lhs} vs bisection {rhs}"
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle truncation behavior.

#[test]
fn ground_energy_is_independent_of_basis_scale() {
    let pot = Potential::new(1.0, 1.0).unwrap();
    let energies: Vec<f64> = [0.5, 1.0, 2.0]
        .iter()
        .map(|&omega| {
            exact_spectrum_with_scale(&pot, 1, 1e-9, omega)
                .unwrap()
                .eigenvalues[0]
        })
        .collect();
    for pair in energies.windows(2) {
        assert!(
            (pair[0] - pair[1]).abs() < 1e-8,
            "scale dependence: {energies:?}"
        );
    }
}

#[test]
fn ground_eigenvalue_never_rises_with_basis_size() {
    let pot = Potential::new(1.0, 1.0).unwrap();
    let omega = qaovar::oracle::default_basis_scale(&pot);
    let mut prev = f64::INFINITY;
    for basis in [60usize, 120, 240, 480] {
        let h = build_hamiltonian(&pot, basis, omega).unwrap();
        let e0 = eigenvalues_symmetric(&h, 1e-13).unwrap()[0];
        assert!(e0 <= prev + 1e-12, "basis {basis}: {e0} rose above {prev}");
        prev = e0;
    }
}

#[test]
fn levels_rise_strictly_with_lambda_and_with_index() {
    let mut previous: Option<Vec<f64>> = None;
    for &lambda in LAMBDA_GRID.iter() {
        let pot = Potential::new(1.0, lambda).unwrap();
        let s = exact_spectrum(&pot, 6, 1e-6).unwrap();
        for pair in s.eigenvalues.windows(2) {
            assert!(pair[0] < pair[1], "λ = {lambda}: levels not ascending");
        }
        if let Some(prev) = previous {
            for (lo, hi) in prev.iter().zip(&s.eigenvalues) {
                assert!(lo < hi, "E_n did not rise from λ step ({lo} vs {hi})");
            }
        }
        previous = Some(s.eigenvalues);
    }
}
