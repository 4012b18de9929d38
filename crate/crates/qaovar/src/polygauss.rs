//! Exact algebra for polynomials and polynomial-times-Gaussian functions.
//!
//! Everything downstream (expectation values, Rayleigh quotients, trial
//! wavefunctions) reduces to products of dense real polynomials and
//! closed-form Gaussian moment integrals, so this module is the numerical
//! backbone of the crate. All operations are pure functions on immutable
//! values.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PolygaussError {
    #[error("gaussian moment requires an even power, got x^{0}")]
    OddMoment(u32),
    #[error("gaussian decay rate must be positive, got {0}")]
    NonPositiveRate(f64),
}

/// Dense real polynomial; `coeffs[k]` multiplies `x^k`.
///
/// The zero polynomial is the empty coefficient sequence. Trailing zero
/// coefficients are tolerated; `degree` reports the last nonzero index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// The monomial `c x^k`.
    pub fn monomial(k: usize, c: f64) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Convolution product: `(p * q)(x) = p(x) q(x)`.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial { coeffs }
    }

    /// Coefficient rule `result[k] = (k + 1) p[k + 1]`.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Polynomial { coeffs }
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    /// Multiply by `x^k` (shift coefficients up).
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Compose with a scaled argument: returns `q` with `q(x) = p(s x)`.
    pub fn compose_scaled(&self, s: f64) -> Polynomial {
        let mut pow = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let out = c * pow;
                pow *= s;
                out
            })
            .collect();
        Polynomial { coeffs }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

/// Physicists' Hermite polynomial `H_n` via the three-term recurrence
/// `H_{n+1}(y) = 2 y H_n(y) - 2 n H_{n-1}(y)` with `H_0 = 1`, `H_1 = 2y`.
///
/// Coefficients stay well inside `f64` range for `n <= 30`.
pub fn hermite(n: usize) -> Polynomial {
    let mut prev = Polynomial::constant(1.0);
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::new(vec![0.0, 2.0]);
    for k in 1..n {
        let next = cur.shift_up(1).scale(2.0).add(&prev.scale(-2.0 * k as f64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Closed-form even Gaussian moment
/// `∫ x^{2k} e^{-β x²} dx = sqrt(π/β) (2k-1)!! / (2β)^k` over the real line.
///
/// `two_k` is the full power `2k`; odd powers integrate to zero and are the
/// caller's business. Computed by the multiplicative recurrence
/// `M_{2k} = M_{2k-2} (2k-1) / (2β)` so neither the double factorial nor
/// `(2β)^k` is ever formed on its own.
pub fn gaussian_moment(two_k: u32, beta: f64) -> Result<f64, PolygaussError> {
    if !two_k.is_multiple_of(2) {
        return Err(PolygaussError::OddMoment(two_k));
    }
    if !(beta > 0.0) {
        return Err(PolygaussError::NonPositiveRate(beta));
    }
    let mut m = (PI / beta).sqrt();
    let mut p = 2;
    while p <= two_k {
        m *= (p - 1) as f64 / (2.0 * beta);
        p += 2;
    }
    Ok(m)
}

/// A square-integrable function `f(x) = poly(x) · e^{-rate x²}` with
/// `rate > 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussPoly {
    poly: Polynomial,
    rate: f64,
}

impl GaussPoly {
    pub fn new(poly: Polynomial, rate: f64) -> Result<Self, PolygaussError> {
        if !(rate > 0.0) {
            return Err(PolygaussError::NonPositiveRate(rate));
        }
        Ok(GaussPoly { poly, rate })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.poly.eval(x) * (-self.rate * x * x).exp()
    }

    /// Derivative is again a GaussPoly at the same rate:
    /// `f' = (P' - 2βxP) e^{-βx²}`.
    pub fn derivative(&self) -> GaussPoly {
        let poly = self
            .poly
            .derivative()
            .add(&self.poly.shift_up(1).scale(-2.0 * self.rate));
        GaussPoly {
            poly,
            rate: self.rate,
        }
    }

    pub fn scale(&self, s: f64) -> GaussPoly {
        GaussPoly {
            poly: self.poly.scale(s),
            rate: self.rate,
        }
    }

    /// Exact `∫ f(x) g(x) dx`: expand the polynomial product and sum even
    /// Gaussian moments at the combined rate. Odd coefficient indices are
    /// skipped outright rather than multiplied by stored zeros.
    pub fn inner_product(&self, other: &GaussPoly) -> f64 {
        let prod = self.poly.mul(&other.poly);
        let beta = self.rate + other.rate;
        // Neumaier-compensated sum: the monomial-basis terms can exceed the
        // result by several orders of magnitude for high-degree factors.
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut moment = (PI / beta).sqrt();
        let mut k = 0usize;
        while k < prod.coeffs().len() {
            if k > 0 {
                moment *= (k - 1) as f64 / (2.0 * beta);
            }
            let c = prod.coeff(k);
            if c != 0.0 {
                let term = c * moment;
                let t = sum + term;
                if sum.abs() >= term.abs() {
                    comp += (sum - t) + term;
                } else {
                    comp += (term - t) + sum;
                }
                sum = t;
            }
            k += 2;
        }
        sum + comp
    }

    pub fn norm_squared(&self) -> f64 {
        self.inner_product(self)
    }
}
