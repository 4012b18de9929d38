//! Oscillator potentials, the two trial-wavefunction families, and the
//! Rayleigh quotient `E[ψ] = ⟨ψ|H|ψ⟩ / ⟨ψ|ψ⟩` evaluated exactly from
//! Gaussian moments.
//!
//! Natural units `ħ = m = 1` throughout; `H = p²/2 + g² x²/2 + λ x⁴`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polygauss::{hermite, GaussPoly, Polynomial};

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("potential needs g² ≥ 0 and λ ≥ 0 with at least one positive (got g² = {g_squared}, λ = {lambda})")]
    InvalidPotential { g_squared: f64, lambda: f64 },
    #[error("trial length scale must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("trial parameter {name} must be finite, got {value}")]
    NonFiniteParameter { name: &'static str, value: f64 },
    #[error("trial function is numerically degenerate (norm² = {0:e})")]
    DegenerateTrial(f64),
    #[error("trial energy evaluation overflowed (T + V = {0})")]
    NonFiniteEnergy(f64),
}

/// `V(x) = g² x²/2 + λ x⁴` with `g² ≥ 0`, `λ ≥ 0`, not both zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Potential {
    g_squared: f64,
    lambda: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    Quadratic,
    PureQuartic,
    Anharmonic,
}

impl Potential {
    pub fn new(g_squared: f64, lambda: f64) -> Result<Self, ModelError> {
        let valid = g_squared >= 0.0
            && lambda >= 0.0
            && g_squared.is_finite()
            && lambda.is_finite()
            && (g_squared > 0.0 || lambda > 0.0);
        if !valid {
            return Err(ModelError::InvalidPotential { g_squared, lambda });
        }
        Ok(Potential { g_squared, lambda })
    }

    /// Quartic anharmonic oscillator at the conventional `g² = 1`.
    pub fn qao(lambda: f64) -> Result<Self, ModelError> {
        Potential::new(1.0, lambda)
    }

    pub fn g_squared(&self) -> f64 {
        self.g_squared
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn kind(&self) -> PotentialKind {
        if self.lambda == 0.0 {
            PotentialKind::Quadratic
        } else if self.g_squared == 0.0 {
            PotentialKind::PureQuartic
        } else {
            PotentialKind::Anharmonic
        }
    }

    /// The potential as a polynomial in `x`.
    pub fn as_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![0.0, 0.0, self.g_squared / 2.0, 0.0, self.lambda])
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        self.g_squared * x2 / 2.0 + self.lambda * x2 * x2
    }
}

/// Trial-wavefunction family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Howf,
    Ppewf,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Howf => write!(f, "howf"),
            Family::Ppewf => write!(f, "ppewf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parameters of one trial wavefunction.
///
/// `Howf` is the normalized oscillator eigenfunction
/// `N_n e^{-x²/2α²} H_n(x/α)`; `Ppewf` is the unnormalized
/// `x^n e^{-α' x²} (1 - a x + b x² - c x³ + d x⁴)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TrialParams {
    Howf {
        n: usize,
        alpha: f64,
    },
    Ppewf {
        n: usize,
        alpha_prime: f64,
        a: f64,
        b: f64,
        c: f64,
        d: f64,
    },
}

impl TrialParams {
    pub fn family(&self) -> Family {
        match self {
            TrialParams::Howf { .. } => Family::Howf,
            TrialParams::Ppewf { .. } => Family::Ppewf,
        }
    }

    pub fn level(&self) -> usize {
        match *self {
            TrialParams::Howf { n, .. } => n,
            TrialParams::Ppewf { n, .. } => n,
        }
    }

    /// Definite parity of the trial, if it has one. A PPEWF with nonzero
    /// `a` or `c` mixes both sectors and has none.
    pub fn parity(&self) -> Option<Parity> {
        let definite = match *self {
            TrialParams::Howf { .. } => true,
            TrialParams::Ppewf { a, c, .. } => a == 0.0 && c == 0.0,
        };
        if !definite {
            return None;
        }
        Some(if self.level().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        })
    }

    fn validate(&self) -> Result<(), ModelError> {
        match *self {
            TrialParams::Howf { alpha, .. } => {
                if !(alpha > 0.0 && alpha.is_finite()) {
                    return Err(ModelError::NonPositiveScale(alpha));
                }
            }
            TrialParams::Ppewf {
                alpha_prime,
                a,
                b,
                c,
                d,
                ..
            } => {
                if !(alpha_prime > 0.0 && alpha_prime.is_finite()) {
                    return Err(ModelError::NonPositiveScale(alpha_prime));
                }
                for (name, value) in [("a", a), ("b", b), ("c", c), ("d", d)] {
                    if !value.is_finite() {
                        return Err(ModelError::NonFiniteParameter { name, value });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Materialize a trial wavefunction as a polynomial×Gaussian.
///
/// HOWF carries its closed-form normalization `1/sqrt(sqrt(π) 2ⁿ n! α)`;
/// PPEWF is left unnormalized since the Rayleigh quotient is scale-free.
pub fn build_trial(params: &TrialParams) -> Result<GaussPoly, ModelError> {
    params.validate()?;
    let gp = match *params {
        TrialParams::Howf { n, alpha } => {
            let mut norm2 = std::f64::consts::PI.sqrt() * alpha;
            for k in 1..=n {
                norm2 *= 2.0 * k as f64;
            }
            let poly = hermite(n)
                .compose_scaled(1.0 / alpha)
                .scale(1.0 / norm2.sqrt());
            GaussPoly::new(poly, 1.0 / (2.0 * alpha * alpha))
        }
        TrialParams::Ppewf {
            n,
            alpha_prime,
            a,
            b,
            c,
            d,
        } => {
            let prefactor = Polynomial::new(vec![1.0, -a, b, -c, d]);
            GaussPoly::new(prefactor.shift_up(n), alpha_prime)
        }
    };
    gp.map_err(|_| ModelError::NonPositiveScale(0.0))
}

/// Norm squared below which a trial is treated as degenerate.
const DEGENERATE_NORM: f64 = 1e-300;

/// `E[ψ] = (T + V) / S` with `S = ⟨ψ|ψ⟩`, `V = ⟨ψ|g²x²/2 + λx⁴|ψ⟩`, and the
/// kinetic term in its manifestly symmetric form `T = ½ ∫ (ψ')²`.
pub fn rayleigh_quotient(params: &TrialParams, pot: &Potential) -> Result<f64, ModelError> {
    let psi = build_trial(params)?;
    let s = psi.norm_squared();
    if !(s > DEGENERATE_NORM) || !s.is_finite() {
        return Err(ModelError::DegenerateTrial(s));
    }
    let dpsi = psi.derivative();
    let kinetic = 0.5 * dpsi.norm_squared();
    let weighted = GaussPoly::new(psi.poly().mul(&pot.as_polynomial()), psi.rate())
        .expect("rate unchanged by polynomial weighting");
    let potential = weighted.inner_product(&psi);
    let numerator = kinetic + potential;
    if !numerator.is_finite() {
        return Err(ModelError::NonFiniteEnergy(numerator));
    }
    Ok(numerator / s)
}
