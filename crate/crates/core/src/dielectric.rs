//! Drude dielectric response in every analytic form the energy routes need.
//!
//! With frequency in plasma-frequency units and damping expressed through
//! [`DampingRatio`], the response in the upper half of the complex frequency
//! plane is `1 - 1/(w(w + 2ix))`; its lower-half-plane continuation carries
//! the opposite damping sign. Purely real variants are provided for the
//! imaginary axis and for the absorptive part on the real axis, since those
//! sit inside quadrature loops.

use crate::Complex64;
use thiserror::Error;

/// Argument outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("{name} must be {requirement} (got {value})")]
    InvalidArgument {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error("dielectric function evaluated at a pole (omega = {re}{im:+}i)")]
    PoleEvaluation { re: f64, im: f64 },
}

/// Dimensionless damping: half the scattering rate over the plasma frequency.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DampingRatio(f64);

impl DampingRatio {
    /// Requires a finite, nonnegative value. Zero is the lossless limit and
    /// is accepted everywhere in this module.
    pub fn new(x: f64) -> Result<Self, DomainError> {
        if !x.is_finite() || x < 0.0 {
            return Err(DomainError::InvalidArgument {
                name: "damping ratio x",
                requirement: "finite and >= 0",
                value: x,
            });
        }
        Ok(Self(x))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for DampingRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which analytic continuation of the response to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlaneBranch {
    Upper,
    Lower,
}

/// Drude response at complex frequency `omega` on the selected branch.
///
/// Upper: `1 - 1/(w(w + 2ix))`, poles at `0` and `-2ix`.
/// Lower: `1 - 1/(w(w - 2ix))`, poles at `0` and `+2ix`.
pub fn epsilon(
    omega: Complex64,
    x: DampingRatio,
    branch: HalfPlaneBranch,
) -> Result<Complex64, DomainError> {
    if !omega.re.is_finite() || !omega.im.is_finite() {
        return Err(DomainError::InvalidArgument {
            name: "omega",
            requirement: "finite",
            value: f64::NAN,
        });
    }
    let damping = match branch {
        HalfPlaneBranch::Upper => Complex64::new(0.0, 2.0 * x.value()),
        HalfPlaneBranch::Lower => Complex64::new(0.0, -2.0 * x.value()),
    };
    let denom = omega * (omega + damping);
    if denom == Complex64::new(0.0, 0.0) {
        return Err(DomainError::PoleEvaluation {
            re: omega.re,
            im: omega.im,
        });
    }
    Ok(Complex64::new(1.0, 0.0) - denom.inv())
}

/// Response on the imaginary axis, `eps(i w) = 1 + 1/(w(w + 2x))`, which is
/// real and greater than one for `w > 0`.
pub fn epsilon_imag_axis(omega: f64, x: DampingRatio) -> Result<f64, DomainError> {
    check_positive_frequency(omega)?;
    Ok(1.0 + 1.0 / (omega * (omega + 2.0 * x.value())))
}

/// Absorptive part on the real axis, `Im eps(w + i0) = 2x/(w(w^2 + 4x^2))`.
pub fn im_epsilon(omega: f64, x: DampingRatio) -> Result<f64, DomainError> {
    check_positive_frequency(omega)?;
    let xv = x.value();
    Ok(2.0 * xv / (omega * (omega * omega + 4.0 * xv * xv)))
}

pub(crate) fn check_positive_frequency(omega: f64) -> Result<(), DomainError> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(DomainError::InvalidArgument {
            name: "omega",
            requirement: "finite and > 0",
            value: omega,
        });
    }
    Ok(())
}
