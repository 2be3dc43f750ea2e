//! The two contour-integral energy routes, the lossless closed form, the
//! distance-referenced interaction energy, and the per-unit-area integral
//! over the wave-vector continuum.
//!
//! Along the real axis the per-wave-vector energy is the integral of
//! [`integrand_f`]: one pi-th of the summed phase angles of the two mode
//! factors, each restricted to `[0, pi]`. Deforming the contour onto the
//! imaginary axis gives the integral of [`integrand_g`], a logarithm of the
//! factor product normalized so the arc at infinity drops out. Both are
//! integrals over `(0, inf)` of smooth positive integrands and must agree:
//! the mode spectrum is real.

use crate::dielectric::{check_positive_frequency, DampingRatio, DomainError};
use crate::mode_spectrum::ModePoint;
use crate::quadrature::{integrate_semi_infinite, IntegralResult, QuadratureConfig, QuadratureError};
use std::cell::Cell;
use std::f64::consts::PI;
use thiserror::Error;

/// Which contour the energy is computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyRoute {
    RealAxis,
    ImagAxis,
}

impl std::fmt::Display for EnergyRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnergyRoute::RealAxis => write!(f, "real-axis"),
            EnergyRoute::ImagAxis => write!(f, "imag-axis"),
        }
    }
}

/// Per-wave-vector energy in units of half the plasma quantum, with the
/// quadrature metadata that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyValue {
    pub value: f64,
    pub route: EnergyRoute,
    pub quadrature: IntegralResult,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnergyError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("quadrature failed on the {route} route: {source}")]
    Quadrature {
        route: EnergyRoute,
        source: QuadratureError,
    },
    #[error("quadrature did not converge on the {route} route (best estimate {value}, error estimate {error_estimate})")]
    NotConverged {
        route: EnergyRoute,
        value: f64,
        error_estimate: f64,
    },
}

/// Real-axis integrand `F(w) = (theta1 + theta2)/pi`, where `theta_l` is the
/// phase of the factor `f_l(w)` taken in `[0, pi]`.
///
/// For `w > 0` and `x > 0` the imaginary part of each factor,
/// `2x(1 -+ e^-kappa)/(w(w^2+4x^2))`, is strictly positive, so the
/// two-argument angle already lands on the required branch and no unwinding
/// is needed. At `x = 0` the angles degenerate to the step values 0 and pi
/// by the sign of the then-real factor.
pub fn integrand_f(omega: f64, point: &ModePoint) -> Result<f64, DomainError> {
    check_positive_frequency(omega)?;
    Ok(integrand_f_raw(omega, point.x(), point.exp_neg_kappa()))
}

/// Imaginary-axis integrand `G(w) = ln(f(iw)/4)/pi` with the real-valued
/// imaginary-axis response.
pub fn integrand_g(omega: f64, point: &ModePoint) -> Result<f64, DomainError> {
    check_positive_frequency(omega)?;
    Ok(integrand_g_raw(omega, point.x(), point.exp_neg_kappa()))
}

fn integrand_f_raw(omega: f64, x: f64, q: f64) -> f64 {
    let c1 = 1.0 - q;
    let c2 = 1.0 + q;
    let d = omega * omega + 4.0 * x * x;
    let im_scale = 2.0 * x / (omega * d);
    let theta1 = f64::atan2(im_scale * c1, 2.0 - c1 / d);
    let theta2 = f64::atan2(im_scale * c2, 2.0 - c2 / d);
    (theta1 + theta2) / PI
}

fn integrand_g_raw(omega: f64, x: f64, q: f64) -> f64 {
    // eps(iw) - 1; the factor product over 4 becomes
    // 1 + em1 + em1^2 (1 - q^2)/4, safe against cancellation in both tails.
    let em1 = 1.0 / (omega * (omega + 2.0 * x));
    f64::ln_1p(em1 + 0.25 * em1 * em1 * (1.0 - q * q)) / PI
}

/// Per-wave-vector energy on the chosen route.
///
/// The real-axis integrand degenerates to a step function at `x = 0`; its
/// integral is the lossless closed form, which is returned directly rather
/// than resolved by quadrature.
pub fn energy_k(
    point: &ModePoint,
    route: EnergyRoute,
    cfg: &QuadratureConfig,
) -> Result<EnergyValue, EnergyError> {
    energy_with_coupling(point.x(), point.exp_neg_kappa(), route, cfg)
}

/// Energy of two fully decoupled surfaces (`e^-kappa = 0` exactly).
pub fn decoupled_energy_k(
    x: DampingRatio,
    route: EnergyRoute,
    cfg: &QuadratureConfig,
) -> Result<EnergyValue, EnergyError> {
    energy_with_coupling(x.value(), 0.0, route, cfg)
}

fn energy_with_coupling(
    x: f64,
    q: f64,
    route: EnergyRoute,
    cfg: &QuadratureConfig,
) -> Result<EnergyValue, EnergyError> {
    if route == EnergyRoute::RealAxis && x == 0.0 {
        let value = closed_form_from_coupling(q);
        return Ok(EnergyValue {
            value,
            route,
            quadrature: IntegralResult {
                value,
                error_estimate: 0.0,
                subdivisions_used: 0,
                converged: true,
            },
        });
    }
    let integrand = move |w: f64| match route {
        EnergyRoute::RealAxis => integrand_f_raw(w, x, q),
        EnergyRoute::ImagAxis => integrand_g_raw(w, x, q),
    };
    let result = integrate_semi_infinite(integrand, cfg)
        .map_err(|source| EnergyError::Quadrature { route, source })?;
    if !result.converged {
        return Err(EnergyError::NotConverged {
            route,
            value: result.value,
            error_estimate: result.error_estimate,
        });
    }
    Ok(EnergyValue {
        value: result.value,
        route,
        quadrature: result,
    })
}

fn closed_form_from_coupling(q: f64) -> f64 {
    ((1.0 - q) / 2.0).sqrt() + ((1.0 + q) / 2.0).sqrt()
}

/// Lossless per-wave-vector energy,
/// `sqrt((1 - e^-kappa)/2) + sqrt((1 + e^-kappa)/2)`.
pub fn closed_form_energy_x0(kappa: f64) -> Result<f64, DomainError> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(DomainError::InvalidArgument {
            name: "kappa",
            requirement: "finite and > 0",
            value: kappa,
        });
    }
    Ok(closed_form_from_coupling((-kappa).exp()))
}

/// Distance-referenced energy: the per-wave-vector energy minus its value
/// for fully decoupled surfaces. Negative for every valid point.
pub fn interaction_energy_k(point: &ModePoint, cfg: &QuadratureConfig) -> Result<f64, EnergyError> {
    let coupled = energy_with_coupling(point.x(), point.exp_neg_kappa(), EnergyRoute::ImagAxis, cfg)?;
    let reference = energy_with_coupling(point.x(), 0.0, EnergyRoute::ImagAxis, cfg)?;
    Ok(coupled.value - reference.value)
}

/// Dimensionless interaction-energy-per-area coefficient
/// `C(x) = (1/2 pi) Int u * [E(x, u) - E(x, inf)] du` over `u = k d`.
///
/// The physical energy per unit area is `C(x) / d^2` in units of half the
/// plasma quantum, so the product with `d^2` is distance independent by
/// construction. The inner energies run at tolerances two orders tighter
/// than the outer integral so inner quadrature noise stays below the outer
/// error target.
pub fn area_coefficient(x: DampingRatio, cfg: &QuadratureConfig) -> Result<f64, EnergyError> {
    let inner_cfg = QuadratureConfig {
        abs_tol: cfg.abs_tol * 1e-2,
        rel_tol: cfg.rel_tol * 1e-2,
        max_subdivisions: cfg.max_subdivisions,
    };
    let xv = x.value();
    let reference = energy_with_coupling(xv, 0.0, EnergyRoute::ImagAxis, &inner_cfg)?;
    let inner_failure: Cell<Option<EnergyError>> = Cell::new(None);
    let outer = integrate_semi_infinite(
        |u| {
            let q = (-u).exp();
            match energy_with_coupling(xv, q, EnergyRoute::ImagAxis, &inner_cfg) {
                Ok(e) => u * (e.value - reference.value),
                Err(err) => {
                    inner_failure.set(Some(err));
                    f64::NAN
                }
            }
        },
        cfg,
    );
    match outer {
        Ok(result) => {
            if !result.converged {
                return Err(EnergyError::NotConverged {
                    route: EnergyRoute::ImagAxis,
                    value: result.value / (2.0 * PI),
                    error_estimate: result.error_estimate / (2.0 * PI),
                });
            }
            Ok(result.value / (2.0 * PI))
        }
        Err(source) => Err(inner_failure
            .take()
            .unwrap_or(EnergyError::Quadrature {
                route: EnergyRoute::ImagAxis,
                source,
            })),
    }
}
