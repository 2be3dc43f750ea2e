//! Zero-point energy of electromagnetic surface modes between two metal
//! half spaces with a dissipative Drude response.
//!
//! Everything is dimensionless: frequencies are measured in units of the
//! plasma frequency, energies in units of half the plasma quantum, damping
//! through the ratio [`DampingRatio`], and geometry through the reduced
//! wave vector `kappa = k*d` carried by [`ModePoint`].
//!
//! The per-wave-vector energy can be computed four ways:
//!
//! * a contour integral along the real frequency axis ([`energy::integrand_f`]),
//! * a contour integral along the imaginary axis ([`energy::integrand_g`]),
//! * naive summation of the real parts of the complex mode frequencies
//!   ([`mode_spectrum::naive_real_part_energy`]),
//! * summation over a discretized real mode spectrum ([`discrete_modes`]).
//!
//! The two contour routes agree to quadrature accuracy; the naive sum does
//! not, and the discretized spectrum recovers the contour result as its
//! grid is refined.

pub mod check;
pub mod dielectric;
pub mod discrete_modes;
pub mod energy;
pub mod figure;
pub mod mode_spectrum;
pub mod quadrature;
pub mod svg;

pub use dielectric::{DampingRatio, DomainError, HalfPlaneBranch};
pub use discrete_modes::{DiscreteSpectrum, LehmanGrid, SpectrumError};
pub use energy::{EnergyError, EnergyRoute, EnergyValue};
pub use mode_spectrum::{ComplexZeros, FactorId, ModePoint};
pub use quadrature::{IntegralResult, QuadratureConfig, QuadratureError};

/// Complex value carried as a pair of 64-bit components.
pub type Complex64 = num_complex::Complex<f64>;

/// Formats `v` with `sig` significant digits, decimal point, no locale.
///
/// Uses positional notation when the decimal exponent lies in
/// `[-4, sig)` and scientific notation otherwise, so CSV cells stay
/// readable without losing digits for extreme magnitudes.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.*e}", sig - 1, v);
    let epos = sci.find('e').expect("scientific format");
    let exp: i32 = sci[epos + 1..].parse().expect("exponent");
    if exp < -4 || exp >= sig as i32 {
        sci
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    }
}
