//! Mode-condition factors, their closed-form complex zeros, and the naive
//! real-part mode sum.
//!
//! The coupled-surface mode condition factorizes into
//! `f1 = (eps+1) - e^{-kappa}(eps-1)` and `f2 = (eps+1) + e^{-kappa}(eps-1)`;
//! `f1` carries the acoustical (lower) branch and `f2` the optical (upper)
//! branch. Solving each factor with the upper-branch response gives one zero
//! in the right half plane sitting exactly `x` below the real axis.

use crate::dielectric::{
    check_positive_frequency, epsilon, epsilon_imag_axis, DampingRatio, DomainError,
    HalfPlaneBranch,
};
use crate::Complex64;

/// One dimensionless problem instance: damping `x` and reduced wave vector
/// `kappa = k*d`. The coupling factor `e^{-kappa}` is computed once here;
/// `kappa` large enough to underflow it to zero is the exact decoupled case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModePoint {
    damping: DampingRatio,
    kappa: f64,
    exp_neg_kappa: f64,
}

impl ModePoint {
    pub fn new(x: DampingRatio, kappa: f64) -> Result<Self, DomainError> {
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(DomainError::InvalidArgument {
                name: "kappa",
                requirement: "finite and > 0",
                value: kappa,
            });
        }
        Ok(Self {
            damping: x,
            kappa,
            exp_neg_kappa: (-kappa).exp(),
        })
    }

    pub fn damping(&self) -> DampingRatio {
        self.damping
    }

    /// Raw damping value.
    pub fn x(&self) -> f64 {
        self.damping.value()
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn exp_neg_kappa(&self) -> f64 {
        self.exp_neg_kappa
    }
}

/// Selects the factor of the mode condition: `F1` for the acoustical branch,
/// `F2` for the optical branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorId {
    F1,
    F2,
}

impl FactorId {
    /// Sign of the `e^{-kappa}(eps - 1)` term in the factor.
    pub(crate) fn coupling_sign(self) -> f64 {
        match self {
            FactorId::F1 => -1.0,
            FactorId::F2 => 1.0,
        }
    }
}

/// Closed-form zeros of the two factors in the right half plane.
///
/// Both sit at `-ix` below the real axis. When a radicand is negative the
/// mode is overdamped: the real part is zero and the flag is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexZeros {
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub overdamped1: bool,
    pub overdamped2: bool,
}

/// Evaluates the selected factor at complex `omega` with the selected
/// dielectric branch.
pub fn mode_factor(
    factor: FactorId,
    omega: Complex64,
    point: &ModePoint,
    branch: HalfPlaneBranch,
) -> Result<Complex64, DomainError> {
    let eps = epsilon(omega, point.damping(), branch)?;
    let one = Complex64::new(1.0, 0.0);
    Ok((eps + one) + factor.coupling_sign() * point.exp_neg_kappa() * (eps - one))
}

/// Factor evaluated on the imaginary axis, where it is real valued.
pub fn mode_factor_imag_axis(
    factor: FactorId,
    omega: f64,
    point: &ModePoint,
) -> Result<f64, DomainError> {
    check_positive_frequency(omega)?;
    let eps = epsilon_imag_axis(omega, point.damping())?;
    Ok((eps + 1.0) + factor.coupling_sign() * point.exp_neg_kappa() * (eps - 1.0))
}

/// Closed-form zeros of both factors for this point.
pub fn complex_zeros(point: &ModePoint) -> ComplexZeros {
    let x = point.x();
    let q = point.exp_neg_kappa();
    // [1 + coth(kappa/2)]^-1 = (1 - e^-kappa)/2 and likewise with tanh.
    let r1 = (1.0 - q) / 2.0 - x * x;
    let r2 = (1.0 + q) / 2.0 - x * x;
    let overdamped1 = r1 < 0.0;
    let overdamped2 = r2 < 0.0;
    ComplexZeros {
        omega1: Complex64::new(if overdamped1 { 0.0 } else { r1.sqrt() }, -x),
        omega2: Complex64::new(if overdamped2 { 0.0 } else { r2.sqrt() }, -x),
        overdamped1,
        overdamped2,
    }
}

/// Sum of the real parts of the complex mode frequencies, in units of half
/// the plasma quantum. The factor poles sit at `0` and `-2ix`, so they add
/// nothing to the real-part sum.
pub fn naive_real_part_energy(point: &ModePoint) -> f64 {
    let z = complex_zeros(point);
    z.omega1.re + z.omega2.re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::closed_form_energy_x0;
    use proptest::prelude::*;

    fn point(x: f64, kappa: f64) -> ModePoint {
        ModePoint::new(DampingRatio::new(x).unwrap(), kappa).unwrap()
    }

    #[test]
    fn mode_point_validation() {
        let x = DampingRatio::new(0.1).unwrap();
        assert!(ModePoint::new(x, 0.0).is_err());
        assert!(ModePoint::new(x, -1.0).is_err());
        assert!(ModePoint::new(x, f64::INFINITY).is_err());
        assert!(ModePoint::new(x, f64::NAN).is_err());
    }

    #[test]
    fn decoupled_factors_equal_eps_plus_one() {
        // e^-800 underflows to exactly zero
        let p = point(0.0, 800.0);
        assert_eq!(p.exp_neg_kappa(), 0.0);
        let w = Complex64::new(1.0, 0.0);
        let f1 = mode_factor(FactorId::F1, w, &p, HalfPlaneBranch::Upper).unwrap();
        let f2 = mode_factor(FactorId::F2, w, &p, HalfPlaneBranch::Upper).unwrap();
        assert_eq!(f1, Complex64::new(1.0, 0.0));
        assert_eq!(f2, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn factor_product_identity() {
        let p = point(0.05, 1.0);
        let w = Complex64::new(0.3, 0.2);
        let f1 = mode_factor(FactorId::F1, w, &p, HalfPlaneBranch::Upper).unwrap();
        let f2 = mode_factor(FactorId::F2, w, &p, HalfPlaneBranch::Upper).unwrap();
        let eps = epsilon(w, p.damping(), HalfPlaneBranch::Upper).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let q = p.exp_neg_kappa();
        let product = (eps + one) * (eps + one) - q * q * (eps - one) * (eps - one);
        let d = f1 * f2 - product;
        assert!(d.norm() <= 1e-13 * product.norm());
    }

    #[test]
    fn zeros_match_closed_form_values() {
        let z = complex_zeros(&point(0.0, 0.5));
        assert!((z.omega1.re - 0.443547821709997).abs() < 1e-12);
        assert!((z.omega2.re - 0.896250707032534).abs() < 1e-12);
        assert_eq!(z.omega1.im, 0.0);
        assert!(!z.overdamped1 && !z.overdamped2);

        let z = complex_zeros(&point(0.1, 0.5));
        assert!((z.omega1.re - 0.432128071459936).abs() < 1e-12);
        assert!((z.omega2.re - 0.890654439081913).abs() < 1e-12);
        assert_eq!(z.omega1.im, -0.1);
        assert_eq!(z.omega2.im, -0.1);
    }

    #[test]
    fn large_kappa_zeros_approach_surface_plasmon() {
        let z = complex_zeros(&point(0.1, 1e3));
        let expected = (0.5f64 - 0.01).sqrt();
        assert!((z.omega1.re - expected).abs() < 1e-12);
        assert!((z.omega2.re - expected).abs() < 1e-12);
    }

    #[test]
    fn overdamped_zero_contributes_nothing() {
        let z = complex_zeros(&point(0.5, 0.5));
        assert!(z.overdamped1);
        assert!(!z.overdamped2);
        assert_eq!(z.omega1.re, 0.0);
        assert!((z.omega2.re - 0.743818075779499).abs() < 1e-12);
        assert!((naive_real_part_energy(&point(0.5, 0.5)) - 0.743818075779499).abs() < 1e-12);
    }

    #[test]
    fn factor_vanishes_at_its_zero_on_the_upper_branch() {
        for &(x, kappa) in &[(0.1, 0.5), (0.05, 1.0)] {
            let p = point(x, kappa);
            let z = complex_zeros(&p);
            let r1 = mode_factor(FactorId::F1, z.omega1, &p, HalfPlaneBranch::Upper).unwrap();
            let r2 = mode_factor(FactorId::F2, z.omega2, &p, HalfPlaneBranch::Upper).unwrap();
            assert!(r1.norm() < 1e-12, "f1 residual {}", r1.norm());
            assert!(r2.norm() < 1e-12, "f2 residual {}", r2.norm());
        }
    }

    #[test]
    fn zero_jumps_across_the_real_axis() {
        // the lower-branch expression does not vanish at the upper-branch zero
        let p = point(0.1, 0.5);
        let z = complex_zeros(&p);
        let r = mode_factor(FactorId::F1, z.omega1, &p, HalfPlaneBranch::Lower).unwrap();
        assert!(r.norm() > 1e-3);
        assert!((r.norm() - 1.520751316).abs() < 1e-8);
    }

    #[test]
    fn naive_energy_values() {
        assert!((naive_real_part_energy(&point(0.0, 0.5)) - 1.3397985287425308).abs() < 1e-12);
        assert!((naive_real_part_energy(&point(0.1, 0.5)) - 1.3227825105418489).abs() < 1e-12);
    }

    #[test]
    fn naive_energy_at_zero_damping_equals_closed_form_exactly() {
        for &kappa in &[0.1, 0.5, 1.0, 2.0, 7.5] {
            let naive = naive_real_part_energy(&point(0.0, kappa));
            let closed = closed_form_energy_x0(kappa).unwrap();
            assert_eq!(naive, closed);
        }
    }

    #[test]
    fn imag_axis_factor_is_real_form_of_complex_factor() {
        let p = point(0.1, 0.5);
        for &w in &[0.2, 1.0, 4.0] {
            let real = mode_factor_imag_axis(FactorId::F1, w, &p).unwrap();
            let full =
                mode_factor(FactorId::F1, Complex64::new(0.0, w), &p, HalfPlaneBranch::Upper)
                    .unwrap();
            assert!((full.re - real).abs() < 1e-13 * real.abs());
            assert!(full.im.abs() < 1e-15);
        }
        assert!(mode_factor_imag_axis(FactorId::F1, 0.0, &p).is_err());
    }

    proptest! {
        #[test]
        fn zeros_sit_x_below_the_axis_and_are_ordered(
            x in 1e-3f64..0.35,
            kappa in 0.1f64..3.0,
        ) {
            let z = complex_zeros(&point(x, kappa));
            prop_assert_eq!(z.omega1.im, -x);
            prop_assert_eq!(z.omega2.im, -x);
            prop_assert!(z.omega1.re >= 0.0);
            if !z.overdamped1 && !z.overdamped2 {
                // coth > tanh puts the acoustical zero strictly below the optical one
                prop_assert!(z.omega1.re < z.omega2.re);
            }
        }

        #[test]
        fn overdamping_flag_matches_radicand(
            x in 0.0f64..0.8,
            kappa in 0.1f64..3.0,
        ) {
            let p = point(x, kappa);
            let z = complex_zeros(&p);
            let q = p.exp_neg_kappa();
            prop_assert_eq!(z.overdamped1, (1.0 - q) / 2.0 - x * x < 0.0);
            prop_assert_eq!(z.overdamped2, (1.0 + q) / 2.0 - x * x < 0.0);
            if z.overdamped1 {
                prop_assert_eq!(z.omega1.re, 0.0);
            }
        }
    }
}
