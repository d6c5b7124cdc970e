//! Window measurements on the position wavefunction.
//!
//! A single query detects when the measured position lands in `[a, b]`
//! (symmetric `[-δ, δ]` in practice). The constant and ASB densities have
//! closed-form window probabilities in terms of the sine integral; both depend
//! only on the product `Pδ`, and their separation peaks at `Pδ = π/2`.

use core::f64::consts::PI;

// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::encoding::check_positive;
use crate::error::{Error, Result};
use crate::quadrature::integrate_with_breaks;
use crate::sine_integral::sine_integral;
use crate::wavefunction::Pdf;

/// Absolute tolerance handed to the quadrature engine.
pub const QUADRATURE_TOLERANCE: f64 = 1e-11;
/// Largest excursion outside `[0, 1]` that is clamped rather than reported.
pub const CLAMP_SLACK: f64 = 1e-9;

/// The detection interval `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    a: f64,
    b: f64,
}

impl Window {
    /// `a == b` is allowed and has probability zero.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a > b {
            return Err(Error::InvalidWindow { a, b });
        }
        Ok(Self { a, b })
    }

    /// `[-δ, δ]`.
    pub fn symmetric(delta: f64) -> Result<Self> {
        Self::new(-delta, delta)
    }

    pub fn lower(&self) -> f64 {
        self.a
    }

    pub fn upper(&self) -> f64 {
        self.b
    }
}

fn clamp_probability(p: f64) -> Result<f64> {
    if !(-CLAMP_SLACK..=1.0 + CLAMP_SLACK).contains(&p) {
        return Err(Error::ProbabilityRange(p));
    }
    Ok(p.clamp(0.0, 1.0))
}

/// `∫_a^b density` by adaptive Simpson, split at multiples of `π/P`.
pub fn window_probability(density: &Pdf, window: Window) -> Result<f64> {
    let p = integrate_with_breaks(
        |x| density.density(x),
        window.a,
        window.b,
        density.node_spacing(),
        QUADRATURE_TOLERANCE,
    )?;
    clamp_probability(p)
}

/// `Pr_C(δ) = (cos 2Pδ + 2Pδ·Si(2Pδ) − 1)/(Pδπ)`.
pub fn constant_window_prob(half_extent: f64, delta: f64) -> Result<f64> {
    check_positive("P", half_extent)?;
    check_positive("delta", delta)?;
    let a = half_extent * delta;
    // cos 2a − 1 = −2 sin² a
    let s = a.sin();
    clamp_probability((2.0 * a * sine_integral(2.0 * a) - 2.0 * s * s) / (a * PI))
}

/// `Pr_ASB(δ) = (−8 sin⁴(Pδ/2) + 4Pδ·Si(Pδ) − 2Pδ·Si(2Pδ))/(Pδπ)`.
pub fn asb_window_prob(half_extent: f64, delta: f64) -> Result<f64> {
    check_positive("P", half_extent)?;
    check_positive("delta", delta)?;
    let a = half_extent * delta;
    let h = (a / 2.0).sin();
    let h2 = h * h;
    let numer = -8.0 * h2 * h2 + 4.0 * a * sine_integral(a) - 2.0 * a * sine_integral(2.0 * a);
    clamp_probability(numer / (a * PI))
}

/// `Pr_C(δ) − Pr_ASB(δ)`.
pub fn separation(half_extent: f64, delta: f64) -> Result<f64> {
    Ok(constant_window_prob(half_extent, delta)? - asb_window_prob(half_extent, delta)?)
}

/// `sin²(Pδ) − (cos Pδ − 1)²`, which has the sign of `d/dδ (Pr_C − Pr_ASB)`.
fn separation_slope_sign(half_extent: f64, delta: f64) -> f64 {
    let a = half_extent * delta;
    let (s, c) = a.sin_cos();
    s * s - (c - 1.0) * (c - 1.0)
}

/// Half-width `δ*` maximising `Pr_C − Pr_ASB`, found by bisection of the
/// derivative's sign on `(0, π/P]`. The result satisfies `P·δ* = π/2`.
pub fn optimal_delta(half_extent: f64) -> Result<f64> {
    check_positive("P", half_extent)?;
    let mut lo = 1e-3 * PI / half_extent;
    let mut hi = PI / half_extent;
    let f_lo = separation_slope_sign(half_extent, lo);
    let f_hi = separation_slope_sign(half_extent, hi);
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::BracketFailure { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if separation_slope_sign(half_extent, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavefunction::{closed_form_asb_pdf, closed_form_constant_pdf};
    use core::f64::consts::FRAC_PI_2;

    #[test]
    fn headline_values() {
        let c = constant_window_prob(1.0, FRAC_PI_2).unwrap();
        let expected = 2.0 * (PI * sine_integral(PI) - 2.0) / (PI * PI);
        assert!((c - expected).abs() < 1e-15);
        assert!((c - 0.7737).abs() < 5e-4);
        let a = asb_window_prob(1.0, FRAC_PI_2).unwrap();
        let expected =
            (4.0 * PI * sine_integral(FRAC_PI_2) - 2.0 * PI * sine_integral(PI) - 4.0) / (PI * PI);
        assert!((a - expected).abs() < 1e-15);
        assert!((a - 0.1609).abs() < 5e-4);
        assert!((c - a - 0.613).abs() < 5e-4);
    }

    #[test]
    fn depends_only_on_product() {
        let a = constant_window_prob(2.0, PI / 4.0).unwrap();
        let b = constant_window_prob(1.0, FRAC_PI_2).unwrap();
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn vanishing_window() {
        assert!(constant_window_prob(1.0, 1e-8).unwrap() < 1e-7);
        assert!(asb_window_prob(1.0, 1e-8).unwrap() < 1e-7);
        let pdf = closed_form_constant_pdf(1.0).unwrap();
        assert_eq!(
            window_probability(&pdf, Window::new(0.3, 0.3).unwrap()).unwrap(),
            0.0
        );
        assert!(constant_window_prob(1.0, 0.0).is_err());
    }

    #[test]
    fn quadrature_matches_headline() {
        let w = Window::symmetric(FRAC_PI_2).unwrap();
        let c = window_probability(&closed_form_constant_pdf(1.0).unwrap(), w).unwrap();
        let a = window_probability(&closed_form_asb_pdf(1.0).unwrap(), w).unwrap();
        assert!((c - constant_window_prob(1.0, FRAC_PI_2).unwrap()).abs() < 1e-9);
        assert!((a - asb_window_prob(1.0, FRAC_PI_2).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn optimal_delta_examples() {
        for big_p in [0.5, 1.0, 2.0, 10.0] {
            let d = optimal_delta(big_p).unwrap();
            assert!((d * big_p - FRAC_PI_2).abs() < 1e-9 * FRAC_PI_2);
        }
        assert!((optimal_delta(2.0).unwrap() - PI / 4.0).abs() < 1e-12);
        assert!(optimal_delta(-1.0).is_err());
    }

    #[test]
    fn window_rejects_reversed_edges() {
        assert!(Window::new(1.0, 0.0).is_err());
        assert!(Window::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn out_of_range_probability_is_an_error() {
        assert_eq!(clamp_probability(1.0 + 5e-10), Ok(1.0));
        assert_eq!(clamp_probability(-5e-10), Ok(0.0));
        assert_eq!(clamp_probability(1.1), Err(Error::ProbabilityRange(1.1)));
    }
}
