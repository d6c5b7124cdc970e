//! Position-domain wavefunction of an encoded string.
//!
//! With the Fourier convention `φ(x) = (2π)^{-1/2} ∫ e^{-ipx} φ̃(p) dp`, the
//! inverse transform of the encoded top hat is a sinc envelope times a sum of
//! `N` unit phasors:
//!
//! ```text
//! φ_z(x) = sin(Px/N) / (√(Pπ)·x) · Σ_{j=1}^{N} (-1)^{z_{j-1}} e^{iφ_j(x)}
//! φ_j(x) = ((N − (2j − 1)) / N)·P·x
//! ```
//!
//! The angles come in conjugate pairs `φ_j = −φ_{N+1−j}`, and the sum is
//! evaluated pairwise so strings symmetric (antisymmetric) under reversal give
//! exactly real (imaginary) sums.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::bitstrings::BitString;
use crate::encoding::{check_positive, CvParams};
use crate::error::{Error, Result};

/// Below this `|Px/N|` the sinc envelope switches to its Taylor series.
const SERIES_SWITCH: f64 = 1e-6;

/// `sin(kx)/x`, continuous through `x = 0`.
pub(crate) fn sin_over_x(k: f64, x: f64) -> f64 {
    let u = k * x;
    if u.abs() < SERIES_SWITCH {
        let u2 = u * u;
        k * (1.0 - u2 / 6.0 * (1.0 - u2 / 20.0))
    } else {
        u.sin() / x
    }
}

/// The angles `φ_1(x) … φ_N(x)`.
pub fn phasor_angles(bits: usize, half_extent: f64, x: f64) -> Vec<f64> {
    (1..=bits)
        .map(|j| phasor_angle(bits, half_extent, x, j))
        .collect()
}

fn phasor_angle(bits: usize, half_extent: f64, x: f64, j: usize) -> f64 {
    let n = bits as f64;
    ((n - (2 * j - 1) as f64) / n) * half_extent * x
}

/// `Σ_j s_j e^{iφ_j}` summed over conjugate pairs `(j, N+1−j)`.
pub(crate) fn paired_phasor_sum(signs: &[f64], angles: impl Fn(usize) -> f64) -> Complex64 {
    let n = signs.len();
    let mut re = 0.0;
    let mut im = 0.0;
    for j in 1..=n / 2 {
        let (s, c) = angles(j).sin_cos();
        let outer = signs[j - 1];
        let mirror = signs[n - j];
        re += (outer + mirror) * c;
        im += (outer - mirror) * s;
    }
    Complex64::new(re, im)
}

/// `x ↦ φ_z(x)` for a fixed string and encoding.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionWavefunction {
    params: CvParams,
    z: BitString,
    signs: Vec<f64>,
}

impl PositionWavefunction {
    pub fn new(z: &BitString, params: CvParams) -> Result<Self> {
        if z.len() != params.bits() {
            return Err(Error::LengthMismatch {
                expected: params.bits(),
                found: z.len(),
            });
        }
        Ok(Self {
            params,
            z: z.clone(),
            signs: z.signs().collect(),
        })
    }

    pub fn params(&self) -> &CvParams {
        &self.params
    }

    pub fn string(&self) -> &BitString {
        &self.z
    }

    /// The phasor sum `Σ_j (-1)^{z_{j-1}} e^{iφ_j(x)}`.
    pub fn phasor_sum(&self, x: f64) -> Complex64 {
        let (n, big_p) = (self.params.bits(), self.params.half_extent());
        paired_phasor_sum(&self.signs, |j| phasor_angle(n, big_p, x, j))
    }

    pub fn evaluate(&self, x: f64) -> Complex64 {
        let (n, big_p) = (self.params.bits() as f64, self.params.half_extent());
        let envelope = sin_over_x(big_p / n, x) / (big_p * PI).sqrt();
        self.phasor_sum(x) * envelope
    }

    pub fn density(&self, x: f64) -> f64 {
        self.evaluate(x).norm_sqr()
    }
}

/// A position probability density.
///
/// Densities built from a string are keyed by the canonical member of
/// `{z, complement(z)}`, so a string and its complement produce equal values.
#[derive(Debug, Clone, PartialEq)]
pub enum Pdf {
    Phasor(PositionWavefunction),
    /// `sin²(Px)/(Pπx²)`.
    Constant {
        half_extent: f64,
    },
    /// `(cos(Px) − 1)²/(Pπx²)`.
    Asb {
        half_extent: f64,
    },
}

impl Pdf {
    pub fn density(&self, x: f64) -> f64 {
        match self {
            Pdf::Phasor(wf) => wf.density(x),
            Pdf::Constant { half_extent } => constant_density(*half_extent, x),
            Pdf::Asb { half_extent } => asb_density(*half_extent, x),
        }
    }

    pub fn half_extent(&self) -> f64 {
        match self {
            Pdf::Phasor(wf) => wf.params.half_extent(),
            Pdf::Constant { half_extent } | Pdf::Asb { half_extent } => *half_extent,
        }
    }

    /// Spacing of the sinc envelope's oscillation nodes, `π/P`.
    pub fn node_spacing(&self) -> f64 {
        PI / self.half_extent()
    }
}

/// `|φ_z|²` as a [`Pdf`].
pub fn pdf(wf: &PositionWavefunction) -> Pdf {
    let canonical = wf.z.canonical();
    if canonical == wf.z {
        Pdf::Phasor(wf.clone())
    } else {
        Pdf::Phasor(PositionWavefunction {
            params: wf.params,
            signs: canonical.signs().collect(),
            z: canonical,
        })
    }
}

pub fn closed_form_constant_pdf(half_extent: f64) -> Result<Pdf> {
    check_positive("P", half_extent)?;
    Ok(Pdf::Constant { half_extent })
}

pub fn closed_form_asb_pdf(half_extent: f64) -> Result<Pdf> {
    check_positive("P", half_extent)?;
    Ok(Pdf::Asb { half_extent })
}

fn constant_density(big_p: f64, x: f64) -> f64 {
    let s = sin_over_x(big_p, x);
    s * s / (big_p * PI)
}

// (cos u − 1)² = 4 sin⁴(u/2), which avoids cancellation near the origin.
fn asb_density(big_p: f64, x: f64) -> f64 {
    let s = sin_over_x(big_p / 2.0, x);
    let h = (big_p * x / 2.0).sin();
    4.0 * s * s * h * h / (big_p * PI)
}
