//! Numerical check of the closed-form position wavefunction against a
//! discrete Fourier transform of the sampled momentum signal.
//!
//! With midpoint samples `s_m` at `p_m = -P + (m + ½)h`, `h = 2P/M`,
//!
//! ```text
//! φ(x_k) ≈ h/√(2π) · e^{i(P − h/2)x_k} · Σ_m s_m e^{-2πi mk/L}
//! ```
//!
//! on the nodes `x_k = 2πk/(Lh)`, where `L = ZERO_PAD · M` is the padded
//! transform length. The node set depends only on `P`, so runs at different
//! `M` are compared on identical points.

use std::f64::consts::PI;

use cvdj_core::bitstrings::BitString;
use cvdj_core::encoding::{encoded_momentum, grid_sample};
use cvdj_core::{CvParams, PositionWavefunction};
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

/// Padding factor applied to the sample count before transforming.
pub const ZERO_PAD: usize = 16;
/// Sample counts below `MIN_SAMPLES_PER_BIT · N` are flagged.
pub const MIN_SAMPLES_PER_BIT: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub samples: usize,
    /// Number of transform nodes inside `[-X, X]`.
    pub nodes: usize,
    /// Node spacing `2π/(Lh)`.
    pub node_spacing: f64,
    /// `max_k |φ_fft(x_k) − φ(x_k)|`.
    pub max_deviation: f64,
    /// `samples < 64·N`; the deviation is still reported.
    pub undersampled: bool,
}

/// Compares the transformed samples with
/// [`PositionWavefunction::evaluate`] on every node in `[-X, X]`.
pub fn fft_crosscheck(
    z: &BitString,
    params: CvParams,
    samples: usize,
    half_window: f64,
) -> cvdj_core::Result<CrossCheck> {
    if !(half_window > 0.0 && half_window.is_finite()) {
        return Err(cvdj_core::Error::NotPositive {
            name: "X",
            value: half_window,
        });
    }
    let signal = encoded_momentum(z, params)?;
    let grid = grid_sample(&signal, samples)?;
    let wf = PositionWavefunction::new(z, params)?;

    let len = ZERO_PAD * samples;
    let mut buffer = vec![Complex64::new(0.0, 0.0); len];
    for (slot, &v) in buffer.iter_mut().zip(&grid.values) {
        slot.re = v;
    }
    FftPlanner::new().plan_fft_forward(len).process(&mut buffer);

    let h = grid.spacing;
    let dx = 2.0 * PI / (len as f64 * h);
    let shift = params.half_extent() - 0.5 * h;
    let scale = h / (2.0 * PI).sqrt();
    let reach = (half_window / dx).floor() as i64;
    let mut max_deviation = 0.0f64;
    for k in -reach..=reach {
        let x = k as f64 * dx;
        let index = k.rem_euclid(len as i64) as usize;
        let approx = buffer[index] * Complex64::from_polar(scale, shift * x);
        max_deviation = max_deviation.max((approx - wf.evaluate(x)).norm());
    }
    Ok(CrossCheck {
        samples,
        nodes: (2 * reach + 1) as usize,
        node_spacing: dx,
        max_deviation,
        undersampled: samples < MIN_SAMPLES_PER_BIT * params.bits(),
    })
}
