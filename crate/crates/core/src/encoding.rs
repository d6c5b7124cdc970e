//! Momentum-domain encoding of an `N`-bit string.
//!
//! `[-P, P]` is cut into `N` contiguous bins of width `2P/N`; bin `i` (counted
//! from `-P`) carries the sign `(-1)^{z_i}`. The substrate is the normalised top
//! hat of height `(2P)^{-1/2}`, so every encoded state has unit norm. Bins are
//! half-open `[left, right)` except the last, which also contains `P`.

use alloc::vec::Vec;

// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::bitstrings::BitString;
use crate::error::{Error, Result};

/// `N` and the momentum half-extent `P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvParams {
    bits: usize,
    half_extent: f64,
}

impl CvParams {
    pub fn new(bits: usize, half_extent: f64) -> Result<Self> {
        if bits < 2 {
            return Err(Error::TooShort(bits));
        }
        if !bits.is_multiple_of(2) {
            return Err(Error::OddLength(bits));
        }
        check_positive("P", half_extent)?;
        Ok(Self { bits, half_extent })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn half_extent(&self) -> f64 {
        self.half_extent
    }

    /// `δ_p = 2P/N`.
    pub fn bin_width(&self) -> f64 {
        2.0 * self.half_extent / self.bits as f64
    }

    /// `[left, right]` of bin `i`.
    pub fn bin_edges(&self, i: usize) -> (f64, f64) {
        let w = self.bin_width();
        let left = -self.half_extent + i as f64 * w;
        if i + 1 == self.bits {
            (left, self.half_extent)
        } else {
            (left, left + w)
        }
    }

    /// Index of the bin containing `p`, or `None` outside `[-P, P]`.
    pub fn bin_index(&self, p: f64) -> Option<usize> {
        let big_p = self.half_extent;
        if !(-big_p..=big_p).contains(&p) {
            return None;
        }
        let i = ((p + big_p) / self.bin_width()).floor() as usize;
        Some(i.min(self.bits - 1))
    }
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NotPositive { name, value })
    }
}

/// Normalised top hat of half-width `half_width` centred at `center`; the
/// support is closed.
pub fn tophat(p: f64, half_width: f64, center: f64) -> Result<f64> {
    check_positive("P", half_width)?;
    Ok(tophat_unchecked(p, half_width, center))
}

fn tophat_unchecked(p: f64, half_width: f64, center: f64) -> f64 {
    if (p - center).abs() <= half_width {
        (0.5 / half_width).sqrt()
    } else {
        0.0
    }
}

/// `f_z(p)`: the sign of the bin containing `p`, or 0 outside `[-P, P]`.
pub fn encode(z: &BitString, params: &CvParams, p: f64) -> Result<f64> {
    check_len(z, params)?;
    Ok(encode_unchecked(z, params, p))
}

fn encode_unchecked(z: &BitString, params: &CvParams, p: f64) -> f64 {
    params.bin_index(p).map_or(0.0, |i| z.sign(i))
}

fn check_len(z: &BitString, params: &CvParams) -> Result<()> {
    if z.len() == params.bits {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: params.bits,
            found: z.len(),
        })
    }
}

/// The encoded momentum wavefunction `f_z(p)·⊓(p; P, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumSignal {
    params: CvParams,
    z: BitString,
}

pub fn encoded_momentum(z: &BitString, params: CvParams) -> Result<MomentumSignal> {
    check_len(z, &params)?;
    Ok(MomentumSignal {
        params,
        z: z.clone(),
    })
}

impl MomentumSignal {
    pub fn params(&self) -> &CvParams {
        &self.params
    }

    pub fn string(&self) -> &BitString {
        &self.z
    }

    pub fn value(&self, p: f64) -> f64 {
        encode_unchecked(&self.z, &self.params, p)
            * tophat_unchecked(p, self.params.half_extent, 0.0)
    }

    /// Sign and height of bin `i`: `(-1)^{z_i}(2P)^{-1/2}`.
    pub fn bin_value(&self, i: usize) -> f64 {
        self.z.sign(i) * (0.5 / self.params.half_extent).sqrt()
    }
}

/// Cell-midpoint samples of a momentum signal on `[-P, P]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples {
    pub momenta: Vec<f64>,
    pub values: Vec<f64>,
    /// Cell width `2P/M`.
    pub spacing: f64,
}

/// Samples `signal` at the midpoints of `samples` equal cells. `samples` must
/// be a power of two divisible by `N` with at least `4N` cells, so every bin
/// edge is a cell edge and no sample sits on a discontinuity.
pub fn grid_sample(signal: &MomentumSignal, samples: usize) -> Result<GridSamples> {
    let bits = signal.params.bits;
    if !samples.is_power_of_two() || !samples.is_multiple_of(bits) {
        return Err(Error::SampleCount { samples, bits });
    }
    if samples < 4 * bits {
        return Err(Error::TooSmall {
            name: "sample count",
            min: 4 * bits,
            value: samples,
        });
    }
    let big_p = signal.params.half_extent;
    let spacing = 2.0 * big_p / samples as f64;
    let per_bin = samples / bits;
    let momenta = (0..samples)
        .map(|k| -big_p + (k as f64 + 0.5) * spacing)
        .collect();
    let values = (0..samples)
        .map(|k| signal.bin_value(k / per_bin))
        .collect();
    Ok(GridSamples {
        momenta,
        values,
        spacing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_1_SQRT_2;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn tophat_examples() {
        assert!((tophat(0.0, 1.0, 0.0).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(tophat(2.0, 1.0, 0.0).unwrap(), 0.0);
        assert_eq!(tophat(1.0, 1.0, 0.0).unwrap(), FRAC_1_SQRT_2);
        assert_eq!(tophat(-1.0, 1.0, 0.0).unwrap(), FRAC_1_SQRT_2);
        assert!(matches!(
            tophat(0.0, 0.0, 0.0),
            Err(Error::NotPositive { .. })
        ));
        assert!(matches!(
            tophat(0.0, -1.0, 0.0),
            Err(Error::NotPositive { .. })
        ));
    }

    #[test]
    fn encode_examples() {
        let params = CvParams::new(4, 1.0).unwrap();
        let z = bs("0011");
        assert_eq!(encode(&z, &params, -0.75).unwrap(), 1.0);
        assert_eq!(encode(&z, &params, -0.25).unwrap(), 1.0);
        assert_eq!(encode(&z, &params, 0.25).unwrap(), -1.0);
        assert_eq!(encode(&z, &params, 0.75).unwrap(), -1.0);
        assert_eq!(encode(&z, &params, 1.5).unwrap(), 0.0);
        let c = bs("0000");
        for p in [-1.0, -0.3, 0.0, 0.999, 1.0] {
            assert_eq!(encode(&c, &params, p).unwrap(), 1.0);
        }
        assert!(encode(&bs("00"), &params, 0.0).is_err());
    }

    #[test]
    fn bin_edges_are_half_open() {
        let params = CvParams::new(4, 1.0).unwrap();
        assert_eq!(params.bin_index(-1.0), Some(0));
        assert_eq!(params.bin_index(-0.5), Some(1));
        assert_eq!(params.bin_index(0.0), Some(2));
        assert_eq!(params.bin_index(0.5), Some(3));
        assert_eq!(params.bin_index(1.0), Some(3));
        assert_eq!(params.bin_index(1.0 + 1e-12), None);
        assert_eq!(params.bin_edges(3), (0.5, 1.0));
    }

    #[test]
    fn encoded_momentum_examples() {
        let params = CvParams::new(4, 1.0).unwrap();
        let sig = encoded_momentum(&bs("0011"), params).unwrap();
        assert!((sig.value(0.5) + FRAC_1_SQRT_2).abs() < 1e-15);
        let bare = encoded_momentum(&bs("0000"), params).unwrap();
        for p in [-1.0, -0.2, 0.7, 1.0, 1.2] {
            assert_eq!(bare.value(p), tophat(p, 1.0, 0.0).unwrap());
        }
    }

    #[test]
    fn grid_sampling() {
        let params = CvParams::new(4, 1.0).unwrap();
        let sig = encoded_momentum(&bs("0101"), params).unwrap();
        let g = grid_sample(&sig, 16).unwrap();
        assert_eq!(g.values.len(), 16);
        for (k, v) in g.values.iter().enumerate() {
            let expected = if (k / 4) % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(*v, expected * FRAC_1_SQRT_2);
        }
        for &p in &g.momenta {
            let scaled = (p + 1.0) / params.bin_width();
            assert!((scaled - scaled.round()).abs() > 0.1);
        }
        let norm: f64 = g.values.iter().map(|v| v * v).sum::<f64>() * g.spacing;
        assert!((norm - 1.0).abs() < 1e-12);
        assert_eq!(
            grid_sample(&sig, 24),
            Err(Error::SampleCount {
                samples: 24,
                bits: 4
            })
        );
        assert!(matches!(grid_sample(&sig, 8), Err(Error::TooSmall { .. })));
    }
}
