//! Deutsch-Jozsa oracle identification in the discrete and continuous-variable
//! settings.
//!
//! The crate is `no_std` and only needs an allocator. It covers:
//!
//! - [`bitstrings`]: oracle settings `z ∈ {0,1}^N`, promise classification and
//!   enumeration of balanced strings.
//! - [`dv`]: exact state-vector simulation of the target-less DJ circuit and the
//!   full target-qubit oracle.
//! - [`encoding`]: the momentum-domain top-hat substrate and the string-modulated
//!   encoded state.
//! - [`wavefunction`]: the position-domain phasor-sum wavefunction and the closed
//!   form densities for the constant and antisymmetric balanced (ASB) strings.
//! - [`measurement`]: window probabilities, the sine integral and the optimal
//!   window half-width.
//! - [`asb`]: brute-force check that the ASB strings maximise the phasor sum.
//! - [`amplification`]: repeated-query decision rule, Chernoff bounds and the
//!   classical baselines.
//!
//! IO, the command line and the FFT cross-check live in the `cvdj` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod amplification;
pub mod asb;
pub mod bitstrings;
pub mod dv;
pub mod encoding;
mod error;
pub mod measurement;
pub mod quadrature;
pub mod rng;
pub mod sine_integral;
pub mod wavefunction;

pub use crate::bitstrings::{BitString, PromiseClass};
pub use crate::encoding::CvParams;
pub use crate::error::{Error, Result};
pub use crate::wavefunction::{Pdf, PositionWavefunction};
