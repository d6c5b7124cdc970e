//! Exact state-vector simulation of the discrete-variable DJ circuit.
//!
//! The production path is target-less: `H^{⊗n} Û_f H^{⊗n} |0…0⟩`, with
//! `Û_f = diag((-1)^{z_x})`. The full `(n+1)`-qubit oracle
//! `|x⟩|y⟩ ↦ |x⟩|y ⊕ f(x)⟩` is available as a dense permutation matrix for
//! cross-checks at small `n`. Basis states are ordered lexicographically, with
//! the target qubit as the least significant bit of the full oracle's index.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::bitstrings::BitString;
use crate::error::{Error, Result};

/// Largest register handled by the state-vector path.
pub const MAX_QUBITS: usize = 20;
/// Largest `n` for which the dense `2^{n+1}`-square full oracle is built.
pub const MAX_DENSE_QUBITS: usize = 10;

/// Pure state on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DvState {
    amplitudes: Vec<Complex64>,
    qubits: usize,
}

impl DvState {
    /// Wraps an amplitude vector whose length is a power of two. The vector is
    /// not renormalised.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        Ok(Self {
            qubits: len.trailing_zeros() as usize,
            amplitudes,
        })
    }

    /// The computational basis state `|index⟩`.
    pub fn basis(qubits: usize, index: usize) -> Result<Self> {
        check_qubits(qubits, MAX_QUBITS)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes, qubits })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Born probability of the basis outcome `index`.
    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }
}

/// The target-less phase oracle `Û_f`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedOracle {
    signs: Vec<f64>,
}

impl ReducedOracle {
    pub fn new(z: &BitString) -> Result<Self> {
        z.qubit_count()?;
        Ok(Self {
            signs: z.signs().collect(),
        })
    }

    pub fn signs(&self) -> &[f64] {
        &self.signs
    }

    pub fn dimension(&self) -> usize {
        self.signs.len()
    }
}

fn check_qubits(n: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitRange { n, max })
    }
}

/// `H^{⊗n}|0…0⟩`: every amplitude `2^{-n/2}`.
pub fn prepare_uniform(qubits: usize) -> Result<DvState> {
    check_qubits(qubits, MAX_QUBITS)?;
    let dim = 1usize << qubits;
    let amp = (1.0 / dim as f64).sqrt();
    Ok(DvState {
        amplitudes: vec![Complex64::new(amp, 0.0); dim],
        qubits,
    })
}

pub fn apply_reduced_oracle(mut state: DvState, oracle: &ReducedOracle) -> Result<DvState> {
    if state.dimension() != oracle.dimension() {
        return Err(Error::LengthMismatch {
            expected: state.dimension(),
            found: oracle.dimension(),
        });
    }
    for (a, &s) in state.amplitudes.iter_mut().zip(&oracle.signs) {
        *a *= s;
    }
    Ok(state)
}

/// Applies `H^{⊗n}` in place: `n` stages of unnormalised butterflies, then
/// one scaling by `2^{-n/2}` (exact for even `n`).
pub fn walsh_hadamard_in_place(amplitudes: &mut [Complex64]) -> Result<()> {
    let len = amplitudes.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let mut half = 1;
    while half < len {
        for block in amplitudes.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
    let stages = len.trailing_zeros() as i32;
    let mut scale = 0.5f64.powi(stages / 2);
    if stages % 2 == 1 {
        scale *= FRAC_1_SQRT_2;
    }
    for a in amplitudes.iter_mut() {
        *a *= scale;
    }
    Ok(())
}

pub fn walsh_hadamard(mut state: DvState) -> Result<DvState> {
    walsh_hadamard_in_place(&mut state.amplitudes)?;
    Ok(state)
}

/// Runs `H^{⊗n} Û_f H^{⊗n}|0…0⟩` and returns the state before measurement.
pub fn dj_final_state(z: &BitString) -> Result<DvState> {
    let qubits = z.qubit_count()?;
    let oracle = ReducedOracle::new(z)?;
    let state = prepare_uniform(qubits)?;
    let state = apply_reduced_oracle(state, &oracle)?;
    walsh_hadamard(state)
}

/// Probability of measuring `0…0` after one DJ query: 1 for constant `z`,
/// 0 for balanced `z`.
pub fn dj_run(z: &BitString) -> Result<f64> {
    Ok(dj_final_state(z)?.probability(0))
}

/// Dense real square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out.entries[r * n + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Every entry is 0 or 1 with exactly one 1 per row and column.
    pub fn is_permutation(&self) -> bool {
        if self.entries.iter().any(|&v| v != 0.0 && v != 1.0) {
            return false;
        }
        (0..self.dim).all(|i| {
            let row: f64 = (0..self.dim).map(|c| self.get(i, c)).sum();
            let col: f64 = (0..self.dim).map(|r| self.get(r, i)).sum();
            row == 1.0 && col == 1.0
        })
    }
}

/// `U_f|x⟩|y⟩ = |x⟩|y ⊕ f(x)⟩` on `n + 1` qubits: block-diagonal with
/// `X^{f(x)}` blocks, basis index `2x + y`.
pub fn build_full_oracle(qubits: usize, z: &BitString) -> Result<DenseMatrix> {
    check_qubits(qubits, MAX_DENSE_QUBITS)?;
    if z.len() != 1 << qubits {
        return Err(Error::LengthMismatch {
            expected: 1 << qubits,
            found: z.len(),
        });
    }
    let mut u = DenseMatrix::zeros(2 << qubits);
    for (x, &fx) in z.bits().iter().enumerate() {
        for y in 0..2 {
            let out = y ^ usize::from(fx);
            u.set(2 * x + out, 2 * x + y, 1.0);
        }
    }
    Ok(u)
}
