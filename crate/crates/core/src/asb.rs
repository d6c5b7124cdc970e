//! Exhaustive check that the antisymmetric balanced (ASB) strings maximise the
//! phasor-sum magnitude.
//!
//! With `P = 1`, `N = 2m` and angles `φ_j = ((N − (2j − 1))/N)·x`, the claim
//! is that for every balanced `g: {1..2m} → ±1` and every `x ∈ [−π/2, π/2]`,
//! `|Σ_j g(j) e^{iφ_j}| ≤ |S_ASB(x)|`. Magnitudes are even in `x`, so only
//! `[0, π/2]` is sampled.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::bitstrings::{asb_pair, enumerate_balanced_with_cap, BitString};
use crate::error::{Error, Result};
use crate::wavefunction::paired_phasor_sum;

/// Largest `N` accepted by [`verify_asb_dominance`].
pub const MAX_DOMINANCE_BITS: usize = 16;
/// Default number of grid points on `[0, π/2]`, endpoints included.
pub const DEFAULT_GRID: usize = 2001;
/// Slack allowed before a grid point counts as a violation.
pub const DOMINANCE_TOLERANCE: f64 = 1e-9;

/// A balanced `±1` assignment over `2m` phasors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignAssignment {
    signs: Vec<i8>,
}

impl SignAssignment {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.len() < 2 {
            return Err(Error::TooShort(signs.len()));
        }
        if !signs.len().is_multiple_of(2) {
            return Err(Error::OddLength(signs.len()));
        }
        let total: i64 = signs.iter().map(|&s| i64::from(s)).sum();
        if signs.iter().any(|&s| s != 1 && s != -1) || total != 0 {
            return Err(Error::Unbalanced(total));
        }
        Ok(Self { signs })
    }

    /// `g(j) = (-1)^{z_{j-1}}`.
    pub fn from_bits(z: &BitString) -> Result<Self> {
        Self::new(z.bits().iter().map(|&b| if b { -1 } else { 1 }).collect())
    }

    pub fn pair_count(&self) -> usize {
        self.signs.len() / 2
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negated(&self) -> Self {
        Self {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }
}

fn angle(len: usize, x: f64, j: usize) -> f64 {
    let n = len as f64;
    ((n - (2 * j - 1) as f64) / n) * x
}

/// `S = Σ_{j=1}^{2m} g(j) e^{iφ_j(x)}` at `P = 1`.
pub fn signed_sum(g: &SignAssignment, x: f64) -> Complex64 {
    let signs: Vec<f64> = g.signs.iter().map(|&s| f64::from(s)).collect();
    paired_phasor_sum(&signs, |j| angle(signs.len(), x, j))
}

/// Outcome of an exhaustive dominance check.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceReport {
    pub bits: usize,
    pub grid: usize,
    pub strings_checked: usize,
    /// No grid point had `|S_g| > |S_ASB| + tolerance`.
    pub holds: bool,
    /// `min (|S_ASB| − |S_g|)` over all balanced `g` and grid points. Zero
    /// whenever the ASB strings themselves are included.
    pub worst_margin: f64,
    /// The same minimum restricted to non-ASB strings and `x > 0`, with the
    /// string and position where it occurs; `None` when no such string exists.
    pub strict_margin: Option<(f64, BitString, f64)>,
    /// First violating `(z, x)`, if any.
    pub witness: Option<(BitString, f64)>,
}

impl DominanceReport {
    fn empty(bits: usize, grid: usize) -> Self {
        Self {
            bits,
            grid,
            strings_checked: 0,
            holds: true,
            worst_margin: f64::INFINITY,
            strict_margin: None,
            witness: None,
        }
    }

    /// Combines reports over consecutive chunks of the enumeration; `self`
    /// must cover the earlier chunk so that ties keep the first occurrence.
    pub fn merge(mut self, later: Self) -> Self {
        self.strings_checked += later.strings_checked;
        self.holds &= later.holds;
        self.worst_margin = self.worst_margin.min(later.worst_margin);
        if self.witness.is_none() {
            self.witness = later.witness;
        }
        self.strict_margin = match (self.strict_margin, later.strict_margin) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Precomputed `sin φ_j`, `cos φ_j` for `j ≤ m` and the ASB magnitudes on
/// the grid, so each assignment costs only additions.
#[derive(Debug, Clone)]
pub struct DominanceGrid {
    bits: usize,
    xs: Vec<f64>,
    sin: Vec<f64>,
    cos: Vec<f64>,
    asb_magnitude: Vec<f64>,
    asb: (BitString, BitString),
}

impl DominanceGrid {
    pub fn new(bits: usize, grid: usize) -> Result<Self> {
        if bits > MAX_DOMINANCE_BITS {
            return Err(Error::EnumerationCap {
                len: bits,
                cap: MAX_DOMINANCE_BITS,
            });
        }
        if grid < 2 {
            return Err(Error::TooSmall {
                name: "grid",
                min: 2,
                value: grid,
            });
        }
        let asb = asb_pair(bits)?;
        let half = bits / 2;
        let xs: Vec<f64> = (0..grid)
            .map(|k| FRAC_PI_2 * (k as f64 / (grid - 1) as f64))
            .collect();
        let mut sin = Vec::with_capacity(grid * half);
        let mut cos = Vec::with_capacity(grid * half);
        for &x in &xs {
            for j in 1..=half {
                let (s, c) = angle(bits, x, j).sin_cos();
                sin.push(s);
                cos.push(c);
            }
        }
        let mut this = Self {
            bits,
            xs,
            sin,
            cos,
            asb_magnitude: Vec::new(),
            asb,
        };
        let envelope = (0..grid)
            .map(|k| this.magnitude(this.asb.0.bits(), k))
            .collect();
        this.asb_magnitude = envelope;
        Ok(this)
    }

    pub fn positions(&self) -> &[f64] {
        &self.xs
    }

    fn magnitude(&self, bits: &[bool], k: usize) -> f64 {
        let half = self.bits / 2;
        let sign = |b: bool| if b { -1.0 } else { 1.0 };
        let (mut re, mut im) = (0.0, 0.0);
        for j in 1..=half {
            let outer = sign(bits[j - 1]);
            let mirror = sign(bits[self.bits - j]);
            re += (outer + mirror) * self.cos[k * half + j - 1];
            im += (outer - mirror) * self.sin[k * half + j - 1];
        }
        re.hypot(im)
    }

    /// Checks every string yielded by `strings` against the ASB envelope.
    pub fn check(&self, strings: impl IntoIterator<Item = BitString>) -> DominanceReport {
        let mut report = DominanceReport::empty(self.bits, self.xs.len());
        for z in strings {
            report.strings_checked += 1;
            let is_asb = z == self.asb.0 || z == self.asb.1;
            for (k, &x) in self.xs.iter().enumerate() {
                let slack = self.asb_magnitude[k] - self.magnitude(z.bits(), k);
                report.worst_margin = report.worst_margin.min(slack);
                if slack < -DOMINANCE_TOLERANCE {
                    report.holds = false;
                    if report.witness.is_none() {
                        report.witness = Some((z.clone(), x));
                    }
                }
                if !is_asb && k > 0 && report.strict_margin.as_ref().is_none_or(|m| slack < m.0) {
                    report.strict_margin = Some((slack, z.clone(), x));
                }
            }
        }
        report
    }
}

/// Enumerates every balanced string of length `bits` and compares its phasor
/// sum with the ASB sum on `grid` points of `[0, π/2]`.
pub fn verify_asb_dominance(bits: usize, grid: usize) -> Result<DominanceReport> {
    let table = DominanceGrid::new(bits, grid)?;
    let strings = enumerate_balanced_with_cap(bits, MAX_DOMINANCE_BITS)?;
    Ok(table.check(strings))
}
