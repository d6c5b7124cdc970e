//! Oracle settings as explicit value lists.
//!
//! A function `f: {0,1}^n → {0,1}` is stored as the list `z` of its `N = 2^n`
//! outputs in lexicographic input order. Bits are 0-indexed everywhere: where a
//! formula sums over `j = 1..=N`, the `j`-th term reads `z[j - 1]`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Default upper bound on `N` for exhaustive enumeration (`C(24, 12) ≈ 2.7M`).
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Classification of a string under the Deutsch-Jozsa promise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PromiseClass {
    Constant,
    Balanced,
    /// Violates the promise. Algorithms assume this never happens.
    Neither,
}

impl PromiseClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PromiseClass::Constant => "Constant",
            PromiseClass::Balanced => "Balanced",
            PromiseClass::Neither => "Neither",
        }
    }
}

impl fmt::Display for PromiseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An `N`-bit oracle setting `z_0 … z_{N-1}`.
///
/// Construction only requires `N ≥ 2`; evenness and power-of-two lengths are
/// checked by the operations that need them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.len() < 2 {
            return Err(Error::TooShort(bits.len()));
        }
        Ok(Self { bits })
    }

    /// `N` copies of `bit`.
    pub fn constant(len: usize, bit: bool) -> Result<Self> {
        Self::new(alloc::vec![bit; len])
    }

    /// Bits `0..N` of `value`, most significant first (so `z_0` is bit `N-1`).
    pub fn from_u64(value: u64, len: usize) -> Result<Self> {
        if len > 64 {
            return Err(Error::EnumerationCap { len, cap: 64 });
        }
        Self::new(
            (0..len)
                .map(|i| (value >> (len - 1 - i)) & 1 == 1)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// `(-1)^{z_i}` as a float.
    pub fn sign(&self, i: usize) -> f64 {
        if self.bits[i] {
            -1.0
        } else {
            1.0
        }
    }

    /// All `(-1)^{z_i}` in order.
    pub fn signs(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.bits.iter().map(|&b| if b { -1.0 } else { 1.0 })
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        Self {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    /// The representative of `{z, complement(z)}` whose first bit is 0.
    pub fn canonical(&self) -> Self {
        if self.bits[0] {
            self.complement()
        } else {
            self.clone()
        }
    }

    /// `log2 N` when `N` is a power of two.
    pub fn qubit_count(&self) -> Result<usize> {
        let len = self.len();
        if len.is_power_of_two() {
            Ok(len.trailing_zeros() as usize)
        } else {
            Err(Error::NotPowerOfTwo(len))
        }
    }

    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(Error::InvalidBit { position, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

pub fn classify(z: &BitString) -> PromiseClass {
    let ones = z.count_ones();
    if ones == 0 || ones == z.len() {
        PromiseClass::Constant
    } else if 2 * ones == z.len() {
        PromiseClass::Balanced
    } else {
        PromiseClass::Neither
    }
}

/// Lexicographic iterator over every balanced string of a fixed length.
#[derive(Debug, Clone)]
pub struct BalancedStrings {
    next: Option<Vec<bool>>,
    remaining: u64,
}

impl Iterator for BalancedStrings {
    type Item = BitString;

    fn next(&mut self) -> Option<BitString> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        if next_permutation(&mut successor) {
            self.next = Some(successor);
        }
        self.remaining -= 1;
        Some(BitString { bits: current })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BalancedStrings {}

// Rearranges into the lexicographic successor; false once the last
// permutation has been reached.
fn next_permutation(bits: &mut [bool]) -> bool {
    let Some(pivot) = bits.windows(2).rposition(|w| !w[0] & w[1]) else {
        return false;
    };
    let swap = bits.iter().rposition(|&b| b & !bits[pivot]).unwrap();
    bits.swap(pivot, swap);
    bits[pivot + 1..].reverse();
    true
}

/// Every balanced string of length `len`, in lexicographic order, with the
/// default cap of [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_balanced(len: usize) -> Result<BalancedStrings> {
    enumerate_balanced_with_cap(len, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_balanced_with_cap(len: usize, cap: usize) -> Result<BalancedStrings> {
    if len > cap {
        return Err(Error::EnumerationCap { len, cap });
    }
    if len < 2 {
        return Err(Error::TooShort(len));
    }
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let half = len / 2;
    let first = (0..len).map(|i| i >= half).collect();
    Ok(BalancedStrings {
        next: Some(first),
        remaining: binomial(len as u64, half as u64),
    })
}

/// `C(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The antisymmetric balanced pair `(0^{N/2} 1^{N/2}, 1^{N/2} 0^{N/2})`.
pub fn asb_pair(len: usize) -> Result<(BitString, BitString)> {
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let first = BitString::new((0..len).map(|i| i >= len / 2).collect())?;
    let second = first.complement();
    Ok((first, second))
}
