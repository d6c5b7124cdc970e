use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Precondition and numerical failures raised by the simulation primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bit string contains '{found}' at position {position}; only '0' and '1' are allowed")]
    InvalidBit { position: usize, found: char },
    #[error("bit string must have at least 2 bits, got {0}")]
    TooShort(usize),
    #[error("length must be even, got {0}")]
    OddLength(usize),
    #[error("length must be a power of two, got {0}")]
    NotPowerOfTwo(usize),
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration of length {len} exceeds the cap of {cap}")]
    EnumerationCap { len: usize, cap: usize },
    #[error("qubit count must be in 1..={max}, got {n}")]
    QubitRange { n: usize, max: usize },
    #[error("{name} must be positive and finite, got {value}")]
    NotPositive { name: &'static str, value: f64 },
    #[error("{name} must be at least {min}, got {value}")]
    TooSmall {
        name: &'static str,
        min: usize,
        value: usize,
    },
    #[error("sample count {samples} must be a power of two divisible by the bit count {bits}")]
    SampleCount { samples: usize, bits: usize },
    #[error("sign assignment is not balanced (sum = {0})")]
    Unbalanced(i64),
    #[error("window must satisfy a <= b, got [{a}, {b}]")]
    InvalidWindow { a: f64, b: f64 },
    #[error("probability {0} outside [0, 1]")]
    ProbabilityRange(f64),
    #[error(
        "query model requires p_balanced < 1/2 < p_constant, got ({p_constant}, {p_balanced})"
    )]
    UnseparatedModel { p_constant: f64, p_balanced: f64 },
    #[error("adaptive quadrature did not converge on [{a}, {b}]")]
    QuadratureDiverged { a: f64, b: f64 },
    #[error("root bracket [{lo}, {hi}] does not contain a sign change")]
    BracketFailure { lo: f64, hi: f64 },
}
