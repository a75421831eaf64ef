use thiserror::Error;

/// Reasons a triple `(a, b, c)` does not describe a numerical semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("c must be at least 2 (got {0})")]
    SeedTooSmall(u128),
    #[error("a must be a positive integer (got 0)")]
    ZeroMultiplier,
    #[error("b must be a positive integer (got 0)")]
    ZeroOffset,
    #[error(
        "gcd(b, c) = {gcd} for b = {b}, c = {c}: every element would be divisible by {gcd}, \
         so the closure is not co-finite"
    )]
    NotCoprime { b: u128, c: u128, gcd: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Params(#[from] ParamsError),

    /// An intermediate value does not fit in 128 bits.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("Frobenius number {frobenius} exceeds the gaps cap of {cap}")]
    GapsCapExceeded { frobenius: u128, cap: u128 },

    #[error("oracle bound {bound} exceeds the configured cap of {cap}")]
    OracleBoundTooLarge { bound: u128, cap: u128 },

    #[error(
        "oracle bound {bound} is too small: the top {c} integers below it are not all members"
    )]
    OracleBoundTooSmall { bound: u128, c: u128 },

    #[error("residue index {l} is outside [0, {c})")]
    ResidueOutOfRange { l: u128, c: u128 },

    #[error("coefficients are not {a}-reduced: {reason}")]
    NotReduced { a: u128, reason: &'static str },

    /// A value is too large to be used as an index or a length on this platform.
    #[error("{0} does not fit in memory on this platform")]
    TooLarge(&'static str),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
