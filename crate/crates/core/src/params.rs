use std::fmt;

use crate::arith::gcd;
use crate::error::ParamsError;

/// A validated triple `(a, b, c)` naming the smallest numerical semigroup
/// that contains `c` and is closed under `x -> a*x + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    a: u128,
    b: u128,
    c: u128,
}

impl Params {
    /// Checks `c >= 2`, then `a, b >= 1`, then `gcd(b, c) = 1`, in that order.
    pub fn new(a: u128, b: u128, c: u128) -> Result<Self, ParamsError> {
        if c < 2 {
            return Err(ParamsError::SeedTooSmall(c));
        }
        if a == 0 {
            return Err(ParamsError::ZeroMultiplier);
        }
        if b == 0 {
            return Err(ParamsError::ZeroOffset);
        }
        let d = gcd(b, c);
        if d != 1 {
            return Err(ParamsError::NotCoprime { b, c, gcd: d });
        }
        Ok(Self { a, b, c })
    }

    /// Affine multiplier.
    pub fn a(&self) -> u128 {
        self.a
    }

    /// Affine offset.
    pub fn b(&self) -> u128 {
        self.b
    }

    /// Seed element.
    pub fn c(&self) -> u128 {
        self.c
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_{{{},{}}}({})", self.a, self.b, self.c)
    }
}
