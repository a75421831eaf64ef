//! Numerical semigroups closed under an affine map.
//!
//! For positive integers `a`, `b` and `c >= 2` with `gcd(b, c) = 1`, let
//! `G_{a,b}(c)` be the smallest numerical semigroup containing `c` whose
//! nonzero elements are closed under `x -> a*x + b`. This crate computes its
//! minimal generators, embedding dimension, Apéry set with respect to `c`,
//! Frobenius number, genus and gaps in closed form ([`semigroup`]), and
//! builds the same semigroup by brute-force closure ([`oracle`]) so that the
//! two can be checked against each other.
//!
//! ```
//! use thetasg::{semigroup, Params};
//!
//! let p = Params::new(3, 1, 5).unwrap();
//! let profile = semigroup::profile(&p).unwrap();
//! assert_eq!(profile.min_generators, vec![5, 16, 49]);
//! assert_eq!(profile.frobenius, 44);
//! assert_eq!(profile.genus, 27);
//! assert!(semigroup::contains(&p, 46));
//! ```

pub mod arith;
pub mod error;
pub mod oracle;
pub mod params;
pub mod repr;
pub mod semigroup;

pub use error::{Error, ParamsError, Result};
pub use oracle::OracleSemigroup;
pub use params::Params;
pub use repr::{AReducedRepr, ReductionStep, ReductionTrace};
pub use semigroup::{Membership, SemigroupProfile};
