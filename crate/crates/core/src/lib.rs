//! Exact Bernoulli, Stirling and Bernoulli-Stirling numbers.
//!
//! Everything here is exact: integers are [`num_bigint::BigInt`], rationals are
//! [`num_rational::BigRational`] (always in lowest terms, positive
//! denominator). The crate is `no_std` and only needs `alloc`.
//!
//! Tabulated quantities (Bernoulli numbers, both Stirling triangles and the
//! two Bernoulli-Stirling triangles) are memoized in a caller-owned
//! [`Tables`] value. Mutating methods warm the caches; once warm, the
//! `&self` accessors can be shared between readers.
//!
//! ```
//! use bsnum::Tables;
//!
//! let mut t = Tables::new();
//! assert_eq!(t.bs_first(9, 3).unwrap(), (-408700).into());
//! assert_eq!(t.bs_second(12, 6).unwrap(), (-760100).into());
//! ```
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bstriangle;
pub mod congruence;
pub mod corenum;
mod error;
pub mod harmonic;
pub mod poly;
pub mod series;
pub mod stirling;
mod tables;
pub mod triangle;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::Polynomial;
pub use series::TruncatedEgf;
pub use stirling::{IdentityCheck, IdentityId};
pub use tables::Tables;
pub use triangle::{TriangleKind, TriangleTable};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;
/// Exact rational in lowest terms.
pub type ExactRat = BigRational;
