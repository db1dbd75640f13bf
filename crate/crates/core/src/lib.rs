//! Exact enumeration for the multiplicative refinements of the braid
//! arrangement: the hyperplanes `x_i = 0` and `x_i = 2^k x_j`.
//!
//! The crate computes characteristic polynomials and region counts by three
//! independent routes (closed forms, finite-field point counting and the
//! intersection poset), and realizes the bijections between regions, sketches,
//! decorated Dyck paths and decorated non-nesting partitions.
//!
//! The algebraic core is generic over an exact integer scalar (see
//! [`Scalar`]); the aliases below fix the concrete types used throughout.

pub mod arrangements;
pub mod error;
pub mod numbers;
pub mod partitions;
pub mod paths;
pub mod polynomial;
pub mod poset;
pub mod reference;
pub mod scalar;
pub mod sketches;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;

pub use error::{Error, Result};
pub use polynomial::Polynomial;
pub use scalar::Scalar;

/// Characteristic polynomials carry arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;

/// Nonnegative counts: regions, Raney numbers, enumeration sizes.
pub type BigCount = BigUint;

/// Exact rationals used for interpolation and the linear-algebra route.
pub type Rational = Ratio<BigInt>;

/// Exponents of witness points. Denominators stay bounded by `n + 1`.
pub type Exponent = Ratio<i64>;
