//! Exact scalars and the dense linear-algebra kernel.

mod coords;
pub mod cyclotomic;
mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use coords::BasisCoords;
pub use cyclotomic::{euler_phi, Cyclotomic, DEFAULT_ORDER_BOUND};
pub use matrix::Matrix;
pub use scalar::{parse_rational, Scalar};
pub use subspace::Subspace;

/// Arbitrary-precision rational; always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Coordinate vector.
pub type Vector = Vec<Scalar>;
