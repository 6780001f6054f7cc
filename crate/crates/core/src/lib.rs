//! Exact computation with finite-dimensional Lie algebras graded by finite groups.

pub mod catalog;
pub mod duality;
pub mod error;
pub mod grading;
pub mod io;
pub mod groups;
pub mod lie;
pub mod linalg;
pub mod structure;

pub use error::{Error, ErrorClass, Result};
pub use grading::{GradedSubspace, Grading};
pub use groups::FiniteGroup;
pub use lie::{LieAlgebra, LinearMap, SplitType};
pub use linalg::{Cyclotomic, Matrix, Rational, Scalar, Subspace, Vector};
