use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Vector};

/// An endomorphism of the underlying space; column `j` is the image of `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

/// First pair `(i, j)` on which `f[b_i, b_j] ≠ [f b_i, f b_j]`.
pub type AutomorphismFailure = Option<(usize, usize)>;

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        LinearMap::new(self.matrix.mul(&other.matrix)?)
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.matrix.rank() == self.dim())
    }

    /// Checks the homomorphism law on all basis pairs.
    pub fn homomorphism_failure(&self, alg: &LieAlgebra) -> Result<AutomorphismFailure> {
        let n = alg.dim();
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.dim(),
            });
        }
        let images: Vec<_> = (0..n).map(|j| self.matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.matrix.apply(&alg.basis_bracket(i, j))?;
                let rhs = alg.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_automorphism(&self, alg: &LieAlgebra) -> Result<bool> {
        Ok(self.is_invertible()? && self.homomorphism_failure(alg)?.is_none())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.dim())
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.apply(v)
    }
}
