use num_traits::Zero;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

impl LieAlgebra {
    /// Gram matrix of κ(x, y) = tr(ad x ad y) on the basis.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        // dense lookup of c_{jk}^l
        let mut dense = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket_sparse(i, j) {
                    dense[(i * n + j) * n + k] = c.clone();
                }
            }
        }
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(ad b_i ad b_j) = Σ_{l,k} c_{il}^k c_{jk}^l
                let mut acc = Scalar::zero();
                for l in 0..n {
                    for (k, c) in self.basis_bracket_sparse(i, l) {
                        let d = &dense[(j * n + k) * n + l];
                        if !d.is_zero() {
                            acc += &(c * d);
                        }
                    }
                }
                m.set(j, i, acc.clone());
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn killing(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        Ok(self.ad(x)?.mul(&self.ad(y)?)?.trace())
    }

    /// κ-orthogonal of `s`: `{x : κ(x, s) = 0 for all s ∈ S}`.
    pub fn killing_orthogonal(&self, s: &Subspace, gram: &Matrix) -> Result<Subspace> {
        let n = self.dim();
        if s.is_zero() {
            return Ok(self.full());
        }
        let rows: Vec<Vector> = s.basis().iter().map(|v| gram.apply(v)).collect::<Result<_>>()?;
        Subspace::span(n, Matrix::from_rows_with_cols(rows, n)?.kernel())
    }

    /// Solvable radical, computed as the κ-orthogonal of `[L, L]` and then
    /// checked to be a solvable ideal.
    pub fn radical(&self) -> Result<Subspace> {
        let gram = self.killing_form();
        let derived = self.product_subspace(&self.full(), &self.full())?;
        let r = self.killing_orthogonal(&derived, &gram)?;
        if !self.is_ideal(&r)? || !self.is_solvable_subalgebra(&r)? {
            return Err(Error::InvariantViolation(
                "κ-orthogonal of [L, L] is not a solvable ideal".into(),
            ));
        }
        Ok(r)
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.is_zero())
    }
}
