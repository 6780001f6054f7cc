use num_traits::Zero;

use super::matrix::rref_rows;
use super::{vector, Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored as the rows of its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Subspace {
            ambient,
            basis: idx.iter().map(|&i| vector::unit(ambient, i)).collect(),
            pivots: idx,
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if !vector::is_zero(&v) {
                rows.push(v);
            }
        }
        Ok(Self::from_rows_unchecked(ambient, rows))
    }

    fn from_rows_unchecked(ambient: usize, mut rows: Vec<Vector>) -> Self {
        let pivots = rref_rows(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows_with_cols(self.basis.clone(), self.ambient).expect("basis rows have ambient length")
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                vector::axpy(&mut r, &-f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(vector::is_zero(&self.reduce(v)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| vector::is_zero(&self.reduce(v))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_rows_unchecked(self.ambient, rows))
    }

    pub fn sum_all<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Result<Subspace> {
        let mut acc = Subspace::zero(ambient);
        for p in parts {
            acc = acc.sum(p)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        // (a, b) with a·V + b·W = 0 gives the intersection vectors a·V.
        let d = self.dim();
        let stacked: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = Matrix::from_rows_with_cols(stacked, self.ambient)?.transpose();
        let vecs = m
            .kernel()
            .into_iter()
            .map(|k| vector::combine(&k[..d], &self.basis, self.ambient));
        Subspace::span(self.ambient, vecs)
    }

    /// Canonical complement of `self` inside `within`: the vectors of
    /// `within`'s canonical basis that enlarge the running span, in order.
    pub fn complement_within(&self, within: &Subspace) -> Result<Subspace> {
        self.check(within)?;
        if !within.contains_subspace(self)? {
            return Err(Error::Precondition("complement_within requires V ⊆ W".into()));
        }
        let mut running = self.clone();
        let mut chosen = Vec::new();
        for w in &within.basis {
            if !running.contains(w)? {
                running = running.sum(&Subspace::from_rows_unchecked(self.ambient, vec![w.clone()]))?;
                chosen.push(w.clone());
            }
        }
        Subspace::span(self.ambient, chosen)
    }

    /// Canonical complement in the whole space: unit vectors at non-pivot columns.
    pub fn complement(&self) -> Subspace {
        let piv: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        Subspace::coordinate(self.ambient, (0..self.ambient).filter(|i| !piv.contains(i)))
    }

    /// Image under the linear map `v ↦ M v`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let vecs = self
            .basis
            .iter()
            .map(|v| m.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(m.rows(), vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector::from_ints;

    #[test]
    fn sum_intersection_complement() {
        let e1 = Subspace::span(2, [from_ints(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, [from_ints(&[0, 1])]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        let diag = Subspace::span(2, [from_ints(&[1, 1])]).unwrap();
        assert!(diag.intersection(&e1).unwrap().is_zero());
        assert_eq!(e1.complement_within(&Subspace::full(2)).unwrap(), e2);
        assert_eq!(e1.complement(), e2);
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(3, [from_ints(&[1, 2, 3]), from_ints(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, [from_ints(&[1, 3, 4]), from_ints(&[2, 5, 7]), from_ints(&[3, 8, 11])]).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&from_ints(&[1, 1, 2])).unwrap());
        assert!(!a.contains(&from_ints(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn mismatched_ambient() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.intersection(&b).is_err());
    }
}
