use num_traits::Zero;

use super::matrix::rref_rows;
use super::{vector, Scalar, Vector};
use crate::error::{Error, Result};

/// Coordinates with respect to a fixed, linearly independent list of vectors.
///
/// Precomputes `T` with `rref(B) = T·B`, so the coefficients of a member `v`
/// are read off the pivot entries of `v` and multiplied by `T`.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Vec<Vector>,
}

impl BasisCoords {
    pub fn new(ambient: usize, basis: Vec<Vector>) -> Result<Self> {
        let d = basis.len();
        let mut rows: Vec<Vector> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut r = b.clone();
                r.extend(vector::unit(d, i));
                r
            })
            .collect();
        if rows.iter().any(|r| r.len() != ambient + d) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: basis.iter().map(Vec::len).find(|&l| l != ambient).unwrap_or(0),
            });
        }
        let pivots = rref_rows(&mut rows, ambient + d);
        if pivots.len() < d || pivots[d - 1] >= ambient {
            return Err(Error::Precondition("coordinate basis is linearly dependent".into()));
        }
        let transform = rows.iter().map(|r| r[ambient..].to_vec()).collect();
        Ok(BasisCoords {
            ambient,
            basis,
            pivots,
            transform,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coefficients of `v`, assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vector {
        let d = self.basis.len();
        let mut c = vector::zero(d);
        for (k, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                vector::axpy(&mut c, &v[p], &self.transform[k]);
            }
        }
        c
    }

    /// Coefficients of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let c = self.coords_unchecked(v);
        let back = vector::combine(&c, &self.basis, self.ambient);
        Ok(if back == v { Some(c) } else { None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector::from_ints;

    #[test]
    fn recovers_coefficients() {
        let b = vec![from_ints(&[1, 1, 0]), from_ints(&[0, 2, 1])];
        let bc = BasisCoords::new(3, b).unwrap();
        let v = from_ints(&[3, 1, -1]);
        assert_eq!(bc.coords(&v).unwrap(), Some(from_ints(&[3, -1])));
        assert_eq!(bc.coords(&from_ints(&[0, 0, 1])).unwrap(), None);
        assert!(BasisCoords::new(2, vec![from_ints(&[1, 2]), from_ints(&[2, 4])]).is_err());
    }
}
