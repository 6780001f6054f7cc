use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::lie::LieAlgebra;
use crate::linalg::{vector, BasisCoords, Matrix, Scalar, Subspace, Vector};

/// `B' = exp(ad z_k) ⋯ exp(ad z_1) B` with every `z_t` in `[L, R]` and of identity degree,
/// so the composite is a graded inner automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviConjugacy {
    pub steps: Vec<Vector>,
}

/// `exp(ad z)`; fails unless `ad z` is nilpotent.
pub fn exp_ad(alg: &LieAlgebra, z: &[Scalar]) -> Result<Matrix> {
    let n = alg.dim();
    let a = alg.ad(z)?;
    let mut term = Matrix::identity(n);
    let mut out = Matrix::identity(n);
    for k in 1..=n as i64 {
        term = term.mul(&a)?.scale(&Scalar::frac(1, k));
        if term.entries().iter().all(Scalar::is_zero) {
            return Ok(out);
        }
        out = out.add(&term)?;
    }
    if term.mul(&a)?.entries().iter().all(Scalar::is_zero) {
        Ok(out)
    } else {
        Err(Error::Precondition("ad z is not nilpotent".into()))
    }
}

impl LeviConjugacy {
    pub fn apply(&self, alg: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
        let mut cur = s.clone();
        for z in &self.steps {
            cur = cur.image(&exp_ad(alg, z)?)?;
        }
        Ok(cur)
    }

    /// Checks degrees, membership in `[L, R]` and that the steps carry `from` onto `to`.
    pub fn verify(&self, gr: &Grading, from: &Subspace, to: &Subspace) -> Result<bool> {
        let alg = gr.algebra();
        let full = alg.full();
        let lr = alg.product_subspace(&full, &alg.radical()?)?;
        let e = gr.group().identity();
        for z in &self.steps {
            if z.len() != alg.dim() || !lr.contains(z)? || gr.degree_of(z).is_some_and(|d| d != e) {
                return Ok(false);
            }
        }
        Ok(self.apply(alg, from)? == *to)
    }
}

/// Finds a graded inner automorphism taking the homogeneous Levi subalgebra `from`
/// onto the homogeneous Levi subalgebra `to`, one derived-series stage of `R` at a time.
pub fn levi_conjugator(gr: &Grading, from: &Subspace, to: &Subspace) -> Result<Option<LeviConjugacy>> {
    let alg = gr.algebra();
    let n = alg.dim();
    let r = alg.radical()?;
    for (s, what) in [(from, "source"), (to, "target")] {
        if !alg.is_subalgebra(s)? || !s.intersection(&r)?.is_zero() || s.dim() + r.dim() != n {
            return Err(Error::Precondition(format!("{what} is not a Levi subalgebra")));
        }
        if !gr.is_graded_subspace(s)? {
            return Err(Error::Precondition(format!("{what} is not graded")));
        }
    }
    let to_coords = BasisCoords::new(n, to.basis().iter().chain(r.basis()).cloned().collect())?;
    let series = alg.derived_series_of(&r)?;
    let full = alg.full();
    let e = gr.group().identity();
    let mut current = from.clone();
    let mut steps = Vec::new();
    for pair in series.windows(2) {
        let (rt, rnext) = (&pair[0], &pair[1]);
        let span = alg.product_subspace(&full, rt)?;
        let unknowns: Vec<Vector> = gr
            .expect_graded(&span, "[L, R^(t)]")?
            .component(e)
            .map(|s| s.basis().to_vec())
            .unwrap_or_default();
        let comp = rnext.complement();
        let quot = BasisCoords::new(n, comp.basis().iter().chain(rnext.basis()).cloned().collect())?;
        let project = |v: &Vector| quot.coords_unchecked(v)[..comp.dim()].to_vec();

        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for b in current.basis() {
            let c = to_coords.coords_unchecked(b);
            let image = vector::combine(&c[..to.dim()], to.basis(), n);
            let delta = vector::sub(&image, b);
            if !rt.contains(&delta)? {
                return Err(Error::InvariantViolation("Levi subalgebras disagree below the current stage".into()));
            }
            let cols: Vec<Vector> = unknowns.iter().map(|z| project(&alg.bracket_unchecked(z, b))).collect();
            let target = project(&delta);
            for (row, t) in target.into_iter().enumerate() {
                rows.push(cols.iter().map(|col| col[row].clone()).collect());
                rhs.push(t);
            }
        }
        let z_coeffs = if unknowns.is_empty() {
            if rhs.iter().all(Scalar::is_zero) {
                Some(Vec::new())
            } else {
                None
            }
        } else {
            Matrix::from_rows_with_cols(rows, unknowns.len())?.solve(&rhs)?
        };
        let Some(z_coeffs) = z_coeffs else {
            return Ok(None);
        };
        let z = vector::combine(&z_coeffs, &unknowns, n);
        if !vector::is_zero(&z) {
            current = current.image(&exp_ad(alg, &z)?)?;
            steps.push(z);
        }
    }
    if current != *to {
        return Ok(None);
    }
    Ok(Some(LeviConjugacy { steps }))
}
