use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::graded_blocks;
use crate::error::{Error, Result};
use crate::grading::{GradedSubspace, Grading};
use crate::linalg::{vector, BasisCoords, Matrix, Scalar, Subspace, Vector};

/// Which construction produced the Levi subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeviPath {
    /// one correction system over all of L at each derived-series stage
    Global,
    /// per graded block of L/R, through the subalgebras generated by fibers in the block support
    Blockwise,
}

/// Strategy for [`homogeneous_levi_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LeviStrategy {
    /// global first, blockwise if some stage is inconsistent
    #[default]
    Auto,
    Blockwise,
}

#[derive(Clone, Debug)]
pub struct LeviResult {
    pub levi: GradedSubspace,
    pub path: LeviPath,
    /// number of derived-series stages corrected
    pub stages: usize,
}

/// A graded subalgebra `B` with `B ⊕ R = L`, built on a homogeneous basis.
pub fn homogeneous_levi(gr: &Grading) -> Result<LeviResult> {
    homogeneous_levi_with(gr, LeviStrategy::Auto)
}

pub fn homogeneous_levi_with(gr: &Grading, strategy: LeviStrategy) -> Result<LeviResult> {
    let radical = super::radical_gradedness(gr)?;
    let result = match strategy {
        LeviStrategy::Auto => match levi_global(gr, &radical)? {
            Ok(r) => r,
            Err(_) => levi_blockwise(gr, &radical)?,
        },
        LeviStrategy::Blockwise => levi_blockwise(gr, &radical)?,
    };
    check_levi(gr, radical.total(), result.levi.total())?;
    Ok(result)
}

fn check_levi(gr: &Grading, radical: &Subspace, levi: &Subspace) -> Result<()> {
    let alg = gr.algebra();
    if !alg.is_subalgebra(levi)? {
        return Err(Error::InvariantViolation("Levi candidate is not closed under the bracket".into()));
    }
    if !levi.intersection(radical)?.is_zero() || levi.dim() + radical.dim() != alg.dim() {
        return Err(Error::InvariantViolation("Levi candidate is not a complement of the radical".into()));
    }
    Ok(())
}

/// Description of an inconsistent correction system.
#[derive(Clone, Debug)]
pub(crate) struct StageFailure {
    pub stage: usize,
    pub unknowns: usize,
    pub equations: usize,
}

impl std::fmt::Display for StageFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "correction system at derived-series stage {} is inconsistent ({} equations, {} degree-preserving unknowns)",
            self.stage, self.equations, self.unknowns
        )
    }
}

pub(crate) fn levi_global(
    gr: &Grading,
    radical: &GradedSubspace,
) -> Result<std::result::Result<LeviResult, StageFailure>> {
    let alg = gr.algebra();
    let series = alg.derived_series_of(radical.total())?;
    let mut current = gr.expect_graded(&alg.full(), "L")?;
    let mut stages = 0;
    for (t, pair) in series.windows(2).enumerate() {
        let n = gr.expect_graded(&pair[0], "derived-series term of the radical")?;
        let np = gr.expect_graded(&pair[1], "derived-series term of the radical")?;
        match correction_stage(gr, &current, &n, &np, t)? {
            Ok(next) => current = next,
            Err(f) => return Ok(Err(f)),
        }
        stages += 1;
    }
    Ok(Ok(LeviResult {
        levi: current,
        path: LeviPath::Global,
        stages,
    }))
}

/// Fiberwise complement of `inner` in `outer`, as homogeneous vectors in degree order.
fn graded_complement(inner: &GradedSubspace, outer: &GradedSubspace) -> Result<Vec<(usize, Vector)>> {
    let mut out = Vec::new();
    for (&g, o) in outer.components() {
        let i = inner
            .component(g)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(o.ambient()));
        for v in i.complement_within(o)?.basis() {
            out.push((g, v.clone()));
        }
    }
    Ok(out)
}

/// One Whitehead correction: given a graded subalgebra `A` containing the
/// ideal `N` with `N' = [N, N]`, returns a graded subalgebra `A'` with
/// `A' ∩ N = N'` and `A' + N = A`.
fn correction_stage(
    gr: &Grading,
    a: &GradedSubspace,
    n: &GradedSubspace,
    np: &GradedSubspace,
    stage: usize,
) -> Result<std::result::Result<GradedSubspace, StageFailure>> {
    let alg = gr.algebra();
    let dim = alg.dim();
    let u = graded_complement(n, a)?;
    let w = graded_complement(np, n)?;
    let (nu, nw) = (u.len(), w.len());
    let basis: Vec<Vector> = u
        .iter()
        .map(|x| x.1.clone())
        .chain(w.iter().map(|x| x.1.clone()))
        .chain(np.total().basis().iter().cloned())
        .collect();
    let coords = BasisCoords::new(dim, basis)?;
    let coords_of = |v: &Vector| -> Result<Vector> {
        coords
            .coords(v)?
            .ok_or_else(|| Error::InvariantViolation("bracket leaves the current subalgebra".into()))
    };

    // X[a][m'] = W-coordinates of [u_a, w_m']
    let mut x: Vec<Vec<Vector>> = Vec::with_capacity(nu);
    for (_, ua) in &u {
        let mut row = Vec::with_capacity(nw);
        for (_, wm) in &w {
            let c = coords_of(&alg.bracket_unchecked(ua, wm))?;
            if c[..nu].iter().any(|s| !s.is_zero()) {
                return Err(Error::InvariantViolation("radical term is not an ideal of the current subalgebra".into()));
            }
            row.push(c[nu..nu + nw].to_vec());
        }
        x.push(row);
    }

    let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (c, (gu, _)) in u.iter().enumerate() {
        for (m, (gw, _)) in w.iter().enumerate() {
            if gu == gw {
                let k = unknown.len();
                unknown.insert((c, m), k);
            }
        }
    }

    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for ia in 0..nu {
        for ib in ia + 1..nu {
            let c = coords_of(&alg.bracket_unchecked(&u[ia].1, &u[ib].1))?;
            let (gamma, omega) = (&c[..nu], &c[nu..nu + nw]);
            for m in 0..nw {
                let mut row = vector::zero(unknown.len());
                for (cc, g) in gamma.iter().enumerate() {
                    if let (false, Some(&k)) = (g.is_zero(), unknown.get(&(cc, m))) {
                        row[k] += g;
                    }
                }
                for mp in 0..nw {
                    if let Some(&k) = unknown.get(&(ib, mp)) {
                        row[k] -= &x[ia][mp][m];
                    }
                    if let Some(&k) = unknown.get(&(ia, mp)) {
                        row[k] += &x[ib][mp][m];
                    }
                }
                if vector::is_zero(&row) && omega[m].is_zero() {
                    continue;
                }
                rows.push(row);
                rhs.push(omega[m].clone());
            }
        }
    }

    let solution = if rows.is_empty() {
        Some(vector::zero(unknown.len()))
    } else {
        Matrix::from_rows_with_cols(rows.clone(), unknown.len())?.solve(&rhs)?
    };
    let Some(rho) = solution else {
        return Ok(Err(StageFailure {
            stage,
            unknowns: unknown.len(),
            equations: rows.len(),
        }));
    };

    let mut corrected: Vec<Vector> = u.iter().map(|(_, v)| v.clone()).collect();
    for (&(c, m), &k) in &unknown {
        if !rho[k].is_zero() {
            let r = rho[k].clone();
            vector::axpy(&mut corrected[c], &r, &w[m].1);
        }
    }
    corrected.extend(np.total().basis().iter().cloned());
    let next = Subspace::span(dim, corrected)?;
    if !alg.is_subalgebra(&next)? {
        return Err(Error::InvariantViolation(format!(
            "corrected complement at stage {stage} is not a subalgebra"
        )));
    }
    Ok(Ok(gr.expect_graded(&next, "corrected complement")?))
}

/// Levi subalgebra assembled from the blocks of `L/R`: for each graded block
/// with support `S_i` and preimage `A_i`, take `C_i`, the subalgebra generated
/// by the components `(A_i)_g` with `g ∈ S_i`, and a homogeneous Levi subalgebra
/// of `C_i`, whose support is commutative.
pub(crate) fn levi_blockwise(gr: &Grading, radical: &GradedSubspace) -> Result<LeviResult> {
    let alg = gr.algebra();
    let dim = alg.dim();
    let r = radical.total();
    if r.is_full() {
        return Ok(LeviResult {
            levi: gr.expect_graded(&Subspace::zero(dim), "zero")?,
            path: LeviPath::Blockwise,
            stages: 0,
        });
    }
    let q = alg.quotient(r)?;
    let qdeg: Vec<usize> = q.complement.iter().map(|&c| gr.degree(c)).collect();
    let qgr = Grading::new(q.algebra.clone(), gr.group().clone(), qdeg)?;
    let (ideals, blocks) = graded_blocks(&qgr)?;
    let lift = |v: &Vector| -> Vector {
        let mut out = vector::zero(dim);
        for (k, &c) in q.complement.iter().enumerate() {
            out[c] = v[k].clone();
        }
        out
    };

    let mut levi = Subspace::zero(dim);
    let mut stages = 0;
    for block in &blocks {
        let bar = Subspace::sum_all(q.algebra.dim(), block.iter().map(|&i| &ideals[i]))?;
        let bar_graded = qgr.expect_graded(&bar, "graded block of L/R")?;
        let support = bar_graded.degrees();
        let preimage = Subspace::span(dim, bar.basis().iter().map(lift))?.sum(r)?;
        let pre_graded = gr.expect_graded(&preimage, "preimage of a graded block")?;
        let gens: Vec<Vector> = pre_graded
            .components()
            .iter()
            .filter(|(g, _)| support.contains(g))
            .flat_map(|(_, s)| s.basis().iter().cloned())
            .collect();
        let c = alg.subalgebra_generated(&gens)?;
        let c_graded = gr.expect_graded(&c, "subalgebra generated by block fibers")?;
        let (sub, rows) = gr.restrict(&c_graded)?;
        let sub_radical = super::radical_gradedness(&sub)?;
        let part = levi_global(&sub, &sub_radical)?
            .map_err(|f| Error::InvariantViolation(format!("blockwise Levi: {f}")))?;
        stages += part.stages;
        let vecs = part
            .levi
            .total()
            .basis()
            .iter()
            .map(|v| vector::combine(v, &rows, dim))
            .collect::<Vec<_>>();
        levi = levi.sum(&Subspace::span(dim, vecs)?)?;
    }
    let levi = gr.expect_graded(&levi, "sum of blockwise Levi subalgebras")?;
    check_levi(gr, r, levi.total())?;
    Ok(LeviResult {
        levi,
        path: LeviPath::Blockwise,
        stages,
    })
}
