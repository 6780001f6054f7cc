use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Matrix, Scalar, Vector};

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Scalar::int(1));
    m
}

/// Standard basis of sl_n: `E_ij` (i ≠ j) in row-major order, then `H_i = E_ii − E_{i+1,i+1}`.
pub fn sl_matrices(n: usize) -> Result<(Vec<String>, Vec<Matrix>)> {
    if n < 2 {
        return Err(Error::Precondition(format!("sl_n needs n ≥ 2, got {n}")));
    }
    if n == 2 {
        let h = unit_matrix(2, 0, 0).sub(&unit_matrix(2, 1, 1))?;
        return Ok((
            vec!["e".into(), "f".into(), "h".into()],
            vec![unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), h],
        ));
    }
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(format!("e{}{}", i + 1, j + 1));
                mats.push(unit_matrix(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        names.push(format!("h{}", i + 1));
        mats.push(unit_matrix(n, i, i).sub(&unit_matrix(n, i + 1, i + 1))?);
    }
    Ok((names, mats))
}

pub fn sl_n(n: usize) -> Result<LieAlgebra> {
    let (names, mats) = sl_matrices(n)?;
    LieAlgebra::from_matrices(names, &mats)
}

/// Split so_n as `{X : Xᵀ J + J X = 0}` with `J` the anti-diagonal; only n = 5.
///
/// Basis vectors are named `x{i}{j}` after their first nonzero matrix entry,
/// and each is a signed sum of at most two matrix units.
pub fn so_n(n: usize) -> Result<(LieAlgebra, Vec<Matrix>)> {
    if n != 5 {
        return Err(Error::Precondition(format!("so_n is provided for n = 5 only, got {n}")));
    }
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            // (Xᵀ J + J X)_{ab} = X_{n-1-a, b} + X_{n-1-b, a}
            let mut row = vector::zero(n * n);
            row[(n - 1 - a) * n + b] += &Scalar::int(1);
            row[(n - 1 - b) * n + a] += &Scalar::int(1);
            rows.push(row);
        }
    }
    let kernel = Matrix::from_rows_with_cols(rows, n * n)?.kernel();
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for k in kernel {
        let first = k.iter().position(|c| *c != Scalar::int(0)).unwrap();
        names.push(format!("x{}{}", first / n + 1, first % n + 1));
        mats.push(Matrix::from_rows_with_cols(k.chunks(n).map(|c| c.to_vec()).collect(), n)?);
    }
    Ok((LieAlgebra::from_matrices(names, &mats)?, mats))
}

pub fn abelian(n: usize) -> Result<LieAlgebra> {
    LieAlgebra::from_brackets((0..n).map(|i| format!("a{i}")).collect(), [])
}

/// `[x, y] = y`.
pub fn two_dim_solvable() -> Result<LieAlgebra> {
    LieAlgebra::from_brackets(vec!["x".into(), "y".into()], [(0, 1, vector::from_ints(&[0, 1]))])
}

/// `B ⋉ V` for a representation given by one matrix per basis vector of `B`.
/// The representation law `ρ[b_i, b_j] = [ρ b_i, ρ b_j]` is checked first.
pub fn semidirect(b: &LieAlgebra, rep: &[Matrix], module_names: &[String]) -> Result<LieAlgebra> {
    let nb = b.dim();
    if rep.len() != nb {
        return Err(Error::DimensionMismatch {
            expected: nb,
            found: rep.len(),
        });
    }
    let m = module_names.len();
    if rep.iter().any(|r| r.rows() != m || r.cols() != m) {
        return Err(Error::Precondition("representation matrices must be square of module dimension".into()));
    }
    for i in 0..nb {
        for j in i + 1..nb {
            let lhs = rep[i].mul(&rep[j])?.sub(&rep[j].mul(&rep[i])?)?;
            let mut rhs = Matrix::zeros(m, m);
            for (k, c) in b.basis_bracket_sparse(i, j) {
                rhs = rhs.add(&rep[*k].scale(c))?;
            }
            if lhs != rhs {
                return Err(Error::Precondition(format!(
                    "not a representation: fails on ({}, {})",
                    b.name(i),
                    b.name(j)
                )));
            }
        }
    }
    let n = nb + m;
    let mut brackets: Vec<(usize, usize, Vector)> = Vec::new();
    for i in 0..nb {
        for j in i + 1..nb {
            let mut v = vector::zero(n);
            for (k, c) in b.basis_bracket_sparse(i, j) {
                v[*k] = c.clone();
            }
            brackets.push((i, j, v));
        }
        for a in 0..m {
            let mut v = vector::zero(n);
            for (r, c) in rep[i].column(a).into_iter().enumerate() {
                v[nb + r] = c;
            }
            if !vector::is_zero(&v) {
                brackets.push((i, nb + a, v));
            }
        }
    }
    let names = b.names().iter().chain(module_names).cloned().collect();
    LieAlgebra::from_brackets(names, brackets)
}

/// Block-diagonal sum of two representations.
pub fn rep_sum(a: &[Matrix], b: &[Matrix]) -> Result<Vec<Matrix>> {
    let ma = a.first().map_or(0, Matrix::rows);
    let mb = b.first().map_or(0, Matrix::rows);
    let block = |m: &Matrix, off: usize| {
        let mut out = Matrix::zeros(ma + mb, ma + mb);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(off + i, off + j, m.get(i, j).clone());
            }
        }
        out
    };
    Ok(a.iter().map(|m| block(m, 0)).chain(b.iter().map(|m| block(m, ma))).collect())
}

/// sl2 ⋉ (V ⊕ Qz) with V natural and `[v1, v2] = z` central: the Heisenberg radical.
pub fn sl2_heisenberg() -> Result<LieAlgebra> {
    let names = ["e", "f", "h", "v1", "v2", "z"].map(String::from).to_vec();
    let v = |xs: &[i64]| vector::from_ints(xs);
    LieAlgebra::from_brackets(
        names,
        [
            (0, 1, v(&[0, 0, 1, 0, 0, 0])),
            (0, 2, v(&[-2, 0, 0, 0, 0, 0])),
            (1, 2, v(&[0, 2, 0, 0, 0, 0])),
            (0, 4, v(&[0, 0, 0, 1, 0, 0])),
            (1, 3, v(&[0, 0, 0, 0, 1, 0])),
            (2, 3, v(&[0, 0, 0, 1, 0, 0])),
            (2, 4, v(&[0, 0, 0, 0, -1, 0])),
            (3, 4, v(&[0, 0, 0, 0, 0, 1])),
        ],
    )
}
