//! Lie algebras by structure constants.

mod classify;
mod decompose;
mod killing;
mod map;

use std::fmt;

use num_traits::Zero;

pub use classify::SplitType;
pub use decompose::rational_eigenvalues;
pub use map::LinearMap;

use crate::error::{Error, Result};
use crate::linalg::{vector, BasisCoords, Matrix, Scalar, Subspace, Vector};

/// A finite-dimensional Lie algebra over Q or some Q(ζ_n), given on a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `[b_i, b_j]` as sparse coordinates, row-major over `(i, j)`
    sparse: Vec<Vec<(usize, Scalar)>>,
}

/// A quotient `L / I` realized on the canonical coordinate complement of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// basis index in `L` of each quotient basis vector
    pub complement: Vec<usize>,
}

impl LieAlgebra {
    /// Builds from the full table: `table[i * n + j]` are the coordinates of `[b_i, b_j]`.
    pub fn new(names: Vec<String>, table: Vec<Vector>) -> Result<Self> {
        let n = names.len();
        if table.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: table.len(),
            });
        }
        let mut sparse = Vec::with_capacity(n * n);
        for v in table {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            sparse.push(to_sparse(v));
        }
        let alg = LieAlgebra { names, sparse };
        alg.validate()?;
        Ok(alg)
    }

    /// Builds from brackets `[b_i, b_j] = v` with `i < j`; other pairs follow by antisymmetry
    /// and omitted pairs are zero.
    pub fn from_brackets(names: Vec<String>, brackets: impl IntoIterator<Item = (usize, usize, Vector)>) -> Result<Self> {
        let n = names.len();
        let mut table = vec![vector::zero(n); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, v) in brackets {
            if i >= j || j >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket entries need left < right < dim, got ({i}, {j})"
                )));
            }
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) given twice")));
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            table[j * n + i] = v.iter().map(|x| -x).collect();
            table[i * n + j] = v;
        }
        Self::new(names, table)
    }

    /// The linear span of the given square matrices, closed under commutators.
    pub fn from_matrices(names: Vec<String>, mats: &[Matrix]) -> Result<Self> {
        let Some(first) = mats.first() else {
            return Self::new(names, Vec::new());
        };
        let size = first.rows();
        let flat: Vec<Vector> = mats.iter().map(|m| m.entries().to_vec()).collect();
        let coords = BasisCoords::new(size * size, flat)?;
        let n = mats.len();
        let mut table = Vec::with_capacity(n * n);
        for a in mats {
            for b in mats {
                let c = a.mul(b)?.sub(&b.mul(a)?)?;
                let v = coords
                    .coords(c.entries())?
                    .ok_or_else(|| Error::InvalidAlgebra("matrix span is not closed under commutators".into()))?;
                table.push(v);
            }
        }
        Self::new(names, table)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            if !self.sparse[i * n + i].is_empty() {
                return Err(Error::InvalidAlgebra(format!("[{0}, {0}] ≠ 0", self.names[i])));
            }
            for j in i + 1..n {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if vector::add(&a, &b).iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidAlgebra(format!(
                        "antisymmetry fails on ({}, {})",
                        self.names[i], self.names[j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.basis_bracket(i, j);
                for k in j + 1..n {
                    let jk = self.basis_bracket(j, k);
                    let ki = self.basis_bracket(k, i);
                    let mut s = self.bracket_unchecked(&ij, &vector::unit(n, k));
                    vector::axpy(&mut s, &Scalar::int(1), &self.bracket_unchecked(&jk, &vector::unit(n, i)));
                    vector::axpy(&mut s, &Scalar::int(1), &self.bracket_unchecked(&ki, &vector::unit(n, j)));
                    if !vector::is_zero(&s) {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    /// Nonzero coordinates of `[b_i, b_j]`.
    pub fn basis_bracket_sparse(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i * self.dim() + j]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let mut v = vector::zero(self.dim());
        for (k, c) in self.basis_bracket_sparse(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Whether every structure constant is rational.
    pub fn is_rational(&self) -> bool {
        self.sparse.iter().flatten().all(|(_, c)| c.is_rational())
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vector::zero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = self.sparse[i * n + j].as_slice();
                if s.is_empty() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in s {
                    out[*k] += &(&f * c);
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn check_vec(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        Ok(())
    }

    /// Left-normed product `[x1, …, xn] = [[x1, …, x(n-1)], xn]`.
    pub fn left_normed(&self, xs: &[Vector]) -> Result<Vector> {
        let (first, rest) = xs
            .split_first()
            .ok_or_else(|| Error::Precondition("left-normed product of an empty list".into()))?;
        self.check_vec(first)?;
        let mut acc = first.clone();
        for x in rest {
            self.check_vec(x)?;
            acc = self.bracket_unchecked(&acc, x);
        }
        Ok(acc)
    }

    /// Matrix of `ad x`: column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vec(x)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_unchecked(x, &vector::unit(n, j))).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.basis_bracket_sparse(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// `[V, W]`.
    pub fn product_subspace(&self, v: &Subspace, w: &Subspace) -> Result<Subspace> {
        self.check_subspace(v)?;
        self.check_subspace(w)?;
        let mut out = Subspace::zero(self.dim());
        let mut pending = Vec::new();
        for a in v.basis() {
            for b in w.basis() {
                let c = self.bracket_unchecked(a, b);
                if !vector::is_zero(&c) {
                    pending.push(c);
                }
            }
            if pending.len() > 4 * self.dim() {
                out = out.sum(&Subspace::span(self.dim(), std::mem::take(&mut pending))?)?;
            }
        }
        out.sum(&Subspace::span(self.dim(), pending)?)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Smallest subspace containing `seed` and closed under `v ↦ [v, b]` for every `b` in `multipliers`.
    fn spin(&self, seed: &[Vector], multipliers: &[Vector]) -> Result<Subspace> {
        let n = self.dim();
        let mut span = Subspace::zero(n);
        let mut queue: Vec<Vector> = Vec::new();
        for s in seed {
            self.check_vec(s)?;
            let r = span.reduce(s);
            if !vector::is_zero(&r) {
                span = span.sum(&Subspace::span(n, [r.clone()])?)?;
                queue.push(r);
            }
        }
        while let Some(v) = queue.pop() {
            for m in multipliers {
                let w = self.bracket_unchecked(&v, m);
                let r = span.reduce(&w);
                if !vector::is_zero(&r) {
                    span = span.sum(&Subspace::span(n, [r.clone()])?)?;
                    queue.push(r);
                }
            }
        }
        Ok(span)
    }

    /// Ideal generated by `seed`, by spinning with all basis vectors.
    pub fn ideal_generated(&self, seed: &[Vector]) -> Result<Subspace> {
        let n = self.dim();
        let basis: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
        self.spin(seed, &basis)
    }

    /// Subalgebra generated by `seed`.
    pub fn subalgebra_generated(&self, seed: &[Vector]) -> Result<Subspace> {
        let n = self.dim();
        let mut current = Subspace::span(n, seed.iter().cloned())?;
        loop {
            let next = current.sum(&self.product_subspace(&current, &current)?)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `{x : [x, s] = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        if s.is_zero() {
            return Ok(self.full());
        }
        let mut rows = Vec::with_capacity(s.dim() * n);
        for v in s.basis() {
            rows.extend(self.ad(v)?.to_rows());
        }
        let m = Matrix::from_rows_with_cols(rows, n)?;
        Subspace::span(n, m.kernel())
    }

    pub fn center(&self) -> Result<Subspace> {
        self.centralizer(&self.full())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        s.contains_subspace(&self.product_subspace(s, s)?)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        s.contains_subspace(&self.product_subspace(s, &self.full())?)
    }

    /// Derived series of a subalgebra `S`: `S ⊇ [S,S] ⊇ …`, ending at the first repeated term.
    pub fn derived_series_of(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.product_subspace(last, last)?;
            if next == *last {
                return Ok(series);
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn derived_series(&self) -> Result<Vec<Subspace>> {
        self.derived_series_of(&self.full())
    }

    /// `L ⊇ [L,L] ⊇ [[L,L],L] ⊇ …`, ending at the first repeated term.
    pub fn lower_central_series_of(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.product_subspace(last, s)?;
            if next == *last {
                return Ok(series);
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn lower_central_series(&self) -> Result<Vec<Subspace>> {
        self.lower_central_series_of(&self.full())
    }

    pub fn is_solvable_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(self.derived_series_of(s)?.last().unwrap().is_zero())
    }

    pub fn is_solvable(&self) -> Result<bool> {
        self.is_solvable_subalgebra(&self.full())
    }

    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(self.lower_central_series_of(s)?.last().unwrap().is_zero())
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        self.is_nilpotent_subalgebra(&self.full())
    }

    /// Structure constants on the given independent vectors, which must span a subalgebra.
    pub fn subalgebra_on_basis(&self, rows: &[Vector]) -> Result<LieAlgebra> {
        let n = self.dim();
        let coords = BasisCoords::new(n, rows.to_vec())?;
        let d = rows.len();
        let mut table = Vec::with_capacity(d * d);
        for a in rows {
            for b in rows {
                let c = self.bracket_unchecked(a, b);
                let v = coords
                    .coords(&c)?
                    .ok_or_else(|| Error::Precondition("vectors do not span a subalgebra".into()))?;
                table.push(v);
            }
        }
        let names = rows
            .iter()
            .enumerate()
            .map(|(k, r)| match vector::as_unit(r) {
                Some(i) => self.names[i].clone(),
                None => format!("u{k}"),
            })
            .collect();
        LieAlgebra::new(names, table)
    }

    /// The subalgebra `S` on its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.check_subspace(s)?;
        self.subalgebra_on_basis(s.basis())
    }

    /// The same algebra on the basis given by the rows of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        if p.rows() != self.dim() || p.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: p.rows(),
            });
        }
        self.subalgebra_on_basis(&p.to_rows())
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_subspace(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::Precondition("quotient by a subspace that is not an ideal".into()));
        }
        let complement: Vec<usize> = ideal.complement().pivots().to_vec();
        let d = complement.len();
        let mut table = Vec::with_capacity(d * d);
        for &a in &complement {
            for &b in &complement {
                let r = ideal.reduce(&self.basis_bracket(a, b));
                table.push(complement.iter().map(|&c| r[c].clone()).collect());
            }
        }
        let names = complement.iter().map(|&c| self.names[c].clone()).collect();
        Ok(Quotient {
            algebra: LieAlgebra::new(names, table)?,
            complement,
        })
    }

    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra> {
        let (na, nb) = (a.dim(), b.dim());
        let n = na + nb;
        let mut table = vec![vector::zero(n); n * n];
        for i in 0..na {
            for j in 0..na {
                for (k, c) in a.basis_bracket_sparse(i, j) {
                    table[i * n + j][*k] = c.clone();
                }
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                for (k, c) in b.basis_bracket_sparse(i, j) {
                    table[(na + i) * n + na + j][na + k] = c.clone();
                }
            }
        }
        let names = a.names.iter().chain(&b.names).cloned().collect();
        LieAlgebra::new(names, table)
    }

    /// The full table, row-major over `(i, j)`.
    pub fn table(&self) -> Vec<Vector> {
        let n = self.dim();
        (0..n * n).map(|ij| self.basis_bracket(ij / n, ij % n)).collect()
    }
}

fn to_sparse(v: Vector) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Lie algebra of dimension {} on basis ({})", self.dim(), self.names.join(", "))?;
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let s = self.basis_bracket_sparse(i, j);
                if s.is_empty() {
                    continue;
                }
                let terms: Vec<String> = s.iter().map(|(k, c)| format!("{c}*{}", self.names[*k])).collect();
                writeln!(f, "  [{}, {}] = {}", self.names[i], self.names[j], terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
