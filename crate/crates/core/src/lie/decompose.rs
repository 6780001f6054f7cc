use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Rational, Scalar, Subspace, Vector};

/// Above this size the constant term is not factored by trial division.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 40;

/// Minimal polynomial of a square matrix, monic, coefficients low degree first.
pub(crate) fn minimal_polynomial(m: &Matrix) -> Result<Vec<Scalar>> {
    let n = m.rows();
    let mut powers: Vec<Vector> = vec![Matrix::identity(n).entries().to_vec()];
    let mut cur = Matrix::identity(n);
    loop {
        cur = cur.mul(m)?;
        let target = cur.entries().to_vec();
        let sys = Matrix::from_columns(&powers, n * n)?;
        if let Some(c) = sys.solve(&target)? {
            let mut p: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            p.push(Scalar::one());
            return Ok(p);
        }
        powers.push(target);
    }
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Synthetic division by `(x - r)`.
fn deflate(p: &[Rational], r: &Rational) -> Vec<Rational> {
    let d = p.len() - 1;
    let mut q = vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for k in (0..d).rev() {
        carry = &p[k + 1] + carry * r;
        q[k] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > TRIAL_DIVISION_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational roots of a polynomial with rational coefficients (low degree first),
/// with multiplicity. `None` when the integer coefficients are too large to factor.
fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let mut p = p.to_vec();
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Rational::zero());
        p.remove(0);
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let num = divisors(&ints[0])?;
    let den = divisors(ints.last().unwrap())?;
    let mut candidates: Vec<Rational> = Vec::new();
    for a in &num {
        for b in &den {
            let r = Rational::new(a.clone(), b.clone());
            for s in [r.clone(), -r] {
                if !candidates.contains(&s) {
                    candidates.push(s);
                }
            }
        }
    }
    candidates.sort();
    for c in candidates {
        while p.len() > 1 && eval(&p, &c).is_zero() {
            p = deflate(&p, &c);
            roots.push(c.clone());
        }
    }
    // any factor left in `p` has no rational roots; callers compare counts with the degree
    roots.sort();
    Some(roots)
}

/// Distinct eigenvalues of a rational matrix, if it is diagonalizable over Q.
///
/// Returns `Ok(None)` when the minimal polynomial has a repeated root, an
/// irrational root, or the matrix has non-rational entries.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Option<Vec<Rational>>> {
    if !m.is_rational() {
        return Ok(None);
    }
    let p = minimal_polynomial(m)?;
    let coeffs: Vec<Rational> = p.iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let degree = coeffs.len() - 1;
    let Some(roots) = rational_roots(&coeffs) else {
        return Ok(None);
    };
    let mut distinct = roots.clone();
    distinct.dedup();
    if roots.len() != degree || distinct.len() != degree {
        return Ok(None);
    }
    Ok(Some(distinct))
}

/// Eigenspaces of a diagonalizable rational matrix, by increasing eigenvalue.
pub(crate) fn eigenspaces(m: &Matrix) -> Result<Option<Vec<(Rational, Subspace)>>> {
    let Some(vals) = rational_eigenvalues(m)? else {
        return Ok(None);
    };
    let n = m.rows();
    let mut out = Vec::with_capacity(vals.len());
    for v in vals {
        let shifted = m.sub(&Matrix::identity(n).scale(&Scalar::Rat(v.clone())))?;
        out.push((v, Subspace::span(n, shifted.kernel())?));
    }
    Ok(Some(out))
}

impl LieAlgebra {
    /// A small set of basis vectors generating the algebra.
    pub fn generating_set(&self) -> Result<Vec<usize>> {
        let n = self.dim();
        let mut chosen = Vec::new();
        let mut generated = Subspace::zero(n);
        for i in 0..n {
            if generated.contains(&vector::unit(n, i))? {
                continue;
            }
            chosen.push(i);
            let seed: Vec<Vector> = chosen.iter().map(|&k| vector::unit(n, k)).collect();
            generated = self.subalgebra_generated(&seed)?;
            if generated.is_full() {
                break;
            }
        }
        Ok(chosen)
    }

    /// Basis of the centroid `{φ : φ ad y = ad y φ for all y}`, as matrices.
    pub fn centroid(&self) -> Result<Vec<Matrix>> {
        let n = self.dim();
        let gens = self.generating_set()?;
        let mut rows: Vec<Vector> = Vec::new();
        for g in gens {
            let a = self.ad_basis(g);
            // (X A - A X)_{ij} = Σ_k X_ik A_kj - A_ik X_kj, unknown X_pq at index p*n + q
            for i in 0..n {
                for j in 0..n {
                    let mut row = vector::zero(n * n);
                    for k in 0..n {
                        let akj = a.get(k, j);
                        if !akj.is_zero() {
                            row[i * n + k] += akj;
                        }
                        let aik = a.get(i, k);
                        if !aik.is_zero() {
                            row[k * n + j] -= aik;
                        }
                    }
                    if !vector::is_zero(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let sys = Matrix::from_rows_with_cols(rows, n * n)?;
        sys.kernel()
            .into_iter()
            .map(|k| Matrix::from_rows_with_cols(k.chunks(n).map(|c| c.to_vec()).collect(), n))
            .collect()
    }

    /// Simple ideals of a semisimple algebra, ordered by first pivot.
    ///
    /// The joint eigenspaces of the centroid are the simple ideals; when some
    /// centroid element is not diagonalizable over Q the algebra has a simple
    /// ideal that is not absolutely simple and `Error::NonSplit` is returned.
    pub fn simple_decomposition(&self) -> Result<Vec<Subspace>> {
        let n = self.dim();
        if n == 0 {
            return Ok(Vec::new());
        }
        if !self.is_semisimple()? {
            return Err(Error::Precondition("simple decomposition needs a semisimple algebra".into()));
        }
        let mut pieces = vec![self.full()];
        for c in self.centroid()? {
            let spaces = eigenspaces(&c)?.ok_or_else(|| {
                Error::NonSplit("centroid element is not diagonalizable over Q".into())
            })?;
            let mut next = Vec::new();
            for p in &pieces {
                for (_, e) in &spaces {
                    let x = p.intersection(e)?;
                    if !x.is_zero() {
                        next.push(x);
                    }
                }
            }
            pieces = next;
        }
        pieces.sort_by_key(|p| p.pivots()[0]);
        let total: usize = pieces.iter().map(|p| p.dim()).sum();
        if total != n {
            return Err(Error::InvariantViolation(format!(
                "centroid eigenspaces have total dimension {total}, expected {n}"
            )));
        }
        for (a, p) in pieces.iter().enumerate() {
            if !self.is_ideal(p)? {
                return Err(Error::InvariantViolation("centroid eigenspace is not an ideal".into()));
            }
            for q in &pieces[a + 1..] {
                if !self.product_subspace(p, q)?.is_zero() {
                    return Err(Error::InvariantViolation("distinct simple ideals do not commute".into()));
                }
            }
        }
        Ok(pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn roots_of_split_polynomial() {
        // (x - 2)(x + 1/2) x = x^3 - 3/2 x^2 - x
        let p = vec![q(0), q(-1), Rational::new((-3).into(), 2.into()), q(1)];
        let r = rational_roots(&p).unwrap();
        assert_eq!(r, vec![Rational::new((-1).into(), 2.into()), q(0), q(2)]);
    }

    #[test]
    fn eigenvalues_of_diagonalizable_and_defective() {
        let d = Matrix::from_int_rows(&[&[2, 0], &[0, -3]]);
        assert_eq!(rational_eigenvalues(&d).unwrap(), Some(vec![q(-3), q(2)]));
        let j = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(rational_eigenvalues(&j).unwrap(), None);
        let rot = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(rational_eigenvalues(&rot).unwrap(), None);
    }
}
