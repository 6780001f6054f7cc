//! Free functions on coordinate vectors.

use num_traits::{One, Zero};

use super::{Scalar, Vector};

pub fn zero(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| if x.is_zero() { Scalar::zero() } else { x * s }).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Linear combination `Σ coeffs[k] · rows[k]`.
pub fn combine(coeffs: &[Scalar], rows: &[Vector], n: usize) -> Vector {
    let mut acc = zero(n);
    for (c, r) in coeffs.iter().zip(rows) {
        axpy(&mut acc, c, r);
    }
    acc
}

pub fn from_ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::int(x)).collect()
}

/// Index of the unit vector `v` if it is one.
pub fn as_unit(v: &[Scalar]) -> Option<usize> {
    let mut found = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if found.is_some() || !x.is_one_scalar() {
            return None;
        }
        found = Some(i);
    }
    found
}
