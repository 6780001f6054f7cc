//! Elements of the cyclotomic field Q(ζ_n), stored as residues modulo the
//! n-th cyclotomic polynomial Φ_n in the power basis 1, ζ, …, ζ^(φ(n)-1).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Default cap on the order of the field that mixed-order operations may embed into.
pub const DEFAULT_ORDER_BOUND: u64 = 10_000;

static PHI_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of Φ_n, lowest degree first. Cached per order.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let cache = PHI_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("phi cache poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = div_monic(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cache
        .write()
        .expect("phi cache poisoned")
        .insert(n, p.clone());
    p
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        q[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Reduces a polynomial in place modulo the monic Φ_n, leaving `deg` coefficients.
fn reduce(mut poly: Vec<Rational>, order: u64) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[k], Rational::zero());
            for (i, &p) in phi.iter().enumerate().take(deg) {
                if p != 0 {
                    poly[k - deg + i] -= &c * Rational::from_integer(p.into());
                }
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds the residue of `Σ coeffs[k] ζ_n^k`; `coeffs` may have any length.
    pub fn new(order: u64, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Cyclotomic {
            order,
            coeffs: reduce(coeffs, order),
        }
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        Self::new(order, vec![value])
    }

    /// ζ_n^k.
    pub fn root_of_unity(order: u64, k: u64) -> Self {
        let k = (k % order) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Embeds into Q(ζ_target); requires `order | target`.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if target % self.order != 0 {
            return Err(Error::Precondition(format!(
                "cannot embed Q(ζ_{}) into Q(ζ_{})",
                self.order, target
            )));
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Ok(Self::new(target, poly))
    }

    fn common_order(a: u64, b: u64, bound: u64) -> Result<u64> {
        let l = a.lcm(&b);
        if l > bound {
            return Err(Error::OrderBound { order: l, bound });
        }
        Ok(l)
    }

    /// Brings both operands into a common field.
    pub fn align(&self, other: &Self, bound: u64) -> Result<(Self, Self)> {
        if self.order == other.order {
            return Ok((self.clone(), other.clone()));
        }
        let l = Self::common_order(self.order, other.order, bound)?;
        Ok((self.embed(l)?, other.embed(l)?))
    }

    pub fn add_bounded(&self, other: &Self, bound: u64) -> Result<Self> {
        if self.order == other.order {
            return Ok(self.add_same(other));
        }
        let (a, b) = self.align(other, bound)?;
        Ok(a.add_same(&b))
    }

    pub fn mul_bounded(&self, other: &Self, bound: u64) -> Result<Self> {
        if self.order == other.order {
            return Ok(self.mul_same(other));
        }
        let (a, b) = self.align(other, bound)?;
        Ok(a.mul_same(&b))
    }

    fn add_same(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            order: self.order,
            coeffs,
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::new(self.order, prod)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, by solving the multiplication-by-self system.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.coeffs.len();
        // column j of the multiplication matrix is self·ζ^j
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            cols.push(self.mul_same(&Self::root_of_unity(self.order, j as u64)).coeffs);
        }
        let mut aug: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        // Gauss-Jordan; the system is nonsingular because Q(ζ_n) is a field.
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or_else(|| Error::InvariantViolation("singular cyclotomic multiplication".into()))?;
            aug.swap(col, piv);
            let p = aug[col][col].clone();
            for v in aug[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..d {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=d {
                        let delta = &f * &aug[col][c];
                        aug[r][c] -= delta;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            order: self.order,
            coeffs: aug.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order.lcm(&other.order);
        match (self.embed(l), other.embed(l)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z{}", self.order)?,
                _ => write!(f, "{c}*z{}^{k}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..60 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn one_plus_zeta3_plus_zeta3_squared_vanishes() {
        // x^2 = -x - 1 mod x^2 + x + 1, so 1 + x + x^2 reduces to 0
        let s = Cyclotomic::new(3, vec![q(1, 1), q(1, 1), q(1, 1)]);
        assert!(s.is_zero());
    }

    #[test]
    fn i_squared() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.mul_same(&i).as_rational(), Some(q(-1, 1)));
    }

    #[test]
    fn inverse_and_embedding() {
        let a = Cyclotomic::new(5, vec![q(1, 2), q(-3, 1), q(0, 1), q(2, 7)]);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul_same(&inv).as_rational(), Some(q(1, 1)));
        // ζ_3 = ζ_6^2 and ζ_4 · ζ_3 = ζ_12^7
        assert_eq!(Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(6, 2));
        let p = Cyclotomic::root_of_unity(4, 1)
            .mul_bounded(&Cyclotomic::root_of_unity(3, 1), DEFAULT_ORDER_BOUND)
            .unwrap();
        assert_eq!(p, Cyclotomic::root_of_unity(12, 7));
        assert!(matches!(
            Cyclotomic::root_of_unity(101, 1).mul_bounded(&Cyclotomic::root_of_unity(103, 1), 10_000),
            Err(Error::OrderBound { order: 10403, .. })
        ));
    }
}
