use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::cyclotomic::{Cyclotomic, DEFAULT_ORDER_BOUND};
use super::Rational;
use crate::error::{Error, Result};

/// An exact scalar: a rational number or an element of some Q(ζ_n).
///
/// The `Cyc` variant never holds a rational value; constructors fold those
/// back into `Rat`, so a rational has exactly one representation.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Cyclotomic),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(n.into(), d.into()))
    }

    /// ζ_n^k.
    pub fn root_of_unity(order: u64, k: u64) -> Self {
        Scalar::from(Cyclotomic::root_of_unity(order, k))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(_) => None,
        }
    }

    /// Order of the smallest cyclotomic field this representation lives in (1 for Q).
    pub fn field_order(&self) -> u64 {
        match self {
            Scalar::Rat(_) => 1,
            Scalar::Cyc(c) => c.order(),
        }
    }

    /// Representation as an element of Q(ζ_order).
    pub fn to_cyclotomic(&self, order: u64) -> Result<Cyclotomic> {
        match self {
            Scalar::Rat(r) => Ok(Cyclotomic::from_rational(order, r.clone())),
            Scalar::Cyc(c) => c.embed(order),
        }
    }

    pub fn try_add_bounded(&self, other: &Scalar, bound: u64) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Rat(a)) => {
                Scalar::from(c.add_bounded(&Cyclotomic::from_rational(c.order(), a.clone()), bound)?)
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::from(a.add_bounded(b, bound)?),
        })
    }

    pub fn try_mul_bounded(&self, other: &Scalar, bound: u64) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Cyc(c.scale(a))
                }
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::from(a.mul_bounded(b, bound)?),
        })
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add_bounded(other, DEFAULT_ORDER_BOUND)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul_bounded(other, DEFAULT_ORDER_BOUND)
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Cyc(c) => Ok(Scalar::from(c.inv()?)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero")
    }
}

impl From<Cyclotomic> for Scalar {
    fn from(c: Cyclotomic) -> Self {
        match c.as_rational() {
            Some(r) => Scalar::Rat(r),
            None => Scalar::Cyc(c),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Cyc(a), Scalar::Cyc(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs).expect(concat!("scalar ", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

impl Scalar {
    fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other)
    }
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(_) => false,
        }
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rat(Rational::one())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "({c})"),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
    Ok(r)
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Scalar::Rat)
    }
}

// Wire format: rationals as "p/q" or "p"; cyclotomics as {"order": n, "coeffs": ["p/q", ...]}.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(r) => serializer.serialize_str(&r.to_string()),
            Scalar::Cyc(c) => {
                let coeffs: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
                let mut st = serializer.serialize_struct("Cyclotomic", 2)?;
                st.serialize_field("order", &c.order())?;
                st.serialize_field("coeffs", &coeffs)?;
                st.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Str(String),
    Int(i64),
    Cyc { order: u64, coeffs: Vec<String> },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Str(s) => parse_rational(&s).map(Scalar::Rat).map_err(de::Error::custom),
            ScalarRepr::Int(n) => Ok(Scalar::int(n)),
            ScalarRepr::Cyc { order, coeffs } => {
                if order == 0 {
                    return Err(de::Error::custom("cyclotomic order must be positive"));
                }
                if order > DEFAULT_ORDER_BOUND {
                    return Err(de::Error::custom(format!(
                        "cyclotomic order {order} exceeds {DEFAULT_ORDER_BOUND}"
                    )));
                }
                let coeffs = coeffs
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
                    .map_err(de::Error::custom)?;
                Ok(Scalar::from(Cyclotomic::new(order, coeffs)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        assert_eq!(Scalar::frac(1, 2) + Scalar::frac(1, 3), Scalar::frac(5, 6));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = Scalar::root_of_unity(4, 1);
        let sq = &i * &i;
        assert_eq!(sq, Scalar::int(-1));
        assert!(sq.is_rational());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(Scalar::zero().try_inv(), Err(Error::DivisionByZero));
        assert!(Scalar::int(3).try_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn mixed_orders_embed_into_lcm() {
        let s = Scalar::root_of_unity(4, 1) + Scalar::root_of_unity(3, 1);
        assert_eq!(s.field_order(), 12);
        let big = Scalar::root_of_unity(101, 1).try_mul(&Scalar::root_of_unity(103, 1));
        assert!(matches!(big, Err(Error::OrderBound { .. })));
    }

    #[test]
    fn serde_shapes() {
        let v: Vec<Scalar> = serde_json::from_str(r#"["1/2", "-3", 4, {"order": 4, "coeffs": ["0", "1"]}]"#).unwrap();
        assert_eq!(v[0], Scalar::frac(1, 2));
        assert_eq!(v[1], Scalar::int(-3));
        assert_eq!(v[2], Scalar::int(4));
        assert_eq!(v[3], Scalar::root_of_unity(4, 1));
        let out = serde_json::to_string(&v).unwrap();
        assert_eq!(out, r#"["1/2","-3","4",{"order":4,"coeffs":["0","1"]}]"#);
        // a cyclotomic literal that happens to be rational normalizes to a string
        let r: Scalar = serde_json::from_str(r#"{"order": 3, "coeffs": ["2", "0"]}"#).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#""2""#);
        assert!(serde_json::from_str::<Scalar>(r#""1/0""#).is_err());
    }
}
