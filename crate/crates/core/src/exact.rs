//! Exact scalar values for incidence functions.
//!
//! [`Exact`] is a rational number that stays on a machine-word path while
//! values are small integers and promotes to an arbitrary-precision fraction
//! on overflow or division. Values are kept canonical: anything that is an
//! integer fitting in `i64` is always stored as [`Exact::Small`], so derived
//! equality and hashing agree with numeric equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exact {
    Small(i64),
    /// Never an integer that fits in `i64`.
    Big(BigRational),
}

impl Exact {
    pub const ZERO: Exact = Exact::Small(0);
    pub const ONE: Exact = Exact::Small(1);

    fn from_ratio(r: BigRational) -> Self {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Exact::Small(v);
            }
        }
        Exact::Big(r)
    }

    fn to_ratio(&self) -> BigRational {
        match self {
            Exact::Small(v) => BigRational::from_integer(BigInt::from(*v)),
            Exact::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exact::Small(0))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Exact::Small(_) => true,
            Exact::Big(r) => r.is_integer(),
        }
    }

    /// Integer value, if the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Exact::Small(v) => Some(BigInt::from(*v)),
            Exact::Big(r) if r.is_integer() => Some(r.numer().clone()),
            Exact::Big(_) => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Exact::Small(v) => Some(*v),
            Exact::Big(_) => None,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Exact> {
        match self {
            Exact::Small(0) => None,
            Exact::Small(1) => Some(Exact::ONE),
            Exact::Small(-1) => Some(Exact::Small(-1)),
            other => Some(Exact::from_ratio(other.to_ratio().recip())),
        }
    }

    pub fn checked_div(&self, rhs: &Exact) -> Option<Exact> {
        rhs.recip().map(|inv| self * &inv)
    }

    pub fn pow(&self, exp: u32) -> Exact {
        (0..exp).fold(Exact::ONE, |acc, _| &acc * self)
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Exact::Small(v) => *v < 0,
            Exact::Big(r) => r.is_negative(),
        }
    }
}

impl Default for Exact {
    fn default() -> Self {
        Exact::ZERO
    }
}

impl From<i64> for Exact {
    fn from(v: i64) -> Self {
        Exact::Small(v)
    }
}

impl From<i32> for Exact {
    fn from(v: i32) -> Self {
        Exact::Small(v as i64)
    }
}

impl From<u64> for Exact {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(v) => Exact::Small(v),
            Err(_) => Exact::from(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Exact {
    fn from(v: BigInt) -> Self {
        match v.to_i64() {
            Some(s) => Exact::Small(s),
            None => Exact::Big(BigRational::from_integer(v)),
        }
    }
}

impl From<BigUint> for Exact {
    fn from(v: BigUint) -> Self {
        Exact::from(BigInt::from(v))
    }
}

impl From<BigRational> for Exact {
    fn from(v: BigRational) -> Self {
        Exact::from_ratio(v)
    }
}

impl<'a> Add<&'a Exact> for &'a Exact {
    type Output = Exact;

    fn add(self, rhs: &'a Exact) -> Exact {
        if let (Exact::Small(a), Exact::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Exact::Small(v);
            }
        }
        Exact::from_ratio(self.to_ratio() + rhs.to_ratio())
    }
}

impl<'a> Sub<&'a Exact> for &'a Exact {
    type Output = Exact;

    fn sub(self, rhs: &'a Exact) -> Exact {
        if let (Exact::Small(a), Exact::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Exact::Small(v);
            }
        }
        Exact::from_ratio(self.to_ratio() - rhs.to_ratio())
    }
}

impl<'a> Mul<&'a Exact> for &'a Exact {
    type Output = Exact;

    fn mul(self, rhs: &'a Exact) -> Exact {
        if let (Exact::Small(a), Exact::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Exact::Small(v);
            }
        }
        if self.is_zero() || rhs.is_zero() {
            return Exact::ZERO;
        }
        Exact::from_ratio(self.to_ratio() * rhs.to_ratio())
    }
}

impl Neg for &Exact {
    type Output = Exact;

    fn neg(self) -> Exact {
        match self {
            Exact::Small(v) => match v.checked_neg() {
                Some(n) => Exact::Small(n),
                None => Exact::from_ratio(-self.to_ratio()),
            },
            Exact::Big(r) => Exact::from_ratio(-r.clone()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Exact> for Exact {
            type Output = Exact;

            fn $method(self, rhs: Exact) -> Exact {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Exact {
    type Output = Exact;

    fn neg(self) -> Exact {
        -&self
    }
}

impl Sum for Exact {
    fn sum<I: Iterator<Item = Exact>>(iter: I) -> Exact {
        iter.fold(Exact::ZERO, |acc, v| &acc + &v)
    }
}

impl<'a> Sum<&'a Exact> for Exact {
    fn sum<I: Iterator<Item = &'a Exact>>(iter: I) -> Exact {
        iter.fold(Exact::ZERO, |acc, v| &acc + v)
    }
}

/// Integers print plainly, other values as `p/q` in lowest terms.
impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Small(v) => write!(f, "{v}"),
            Exact::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Exact::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Exact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an exact value: `{s}`"));
        match s.split_once('/') {
            None => s.parse::<BigInt>().map(Exact::from).map_err(|_| bad()),
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Exact::from_ratio(BigRational::new(p, q)))
            }
        }
    }
}

impl One for Exact {
    fn one() -> Self {
        Exact::ONE
    }
}

impl Zero for Exact {
    fn zero() -> Self {
        Exact::ZERO
    }

    fn is_zero(&self) -> bool {
        Exact::is_zero(self)
    }
}
