//! Exact coefficient fields.
//!
//! Coefficients are stored as [`Coeff`], an exact rational with an `i64`
//! fast path. Prime-field elements are always the canonical residue in
//! `[0, p)`, so the same representation serves both kinds of field and all
//! arithmetic goes through the owning [`Field`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::BadField(format!("fp:{p}")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Small(v),
            Field::Prime(p) => Coeff::Small(v.rem_euclid(*p as i64)),
        }
    }

    /// Maps a rational into this field. Fails for a prime field when the
    /// denominator is divisible by `p`.
    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Coeff::from_big(BigRational::new(num, den))),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let n = num.mod_floor(&p).to_i64().unwrap();
                let d = den.mod_floor(&p).to_i64().unwrap();
                if d == 0 {
                    return Err(Error::Precondition(format!(
                        "denominator divisible by the characteristic {p}"
                    )));
                }
                Ok(self.mul(&Coeff::Small(n), &self.inv(&Coeff::Small(d))?))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::Small((a.small() + b.small()).rem_euclid(*p as i64)),
            Field::Rationals => match (a, b) {
                (Coeff::Small(x), Coeff::Small(y)) => match x.checked_add(*y) {
                    Some(s) => Coeff::Small(s),
                    None => Coeff::from_big(a.to_big() + b.to_big()),
                },
                _ => Coeff::from_big(a.to_big() + b.to_big()),
            },
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match self {
            Field::Prime(p) => Coeff::Small((-a.small()).rem_euclid(*p as i64)),
            Field::Rationals => match a {
                Coeff::Small(x) => match x.checked_neg() {
                    Some(v) => Coeff::Small(v),
                    None => Coeff::from_big(-a.to_big()),
                },
                Coeff::Big(r) => Coeff::from_big(-r),
            },
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Prime(p) => {
                let v = (a.small() as i128 * b.small() as i128).rem_euclid(*p as i128);
                Coeff::Small(v as i64)
            }
            Field::Rationals => match (a, b) {
                (Coeff::Small(x), Coeff::Small(y)) => match x.checked_mul(*y) {
                    Some(s) => Coeff::Small(s),
                    None => Coeff::from_big(a.to_big() * b.to_big()),
                },
                _ => Coeff::from_big(a.to_big() * b.to_big()),
            },
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        Ok(match self {
            Field::Prime(p) => Coeff::Small(mod_inverse(a.small(), *p as i64)),
            Field::Rationals => match a {
                Coeff::Small(1) => Coeff::Small(1),
                Coeff::Small(-1) => Coeff::Small(-1),
                _ => Coeff::from_big(a.to_big().recip()),
            },
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        if let (Field::Rationals, Coeff::Small(x), Coeff::Small(y)) = (self, a, b) {
            if *y != 0 && x % y == 0 {
                if let Some(q) = x.checked_div(*y) {
                    return Ok(Coeff::Small(q));
                }
            }
        }
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `true` when `a` is a valid canonical element of this field.
    pub fn owns(&self, a: &Coeff) -> bool {
        match (self, a) {
            (Field::Prime(p), Coeff::Small(v)) => (0..*p as i64).contains(v),
            (Field::Prime(_), Coeff::Big(_)) => false,
            (Field::Rationals, _) => true,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        match s.strip_prefix("fp:").map(str::parse::<u32>) {
            Some(Ok(p)) => Field::prime(p),
            _ => Err(Error::BadField(s.to_string())),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let e = num_integer::Integer::extended_gcd(&a.rem_euclid(p), &p);
    e.x.rem_euclid(p)
}

/// An exact field element.
///
/// Invariant: an integral value that fits in `i64` is always `Small`;
/// `Big` holds a reduced rational with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(BigRational),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(0)
    }

    pub fn one() -> Self {
        Coeff::Small(1)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    fn small(&self) -> i64 {
        match self {
            Coeff::Small(v) => *v,
            Coeff::Big(_) => unreachable!("prime-field coefficients are always small"),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(v) => BigRational::from_integer(BigInt::from(*v)),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Coeff::Small(v);
            }
        }
        Coeff::Big(r)
    }

    /// Sign as seen when printing (prime-field residues are nonnegative).
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Small(v) if *v != i64::MIN => Coeff::Small(v.abs()),
            _ => Coeff::from_big(self.to_big().abs()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Coeff::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_specs() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("fp:2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("fp:32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert!("fp:4".parse::<Field>().is_err());
        assert!("fp:1".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
        assert_eq!(Field::Prime(7).to_string(), "fp:7");
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::Rationals;
        let half = q.inv(&Coeff::Small(2)).unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q.add(&half, &half), Coeff::one());
        assert_eq!(
            q.div(&Coeff::Small(6), &Coeff::Small(3)).unwrap(),
            Coeff::Small(2)
        );
        let big = q.mul(&Coeff::Small(i64::MAX), &Coeff::Small(4));
        assert!(matches!(big, Coeff::Big(_)));
        let back = q.div(&big, &Coeff::Small(4)).unwrap();
        assert_eq!(back, Coeff::Small(i64::MAX));
        assert!(q.inv(&Coeff::zero()).is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), Coeff::Small(6));
        assert_eq!(
            f.mul(&Coeff::Small(3), &f.inv(&Coeff::Small(3)).unwrap()),
            Coeff::one()
        );
        assert_eq!(f.neg(&Coeff::Small(0)), Coeff::zero());
        let f2 = Field::Prime(2);
        assert_eq!(f2.from_i64(-1), Coeff::one());
        assert_eq!(f2.add(&Coeff::one(), &Coeff::one()), Coeff::zero());
        assert!(f.from_ratio(BigInt::from(1), BigInt::from(14)).is_err());
        assert_eq!(
            f.from_ratio(BigInt::from(1), BigInt::from(2)).unwrap(),
            Coeff::Small(4)
        );
    }
}
