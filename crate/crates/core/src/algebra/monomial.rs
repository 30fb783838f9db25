use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// Dense exponent vector over a ring's variable enumeration.
///
/// The cached total degree always equals the sum of the exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 24]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn variable(nvars: usize, index: usize, exp: Exponent) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u32;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> Exponent {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Nonzero `(variable index, exponent)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, Exponent)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    /// Bit `i` is set iff variable `i` occurs. Rings have at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .fold(0, |m, (i, &e)| if e > 0 { m | (1 << i) } else { m })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self.degree + other.degree,
        })
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<_> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for &a in &self.exps {
            let v = (a as u32).checked_mul(e).ok_or(Error::ExponentOverflow)?;
            exps.push(Exponent::try_from(v).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self.degree * e,
        })
    }

    /// Same exponents over a ring with `nvars` variables. Extra variables get
    /// exponent zero; dropped variables must not occur.
    pub(crate) fn resized(&self, nvars: usize) -> Option<Monomial> {
        if self.exps[nvars.min(self.exps.len())..]
            .iter()
            .any(|&e| e > 0)
        {
            return None;
        }
        let mut exps: SmallVec<_> = self.exps.iter().copied().take(nvars).collect();
        exps.resize(nvars, 0);
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }
}
