//! Sparse multivariate polynomials over a [`Ring`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Coeff;
use super::monomial::Monomial;
use super::ring::{Ring, VarId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// Terms are kept strictly decreasing under the ring's order, with no zero
/// coefficients; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Polynomial::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn from_i64(ring: &Arc<Ring>, v: i64) -> Self {
        Polynomial::constant(ring, ring.field().from_i64(v))
    }

    pub fn monomial(ring: &Arc<Ring>, c: Coeff, mono: Monomial) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<Ring>, v: VarId) -> Result<Self> {
        let idx = ring.var_index(v)?;
        Ok(Polynomial::monomial(
            ring,
            Coeff::one(),
            Monomial::variable(ring.nvars(), idx, 1),
        ))
    }

    /// The matrix entry `x_ij` (equivalently `x_ji`).
    pub fn entry(ring: &Arc<Ring>, i: usize, j: usize) -> Result<Self> {
        Polynomial::var(ring, VarId::entry(i, j))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zero coefficients. Coefficients must already be
    /// elements of the ring's field.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = Term>) -> Self {
        let field = ring.field();
        let mut terms: Vec<Term> = terms.into_iter().collect();
        terms.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            debug_assert!(field.owns(&t.coeff));
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ if t.coeff.is_zero() => {}
                _ => out.push(t),
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// A nonzero constant generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    /// Bitmask of variables occurring in some term.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |m, t| m | t.mono.support_mask())
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomial arithmetic across different rings"
        );
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.ring, &self.terms, other.terms.iter().cloned()),
        })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Result<Polynomial> {
        let field = self.ring.field();
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.checked_mul(m)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let field = self.ring.field();
        let mut products = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(Term {
                    coeff: field.mul(&a.coeff, &b.coeff),
                    mono: a.mono.checked_mul(&b.mono)?,
                });
            }
        }
        Ok(Polynomial::from_terms(&self.ring, products))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial("monic"))?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&self.ring.field().inv(lc)?))
    }

    /// Re-expresses the polynomial in `target`, which must have the same
    /// field and matrix size. Auxiliary variables may be added; dropping them
    /// requires that they do not occur.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() || self.ring.n() != target.n() {
            return Err(Error::RingMismatch);
        }
        let nvars = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                t.mono
                    .resized(nvars)
                    .map(|mono| Term {
                        coeff: t.coeff.clone(),
                        mono,
                    })
                    .ok_or_else(|| {
                        Error::UnknownVariable("auxiliary variable not in target ring".into())
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut terms = terms;
        terms.sort_by(|a, b| target.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        if !same_ring(&self.ring, &divisor.ring) {
            return Err(Error::RingMismatch);
        }
        let lead = divisor
            .leading_term()
            .ok_or(Error::ZeroPolynomial("exact_div"))?;
        let field = self.ring.field();
        let lc_inv = field.inv(&lead.coeff)?;
        let mut rest = self.terms.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.first() {
            let Some(m) = t.mono.div(&lead.mono) else {
                return Ok(None);
            };
            let c = field.mul(&t.coeff, &lc_inv);
            rest = sub_mul(&self.ring, &rest, &c, &m, &divisor.terms)?;
            quotient.push(Term { coeff: c, mono: m });
        }
        Ok(Some(Polynomial {
            ring: self.ring.clone(),
            terms: quotient,
        }))
    }
}

/// Merges two descending term sequences, summing coefficients.
fn merge(ring: &Ring, a: &[Term], b: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + 4);
    let mut ia = a.iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => match ring.cmp(&x.mono, &y.mono) {
                Ordering::Greater => out.push(ia.next().unwrap().clone()),
                Ordering::Less => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let x = ia.next().unwrap();
                    let y = ib.next().unwrap();
                    let c = field.add(&x.coeff, &y.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: y.mono,
                        });
                    }
                }
            },
            (Some(_), None) => out.push(ia.next().unwrap().clone()),
            (None, Some(_)) => out.push(ib.next().unwrap()),
            (None, None) => break,
        }
    }
    out
}

/// `p - c * m * g` for descending term slices.
pub(crate) fn sub_mul(
    ring: &Ring,
    p: &[Term],
    c: &Coeff,
    m: &Monomial,
    g: &[Term],
) -> Result<Vec<Term>> {
    let field = ring.field();
    let neg_c = field.neg(c);
    let scaled = g
        .iter()
        .map(|t| {
            Ok(Term {
                coeff: field.mul(&t.coeff, &neg_c),
                mono: t.mono.checked_mul(m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(ring, p, scaled))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.ring, &self.terms, rhs.terms.iter().cloned()),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

/// Panics on ring mismatch or exponent overflow; see [`Polynomial::try_mul`].
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        self.try_mul(rhs).expect("exponent overflow")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Polynomial {
    /// Writes the polynomial with variables named by `name`.
    pub fn write_with(
        &self,
        f: &mut impl fmt::Write,
        name: &dyn Fn(VarId) -> String,
    ) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            let mut first = true;
            if !c.is_one() || t.mono.is_one() {
                write!(f, "{c}")?;
                first = false;
            }
            for (idx, e) in t.mono.support() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", name(self.ring.var_id(idx)))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &|v| v.to_string())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
