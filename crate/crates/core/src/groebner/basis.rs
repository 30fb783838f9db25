use std::sync::Arc;

use super::reduce::{s_polynomial, Reducers};
use crate::algebra::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn new(ring: Arc<Ring>, elements: Vec<Polynomial>, reduced: bool) -> Self {
        GroebnerBasis {
            ring,
            elements,
            reduced,
        }
    }

    /// Accepts `elements` as a reduced basis after checking that they are
    /// monic, interreduced, sorted and closed under S-pair reduction.
    pub fn from_reduced(ring: &Arc<Ring>, elements: Vec<Polynomial>) -> Result<Self> {
        let elements = elements
            .into_iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        if elements.iter().any(Polynomial::is_zero) {
            return Err(Error::Precondition("basis contains zero".into()));
        }
        let candidate = GroebnerBasis::new(ring.clone(), elements, false);
        let reduced = reduce_basis(&candidate)?;
        if reduced.elements != candidate.elements {
            return Err(Error::Precondition("basis is not reduced".into()));
        }
        if find_nonreducing_pair(&reduced.elements)?.is_some() {
            return Err(Error::Precondition("basis is not a Groebner basis".into()));
        }
        Ok(reduced)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The basis generates the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(Polynomial::is_unit)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        super::normal_form(f, &self.elements)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Interreduces a Groebner basis: drops elements whose leading monomial is
/// divisible by another's, tail-reduces the rest and makes them monic. The
/// elements come out sorted by ascending leading monomial, so the result is
/// the unique reduced basis of the ideal under the ring's order.
pub fn reduce_basis(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    let ring = basis.ring.clone();
    let mut sorted: Vec<&Polynomial> = basis.elements.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut minimal: Vec<&Polynomial> = Vec::new();
    for g in sorted {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }

    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others = Reducers::new(
            minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| *h),
        );
        out.push(others.reduce(g)?.monic()?);
    }
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis::new(ring, out, true))
}

/// Checks every S-pair of `elements` by full reduction, without criteria.
/// Returns the first pair whose S-polynomial has a nonzero normal form.
pub fn find_nonreducing_pair(
    elements: &[Polynomial],
) -> Result<Option<(usize, usize, Polynomial)>> {
    let reducers = Reducers::new(elements);
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let s = s_polynomial(&elements[i], &elements[j])?;
            let r = reducers.reduce(&s)?;
            if !r.is_zero() {
                return Ok(Some((i, j, r)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn from_reduced_validates() {
        let ring = Ring::symmetric(Field::Rationals, 2).unwrap();
        let p = |s: &str| Polynomial::parse(s, &ring).unwrap();
        let ok = GroebnerBasis::from_reduced(&ring, vec![p("x1_1"), p("x1_2")]);
        assert!(ok.is_err(), "unsorted input is rejected");
        let gb = GroebnerBasis::from_reduced(&ring, vec![p("x2_2"), p("x1_1")]).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(GroebnerBasis::from_reduced(&ring, vec![p("2*x1_1")]).is_err());
        // x11 x22 - x12^2 and x11 x12: S-pair leaves x12^3
        let not_gb = vec![p("x1_1*x1_2"), p("x1_1*x2_2 - x1_2^2")];
        assert!(GroebnerBasis::from_reduced(&ring, not_gb).is_err());
    }
}
