//! Elimination-based ideal operations: elimination, intersection, colon,
//! saturation, radical membership, initial ideals and Krull dimension.

use std::sync::Arc;

use itertools::Itertools;

use crate::algebra::{Monomial, Polynomial, Ring, VarId};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, Ideal};

/// Default iteration cap for [`saturate`].
pub const SATURATION_CAP: usize = 64;

/// `I ∩ k[base]` where `vars` are all the auxiliary variables of the ring.
/// An empty `vars` returns `I` unchanged.
pub fn eliminate(ideal: &Ideal, vars: &[VarId]) -> Result<Ideal> {
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let aux = ring.aux_count();
    let mut wanted: Vec<VarId> = vars.to_vec();
    wanted.sort();
    wanted.dedup();
    let all: Vec<VarId> = (1..=aux).map(VarId::Aux).collect();
    if wanted != all {
        return Err(Error::Precondition(format!(
            "elimination expects exactly the auxiliary variables {all:?}, got {wanted:?}"
        )));
    }
    let elim = ring.elimination_ring(aux)?;
    let gb = ideal.to_ring(&elim)?.groebner()?;
    let base = ring.base_ring()?;
    let nbase = ring.base_nvars();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.support_mask() >> nbase == 0)
        .map(|g| g.to_ring(&base))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&base, kept)
}

fn require_base(ideal: &Ideal) -> Result<()> {
    if ideal.ring().aux_count() == 0 {
        Ok(())
    } else {
        Err(Error::Precondition(
            "operation expects an ideal without auxiliary variables".into(),
        ))
    }
}

/// `I ∩ J`, by eliminating `t` from `t·I + (1 - t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    require_base(i)?;
    let j = j.to_ring(i.ring())?;
    if i.generators().is_empty() || j.generators().is_empty() {
        return Ok(Ideal::zero(i.ring()));
    }
    let ring = i.ring().elimination_ring(1)?;
    let t = Polynomial::var(&ring, VarId::Aux(1))?;
    let one_minus_t = &Polynomial::one(&ring) - &t;
    let mut gens = Vec::new();
    for f in i.generators() {
        gens.push(f.to_ring(&ring)?.try_mul(&t)?);
    }
    for g in j.generators() {
        gens.push(g.to_ring(&ring)?.try_mul(&one_minus_t)?);
    }
    let out = eliminate(&Ideal::new(&ring, gens)?, &[VarId::Aux(1)])?;
    out.to_ring(i.ring())
}

/// Intersection of a nonempty family, folded left to right.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::Precondition("intersection of an empty family".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, j| intersect(&acc, j))
}

/// `I : f = { g : g·f ∈ I }`, computed as `(I ∩ (f)) / f`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    require_base(i)?;
    let f = f.to_ring(i.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon"));
    }
    if f.is_unit() {
        return Ok(i.clone());
    }
    let principal = Ideal::new(i.ring(), [f.clone()])?;
    let meet = intersect(i, &principal)?;
    let mut quotients = Vec::with_capacity(meet.generators().len());
    for g in meet.generators() {
        match g.exact_div(&f)? {
            Some(q) => quotients.push(q),
            None => {
                return Err(Error::Internal(format!(
                    "generator {g} of I ∩ (f) is not divisible by {f}"
                )))
            }
        }
    }
    Ideal::new(i.ring(), quotients)
}

/// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let j = j.to_ring(i.ring())?;
    if j.generators().is_empty() {
        return Ok(Ideal::unit(i.ring()));
    }
    let parts = j
        .generators()
        .iter()
        .map(|g| colon(i, g))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// `I : f^∞` and the least `k` with `I : f^k = I : f^(k+1)`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<(Ideal, usize)> {
    saturate_with_cap(i, f, SATURATION_CAP)
}

pub fn saturate_with_cap(i: &Ideal, f: &Polynomial, cap: usize) -> Result<(Ideal, usize)> {
    let order = i.ring().order().clone();
    let mut current = i.clone();
    for k in 0..cap {
        let next = colon(&current, f)?;
        if ideal_equal(&next, &current, &order)? {
            return Ok((current, k));
        }
        current = next;
    }
    Err(Error::IterationCap(cap))
}

/// `f` lies in the radical of `I`: `1 ∈ I + (1 - z·f)` with a fresh `z`.
pub fn radical_member(i: &Ideal, f: &Polynomial) -> Result<bool> {
    require_base(i)?;
    let f = f.to_ring(i.ring())?;
    if f.is_zero() {
        return Ok(true);
    }
    let ring = i.ring().elimination_ring(1)?;
    let z = Polynomial::var(&ring, VarId::Aux(1))?;
    let rab = &Polynomial::one(&ring) - &z.try_mul(&f.to_ring(&ring)?)?;
    let lifted = i.to_ring(&ring)?.with_generators([rab])?;
    lifted.is_unit()
}

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Prunes `monomials` to a divisibility antichain.
    pub fn new(ring: &Arc<Ring>, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut ms: Vec<Monomial> = monomials.into_iter().collect();
        ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ring.cmp(a, b)));
        ms.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in ms {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort_by(|a, b| ring.cmp(a, b));
        MonomialIdeal {
            ring: ring.clone(),
            generators: minimal,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn to_ideal(&self) -> Ideal {
        let gens = self
            .generators
            .iter()
            .map(|m| Polynomial::monomial(&self.ring, crate::Coeff::one(), m.clone()));
        Ideal::new(&self.ring, gens).expect("same ring")
    }
}

/// Leading monomials of the reduced basis of `I` under the ring's order.
pub fn initial_ideal(i: &Ideal) -> Result<MonomialIdeal> {
    let gb = i.groebner()?;
    Ok(MonomialIdeal::new(i.ring(), gb.leading_monomials()))
}

/// Krull dimension of `k[vars]/I` with a witnessing maximal independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrullDimension {
    pub value: usize,
    pub witness: Vec<VarId>,
}

/// `dim k[vars]/I = dim k[vars]/in(I)`: the largest set of variables
/// containing the support of no minimal generator of `in(I)`. Among sets of
/// that size the first in lexicographic order of variable indices is
/// reported.
pub fn krull_dimension(i: &Ideal) -> Result<KrullDimension> {
    let init = initial_ideal(i)?;
    if init.generators().iter().any(Monomial::is_one) {
        return Err(Error::ImproperIdeal);
    }
    let ring = i.ring();
    let nvars = ring.nvars();
    let masks: Vec<u64> = init
        .generators()
        .iter()
        .map(Monomial::support_mask)
        .collect();
    for size in (0..=nvars).rev() {
        for subset in (0..nvars).combinations(size) {
            let s = subset.iter().fold(0u64, |m, &v| m | (1 << v));
            if masks.iter().all(|g| g & !s != 0) {
                return Ok(KrullDimension {
                    value: size,
                    witness: subset.into_iter().map(|v| ring.var_id(v)).collect(),
                });
            }
        }
    }
    unreachable!("the empty set is independent in a proper ideal")
}

/// Every generator is homogeneous.
pub fn is_homogeneous(i: &Ideal) -> bool {
    i.is_homogeneous()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::symmetric(Field::Rationals, n).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(s, r).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| p(r, s))).unwrap()
    }

    #[test]
    fn eliminate_trivial_cases() {
        let r = ring(2);
        let i = ideal(&r, &["x1_1*x2_2 + x1_2^2"]);
        assert_eq!(eliminate(&i, &[]).unwrap(), i);
        let e = r.elimination_ring(1).unwrap();
        let j = Ideal::new(&e, [p(&e, "z1*x1_1 - 1"), p(&e, "z1")]).unwrap();
        assert!(eliminate(&j, &[VarId::Aux(1)]).unwrap().is_unit().unwrap());
        assert!(eliminate(&j, &[VarId::Aux(2)]).is_err());
    }

    #[test]
    fn intersection_of_coprime_principal_monomials() {
        let r = ring(2);
        let a = ideal(&r, &["x1_1"]);
        let b = ideal(&r, &["x2_2"]);
        let c = intersect(&a, &b).unwrap();
        assert!(c.equals(&ideal(&r, &["x1_1*x2_2"])).unwrap());
        assert!(intersect(&a, &a).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring(2);
        let i = ideal(&r, &["x1_1^2", "x1_1*x1_2"]);
        assert!(colon(&i, &Polynomial::one(&r)).unwrap().equals(&i).unwrap());
        let c = colon(&i, &p(&r, "x1_1")).unwrap();
        assert!(c.equals(&ideal(&r, &["x1_1", "x1_2"])).unwrap());
        assert!(colon(&i, &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn saturation_of_a_power() {
        let r = ring(2);
        let i = ideal(&r, &["x1_1^2"]);
        let (sat, k) = saturate(&i, &p(&r, "x1_1")).unwrap();
        assert!(sat.is_unit().unwrap());
        assert_eq!(k, 2);
    }

    #[test]
    fn radical_membership() {
        let r = ring(2);
        let i = ideal(&r, &["x1_1^3", "x1_2^2*x2_2"]);
        assert!(radical_member(&i, &p(&r, "x1_1")).unwrap());
        assert!(radical_member(&i, &p(&r, "x1_2*x2_2")).unwrap());
        assert!(!radical_member(&i, &p(&r, "x1_2")).unwrap());
        assert!(radical_member(&i, &p(&r, "x1_1^3")).unwrap());
    }

    #[test]
    fn initial_ideal_of_a_linear_form() {
        let r = ring(2);
        let init = initial_ideal(&ideal(&r, &["x1_1 + x1_2"])).unwrap();
        assert_eq!(init.generators(), &[Monomial::from_exponents(&[1, 0, 0])]);
    }

    #[test]
    fn dimension_of_simple_ideals() {
        let r = ring(2);
        assert_eq!(krull_dimension(&Ideal::zero(&r)).unwrap().value, 3);
        assert_eq!(krull_dimension(&ideal(&r, &["x1_1"])).unwrap().value, 2);
        let hyper = krull_dimension(&ideal(&r, &["x1_1*x2_2 + x1_2^2"])).unwrap();
        assert_eq!(hyper.value, 2);
        assert!(matches!(
            krull_dimension(&Ideal::unit(&r)),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn homogeneity() {
        let r = ring(2);
        assert!(is_homogeneous(&ideal(&r, &["x1_1*x2_2 + x1_2^2"])));
        assert!(!is_homogeneous(&ideal(&r, &["x1_1 + x1_2^2"])));
        assert!(is_homogeneous(&Ideal::zero(&r)));
    }
}
