use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;

use super::{
    count_witness, poly, require_n, require_odd_char, x, CheckOptions, CheckReport, Recorder,
};
use crate::algebra::{Coeff, Monomial, Polynomial, Ring};
use crate::error::Result;
use crate::groebner::{find_nonreducing_pair, reduced_groebner, GbOptions, GroebnerBasis};
use crate::permideal::{grobner_family, grobner_family_size, p2_generators, FamilySpec};

/// Every admissible instance of the monomial lemmas at one matrix size,
/// deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaInstances {
    /// Three entries from three distinct columns and two distinct rows (or
    /// the transpose).
    pub three_entries: Vec<Monomial>,
    /// `x_{i1 j1}^2 x_{i2 j2} x_{i3 j3}`, rows and columns distinct.
    pub squared_transversal: Vec<Monomial>,
    /// `x_ij^2 x_ik`, `x_ij^2 x_kk^2`, `x_ij^3 x_kk`, `i, j, k` distinct.
    pub symmetric: Vec<Monomial>,
    /// `x_ij x_kl`, `i, j, k, l` distinct.
    pub quadratic: Vec<Monomial>,
}

fn mono(ring: &Arc<Ring>, factors: &[(usize, usize)]) -> Monomial {
    let p = factors
        .iter()
        .fold(Polynomial::one(ring), |acc, &(i, j)| &acc * &x(ring, i, j));
    p.leading_monomial().expect("nonzero product").clone()
}

fn collect(ring: &Arc<Ring>, items: impl Iterator<Item = Vec<(usize, usize)>>) -> Vec<Monomial> {
    let set: BTreeSet<Vec<u16>> = items.map(|f| mono(ring, &f).exponents().to_vec()).collect();
    set.into_iter()
        .map(|e| Monomial::from_exponents(&e))
        .collect()
}

pub fn lemma_instances(spec: &FamilySpec) -> LemmaInstances {
    let ring = spec.ring();
    let n = spec.n;
    let idx = || 1..=n;

    let three = idx().combinations(3).flat_map(|cols| {
        (0..3)
            .map(|_| idx())
            .multi_cartesian_product()
            .filter(|rows| rows.iter().collect::<BTreeSet<_>>().len() == 2)
            .flat_map(move |rows| {
                let pos: Vec<(usize, usize)> =
                    rows.iter().copied().zip(cols.iter().copied()).collect();
                let transposed: Vec<(usize, usize)> = pos.iter().map(|&(r, c)| (c, r)).collect();
                [pos, transposed]
            })
            .collect::<Vec<_>>()
    });
    let squared = idx().permutations(3).flat_map(|rows| {
        idx()
            .permutations(3)
            .map(move |cols| {
                vec![
                    (rows[0], cols[0]),
                    (rows[0], cols[0]),
                    (rows[1], cols[1]),
                    (rows[2], cols[2]),
                ]
            })
            .collect::<Vec<_>>()
    });
    let symmetric = idx().permutations(3).flat_map(|p| {
        let (i, j, k) = (p[0], p[1], p[2]);
        [
            vec![(i, j), (i, j), (i, k)],
            vec![(i, j), (i, j), (k, k), (k, k)],
            vec![(i, j), (i, j), (i, j), (k, k)],
        ]
    });
    let quadratic = idx()
        .permutations(4)
        .map(|p| vec![(p[0], p[1]), (p[2], p[3])]);

    LemmaInstances {
        three_entries: collect(&ring, three),
        squared_transversal: collect(&ring, squared),
        symmetric: collect(&ring, symmetric),
        quadratic: collect(&ring, quadratic),
    }
}

fn all_members(gb: &GroebnerBasis, monos: &[Monomial]) -> Result<(bool, String)> {
    let ring = gb.ring();
    for m in monos {
        let p = Polynomial::monomial(ring, Coeff::one(), m.clone());
        if !gb.reduces_to_zero(&p)? {
            return Ok((false, format!("{p} is not in P2(X)")));
        }
    }
    Ok((true, count_witness(monos.len(), "instances")))
}

pub fn check_monomial_lemmas(spec: &FamilySpec) -> Result<CheckReport> {
    require_n(spec, 3, "monomial")?;
    require_odd_char(spec)?;
    let mut rec = Recorder::new("monomial", spec);
    let ring = spec.ring();
    let gb = p2_generators(spec)?.groebner()?;
    let inst = lemma_instances(spec);

    rec.assert(
        "three entries in two rows and three columns lie in P2(X)",
        || all_members(&gb, &inst.three_entries),
    )?;
    rec.assert(
        "x_{i1j1}^2 x_{i2j2} x_{i3j3} with distinct rows and columns lies in P2(X)",
        || all_members(&gb, &inst.squared_transversal),
    )?;
    rec.assert(
        "x_ij^2 x_ik, x_ij^2 x_kk^2, x_ij^3 x_kk lie in P2(X)",
        || all_members(&gb, &inst.symmetric),
    )?;
    rec.assert("x_ij x_kl with distinct indices lies in P2(X)", || {
        all_members(&gb, &inst.quadratic)
    })?;
    rec.assert("negative control: x1_2*x1_3*x2_3 is not in P2(X)", || {
        let f = poly(&ring, "x1_2*x1_3*x2_3");
        let nf = gb.normal_form(&f)?;
        Ok((!nf.is_zero(), format!("NF = {nf}")))
    })?;
    rec.assert(
        "negative control: x1_3^2*x2_2 is not reducible by the basis",
        || {
            let f = poly(&ring, "x1_3^2*x2_2");
            let m = f.leading_monomial().expect("monomial");
            let hit = gb.leading_monomials().into_iter().find(|l| l.divides(m));
            Ok(match hit {
                None => (true, "no leading monomial divides it".into()),
                Some(l) => (
                    false,
                    format!(
                        "divisible by leading monomial {}",
                        Polynomial::monomial(&ring, Coeff::one(), l)
                    ),
                ),
            })
        },
    )?;
    Ok(rec.finish())
}

fn sorted_monic(
    ring: &Arc<Ring>,
    polys: impl IntoIterator<Item = Polynomial>,
) -> Result<Vec<Polynomial>> {
    let mut out = polys
        .into_iter()
        .map(|p| p.monic())
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(out)
}

pub fn check_grobner_theorem(spec: &FamilySpec, opts: &CheckOptions) -> Result<CheckReport> {
    require_odd_char(spec)?;
    let mut rec = Recorder::new("grobner", spec);
    let ring = spec.ring();
    let p2 = p2_generators(spec)?;
    let family = grobner_family(spec)?;
    let fam = sorted_monic(&ring, family.iter().map(|e| e.polynomial.clone()))?;

    let gb: Arc<GroebnerBasis> = if opts.paranoid {
        let (gb, _) = reduced_groebner(&ring, p2.generators(), &GbOptions { paranoid: true })?;
        Arc::new(gb)
    } else {
        p2.groebner()?
    };

    rec.assert(
        "reduced basis of P2(X) under diag-lex equals the eleven-type family",
        || {
            if gb.elements() == fam.as_slice() {
                return Ok((true, format!("|GB| = {}", gb.len())));
            }
            let extra = gb.elements().iter().find(|g| !fam.contains(g));
            let missing = fam.iter().find(|g| !gb.elements().contains(g));
            Ok((
                false,
                format!(
                    "|GB| = {}, |family| = {}, basis-only: {}, family-only: {}",
                    gb.len(),
                    fam.len(),
                    extra.map_or("none".into(), |p| p.to_string()),
                    missing.map_or("none".into(), |p| p.to_string()),
                ),
            ))
        },
    )?;
    rec.assert("cardinality is C(n,2) + 11 C(n,3) + 7 C(n,4)", || {
        let expected = grobner_family_size(spec.n);
        Ok((
            fam.len() == expected && gb.len() == expected,
            format!(
                "family {}, basis {}, formula {expected}",
                fam.len(),
                gb.len()
            ),
        ))
    })?;
    rec.assert("every family element lies in P2(X)", || {
        for e in &family {
            if !gb.reduces_to_zero(&e.polynomial)? {
                return Ok((false, format!("type {} element {}", e.kind, e.polynomial)));
            }
        }
        Ok((true, count_witness(family.len(), "elements")))
    })?;
    if opts.paranoid {
        rec.assert("every S-pair of the family reduces to zero", || {
            Ok(match find_nonreducing_pair(&fam)? {
                None => (
                    true,
                    count_witness(fam.len() * fam.len().saturating_sub(1) / 2, "pairs"),
                ),
                Some((i, j, r)) => (false, format!("S({}, {}) -> {r}", fam[i], fam[j])),
            })
        })?;
    }
    rec.assert("type 1 elements are quadratic minimal generators", || {
        for e in family.iter().filter(|e| e.kind.is_quadratic()) {
            if e.polynomial.total_degree() != Some(2) || !e.polynomial.is_homogeneous() {
                return Ok((false, format!("{} is not a quadric", e.polynomial)));
            }
            let lm = e.polynomial.leading_monomial().unwrap();
            let other = family
                .iter()
                .filter(|o| o.polynomial != e.polynomial)
                .find(|o| o.polynomial.leading_monomial().unwrap().divides(lm));
            if let Some(o) = other {
                return Ok((
                    false,
                    format!("{} reducible by {}", e.polynomial, o.polynomial),
                ));
            }
        }
        let count = family.iter().filter(|e| e.kind.is_quadratic()).count();
        Ok((true, count_witness(count, "quadratic generators")))
    })?;
    Ok(rec.finish())
}

pub fn check_depth_witness(spec: &FamilySpec) -> Result<CheckReport> {
    require_n(spec, 3, "depth")?;
    require_odd_char(spec)?;
    let mut rec = Recorder::new("depth", spec);
    let ring = spec.ring();
    let gb = p2_generators(spec)?.groebner()?;
    let f = poly(&ring, "x1_2*x1_3*x2_3");

    rec.assert(
        "f = x1_2*x1_3*x2_3 has normal form a nonzero multiple of x1_3^2*x2_2",
        || {
            let nf = gb.normal_form(&f)?;
            let target = poly(&ring, "x1_3^2*x2_2");
            let ok = nf.len() == 1 && nf.leading_monomial() == target.leading_monomial();
            Ok((ok, format!("NF(f) = {nf}")))
        },
    )?;
    rec.assert("f * v lies in P2(X) for every variable v", || {
        for v in ring.variables() {
            let fv = f.try_mul(&Polynomial::var(&ring, v)?)?;
            if !gb.reduces_to_zero(&fv)? {
                return Ok((false, format!("f*{v} is not in P2(X)")));
            }
        }
        Ok((true, count_witness(ring.nvars(), "variables")))
    })?;
    Ok(rec.finish())
}
