//! Shared helpers for the integration tests: random polynomials and an
//! independent membership oracle by degree-truncated linear algebra.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use permlab::algebra::Term;
use permlab::{Coeff, Field, Ideal, Monomial, Polynomial, Ring};

pub fn rationals(n: usize) -> Arc<Ring> {
    Ring::symmetric(Field::Rationals, n).unwrap()
}

pub fn parse(ring: &Arc<Ring>, s: &str) -> Polynomial {
    Polynomial::parse(s, ring).unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut e = vec![0u16; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&e)
}

/// A random polynomial with up to `terms` terms of degree at most `max_deg`.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &Arc<Ring>,
    terms: usize,
    max_deg: u32,
) -> Polynomial {
    let ts: Vec<Term> = (0..terms)
        .map(|_| {
            let d = rng.gen_range(0..=max_deg);
            Term {
                coeff: ring.field().from_i64(rng.gen_range(-5..=5)),
                mono: random_monomial(rng, ring.nvars(), d),
            }
        })
        .collect();
    Polynomial::from_terms(ring, ts)
}

/// A random homogeneous polynomial of degree `d`.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &Arc<Ring>,
    terms: usize,
    d: u32,
) -> Polynomial {
    let ts: Vec<Term> = (0..terms)
        .map(|_| Term {
            coeff: ring.field().from_i64(rng.gen_range(-4..=4)),
            mono: random_monomial(rng, ring.nvars(), d),
        })
        .collect();
    Polynomial::from_terms(ring, ts)
}

/// All monomials of exact degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d as u16);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

fn to_rational(c: &Coeff) -> BigRational {
    c.to_big()
}

fn row(p: &Polynomial) -> BTreeMap<Vec<u16>, BigRational> {
    p.terms()
        .iter()
        .map(|t| (t.mono.exponents().to_vec(), to_rational(&t.coeff)))
        .collect()
}

/// Membership of a homogeneous `f` in an ideal with homogeneous generators,
/// over Q: `f` is in the span of `m * g` for generators `g` and monomials `m`
/// with `deg(m g) = deg f`. Gaussian elimination with exact rationals.
pub fn linear_algebra_member(ideal: &Ideal, f: &Polynomial) -> bool {
    assert_eq!(ideal.ring().field(), Field::Rationals);
    if f.is_zero() {
        return true;
    }
    let d = f.total_degree().unwrap();
    assert!(f.is_homogeneous());
    let nvars = ideal.ring().nvars();
    let mut rows: Vec<BTreeMap<Vec<u16>, BigRational>> = Vec::new();
    for g in ideal.generators() {
        assert!(g.is_homogeneous());
        let dg = g.total_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - dg) {
            rows.push(row(&g.mul_term(&Coeff::one(), &m).unwrap()));
        }
    }
    // Row-reduce the spanning set into echelon form keyed by pivot monomial.
    let mut pivots: BTreeMap<Vec<u16>, BTreeMap<Vec<u16>, BigRational>> = BTreeMap::new();
    let reduce = |mut r: BTreeMap<Vec<u16>, BigRational>,
                  pivots: &BTreeMap<Vec<u16>, BTreeMap<Vec<u16>, BigRational>>| {
        loop {
            let hit = r.keys().find(|k| pivots.contains_key(*k)).cloned();
            let Some(k) = hit else { return r };
            let c = r[&k].clone();
            for (m, v) in &pivots[&k] {
                let e = r.entry(m.clone()).or_insert_with(BigRational::zero);
                *e -= &c * v;
                if e.is_zero() {
                    r.remove(m);
                }
            }
        }
    };
    for r in rows {
        let r = reduce(r, &pivots);
        if let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = BigRational::one() / c;
            let normalized: BTreeMap<_, _> = r.into_iter().map(|(m, v)| (m, v * &inv)).collect();
            // keep pivots fully reduced against the new one
            for p in pivots.values_mut() {
                if let Some(c) = p.get(&k).cloned() {
                    for (m, v) in &normalized {
                        let e = p.entry(m.clone()).or_insert_with(BigRational::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            p.remove(m);
                        }
                    }
                }
            }
            pivots.insert(k, normalized);
        }
    }
    reduce(row(f), &pivots).is_empty()
}
