mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{parse, random_monomial, rationals};
use permlab::ideal_ops::{colon, eliminate, intersect, krull_dimension, radical_member, saturate};
use permlab::permideal::{minimal_prime, p2_generators, p_component, FamilySpec};
use permlab::verify::{niermann_trial, NiermannTrial};
use permlab::{Coeff, Ideal, Polynomial, Ring, VarId};

fn spec(n: usize) -> FamilySpec {
    FamilySpec::rationals(n).unwrap()
}

fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| parse(ring, g))).unwrap()
}

fn mono_poly(ring: &Arc<Ring>, rng: &mut ChaCha8Rng, max_deg: u32) -> Polynomial {
    let d = rng.gen_range(1..=max_deg);
    Polynomial::monomial(ring, Coeff::one(), random_monomial(rng, ring.nvars(), d))
}

/// A small ideal of monomials and binomials.
fn small_ideal(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> Ideal {
    let count = rng.gen_range(1..=3);
    let gens: Vec<Polynomial> = (0..count)
        .map(|_| {
            let m = mono_poly(ring, rng, 3);
            if rng.gen_bool(0.4) {
                &m - &mono_poly(ring, rng, 3)
            } else {
                m
            }
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

fn monomial_ideal(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> Ideal {
    let count = rng.gen_range(1..=4);
    Ideal::new(ring, (0..count).map(|_| mono_poly(ring, rng, 4))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn intersection_laws(seed in any::<u64>()) {
        let ring = rationals(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (small_ideal(&ring, &mut rng), small_ideal(&ring, &mut rng), small_ideal(&ring, &mut rng));
        let ab = intersect(&a, &b).unwrap();
        prop_assert!(ab.equals(&intersect(&b, &a).unwrap()).unwrap());
        let left = intersect(&ab, &c).unwrap();
        let right = intersect(&a, &intersect(&b, &c).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
        prop_assert!(intersect(&a, &a).unwrap().equals(&a).unwrap());
        prop_assert!(a.contains_ideal(&ab).unwrap() && b.contains_ideal(&ab).unwrap());
    }

    #[test]
    fn colon_composes(seed in any::<u64>()) {
        let ring = rationals(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = small_ideal(&ring, &mut rng);
        let f = mono_poly(&ring, &mut rng, 2);
        let g = if rng.gen_bool(0.5) { mono_poly(&ring, &mut rng, 2) } else {
            &mono_poly(&ring, &mut rng, 1) + &mono_poly(&ring, &mut rng, 1)
        };
        let direct = colon(&i, &(&f * &g)).unwrap();
        let nested = colon(&colon(&i, &f).unwrap(), &g).unwrap();
        prop_assert!(direct.equals(&nested).unwrap());
        prop_assert!(direct.contains_ideal(&i).unwrap());
    }

    #[test]
    fn radical_membership_laws(seed in any::<u64>()) {
        let ring = rationals(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = small_ideal(&ring, &mut rng);
        let f = mono_poly(&ring, &mut rng, 2);
        if i.contains(&f).unwrap() {
            prop_assert!(radical_member(&i, &f).unwrap());
        }
        let r = radical_member(&i, &f).unwrap();
        prop_assert_eq!(r, radical_member(&i, &(&f * &f)).unwrap());
    }
}

#[test]
fn radical_membership_examples() {
    let ring = rationals(2);
    let i = ideal(&ring, &["x1_1^3", "x1_2^2*x2_2"]);
    assert!(radical_member(&i, &parse(&ring, "x1_1")).unwrap());
    assert!(radical_member(&i, &parse(&ring, "x1_2*x2_2")).unwrap());
    assert!(!radical_member(&i, &parse(&ring, "x2_2")).unwrap());
}

/// `I = (I : x^m) ∩ (I + (x^m))` once `I : x^m` has stabilized.
fn splitting_holds(i: &Ideal, x: &Polynomial, m: u32) -> bool {
    let xm = x.pow(m).unwrap();
    let left = colon(i, &xm).unwrap();
    let right = i.with_generators([xm]).unwrap();
    intersect(&left, &right).unwrap().equals(i).unwrap()
}

#[test]
fn splitting_identity_for_p2() {
    let s = spec(3);
    let ring = s.ring();
    let p2 = p2_generators(&s).unwrap();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let x = Polynomial::entry(&ring, i, j).unwrap();
        assert!(splitting_holds(&p2, &x, 3), "x{i}_{j}");
    }
}

#[test]
fn splitting_identity_for_random_monomial_ideals() {
    let ring = rationals(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..120 {
        let i = monomial_ideal(&ring, &mut rng);
        let v = ring.variables()[rng.gen_range(0..ring.nvars())];
        let x = Polynomial::var(&ring, v).unwrap();
        let (_, k) = saturate(&i, &x).unwrap();
        let m = (k as u32).max(1);
        assert!(
            splitting_holds(&i, &x, m),
            "trial {trial}: {i:?} by {v}, m = {m}"
        );
    }
}

#[test]
fn niermann_random_families() {
    let ring = Ring::symmetric(permlab::Field::Rationals, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nontrivial = 0;
    for trial in 0..120 {
        let t: NiermannTrial = niermann_trial(&ring, &mut rng).unwrap();
        assert!(t.hypothesis_holds().unwrap(), "trial {trial}");
        assert!(t.holds().unwrap(), "trial {trial}");
        nontrivial += (t.j_ideals.len() > 1) as usize;
    }
    assert!(nontrivial >= 60);
}

#[test]
fn dimension_cases() {
    let ring = rationals(2);
    assert_eq!(krull_dimension(&Ideal::zero(&ring)).unwrap().value, 3);
    assert_eq!(krull_dimension(&ideal(&ring, &["x1_1"])).unwrap().value, 2);
    assert_eq!(
        krull_dimension(&ideal(&ring, &["x1_1", "x2_2"]))
            .unwrap()
            .value,
        1
    );
    assert_eq!(
        krull_dimension(&p2_generators(&spec(2)).unwrap())
            .unwrap()
            .value,
        2
    );
    assert_eq!(
        krull_dimension(&minimal_prime(&spec(4), 1, 3).unwrap())
            .unwrap()
            .value,
        2
    );
    assert!(krull_dimension(&Ideal::unit(&ring)).is_err());
}

#[test]
fn saturation_of_p2_by_an_off_diagonal_variable() {
    let s = spec(3);
    let ring = s.ring();
    let p2 = p2_generators(&s).unwrap();
    let (sat, k) = saturate(&p2, &parse(&ring, "x1_2")).unwrap();
    assert_eq!(k, 3);
    assert!(sat.equals(&minimal_prime(&s, 1, 2).unwrap()).unwrap());
}

#[test]
fn colon_by_off_diagonal_times_diagonal_square() {
    let s = spec(3);
    let ring = s.ring();
    let p2 = p2_generators(&s).unwrap();
    let c = colon(&p2, &parse(&ring, "x1_2*x3_3^2")).unwrap();
    assert!(c.equals(&p_component(&s, 3).unwrap()).unwrap());
}

#[test]
fn eliminate_an_auxiliary_variable() {
    let base = rationals(2);
    let ring = base.elimination_ring(1).unwrap();
    let i = Ideal::new(
        &ring,
        [parse(&ring, "z1 - x1_1"), parse(&ring, "z1^2 - x1_2")],
    )
    .unwrap();
    let e = eliminate(&i, &[VarId::Aux(1)]).unwrap();
    assert!(e.equals(&ideal(&base, &["x1_1^2 - x1_2"])).unwrap());
}
