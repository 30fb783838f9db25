use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{count_witness, CheckReport, Recorder};
use crate::algebra::{Coeff, Field, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::intersect_all;
use crate::permideal::{determinantal2_generators, p2_generators, FamilySpec};

pub fn check_char2(spec: &FamilySpec) -> Result<CheckReport> {
    if spec.field != Field::Prime(2) {
        return Err(Error::Precondition("char2 needs the field fp:2".into()));
    }
    let mut rec = Recorder::new("char2", spec);
    rec.assert("over F2, P2(X) = I2(X)", || {
        let p2 = p2_generators(spec)?;
        let det = determinantal2_generators(spec)?;
        Ok((
            p2.equals(&det)?,
            count_witness(p2.groebner()?.len(), "basis elements"),
        ))
    })?;
    rec.assert("negative control: over Q, P2(X) != I2(X)", || {
        let q = FamilySpec::rationals(spec.n)?;
        let p2 = p2_generators(&q)?;
        let det = determinantal2_generators(&q)?;
        let witness = det
            .generators()
            .iter()
            .find(|g| !p2.contains(g).unwrap_or(true))
            .map_or(String::new(), |g| format!("{g} in I2(X) but not in P2(X)"));
        Ok((!p2.equals(&det)?, witness))
    })?;
    Ok(rec.finish())
}

/// One instance of the distributivity identity: `I_i` inside `J_j` for
/// every `i != j`.
#[derive(Debug, Clone)]
pub struct NiermannTrial {
    pub i_ideals: Vec<Ideal>,
    pub j_ideals: Vec<Ideal>,
}

impl NiermannTrial {
    /// `cap (I_i + J_i) = (sum I_i) + cap J_i`.
    pub fn holds(&self) -> Result<bool> {
        let ring = self.j_ideals[0].ring().clone();
        let sums = self
            .i_ideals
            .iter()
            .zip(&self.j_ideals)
            .map(|(i, j)| i.sum(j))
            .collect::<Result<Vec<_>>>()?;
        let lhs = intersect_all(&sums)?;
        let total_i = self
            .i_ideals
            .iter()
            .try_fold(Ideal::zero(&ring), |acc, i| acc.sum(i))?;
        let rhs = total_i.sum(&intersect_all(&self.j_ideals)?)?;
        lhs.equals(&rhs)
    }

    /// The hypothesis `I_i ⊆ J_j` for `i != j`.
    pub fn hypothesis_holds(&self) -> Result<bool> {
        for (a, i) in self.i_ideals.iter().enumerate() {
            for (b, j) in self.j_ideals.iter().enumerate() {
                if a != b && !j.contains_ideal(i)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u16; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&exps)
}

fn as_poly(ring: &Arc<Ring>, m: Monomial) -> Polynomial {
    Polynomial::monomial(ring, Coeff::one(), m)
}

/// A random family of monomial ideals in `ring` (at most 6 variables)
/// satisfying the hypothesis by construction: the `J_j` are drawn first and
/// every generator of `I_i` is a multiple of one generator from each `J_j`,
/// `j != i`.
pub fn niermann_trial(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> Result<NiermannTrial> {
    let nvars = ring.nvars();
    let l = rng.gen_range(1..=4);
    let mut j_ideals = Vec::with_capacity(l);
    for _ in 0..l {
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| {
                let d = rng.gen_range(1..=3);
                as_poly(ring, random_monomial(rng, nvars, d))
            })
            .collect();
        j_ideals.push(Ideal::new(ring, gens)?);
    }
    let mut i_ideals = Vec::with_capacity(l);
    for i in 0..l {
        if rng.gen_bool(0.2) {
            i_ideals.push(Ideal::zero(ring));
            continue;
        }
        let count = rng.gen_range(1..=2);
        let mut gens = Vec::with_capacity(count);
        for _ in 0..count {
            let d = if l == 1 {
                rng.gen_range(1..=2)
            } else {
                rng.gen_range(0..=1)
            };
            let mut m = random_monomial(rng, nvars, d);
            for (j, jd) in j_ideals.iter().enumerate() {
                if j != i {
                    let pick = &jd.generators()[rng.gen_range(0..jd.generators().len())];
                    m = m.checked_mul(pick.leading_monomial().unwrap())?;
                }
            }
            gens.push(as_poly(ring, m));
        }
        i_ideals.push(Ideal::new(ring, gens)?);
    }
    Ok(NiermannTrial { i_ideals, j_ideals })
}

pub fn check_niermann(spec: &FamilySpec, seed: u64, trials: usize) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Precondition(
            "niermann needs at least one trial".into(),
        ));
    }
    let mut rec = Recorder::new("niermann", spec);
    // 3x3 symmetric: six variables
    let ring = Ring::symmetric(spec.field, 3)?;
    let mono = |s: &str| Polynomial::parse(s, &ring).expect("literal");

    rec.assert("l = 1: both sides equal I_1 + J_1", || {
        let t = NiermannTrial {
            i_ideals: vec![Ideal::new(&ring, [mono("x1_1*x1_2")])?],
            j_ideals: vec![Ideal::new(&ring, [mono("x2_2^2"), mono("x1_3")])?],
        };
        Ok((t.holds()?, String::new()))
    })?;
    rec.assert("all I_i = (0): both sides equal cap J_i", || {
        let t = NiermannTrial {
            i_ideals: vec![Ideal::zero(&ring), Ideal::zero(&ring)],
            j_ideals: vec![
                Ideal::new(&ring, [mono("x1_1"), mono("x2_3^2")])?,
                Ideal::new(&ring, [mono("x1_1*x2_2")])?,
            ],
        };
        Ok((t.holds()?, String::new()))
    })?;
    rec.assert("seeded random families satisfy the identity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for trial in 0..trials {
            let t = niermann_trial(&ring, &mut rng)?;
            if !t.hypothesis_holds()? {
                return Ok((
                    false,
                    format!("trial {trial}: generator violates the hypothesis"),
                ));
            }
            if !t.holds()? {
                return Ok((
                    false,
                    format!("trial {trial}: I = {:?}, J = {:?}", t.i_ideals, t.j_ideals),
                ));
            }
        }
        Ok((true, format!("{trials} trials, seed {seed}")))
    })?;
    Ok(rec.finish())
}
