use super::{count_witness, require_odd_char, x, CheckReport, Recorder};
use crate::algebra::Polynomial;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::ideal_ops::{intersect, intersect_all, krull_dimension, radical_member};
use crate::permideal::{minimal_prime, p2_generators, radical_generators, FamilySpec};

fn minimal_primes(spec: &FamilySpec) -> Result<Vec<((usize, usize), Ideal)>> {
    let mut out = Vec::new();
    for i in 1..=spec.n {
        for j in i + 1..=spec.n {
            out.push(((i, j), minimal_prime(spec, i, j)?));
        }
    }
    Ok(out)
}

/// `out[i]` is the intersection of every ideal except `ideals[i]`, via
/// prefix and suffix intersections. `None` where that family is empty.
pub(crate) fn leave_one_out(ideals: &[Ideal]) -> Result<Vec<Option<Ideal>>> {
    let len = ideals.len();
    let mut prefix: Vec<Option<Ideal>> = vec![None; len + 1];
    for i in 0..len {
        prefix[i + 1] = Some(match &prefix[i] {
            None => ideals[i].clone(),
            Some(p) => intersect(p, &ideals[i])?,
        });
    }
    let mut suffix: Vec<Option<Ideal>> = vec![None; len + 1];
    for i in (0..len).rev() {
        suffix[i] = Some(match &suffix[i + 1] {
            None => ideals[i].clone(),
            Some(s) => intersect(&ideals[i], s)?,
        });
    }
    (0..len)
        .map(|i| {
            Ok(match (&prefix[i], &suffix[i + 1]) {
                (None, None) => None,
                (Some(p), None) => Some(p.clone()),
                (None, Some(s)) => Some(s.clone()),
                (Some(p), Some(s)) => Some(intersect(p, s)?),
            })
        })
        .collect()
}

fn show_vars(vars: &[crate::algebra::VarId]) -> String {
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", names.join(", "))
}

pub fn check_minimal_primes_dim(spec: &FamilySpec) -> Result<CheckReport> {
    require_odd_char(spec)?;
    let mut rec = Recorder::new("primes", spec);
    let p2 = p2_generators(spec)?;
    let primes = minimal_primes(spec)?;
    let ideals: Vec<Ideal> = primes.iter().map(|(_, p)| p.clone()).collect();

    rec.assert("P2(X) is contained in every P_ij", || {
        for ((i, j), p) in &primes {
            if !p.contains_ideal(&p2)? {
                return Ok((false, format!("P2(X) not in P_{i}{j}")));
            }
        }
        Ok((true, count_witness(primes.len(), "minimal primes")))
    })?;
    rec.assert(
        "intersection of the P_ij equals the radical generator ideal",
        || {
            let meet = intersect_all(&ideals)?;
            let rad = radical_generators(spec)?;
            Ok((
                meet.equals(&rad)?,
                count_witness(meet.groebner()?.len(), "basis elements"),
            ))
        },
    )?;
    rec.assert("dim k[X]/P2(X) = 2", || {
        let d = krull_dimension(&p2)?;
        Ok((
            d.value == 2,
            format!("dim {}, independent set {}", d.value, show_vars(&d.witness)),
        ))
    })?;
    rec.assert("every P_ij has dimension 2", || {
        for ((i, j), p) in &primes {
            let d = krull_dimension(p)?;
            if d.value != 2 {
                return Ok((false, format!("dim P_{i}{j} = {}", d.value)));
            }
        }
        Ok((true, count_witness(primes.len(), "primes of dimension 2")))
    })?;
    rec.assert("no P_ij contains the intersection of the others", || {
        if primes.len() == 1 {
            return Ok((true, "single minimal prime".into()));
        }
        let rest = leave_one_out(&ideals)?;
        for (((i, j), p), others) in primes.iter().zip(&rest) {
            let others = others.as_ref().expect("at least two primes");
            if p.contains_ideal(others)? {
                return Ok((false, format!("P_{i}{j} contains the others' intersection")));
            }
        }
        Ok((true, count_witness(primes.len(), "irredundant primes")))
    })?;
    Ok(rec.finish())
}

/// `x_ij x_kk` with `i < j` and `k` distinct from both.
fn off_times_diagonal(spec: &FamilySpec) -> Vec<Polynomial> {
    let ring = spec.ring();
    let mut out = Vec::new();
    for i in 1..=spec.n {
        for j in i + 1..=spec.n {
            for k in (1..=spec.n).filter(|&k| k != i && k != j) {
                out.push(&x(&ring, i, j) * &x(&ring, k, k));
            }
        }
    }
    out
}

pub fn check_radical(spec: &FamilySpec) -> Result<CheckReport> {
    require_odd_char(spec)?;
    let mut rec = Recorder::new("radical", spec);
    let ring = spec.ring();
    let p2 = p2_generators(spec)?;
    let rad = radical_generators(spec)?;

    rec.assert(
        "every radical generator lies in the radical of P2(X)",
        || {
            for g in rad.generators() {
                if !radical_member(&p2, g)? {
                    return Ok((false, format!("{g} is not in the radical")));
                }
            }
            Ok((true, count_witness(rad.generators().len(), "generators")))
        },
    )?;
    rec.assert(
        "intersection of the P_ij equals the radical generator ideal",
        || {
            let ideals: Vec<Ideal> = minimal_primes(spec)?.into_iter().map(|(_, p)| p).collect();
            Ok((intersect_all(&ideals)?.equals(&rad)?, String::new()))
        },
    )?;
    if spec.n == 2 {
        rec.assert("P2(X) is radical at n = 2", || {
            Ok((p2.equals(&rad)?, String::new()))
        })?;
    } else {
        rec.assert("P2(X) is strictly contained in its radical", || {
            let mut candidates = off_times_diagonal(spec);
            candidates.extend(rad.generators().iter().cloned());
            for g in candidates {
                if !p2.contains(&g)? {
                    return Ok((
                        !p2.equals(&rad)?,
                        format!("{g} in sqrt(P2(X)) but not in P2(X)"),
                    ));
                }
            }
            Ok((false, "every radical generator lies in P2(X)".into()))
        })?;
    }
    rec.assert("x_uu x_vv x_ww lies in P2(X) + (x_ij x_kk)", || {
        let absorbing = p2.with_generators(off_times_diagonal(spec))?;
        let mut count = 0;
        for u in 1..=spec.n {
            for v in u + 1..=spec.n {
                for w in v + 1..=spec.n {
                    let lhs = &(&x(&ring, u, u) * &x(&ring, v, v)) * &x(&ring, w, w);
                    let perm =
                        &(&x(&ring, v, v) * &x(&ring, w, w)) + &(&x(&ring, v, w) * &x(&ring, v, w));
                    let rhs = &(&x(&ring, u, u) * &perm)
                        - &(&x(&ring, u, u) * &(&x(&ring, v, w) * &x(&ring, v, w)));
                    if lhs != rhs || !absorbing.contains(&lhs)? {
                        return Ok((false, format!("fails for ({u},{v},{w})")));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, count_witness(count, "triples")))
    })?;
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_radical_small() {
        for n in 2..=3 {
            let spec = FamilySpec::rationals(n).unwrap();
            let primes = check_minimal_primes_dim(&spec).unwrap();
            assert!(primes.passed, "{primes:#?}");
            let radical = check_radical(&spec).unwrap();
            assert!(radical.passed, "{radical:#?}");
        }
        let spec = FamilySpec::rationals(3).unwrap();
        let primes = check_minimal_primes_dim(&spec).unwrap();
        assert_eq!(
            primes.assertions[2].witness,
            "dim 2, independent set {x1_1, x1_2}"
        );
        let radical = check_radical(&spec).unwrap();
        assert_eq!(
            radical.assertions[2].witness,
            "x1_2*x3_3 in sqrt(P2(X)) but not in P2(X)"
        );
    }

    #[test]
    fn leave_one_out_of_monomial_ideals() {
        let spec = FamilySpec::rationals(2).unwrap();
        let ring = spec.ring();
        let ideals: Vec<Ideal> = ["x1_1", "x1_2", "x2_2"]
            .iter()
            .map(|s| Ideal::new(&ring, [Polynomial::parse(s, &ring).unwrap()]).unwrap())
            .collect();
        let rest = leave_one_out(&ideals).unwrap();
        let expect = ["x1_2*x2_2", "x1_1*x2_2", "x1_1*x1_2"];
        for (r, e) in rest.iter().zip(expect) {
            let e = Ideal::new(&ring, [Polynomial::parse(e, &ring).unwrap()]).unwrap();
            assert!(r.as_ref().unwrap().equals(&e).unwrap());
        }
        assert_eq!(leave_one_out(&ideals[..1]).unwrap(), vec![None]);
    }
}
