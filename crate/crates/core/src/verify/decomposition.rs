use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::primes::leave_one_out;
use super::{
    count_witness, poly, require_n, require_odd_char, x, CheckOptions, CheckReport, Recorder,
};
use crate::algebra::{MonomialOrder, Polynomial, Ring, VarId};
use crate::error::Result;
use crate::groebner::{find_nonreducing_pair, ideal_equal, normal_form, s_polynomial, Ideal};
use crate::ideal_ops::{colon, eliminate, intersect, intersect_all, radical_member, saturate};
use crate::permideal::{
    decomposition_components, maximal_ideal, minimal_prime, p2_generators, p_component,
    power_set_family, q_component, FamilySpec, OmegaSets,
};

/// The generating set `A` of `Q_k` used in the primariness argument, in the
/// ring ordered by `qk-lex:k`:
/// `x_ik x_jk + x_kk x_ij`, `x_ij x_i'j'` and `x_ij x_i'k` with every index
/// other than `k`.
pub fn qk_basis(spec: &FamilySpec, k: usize) -> Result<Vec<Polynomial>> {
    let ring = Ring::new(spec.field, MonomialOrder::QkLex { n: spec.n, k })?;
    let r = &ring;
    let others: Vec<usize> = (1..=spec.n).filter(|&i| i != k).collect();
    let inner: Vec<(usize, usize)> = others
        .iter()
        .flat_map(|&i| {
            others
                .iter()
                .filter(move |&&j| j >= i)
                .map(move |&j| (i, j))
        })
        .collect();
    let e = |i, j| x(r, i, j);
    let mut out = Vec::new();
    for &(i, j) in &inner {
        out.push(&(&e(i, k) * &e(j, k)) + &(&e(k, k) * &e(i, j)));
    }
    for (a, &(i, j)) in inner.iter().enumerate() {
        for &(p, q) in &inner[a..] {
            out.push(&e(i, j) * &e(p, q));
        }
    }
    for &(i, j) in &inner {
        for &p in &others {
            out.push(&e(i, j) * &e(p, k));
        }
    }
    Ok(out)
}

/// Primariness evidence for a single `Q_k`.
pub fn check_qk_primary_evidence(spec: &FamilySpec, k: usize) -> Result<CheckReport> {
    let mut rec = Recorder::new("qk", spec);
    qk_evidence_into(&mut rec, spec, k)?;
    Ok(rec.finish())
}

/// Appends the primariness evidence for `Q_k` to `rec`.
pub(crate) fn qk_evidence_into(rec: &mut Recorder, spec: &FamilySpec, k: usize) -> Result<()> {
    require_n(spec, 3, "qk")?;
    require_odd_char(spec)?;
    let order = MonomialOrder::QkLex { n: spec.n, k };
    let qring = Ring::new(spec.field, order.clone())?;
    let a = qk_basis(spec, k)?;
    let q = q_component(spec, k)?;
    let a_ideal = Ideal::new(&qring, a.clone())?;
    let xkk_q = x(&qring, k, k);
    let xkk_mono = xkk_q.leading_monomial().unwrap().clone();

    rec.assert(format!("k={k}: A generates Q_k"), || {
        Ok((
            ideal_equal(&a_ideal, &q, &order)?,
            count_witness(a.len(), "elements in A"),
        ))
    })?;
    rec.assert(format!("k={k}: A is a Groebner basis under qk-lex"), || {
        Ok(match find_nonreducing_pair(&a)? {
            None => (
                true,
                count_witness(a.len() * (a.len() - 1) / 2, "S-pairs reduce to 0"),
            ),
            Some((i, j, r)) => (false, format!("S({}, {}) -> {r}", a[i], a[j])),
        })
    })?;
    rec.assert(
        format!("k={k}: S(x_ik x_jk + x_kk x_ij, x_ik x_i'j) = x_kk x_i'j x_ij -> 0"),
        || {
            let others: Vec<usize> = (1..=spec.n).filter(|&i| i != k).collect();
            let (i, j, ip) = (others[0], others[1], others[0]);
            let f = &(&x(&qring, i, k) * &x(&qring, j, k)) + &(&x(&qring, k, k) * &x(&qring, i, j));
            let g = &x(&qring, i, k) * &x(&qring, ip, j);
            let s = s_polynomial(&f, &g)?;
            let expected = &(&x(&qring, k, k) * &x(&qring, ip, j)) * &x(&qring, i, j);
            let nf = normal_form(&s, &a)?;
            Ok((s == expected && nf.is_zero(), format!("S = {s}, NF = {nf}")))
        },
    )?;
    rec.assert(
        format!("k={k}: no leading monomial of A is divisible by x_kk"),
        || {
            let bad = a
                .iter()
                .find(|p| xkk_mono.divides(p.leading_monomial().unwrap()));
            Ok(match bad {
                None => (true, String::new()),
                Some(p) => (false, format!("leading monomial of {p}")),
            })
        },
    )?;
    rec.assert(
        format!("k={k}: (A, z*x_kk - 1) eliminated to R equals Q_k"),
        || {
            let ering = qring.elimination_ring(1)?;
            let z = Polynomial::var(&ering, VarId::Aux(1))?;
            let rab = &(&z * &xkk_q.to_ring(&ering)?) - &Polynomial::one(&ering);
            let lifted = a_ideal.to_ring(&ering)?.with_generators([rab])?;
            let back = eliminate(&lifted, &[VarId::Aux(1)])?;
            Ok((ideal_equal(&back, &q, &order)?, String::new()))
        },
    )?;
    rec.assert(
        format!("k={k}: Q_k : x_kk^infinity = Q_k with exponent 0"),
        || {
            let ring = spec.ring();
            let (sat, e) = saturate(&q, &x(&ring, k, k))?;
            Ok((e == 0 && sat.equals(&q)?, format!("exponent {e}")))
        },
    )?;
    rec.assert(format!("k={k}: sqrt(Q_k) = P_k"), || {
        let pk = p_component(spec, k)?;
        for g in pk.generators() {
            if !radical_member(&q, g)? {
                return Ok((false, format!("{g} not in sqrt(Q_k)")));
            }
        }
        for g in q.generators() {
            if !radical_member(&pk, g)? {
                return Ok((false, format!("{g} not in P_k")));
            }
        }
        Ok((true, String::new()))
    })?;
    Ok(())
}

fn pow(p: &Polynomial, e: u32) -> Result<Polynomial> {
    p.pow(e)
}

/// Subsets of `pool` to try: all of them when `exhaustive`, otherwise the
/// empty set, a singleton, the whole pool and three seeded random subsets.
fn subsets(pool: &[VarId], exhaustive: bool, rng: &mut ChaCha8Rng) -> Vec<Vec<VarId>> {
    if exhaustive {
        return (0u64..1 << pool.len())
            .map(|mask| {
                pool.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
    }
    let mut out: Vec<Vec<VarId>> = vec![Vec::new()];
    if let Some(first) = pool.first() {
        out.push(vec![*first]);
    }
    out.push(pool.to_vec());
    for _ in 0..3 {
        let size = rng.gen_range(0..=pool.len());
        let mut pick: Vec<VarId> = pool.choose_multiple(rng, size).copied().collect();
        pick.sort();
        out.push(pick);
    }
    out.sort();
    out.dedup();
    out
}

fn show(vars: &[VarId]) -> String {
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", names.join(", "))
}

pub fn check_colon_identities(spec: &FamilySpec, opts: &CheckOptions) -> Result<CheckReport> {
    require_n(spec, 3, "colon")?;
    require_odd_char(spec)?;
    let mut rec = Recorder::new("colon", spec);
    let ring = spec.ring();
    let n = spec.n;
    let p2 = p2_generators(spec)?;
    let omega = OmegaSets::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    rec.assert("P2(X) : x1_2^2*x3_3 = m", || {
        let c = colon(&p2, &poly(&ring, "x1_2^2*x3_3"))?;
        Ok((c.equals(&maximal_ideal(spec)?)?, String::new()))
    })?;
    rec.assert("P2(X) : x_ij x_kk^2 = P_k for distinct i, j, k", || {
        let mut count = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in (1..=n).filter(|&k| k != i && k != j) {
                    let f = &x(&ring, i, j) * &pow(&x(&ring, k, k), 2)?;
                    if !colon(&p2, &f)?.equals(&p_component(spec, k)?)? {
                        return Ok((false, format!("fails for ({i},{j},{k})")));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, count_witness(count, "triples")))
    })?;
    for &v in &omega.off_diagonal {
        let VarId::Entry { row: i, col: j } = v else {
            unreachable!()
        };
        let pool: Vec<VarId> = omega
            .off_diagonal
            .iter()
            .copied()
            .filter(|&w| w != v)
            .collect();
        let sigmas = subsets(&pool, opts.exhaustive, &mut rng);
        let xv = x(&ring, i, j);
        rec.assert(
            format!("P_{i}{j} = (P2(X) + sigma^[3]) : x{i}_{j}^3 = ... : x{i}_{j}^4"),
            || {
                let pij = minimal_prime(spec, i, j)?;
                for sigma in &sigmas {
                    let base = p2.with_generators(power_set_family(&ring, sigma, 3)?)?;
                    let c3 = colon(&base, &pow(&xv, 3)?)?;
                    let c4 = colon(&c3, &xv)?;
                    if !c3.equals(&pij)? || !c4.equals(&c3)? {
                        return Ok((false, format!("fails for sigma = {}", show(sigma))));
                    }
                }
                Ok((true, count_witness(sigmas.len(), "subsets sigma")))
            },
        )?;
    }
    let cubes = power_set_family(&ring, &omega.off_diagonal, 3)?;
    let base_off = p2.with_generators(cubes)?;
    for &v in &omega.diagonal {
        let VarId::Entry { row: k, .. } = v else {
            unreachable!()
        };
        let pool: Vec<VarId> = omega.diagonal.iter().copied().filter(|&w| w != v).collect();
        let taus = subsets(&pool, opts.exhaustive, &mut rng);
        let xv = x(&ring, k, k);
        rec.assert(
            format!("Q_{k} = (P2(X) + Omega_off^[3] + tau^[2]) : x{k}_{k}^2 = ... : x{k}_{k}^3"),
            || {
                let qk = q_component(spec, k)?;
                for tau in &taus {
                    let base = base_off.with_generators(power_set_family(&ring, tau, 2)?)?;
                    let c2 = colon(&base, &pow(&xv, 2)?)?;
                    let c3 = colon(&c2, &xv)?;
                    if !c2.equals(&qk)? || !c3.equals(&c2)? {
                        return Ok((false, format!("fails for tau = {}", show(tau))));
                    }
                }
                Ok((true, count_witness(taus.len(), "subsets tau")))
            },
        )?;
    }
    Ok(rec.finish())
}

pub fn check_primary_decomposition(spec: &FamilySpec) -> Result<CheckReport> {
    require_odd_char(spec)?;
    let mut rec = Recorder::new("decomp", spec);
    let p2 = p2_generators(spec)?;
    if spec.n == 2 {
        rec.assert("n = 2: P2(X) is prime and is its own decomposition", || {
            Ok((p2.equals(&minimal_prime(spec, 1, 2)?)?, String::new()))
        })?;
        return Ok(rec.finish());
    }
    let ring = spec.ring();
    let n = spec.n;
    let comps = decomposition_components(spec)?;
    let npairs = n * (n - 1) / 2;

    rec.assert("component count is C(n,2) + n + 1", || {
        let expected = npairs + n + 1;
        Ok((
            comps.len() == expected,
            count_witness(comps.len(), "components"),
        ))
    })?;
    let rest = leave_one_out(&comps)?;
    rec.assert("intersection of the components equals P2(X)", || {
        let rest0 = rest[0].as_ref().expect("several components");
        let total = intersect(rest0, &comps[0])?;
        Ok((total.equals(&p2)?, String::new()))
    })?;
    rec.assert(
        "dropping any component gives an ideal strictly larger than P2(X)",
        || {
            for (idx, r) in rest.iter().enumerate() {
                let r = r.as_ref().expect("several components");
                if !r.contains_ideal(&p2)? || r.equals(&p2)? {
                    return Ok((false, format!("component {idx} is redundant")));
                }
            }
            Ok((
                true,
                count_witness(rest.len(), "leave-one-out intersections strictly larger"),
            ))
        },
    )?;
    rec.assert(
        "component radicals are distinct: P_ij, sqrt(Q_k) = P_k, sqrt(last) = m",
        || {
            let mut radicals: Vec<Ideal> = comps[..npairs].to_vec();
            for k in 1..=n {
                let (q, pk) = (&comps[npairs + k - 1], p_component(spec, k)?);
                for g in pk.generators() {
                    if !radical_member(q, g)? {
                        return Ok((false, format!("{g} not in sqrt(Q_{k})")));
                    }
                }
                if !pk.contains_ideal(q)? {
                    return Ok((false, format!("Q_{k} not inside P_{k}")));
                }
                radicals.push(pk);
            }
            let last = comps.last().unwrap();
            for v in ring.variables() {
                if !radical_member(last, &Polynomial::var(&ring, v)?)? {
                    return Ok((
                        false,
                        format!("{v} not in the radical of the last component"),
                    ));
                }
            }
            if last.is_unit()? {
                return Ok((false, "last component is the unit ideal".into()));
            }
            radicals.push(maximal_ideal(spec)?);
            for a in 0..radicals.len() {
                for b in a + 1..radicals.len() {
                    if radicals[a].equals(&radicals[b])? {
                        return Ok((false, format!("radicals {a} and {b} coincide")));
                    }
                }
            }
            Ok((true, count_witness(radicals.len(), "distinct primes")))
        },
    )?;
    rec.assert(
        "P2(X) = (cap P_ij) cap (P2(X) + Omega_off^[3]), one cube at a time",
        || {
            let mut running = p2.clone();
            for (i, j) in (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))) {
                let cube = pow(&x(&ring, i, j), 3)?;
                let pij = minimal_prime(spec, i, j)?;
                if !colon(&running, &cube)?.equals(&pij)? {
                    return Ok((false, format!("colon by x{i}_{j}^3 is not P_{i}{j}")));
                }
                let next = running.with_generators([cube])?;
                if !intersect(&pij, &next)?.equals(&running)? {
                    return Ok((false, format!("splitting fails at x{i}_{j}")));
                }
                running = next;
            }
            let primes = intersect_all(&comps[..npairs])?;
            Ok((intersect(&primes, &running)?.equals(&p2)?, String::new()))
        },
    )?;
    rec.assert(
        "P2(X) + Omega_off^[3] = (cap Q_k) cap last component, one square at a time",
        || {
            let cubes = power_set_family(&ring, &OmegaSets::new(n).off_diagonal, 3)?;
            let mut running = p2.with_generators(cubes)?;
            for k in 1..=n {
                let square = pow(&x(&ring, k, k), 2)?;
                let qk = &comps[npairs + k - 1];
                if !colon(&running, &square)?.equals(qk)? {
                    return Ok((false, format!("colon by x{k}_{k}^2 is not Q_{k}")));
                }
                let next = running.with_generators([square])?;
                if !intersect(qk, &next)?.equals(&running)? {
                    return Ok((false, format!("splitting fails at x{k}_{k}")));
                }
                running = next;
            }
            Ok((running.equals(comps.last().unwrap())?, String::new()))
        },
    )?;
    Ok(rec.finish())
}
