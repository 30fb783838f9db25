//! Constructors for the ideal families attached to a symmetric matrix of
//! indeterminates: subpermanents, 2x2 minors, the explicit Groebner family,
//! the minimal primes `P_ij`, the components `Q_k` and `P_k`, the radical
//! generators and the primary decomposition components.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Coeff, Exponent, Field, Monomial, Polynomial, Ring, VarId};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Matrix size and coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub n: usize,
    pub field: Field,
}

impl FamilySpec {
    /// Requires `n >= 2` and characteristic other than 2.
    pub fn new(n: usize, field: Field) -> Result<Self> {
        if field.characteristic() == 2 {
            return Err(Error::Precondition(
                "characteristic 2 is only available through FamilySpec::char2".into(),
            ));
        }
        FamilySpec::char2(n, field)
    }

    /// Like [`FamilySpec::new`] but admits characteristic 2.
    pub fn char2(n: usize, field: Field) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "matrix size must be >= 2, got {n}"
            )));
        }
        Ok(FamilySpec { n, field })
    }

    pub fn rationals(n: usize) -> Result<Self> {
        FamilySpec::new(n, Field::Rationals)
    }

    /// `field[x_ij]` under the diagonal lex order.
    pub fn ring(&self) -> Arc<Ring> {
        Ring::symmetric(self.field, self.n).expect("n >= 2")
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::BadIndex(format!("index {i} outside 1..={}", self.n)))
        }
    }
}

fn x(ring: &Arc<Ring>, i: usize, j: usize) -> Polynomial {
    Polynomial::entry(ring, i, j).expect("index checked by caller")
}

fn product(ring: &Arc<Ring>, factors: &[(usize, usize)]) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::one(ring), |acc, &(i, j)| &acc * &x(ring, i, j))
}

/// Keeps the first of every group of generators equal up to a unit.
fn dedup_monic(polys: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .filter(|p| seen.insert(p.monic().expect("nonzero").to_string()))
        .collect()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b)))
}

/// `perm [[x_ap, x_aq], [x_bp, x_bq]]`.
pub fn subpermanent(ring: &Arc<Ring>, rows: (usize, usize), cols: (usize, usize)) -> Polynomial {
    let ((a, b), (p, q)) = (rows, cols);
    &product(ring, &[(a, p), (b, q)]) + &product(ring, &[(a, q), (b, p)])
}

/// `det [[x_ap, x_aq], [x_bp, x_bq]]`.
pub fn minor(ring: &Arc<Ring>, rows: (usize, usize), cols: (usize, usize)) -> Polynomial {
    let ((a, b), (p, q)) = (rows, cols);
    &product(ring, &[(a, p), (b, q)]) - &product(ring, &[(a, q), (b, p)])
}

type TwoByTwo = fn(&Arc<Ring>, (usize, usize), (usize, usize)) -> Polynomial;

fn all_2x2(spec: &FamilySpec, f: TwoByTwo) -> Result<Ideal> {
    let ring = spec.ring();
    let gens = pairs(spec.n).flat_map(|r| pairs(spec.n).map(move |c| (r, c)));
    let gens: Vec<Polynomial> = gens.map(|(r, c)| f(&ring, r, c)).collect();
    Ideal::new(&ring, dedup_monic(gens))
}

/// `P2(X)`: the 2x2 subpermanents, one per row pair and column pair, with
/// coincident ones removed.
pub fn p2_generators(spec: &FamilySpec) -> Result<Ideal> {
    all_2x2(spec, subpermanent)
}

/// `I2(X)`: the 2x2 minors, deduplicated up to sign.
pub fn determinantal2_generators(spec: &FamilySpec) -> Result<Ideal> {
    all_2x2(spec, minor)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GFamilyKind {
    T1a,
    T1b,
    T1c,
    T2a,
    T2b,
    T2c,
    T3a,
    T3b,
    T3c,
    T6a,
    T6b,
}

impl GFamilyKind {
    pub const ALL: [GFamilyKind; 11] = [
        GFamilyKind::T1a,
        GFamilyKind::T1b,
        GFamilyKind::T1c,
        GFamilyKind::T2a,
        GFamilyKind::T2b,
        GFamilyKind::T2c,
        GFamilyKind::T3a,
        GFamilyKind::T3b,
        GFamilyKind::T3c,
        GFamilyKind::T6a,
        GFamilyKind::T6b,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            GFamilyKind::T1a => "1a",
            GFamilyKind::T1b => "1b",
            GFamilyKind::T1c => "1c",
            GFamilyKind::T2a => "2a",
            GFamilyKind::T2b => "2b",
            GFamilyKind::T2c => "2c",
            GFamilyKind::T3a => "3a",
            GFamilyKind::T3b => "3b",
            GFamilyKind::T3c => "3c",
            GFamilyKind::T6a => "6a",
            GFamilyKind::T6b => "6b",
        }
    }

    /// Types 1a, 1b, 1c: the quadratic minimal generators.
    pub fn is_quadratic(&self) -> bool {
        matches!(self, GFamilyKind::T1a | GFamilyKind::T1b | GFamilyKind::T1c)
    }
}

impl fmt::Display for GFamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GFamilyElement {
    pub kind: GFamilyKind,
    pub indices: Vec<usize>,
    pub polynomial: Polynomial,
}

/// The eleven families of the explicit reduced Groebner basis of `P2(X)`,
/// each enumerated lexicographically in its index tuple.
pub fn grobner_family(spec: &FamilySpec) -> Result<Vec<GFamilyElement>> {
    use GFamilyKind::*;
    let ring = spec.ring();
    let n = spec.n;
    let mut out = Vec::new();
    let mut push = |kind, indices: &[usize], polynomial| {
        out.push(GFamilyElement {
            kind,
            indices: indices.to_vec(),
            polynomial,
        })
    };
    let r = &ring;
    let range = || 1..=n;

    for i in range() {
        for j in i + 1..=n {
            push(T1a, &[i, j], subpermanent(r, (i, j), (i, j)));
        }
    }
    for i in range() {
        for j in range() {
            for k in j + 1..=n {
                if i != j && i != k {
                    let f = &product(r, &[(i, i), (j, k)]) + &product(r, &[(i, j), (i, k)]);
                    push(T1b, &[i, j, k], f);
                }
            }
        }
    }
    for i in range() {
        for j in i + 1..=n {
            for k in range() {
                for l in k + 1..=n {
                    let distinct = [i, j].iter().all(|a| *a != k && *a != l);
                    if distinct && (i, j) < (k, l) {
                        push(T1c, &[i, j, k, l], product(r, &[(i, j), (k, l)]));
                    }
                }
            }
        }
    }
    for i in range() {
        for j in i + 1..=n {
            for k in range() {
                for l in j + 1..=n {
                    if k == i || k == j || (j < k && k < l) {
                        push(T2a, &[i, j, k, l], product(r, &[(i, l), (j, l), (k, l)]));
                    }
                }
            }
        }
    }
    for (i, j, k, l) in quadruples(n) {
        push(T2b, &[i, j, k, l], product(r, &[(i, l), (j, l), (k, k)]));
    }
    for (i, j, k) in triples(n) {
        push(T2c, &[i, j, k], product(r, &[(i, j), (i, k), (j, j)]));
    }
    for i in range() {
        for j in range() {
            for k in i + 1..=n {
                for l in k + 1..=n {
                    if j == l || j == k || (i < j && j < k) {
                        push(T3a, &[i, j, k, l], product(r, &[(i, j), (i, k), (i, l)]));
                    }
                }
            }
        }
    }
    for (i, j, k, l) in quadruples(n) {
        push(T3b, &[i, j, k, l], product(r, &[(i, k), (i, l), (j, j)]));
    }
    for (i, j, k) in triples(n) {
        push(T3c, &[i, j, k], product(r, &[(i, k), (j, k), (j, j)]));
    }
    for (i, j, k) in triples(n) {
        push(
            T6a,
            &[i, j, k],
            product(r, &[(i, k), (i, k), (i, k), (j, j)]),
        );
    }
    for (i, j, k) in triples(n) {
        push(
            T6b,
            &[i, j, k],
            product(r, &[(i, k), (i, k), (j, j), (j, j)]),
        );
    }
    Ok(out)
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
}

fn quadruples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    triples(n).flat_map(move |(i, j, k)| (k + 1..=n).map(move |l| (i, j, k, l)))
}

/// `C(n,2) + 11 C(n,3) + 7 C(n,4)`.
pub fn grobner_family_size(n: usize) -> usize {
    let c = |k: usize| -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    };
    c(2) + 11 * c(3) + 7 * c(4)
}

/// The ideal generated by the Groebner family polynomials.
pub fn grobner_family_ideal(spec: &FamilySpec) -> Result<Ideal> {
    let ring = spec.ring();
    Ideal::new(
        &ring,
        grobner_family(spec)?.into_iter().map(|e| e.polynomial),
    )
}

/// Off-diagonal and diagonal variables of the symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSets {
    pub off_diagonal: Vec<VarId>,
    pub diagonal: Vec<VarId>,
}

impl OmegaSets {
    pub fn new(n: usize) -> Self {
        OmegaSets {
            off_diagonal: pairs(n).map(|(i, j)| VarId::entry(i, j)).collect(),
            diagonal: (1..=n).map(|k| VarId::entry(k, k)).collect(),
        }
    }
}

/// `{ v^m : v in vars }`.
pub fn power_set_family(ring: &Arc<Ring>, vars: &[VarId], m: u32) -> Result<Vec<Polynomial>> {
    if m == 0 {
        return Err(Error::Precondition("power must be >= 1".into()));
    }
    vars.iter()
        .map(|&v| {
            let idx = ring.var_index(v)?;
            let exp = Exponent::try_from(m).map_err(|_| Error::ExponentOverflow)?;
            let mono = Monomial::variable(ring.nvars(), idx, exp);
            Ok(Polynomial::monomial(ring, Coeff::one(), mono))
        })
        .collect()
}

/// `P_ij = (x_ii x_jj + x_ij^2) + (every other variable)`.
pub fn minimal_prime(spec: &FamilySpec, i: usize, j: usize) -> Result<Ideal> {
    spec.check_index(i)?;
    spec.check_index(j)?;
    if i >= j {
        return Err(Error::BadIndex(format!(
            "minimal prime needs i < j, got ({i},{j})"
        )));
    }
    let ring = spec.ring();
    let keep = [VarId::entry(i, i), VarId::entry(i, j), VarId::entry(j, j)];
    let mut gens = vec![subpermanent(&ring, (i, j), (i, j))];
    for v in ring.variables() {
        if !keep.contains(&v) {
            gens.push(Polynomial::var(&ring, v)?);
        }
    }
    Ideal::new(&ring, gens)
}

/// `Q_k = (x_kk x_ij + x_ki x_kj | i,j != k) + (x_ij | i,j != k)^2
///        + (x_ij | i,j != k)(x_ki | i != k)`.
pub fn q_component(spec: &FamilySpec, k: usize) -> Result<Ideal> {
    spec.check_index(k)?;
    let ring = spec.ring();
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
    let mut gens = Vec::new();
    for &(i, j) in &inner {
        gens.push(&product(r, &[(k, k), (i, j)]) + &product(r, &[(k, i), (k, j)]));
    }
    for (a, &u) in inner.iter().enumerate() {
        for &v in &inner[a..] {
            gens.push(product(r, &[u, v]));
        }
    }
    for &u in &inner {
        for &i in &others {
            gens.push(product(r, &[u, (k, i)]));
        }
    }
    Ideal::new(&ring, dedup_monic(gens))
}

/// `P_k = (x_ij : (i,j) != (k,k))`.
pub fn p_component(spec: &FamilySpec, k: usize) -> Result<Ideal> {
    spec.check_index(k)?;
    let ring = spec.ring();
    let skip = VarId::entry(k, k);
    let gens = ring
        .variables()
        .into_iter()
        .filter(|&v| v != skip)
        .map(|v| Polynomial::var(&ring, v))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, gens)
}

/// The homogeneous maximal ideal.
pub fn maximal_ideal(spec: &FamilySpec) -> Result<Ideal> {
    let ring = spec.ring();
    let gens = ring
        .variables()
        .into_iter()
        .map(|v| Polynomial::var(&ring, v))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, gens)
}

/// The two monomial families added to `P2(X)` to obtain its radical:
/// products of two distinct off-diagonal variables, and `x_ij x_kk` with
/// `i, j, k` distinct.
pub fn radical_monomials(spec: &FamilySpec) -> Vec<Polynomial> {
    let ring = spec.ring();
    let off: Vec<(usize, usize)> = pairs(spec.n).collect();
    let mut gens = Vec::new();
    for (a, &u) in off.iter().enumerate() {
        for &v in &off[a + 1..] {
            gens.push(product(&ring, &[u, v]));
        }
    }
    for &(i, j) in &off {
        for k in 1..=spec.n {
            if k != i && k != j {
                gens.push(product(&ring, &[(i, j), (k, k)]));
            }
        }
    }
    gens
}

/// `P2(X)` plus [`radical_monomials`].
pub fn radical_generators(spec: &FamilySpec) -> Result<Ideal> {
    p2_generators(spec)?.with_generators(radical_monomials(spec))
}

/// `P2(X) + (x_ij^3 | i < j) + (x_kk^2 | k)`.
pub fn embedded_component(spec: &FamilySpec) -> Result<Ideal> {
    let ring = spec.ring();
    let omega = OmegaSets::new(spec.n);
    let mut extra = power_set_family(&ring, &omega.off_diagonal, 3)?;
    extra.extend(power_set_family(&ring, &omega.diagonal, 2)?);
    p2_generators(spec)?.with_generators(extra)
}

/// `[P_ij for i < j] ++ [Q_k for k] ++ [P2(X) + (x_ij^3) + (x_kk^2)]`.
pub fn decomposition_components(spec: &FamilySpec) -> Result<Vec<Ideal>> {
    if spec.n < 3 {
        return Err(Error::Precondition(
            "decomposition defined for n >= 3; at n = 2 the ideal is prime".into(),
        ));
    }
    let mut out = pairs(spec.n)
        .map(|(i, j)| minimal_prime(spec, i, j))
        .collect::<Result<Vec<_>>>()?;
    for k in 1..=spec.n {
        out.push(q_component(spec, k)?);
    }
    out.push(embedded_component(spec)?);
    Ok(out)
}

/// Families addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    P2,
    Det2,
    GFam,
    Pij(usize, usize),
    Qk(usize),
    Pk(usize),
    Radical,
    Decomp(usize),
    MaxIdeal,
}

impl Family {
    pub fn ideal(&self, spec: &FamilySpec) -> Result<Ideal> {
        match *self {
            Family::P2 => p2_generators(spec),
            Family::Det2 => determinantal2_generators(spec),
            Family::GFam => grobner_family_ideal(spec),
            Family::Pij(i, j) => minimal_prime(spec, i, j),
            Family::Qk(k) => q_component(spec, k),
            Family::Pk(k) => p_component(spec, k),
            Family::Radical => radical_generators(spec),
            Family::Decomp(idx) => {
                let comps = decomposition_components(spec)?;
                let len = comps.len();
                comps.into_iter().nth(idx).ok_or_else(|| {
                    Error::BadIndex(format!("component {idx} out of range 0..{len}"))
                })
            }
            Family::MaxIdeal => maximal_ideal(spec),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::P2 => write!(f, "p2"),
            Family::Det2 => write!(f, "det2"),
            Family::GFam => write!(f, "gfam"),
            Family::Pij(i, j) => write!(f, "pij:{i},{j}"),
            Family::Qk(k) => write!(f, "qk:{k}"),
            Family::Pk(k) => write!(f, "pk:{k}"),
            Family::Radical => write!(f, "radical"),
            Family::Decomp(i) => write!(f, "decomp:{i}"),
            Family::MaxIdeal => write!(f, "maxideal"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadIndex(format!("{t:?} in family {s:?}")))
        };
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        match (head, arg) {
            ("p2", None) => Ok(Family::P2),
            ("det2", None) => Ok(Family::Det2),
            ("gfam", None) => Ok(Family::GFam),
            ("radical", None) => Ok(Family::Radical),
            ("maxideal", None) => Ok(Family::MaxIdeal),
            ("qk", Some(a)) => Ok(Family::Qk(num(a)?)),
            ("pk", Some(a)) => Ok(Family::Pk(num(a)?)),
            ("decomp", Some(a)) => Ok(Family::Decomp(num(a)?)),
            ("pij", Some(a)) => {
                let (i, j) = a
                    .split_once(',')
                    .ok_or_else(|| Error::BadIndex(format!("expected pij:i,j, got {s:?}")))?;
                Ok(Family::Pij(num(i)?, num(j)?))
            }
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}
