//! Buchberger's algorithm with the Gebauer-Moeller installation of the
//! coprime and chain criteria, and the normal selection strategy.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::basis::GroebnerBasis;
use super::budget;
use super::reduce::{s_polynomial, Reducers};
use crate::algebra::{Exponent, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbOptions {
    /// Disables both criteria and keeps every element: all pairs are reduced.
    pub paranoid: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub reductions_to_zero: usize,
    pub coprime_skipped: usize,
    pub chain_skipped: usize,
    pub basis_size: usize,
    pub elapsed_ms: u64,
}

/// Pair queue key: lcm degree, lcm under the ring order, then indices.
type PairKey = (u32, SmallVec<[Exponent; 24]>, usize, usize);

struct State {
    ring: Arc<Ring>,
    paranoid: bool,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: BTreeMap<PairKey, Monomial>,
    stats: GbStats,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().unwrap()
    }

    fn key(&self, i: usize, j: usize, lcm: &Monomial) -> PairKey {
        (lcm.degree(), self.ring.sort_key(lcm), i, j)
    }

    fn insert(&mut self, h: Polynomial) {
        let new = self.basis.len();
        self.basis.push(h);
        self.active.push(true);

        if self.paranoid {
            for j in 0..new {
                let lcm = self.lm(j).lcm(self.lm(new));
                let key = self.key(j, new, &lcm);
                self.pairs.insert(key, lcm);
            }
            return;
        }

        let lm_h = self.lm(new).clone();
        let cands: Vec<(usize, Monomial, bool)> = (0..new)
            .filter(|&j| self.active[j])
            .map(|j| {
                let lm_j = self.lm(j);
                (j, lm_h.lcm(lm_j), lm_h.is_coprime(lm_j))
            })
            .collect();

        // Chain criterion among the new pairs. A coprime pair survives this
        // step so that pairs sharing its lcm are discarded, then the first
        // criterion drops it.
        let mut pending: Vec<(usize, Monomial, bool)> = cands;
        pending.reverse();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((j, lcm, coprime)) = pending.pop() {
            let dominated = |q: &(usize, Monomial, bool)| q.1.divides(&lcm);
            if coprime || !(pending.iter().any(dominated) || kept.iter().any(dominated)) {
                kept.push((j, lcm, coprime));
            } else {
                self.stats.chain_skipped += 1;
            }
        }
        let mut fresh: Vec<(usize, Monomial)> = Vec::new();
        for (j, lcm, coprime) in kept {
            if coprime {
                self.stats.coprime_skipped += 1;
            } else {
                fresh.push((j, lcm));
            }
        }

        // Old pairs made redundant by the new element.
        let before = self.pairs.len();
        let basis = &self.basis;
        self.pairs.retain(|&(_, _, i, j), lcm| {
            let lm = |k: usize| basis[k].leading_monomial().unwrap();
            !(lm_h.divides(lcm) && &lm(i).lcm(&lm_h) != lcm && &lm(j).lcm(&lm_h) != lcm)
        });
        self.stats.chain_skipped += before - self.pairs.len();

        for (j, lcm) in fresh {
            let key = self.key(j, new, &lcm);
            self.pairs.insert(key, lcm);
        }

        for j in 0..new {
            if self.active[j] && lm_h.divides(self.lm(j)) {
                self.active[j] = false;
            }
        }
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers::new(
            self.basis
                .iter()
                .zip(&self.active)
                .filter(|(_, &a)| a)
                .map(|(g, _)| g),
        )
    }
}

/// Computes a Groebner basis of the ideal generated by `gens` under the
/// order of `ring`. The result is not interreduced; see
/// [`reduce_basis`](super::reduce_basis).
pub fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    opts: &GbOptions,
) -> Result<(GroebnerBasis, GbStats)> {
    let started = Instant::now();
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let mut state = State {
        ring: ring.clone(),
        paranoid: opts.paranoid,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: BTreeMap::new(),
        stats: GbStats::default(),
    };

    let mut inputs: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::monic)
        .collect::<Result<_>>()?;
    inputs.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    inputs.dedup();

    let unit = |stats: GbStats| {
        let one = Polynomial::one(ring);
        (GroebnerBasis::new(ring.clone(), vec![one], false), stats)
    };

    for g in inputs {
        if g.is_unit() {
            return Ok(unit(state.stats));
        }
        state.insert(g);
    }

    while let Some(((_, _, i, j), _)) = state.pairs.pop_first() {
        if budget::expired() {
            state.stats.elapsed_ms = started.elapsed().as_millis() as u64;
            state.stats.basis_size = state.basis.len();
            return Err(Error::BudgetExceeded(state.stats));
        }
        state.stats.pairs_processed += 1;
        let s = s_polynomial(&state.basis[i], &state.basis[j])?;
        let h = state.reducers().reduce(&s)?;
        if h.is_zero() {
            state.stats.reductions_to_zero += 1;
            continue;
        }
        let h = h.monic()?;
        if h.is_unit() {
            state.stats.elapsed_ms = started.elapsed().as_millis() as u64;
            return Ok(unit(state.stats));
        }
        state.insert(h);
    }

    let elements: Vec<Polynomial> = state
        .basis
        .into_iter()
        .zip(state.active)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    state.stats.basis_size = elements.len();
    state.stats.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok((
        GroebnerBasis::new(ring.clone(), elements, false),
        state.stats,
    ))
}
