use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::basis::{reduce_basis, GroebnerBasis};
use super::buchberger::{buchberger, GbOptions, GbStats};
use crate::algebra::{MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};

/// An ideal given by generators in a fixed ring.
#[derive(Clone, PartialEq)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let other = other.to_ring(&self.ring)?;
        Ideal::new(
            &self.ring,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ideal::new(&self.ring, self.generators.iter().cloned().chain(extra))
    }

    pub fn to_ring(&self, ring: &Arc<Ring>) -> Result<Ideal> {
        if &self.ring == ring {
            return Ok(self.clone());
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| g.to_ring(ring))
                .collect::<Result<_>>()?,
        })
    }

    pub fn in_order(&self, order: &MonomialOrder) -> Result<Ideal> {
        self.to_ring(&self.ring.with_order(order.clone())?)
    }

    /// Reduced Groebner basis under the ring's order, shared through the
    /// process-wide cache.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        Ok(self.groebner_traced()?.0)
    }

    /// As [`Ideal::groebner`], also reporting whether the cache was hit and
    /// the engine statistics on a miss.
    pub fn groebner_traced(&self) -> Result<(Arc<GroebnerBasis>, Option<GbStats>)> {
        let key = cache_key(self);
        if let Some(hit) = cache().lock().unwrap().get(&key) {
            return Ok((hit.clone(), None));
        }
        let (gb, stats) = reduced_groebner(&self.ring, &self.generators, &GbOptions::default())?;
        let gb = Arc::new(gb);
        cache().lock().unwrap().insert(key, gb.clone());
        Ok((gb, Some(stats)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        let f = f.to_ring(&self.ring)?;
        self.groebner()?.reduces_to_zero(&f)
    }

    /// `other` is a subset of `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.groebner()?;
        for g in &other.generators {
            if !gb.reduces_to_zero(&g.to_ring(&self.ring)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Buchberger followed by interreduction, bypassing the cache.
pub fn reduced_groebner(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    opts: &GbOptions,
) -> Result<(GroebnerBasis, GbStats)> {
    let (gb, stats) = buchberger(ring, gens, opts)?;
    Ok((reduce_basis(&gb)?, stats))
}

/// Canonical text identifying `(field, order, sorted monic generators)`.
/// Two ideals with equal keys have the same reduced basis.
pub fn cache_key(ideal: &Ideal) -> String {
    let mut gens: Vec<String> = ideal
        .generators
        .iter()
        .map(|g| g.monic().map(|m| m.to_string()).unwrap_or_default())
        .collect();
    gens.sort();
    gens.dedup();
    format!(
        "{}|{}|{}",
        ideal.ring.field(),
        ideal.ring.order(),
        gens.join(";")
    )
}

fn cache() -> &'static Mutex<HashMap<String, Arc<GroebnerBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<GroebnerBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Drops every cached basis.
pub fn clear_cache() {
    cache().lock().unwrap().clear();
}

/// Stores an externally obtained reduced basis (e.g. from a disk cache).
pub fn prime_cache(ideal: &Ideal, basis: GroebnerBasis) {
    cache()
        .lock()
        .unwrap()
        .insert(cache_key(ideal), Arc::new(basis));
}

/// `f` lies in `ideal`, decided by normal form against the reduced basis
/// under `order`.
pub fn contains(ideal: &Ideal, f: &Polynomial, order: &MonomialOrder) -> Result<bool> {
    let i = ideal.in_order(order)?;
    i.contains(f)
}

/// Equality of ideals via their reduced bases under `order`.
pub fn ideal_equal(a: &Ideal, b: &Ideal, order: &MonomialOrder) -> Result<bool> {
    let ga = a.in_order(order)?.groebner()?;
    let gb = b.in_order(order)?.groebner()?;
    Ok(ga.elements() == gb.elements())
}

impl Ideal {
    /// Equality under this ideal's own order.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        ideal_equal(self, other, self.ring.order())
    }
}
