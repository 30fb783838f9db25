//! Checks of the structural claims about `P2(X)`. Each check builds the
//! ideals it needs, runs kernel operations and returns a [`CheckReport`]
//! with one entry per assertion.

mod decomposition;
mod lemmas;
mod misc;
mod primes;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::permideal::FamilySpec;

pub use decomposition::{
    check_colon_identities, check_primary_decomposition, check_qk_primary_evidence, qk_basis,
};
pub use lemmas::{
    check_depth_witness, check_grobner_theorem, check_monomial_lemmas, lemma_instances,
    LemmaInstances,
};
pub use misc::{check_char2, check_niermann, niermann_trial, NiermannTrial};
pub use primes::{check_minimal_primes_dim, check_radical};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Full subset enumeration in the colon identities.
    pub exhaustive: bool,
    /// Buchberger without criteria, and a full S-pair audit.
    pub paranoid: bool,
    /// Random trials for the Niermann check.
    pub trials: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            exhaustive: false,
            paranoid: false,
            trials: 25,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertionResult {
    pub name: String,
    pub passed: bool,
    pub witness: String,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub schema: u32,
    pub check: String,
    pub n: usize,
    pub field: String,
    pub passed: bool,
    pub assertions: Vec<AssertionResult>,
    pub total_ms: u64,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &AssertionResult> {
        self.assertions.iter().filter(|a| !a.passed)
    }

    pub fn assertion(&self, name: &str) -> Option<&AssertionResult> {
        self.assertions.iter().find(|a| a.name == name)
    }
}

/// Collects assertions for one check.
pub(crate) struct Recorder {
    check: &'static str,
    n: usize,
    field: Field,
    started: Instant,
    assertions: Vec<AssertionResult>,
}

impl Recorder {
    pub(crate) fn new(check: &'static str, spec: &FamilySpec) -> Self {
        Recorder {
            check,
            n: spec.n,
            field: spec.field,
            started: Instant::now(),
            assertions: Vec::new(),
        }
    }

    /// Runs `f`, recording whether it held and its witness. Budget
    /// exhaustion propagates; other kernel errors count as failures.
    pub(crate) fn assert(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(bool, String)>,
    ) -> Result<bool> {
        let t = Instant::now();
        let (passed, witness) = match f() {
            Ok(r) => r,
            Err(e @ Error::BudgetExceeded(_)) => return Err(e),
            Err(e) => (false, format!("error: {e}")),
        };
        self.assertions.push(AssertionResult {
            name: name.into(),
            passed,
            witness,
            ms: t.elapsed().as_millis() as u64,
        });
        Ok(passed)
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport {
            schema: SCHEMA_VERSION,
            check: self.check.to_string(),
            n: self.n,
            field: self.field.to_string(),
            passed: self.assertions.iter().all(|a| a.passed),
            assertions: self.assertions,
            total_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

pub(crate) fn require_n(spec: &FamilySpec, min: usize, check: &str) -> Result<()> {
    if spec.n < min {
        Err(Error::Precondition(format!(
            "{check} needs n >= {min}, got {}",
            spec.n
        )))
    } else {
        Ok(())
    }
}

pub(crate) fn require_odd_char(spec: &FamilySpec) -> Result<()> {
    if spec.field.characteristic() == 2 {
        Err(Error::Precondition(
            "this check needs characteristic other than 2".into(),
        ))
    } else {
        Ok(())
    }
}

pub(crate) fn poly(ring: &std::sync::Arc<Ring>, text: &str) -> Polynomial {
    Polynomial::parse(text, ring).expect("internal polynomial literal")
}

pub(crate) fn x(ring: &std::sync::Arc<Ring>, i: usize, j: usize) -> Polynomial {
    Polynomial::entry(ring, i, j).expect("index in range")
}

pub(crate) fn count_witness(count: usize, what: &str) -> String {
    format!("{count} {what}")
}

/// Registry of checks addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Monomial,
    Grobner,
    Primes,
    Depth,
    Radical,
    Qk,
    Colon,
    Decomp,
    Char2,
    Niermann,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Monomial,
        Check::Grobner,
        Check::Primes,
        Check::Depth,
        Check::Radical,
        Check::Qk,
        Check::Colon,
        Check::Decomp,
        Check::Char2,
        Check::Niermann,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Monomial => "monomial",
            Check::Grobner => "grobner",
            Check::Primes => "primes",
            Check::Depth => "depth",
            Check::Radical => "radical",
            Check::Qk => "qk",
            Check::Colon => "colon",
            Check::Decomp => "decomp",
            Check::Char2 => "char2",
            Check::Niermann => "niermann",
        }
    }

    /// The checks run by `all` for a field: everything but `char2` outside
    /// characteristic 2, and only `char2` in it.
    pub fn suite(field: Field) -> Vec<Check> {
        if field.characteristic() == 2 {
            vec![Check::Char2]
        } else {
            Check::ALL
                .into_iter()
                .filter(|c| *c != Check::Char2)
                .collect()
        }
    }

    /// `Ok(())` when the check applies at this size and field.
    pub fn applicable(&self, spec: &FamilySpec) -> Result<()> {
        let odd = || require_odd_char(spec);
        match self {
            Check::Monomial | Check::Depth | Check::Qk | Check::Colon => {
                odd()?;
                require_n(spec, 3, self.name())
            }
            Check::Grobner => {
                odd()?;
                if spec.n > 5 {
                    return Err(Error::Precondition(format!(
                        "grobner needs n <= 5, got {}",
                        spec.n
                    )));
                }
                Ok(())
            }
            Check::Primes | Check::Radical | Check::Decomp | Check::Niermann => odd(),
            Check::Char2 => {
                if spec.field != Field::Prime(2) {
                    return Err(Error::Precondition("char2 needs --field fp:2".into()));
                }
                Ok(())
            }
        }
    }

    pub fn run(&self, spec: &FamilySpec, opts: &CheckOptions) -> Result<CheckReport> {
        self.applicable(spec)?;
        match self {
            Check::Monomial => check_monomial_lemmas(spec),
            Check::Grobner => check_grobner_theorem(spec, opts),
            Check::Primes => check_minimal_primes_dim(spec),
            Check::Depth => check_depth_witness(spec),
            Check::Radical => check_radical(spec),
            Check::Qk => {
                let mut rec = Recorder::new("qk", spec);
                for k in 1..=spec.n {
                    decomposition::qk_evidence_into(&mut rec, spec, k)?;
                }
                Ok(rec.finish())
            }
            Check::Colon => check_colon_identities(spec, opts),
            Check::Decomp => check_primary_decomposition(spec),
            Check::Char2 => check_char2(spec),
            Check::Niermann => check_niermann(spec, opts.seed, opts.trials),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}
