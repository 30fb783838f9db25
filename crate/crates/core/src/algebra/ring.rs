//! Variables, monomial orders and the polynomial ring they determine.
//!
//! The variables of `k[X]` for a symmetric `n x n` matrix are the entries
//! `x_ij` with `i <= j`, enumerated row by row (`x11, x12, ..., x1n, x22, ...`).
//! Auxiliary variables (`z1, z2, ...`) used for elimination come after them.
//! Every order used here is lexicographic for some priority permutation of
//! that enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::field::Field;
use super::monomial::{Exponent, Monomial};
use crate::error::{Error, Result};

/// A variable: a symmetric matrix entry or an adjoined auxiliary variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarId {
    /// `x_{row,col}` with `1 <= row <= col`.
    Entry { row: usize, col: usize },
    /// `z_k`, `k >= 1`.
    Aux(usize),
}

impl VarId {
    /// Entry `(i, j)` of the symmetric matrix; `(j, i)` maps to the same variable.
    pub fn entry(i: usize, j: usize) -> VarId {
        VarId::Entry {
            row: i.min(j),
            col: i.max(j),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self, VarId::Entry { row, col } if row == col)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Entry { row, col } => write!(f, "x{row}_{col}"),
            VarId::Aux(k) => write!(f, "z{k}"),
        }
    }
}

/// Number of base variables `x_ij`, `i <= j`, of an `n x n` symmetric matrix.
pub fn base_var_count(n: usize) -> usize {
    n * (n + 1) / 2
}

fn entry_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    (i - 1) * n - (i - 1) * (i.saturating_sub(2)) / 2 + (j - i)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Lex with `x_ij > x_kl` iff `i < k`, or `i = k` and `j < l`.
    DiagLex { n: usize },
    /// Lex with the entries of row/column `k` first (`x_1k > ... > x_nk`,
    /// skipping `x_kk`), then `x_kk`, then the remaining variables in
    /// diagonal order.
    QkLex { n: usize, k: usize },
    /// Block order: the `aux` auxiliary variables (lex among themselves)
    /// are greater than every base variable, which compare by `base`.
    Elim {
        aux: usize,
        base: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn n(&self) -> usize {
        match self {
            MonomialOrder::DiagLex { n } | MonomialOrder::QkLex { n, .. } => *n,
            MonomialOrder::Elim { base, .. } => base.n(),
        }
    }

    pub fn aux_count(&self) -> usize {
        match self {
            MonomialOrder::Elim { aux, .. } => *aux,
            _ => 0,
        }
    }

    pub fn nvars(&self) -> usize {
        base_var_count(self.n()) + self.aux_count()
    }

    /// The order restricted to the base variables.
    pub fn base(&self) -> &MonomialOrder {
        match self {
            MonomialOrder::Elim { base, .. } => base,
            other => other,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            MonomialOrder::DiagLex { n } if *n >= 1 => Ok(()),
            MonomialOrder::QkLex { n, k } if *n >= 1 && (1..=*n).contains(k) => Ok(()),
            MonomialOrder::Elim { aux, base } if *aux >= 1 && base.aux_count() == 0 => {
                base.validate()
            }
            other => Err(Error::BadOrder(format!("{other:?}"))),
        }
    }

    /// Variable indices from most to least significant.
    fn priority(&self) -> Vec<usize> {
        match self {
            MonomialOrder::DiagLex { n } => (0..base_var_count(*n)).collect(),
            MonomialOrder::QkLex { n, k } => {
                let (n, k) = (*n, *k);
                let mut p: Vec<usize> = (1..=n)
                    .filter(|&i| i != k)
                    .map(|i| entry_index(n, i, k))
                    .collect();
                p.push(entry_index(n, k, k));
                for i in 1..=n {
                    for j in i..=n {
                        if i != k && j != k {
                            p.push(entry_index(n, i, j));
                        }
                    }
                }
                p
            }
            MonomialOrder::Elim { aux, base } => {
                let nb = base_var_count(base.n());
                (nb..nb + aux).chain(base.priority()).collect()
            }
        }
    }

    /// Parses `diag-lex` or `qk-lex:<k>` for a given matrix size.
    pub fn parse(s: &str, n: usize) -> Result<MonomialOrder> {
        let order = match s.trim() {
            "diag-lex" => MonomialOrder::DiagLex { n },
            other => match other.strip_prefix("qk-lex:").map(str::parse::<usize>) {
                Some(Ok(k)) => MonomialOrder::QkLex { n, k },
                _ => return Err(Error::BadOrder(other.to_string())),
            },
        };
        order.validate()?;
        Ok(order)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DiagLex { n } => write!(f, "diag-lex(n={n})"),
            MonomialOrder::QkLex { n, k } => write!(f, "qk-lex:{k}(n={n})"),
            MonomialOrder::Elim { aux, base } => write!(f, "elim({aux}; {base})"),
        }
    }
}

/// Compares two monomials under `order`.
pub fn compare(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    let nvars = order.nvars();
    for m in [a, b] {
        if m.nvars() != nvars {
            return Err(Error::UnknownVariable(format!(
                "monomial over {} variables, order has {nvars}",
                m.nvars()
            )));
        }
    }
    order.validate()?;
    Ok(lex_by(&order.priority(), a, b))
}

fn lex_by(priority: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    for &i in priority {
        match ea[i].cmp(&eb[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A polynomial ring `field[x_ij, z_k]` with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct Ring {
    field: Field,
    order: MonomialOrder,
    priority: Vec<usize>,
    identity: bool,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.order == other.order
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.order.hash(state);
    }
}

impl Ring {
    pub fn new(field: Field, order: MonomialOrder) -> Result<Arc<Ring>> {
        order.validate()?;
        let priority = order.priority();
        let identity = priority.iter().enumerate().all(|(i, &p)| i == p);
        Ok(Arc::new(Ring {
            field,
            order,
            priority,
            identity,
        }))
    }

    /// `field[x_ij]` under the diagonal order.
    pub fn symmetric(field: Field, n: usize) -> Result<Arc<Ring>> {
        Ring::new(field, MonomialOrder::DiagLex { n })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn base_nvars(&self) -> usize {
        base_var_count(self.n())
    }

    pub fn aux_count(&self) -> usize {
        self.order.aux_count()
    }

    pub fn var_index(&self, v: VarId) -> Result<usize> {
        let n = self.n();
        match v {
            VarId::Entry { row, col } if row >= 1 && row <= col && col <= n => {
                Ok(entry_index(n, row, col))
            }
            VarId::Aux(k) if k >= 1 && k <= self.aux_count() => Ok(self.base_nvars() + k - 1),
            other => Err(Error::UnknownVariable(other.to_string())),
        }
    }

    pub fn var_id(&self, index: usize) -> VarId {
        let nb = self.base_nvars();
        if index >= nb {
            return VarId::Aux(index - nb + 1);
        }
        let n = self.n();
        let mut rest = index;
        for i in 1..=n {
            let len = n - i + 1;
            if rest < len {
                return VarId::Entry {
                    row: i,
                    col: i + rest,
                };
            }
            rest -= len;
        }
        unreachable!("index below base variable count")
    }

    /// All variables in enumeration order.
    pub fn variables(&self) -> Vec<VarId> {
        (0..self.nvars()).map(|i| self.var_id(i)).collect()
    }

    /// Variable indices from most to least significant under this ring's order.
    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.identity {
            a.exponents().cmp(b.exponents())
        } else {
            lex_by(&self.priority, a, b)
        }
    }

    /// Exponents permuted into priority order; plain lexicographic comparison
    /// of keys agrees with [`Ring::cmp`].
    pub fn sort_key(&self, m: &Monomial) -> SmallVec<[Exponent; 24]> {
        let e = m.exponents();
        self.priority.iter().map(|&i| e[i]).collect()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.field, order)
    }

    pub fn with_field(&self, field: Field) -> Result<Arc<Ring>> {
        Ring::new(field, self.order.clone())
    }

    /// The ring on the base variables only, ordered by the base order.
    pub fn base_ring(&self) -> Result<Arc<Ring>> {
        Ring::new(self.field, self.order.base().clone())
    }

    /// This ring's base extended by `aux` auxiliary variables placed above
    /// every base variable.
    pub fn elimination_ring(&self, aux: usize) -> Result<Arc<Ring>> {
        Ring::new(
            self.field,
            MonomialOrder::Elim {
                aux,
                base: Box::new(self.order.base().clone()),
            },
        )
    }
}
