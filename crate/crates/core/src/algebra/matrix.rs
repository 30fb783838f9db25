use std::sync::Arc;

use itertools::Itertools;

use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A dense matrix of polynomials over one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl SymbolicMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Precondition(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(SymbolicMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// The generic symmetric matrix `X = (x_ij)` of the ring.
    pub fn symmetric(ring: &Arc<Ring>) -> Self {
        let n = ring.n();
        let entries = (1..=n)
            .cartesian_product(1..=n)
            .map(|(i, j)| Polynomial::entry(ring, i, j).expect("entry of a ring variable"))
            .collect();
        SymbolicMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Matrix of integer constants.
    pub fn constant(ring: &Arc<Ring>, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged matrix".into()));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&v| Polynomial::from_i64(ring, v))
            .collect();
        SymbolicMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    /// Submatrix on 0-based row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SymbolicMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        SymbolicMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    fn expand(&self, signed: bool) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let k = self.rows;
        let ring = match self.entries.first() {
            Some(e) => e.ring().clone(),
            None => return Err(Error::Precondition("empty matrix".into())),
        };
        let mut sum = Polynomial::zero(&ring);
        for perm in (0..k).permutations(k) {
            let mut prod = Polynomial::one(&ring);
            for (i, &j) in perm.iter().enumerate() {
                prod = prod.try_mul(self.get(i, j))?;
            }
            if signed && inversions(&perm) % 2 == 1 {
                sum = &sum - &prod;
            } else {
                sum = &sum + &prod;
            }
        }
        Ok(sum)
    }
}

fn inversions(perm: &[usize]) -> usize {
    perm.iter()
        .enumerate()
        .map(|(i, a)| perm[i + 1..].iter().filter(|b| *b < a).count())
        .sum()
}

/// Sum over all permutations of the products `M[i][sigma(i)]`.
pub fn permanent(m: &SymbolicMatrix) -> Result<Polynomial> {
    m.expand(false)
}

/// Signed permutation expansion.
pub fn determinant(m: &SymbolicMatrix) -> Result<Polynomial> {
    m.expand(true)
}
