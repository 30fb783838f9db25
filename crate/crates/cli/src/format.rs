//! Rendering of polynomial lists as text, JSON and CAS scripts.

use std::fmt::Write;

use serde::Serialize;

use permlab::{Field, Polynomial, Ring, VarId};

use crate::config::OutputFormat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cas {
    Singular,
    Macaulay2,
}

impl Cas {
    pub fn from_format(f: OutputFormat) -> Option<Cas> {
        match f {
            OutputFormat::Singular => Some(Cas::Singular),
            OutputFormat::Macaulay2 => Some(Cas::Macaulay2),
            _ => None,
        }
    }

    /// `x12` while every index is a single digit, indexed names beyond.
    pub fn var_name(self, v: VarId, n: usize) -> String {
        match v {
            VarId::Entry { row, col } if n <= 9 => format!("x{row}{col}"),
            VarId::Entry { row, col } => match self {
                Cas::Singular => format!("x({row})({col})"),
                Cas::Macaulay2 => format!("x_({row},{col})"),
            },
            VarId::Aux(k) => match self {
                Cas::Singular => format!("z({k})"),
                Cas::Macaulay2 => format!("z_{k}"),
            },
        }
    }
}

#[derive(Serialize)]
pub struct PolyList<'a> {
    pub schema: u32,
    pub command: &'a str,
    pub family: String,
    pub n: usize,
    pub field: String,
    pub order: String,
    pub size: usize,
    pub polynomials: Vec<String>,
}

pub fn text_lines(polys: &[Polynomial]) -> String {
    if polys.is_empty() {
        return "0\n".into();
    }
    polys.iter().map(|p| format!("{p}\n")).collect()
}

fn render(p: &Polynomial, cas: Cas, n: usize) -> String {
    let mut s = String::new();
    p.write_with(&mut s, &|v| cas.var_name(v, n))
        .expect("writing to a string");
    s
}

/// A self-contained script declaring the ring (variables in decreasing
/// priority, lex) and the ideal `I`. With `groebner`, also computes and
/// prints the reduced basis `G`.
pub fn script(cas: Cas, ring: &Ring, n: usize, polys: &[Polynomial], groebner: bool) -> String {
    let vars: Vec<String> = ring
        .priority()
        .iter()
        .map(|&i| cas.var_name(ring.var_id(i), n))
        .collect();
    let gens: Vec<String> = polys.iter().map(|p| render(p, cas, n)).collect();
    let mut out = String::new();
    match cas {
        Cas::Singular => {
            let ch = match ring.field() {
                Field::Rationals => 0,
                Field::Prime(p) => p,
            };
            writeln!(out, "ring R = {ch},({}),lp;", vars.join(",")).unwrap();
            if gens.is_empty() {
                writeln!(out, "ideal I = 0;").unwrap();
            } else {
                writeln!(out, "ideal I =\n  {};", gens.join(",\n  ")).unwrap();
            }
            if groebner {
                out.push_str("option(redSB);\nideal G = std(I);\nprint(G);\n");
            }
        }
        Cas::Macaulay2 => {
            let coeffs = match ring.field() {
                Field::Rationals => "QQ".to_string(),
                Field::Prime(p) => format!("ZZ/{p}"),
            };
            writeln!(
                out,
                "R = {coeffs}[{}, MonomialOrder=>Lex];",
                vars.join(", ")
            )
            .unwrap();
            if gens.is_empty() {
                writeln!(out, "I = ideal(0_R);").unwrap();
            } else {
                writeln!(out, "I = ideal(\n  {});", gens.join(",\n  ")).unwrap();
            }
            if groebner {
                out.push_str("G = gens gb I;\nprint G;\n");
            }
        }
    }
    out
}
