use crate::algebra::poly::sub_mul;
use crate::algebra::{Monomial, Polynomial, Term};
use crate::error::{Error, Result};

/// Reducer list sorted by ascending leading monomial, with support masks
/// for quick divisibility rejection.
pub(crate) struct Reducers<'a> {
    items: Vec<(&'a Polynomial, u64)>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut items: Vec<(&Polynomial, u64)> = polys
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| (g, g.leading_monomial().unwrap().support_mask()))
            .collect();
        if let Some((first, _)) = items.first() {
            let ring = first.ring().clone();
            items.sort_by(|a, b| {
                ring.cmp(
                    a.0.leading_monomial().unwrap(),
                    b.0.leading_monomial().unwrap(),
                )
            });
        }
        Reducers { items }
    }

    pub(crate) fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mask = m.support_mask();
        self.items
            .iter()
            .find(|(g, gm)| gm & !mask == 0 && g.leading_monomial().unwrap().divides(m))
            .map(|(g, _)| *g)
    }

    pub(crate) fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        let ring = f.ring().clone();
        let field = ring.field();
        let mut rem: Vec<Term> = Vec::new();
        let mut p: Vec<Term> = f.terms().to_vec();
        let mut start = 0;
        while start < p.len() {
            let lead = &p[start];
            match self.find(&lead.mono) {
                None => {
                    rem.push(lead.clone());
                    start += 1;
                }
                Some(g) => {
                    let gl = g.leading_term().unwrap();
                    let c = field.div(&lead.coeff, &gl.coeff)?;
                    let m = lead.mono.div(&gl.mono).unwrap();
                    p = sub_mul(&ring, &p[start..], &c, &m, g.terms())?;
                    start = 0;
                }
            }
        }
        Ok(Polynomial::from_sorted_terms(&ring, rem))
    }
}

/// Full reduction of `f` by `g`: the remainder has no term divisible by a
/// leading monomial of `g`. The largest reducible term is reduced first,
/// by the reducer with the smallest leading monomial that divides it.
pub fn normal_form(f: &Polynomial, g: &[Polynomial]) -> Result<Polynomial> {
    if g.iter().any(|h| h.ring() != f.ring()) {
        return Err(Error::RingMismatch);
    }
    Reducers::new(g).reduce(f)
}

/// `(L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Err(Error::ZeroPolynomial("s_polynomial"));
    };
    let field = f.ring().field();
    let l = tf.mono.lcm(&tg.mono);
    let a = f.mul_term(&field.inv(&tf.coeff)?, &l.div(&tf.mono).unwrap())?;
    let b = g.mul_term(&field.inv(&tg.coeff)?, &l.div(&tg.mono).unwrap())?;
    Ok(&a - &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, Ring};

    #[test]
    fn reduces_to_zero_by_itself() {
        let r = Ring::symmetric(Field::Rationals, 2).unwrap();
        let g = Polynomial::parse("x1_1*x2_2 + x1_2^2", &r).unwrap();
        assert!(normal_form(&g, std::slice::from_ref(&g)).unwrap().is_zero());
        let h = g.scale(&r.field().from_i64(-3));
        assert!(normal_form(&h, &[g]).unwrap().is_zero());
    }

    #[test]
    fn zero_in_zero_out() {
        let r = Ring::symmetric(Field::Rationals, 2).unwrap();
        let g = Polynomial::parse("x1_1", &r).unwrap();
        assert!(normal_form(&Polynomial::zero(&r), &[g]).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_of_two_diagonal_permanents() {
        let r = Ring::symmetric(Field::Rationals, 3).unwrap();
        let f = Polynomial::parse("x1_1*x2_2 + x1_2^2", &r).unwrap();
        let g = Polynomial::parse("x1_1*x3_3 + x1_3^2", &r).unwrap();
        let s = s_polynomial(&f, &g).unwrap();
        let expected = Polynomial::parse("x3_3*x1_2^2 - x2_2*x1_3^2", &r).unwrap();
        assert_eq!(s, expected);
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn remainder_with_non_monic_reducer() {
        let r = Ring::symmetric(Field::Rationals, 2).unwrap();
        let g = Polynomial::parse("2*x1_1 + x2_2", &r).unwrap();
        let f = Polynomial::parse("x1_1^2", &r).unwrap();
        let nf = normal_form(&f, &[g]).unwrap();
        assert_eq!(nf.to_string(), "1/4*x2_2^2");
    }
}
