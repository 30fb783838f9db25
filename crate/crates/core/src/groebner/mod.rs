//! Division, S-polynomials, Buchberger's algorithm, interreduction and
//! ideals with cached reduced bases.

mod basis;
mod buchberger;
pub mod budget;
mod ideal;
mod reduce;

pub use basis::{find_nonreducing_pair, reduce_basis, GroebnerBasis};
pub use buchberger::{buchberger, GbOptions, GbStats};
pub use ideal::{
    cache_key, clear_cache, contains, ideal_equal, prime_cache, reduced_groebner, Ideal,
};
pub use reduce::{normal_form, s_polynomial};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{Field, MonomialOrder, Polynomial, Ring};

    fn ring(n: usize) -> Arc<Ring> {
        Ring::symmetric(Field::Rationals, n).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(s, r).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring(2);
        let f = p(&r, "x1_1*x2_2 + x1_2^2");
        let (gb, stats) =
            reduced_groebner(&r, std::slice::from_ref(&f), &GbOptions::default()).unwrap();
        assert_eq!(gb.elements(), &[f]);
        assert_eq!(stats.pairs_processed, 0);
    }

    #[test]
    fn monomial_inputs_are_already_a_basis() {
        let r = ring(3);
        let gens = vec![p(&r, "x1_2*x1_3"), p(&r, "x2_2^2"), p(&r, "x1_2*x3_3")];
        let (gb, _) = reduced_groebner(&r, &gens, &GbOptions::default()).unwrap();
        let mut expected = gens.clone();
        expected
            .sort_by(|a, b| r.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        assert_eq!(gb.elements(), expected.as_slice());
    }

    #[test]
    fn tail_reduction() {
        let r = ring(2);
        let gens = vec![p(&r, "x1_1"), p(&r, "x1_1*x2_2 + x1_2^2")];
        let (gb, _) = reduced_groebner(&r, &gens, &GbOptions::default()).unwrap();
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x1_2^2", "x1_1"]);
        let again = reduce_basis(&gb).unwrap();
        assert_eq!(again, gb);
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let r = ring(2);
        let gens = vec![p(&r, "x1_1 - 1"), p(&r, "x1_1")];
        let (gb, _) = reduced_groebner(&r, &gens, &GbOptions::default()).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.len(), 1);
    }

    #[test]
    fn paranoid_mode_agrees() {
        let r = ring(3);
        let gens: Vec<Polynomial> = [
            "x1_1*x2_2 + x1_2^2",
            "x1_1*x3_3 + x1_3^2",
            "x2_2*x3_3 + x2_3^2",
            "x1_1*x2_3 + x1_2*x1_3",
            "x2_2*x1_3 + x1_2*x2_3",
            "x3_3*x1_2 + x1_3*x2_3",
        ]
        .iter()
        .map(|s| p(&r, s))
        .collect();
        let (fast, fs) = reduced_groebner(&r, &gens, &GbOptions::default()).unwrap();
        let (slow, ss) = reduced_groebner(&r, &gens, &GbOptions { paranoid: true }).unwrap();
        assert_eq!(fast, slow);
        assert!(ss.pairs_processed > fs.pairs_processed);
        assert!(find_nonreducing_pair(fast.elements()).unwrap().is_none());
        assert_eq!(fast.len(), 14);
    }

    #[test]
    fn ideal_equality_ignores_units() {
        let r = ring(2);
        let a = Ideal::new(&r, [p(&r, "x1_1*x2_2 + x1_2^2")]).unwrap();
        let b = Ideal::new(&r, [p(&r, "2*x1_1*x2_2 + 2*x1_2^2")]).unwrap();
        let order = MonomialOrder::DiagLex { n: 2 };
        assert!(ideal_equal(&a, &b, &order).unwrap());
        assert!(ideal_equal(&a, &a, &order).unwrap());
        assert!(contains(&a, &Polynomial::zero(&r), &order).unwrap());
    }

    #[test]
    fn cache_is_reused() {
        let r = ring(2);
        let a = Ideal::new(&r, [p(&r, "x1_1*x2_2 + x1_2^2"), p(&r, "x1_2^3")]).unwrap();
        let b = Ideal::new(&r, [p(&r, "x1_2^3"), p(&r, "3*x1_1*x2_2 + 3*x1_2^2")]).unwrap();
        assert_eq!(cache_key(&a), cache_key(&b));
        let (first, _) = a.groebner_traced().unwrap();
        let (second, stats) = b.groebner_traced().unwrap();
        assert!(stats.is_none());
        assert!(Arc::ptr_eq(&first, &second));
    }

    #[test]
    fn budget_exhaustion_reports_stats() {
        let r = ring(3);
        let gens = vec![p(&r, "x1_1*x2_2 + x1_2^2"), p(&r, "x1_1*x3_3 + x1_3^2")];
        let past = std::time::Instant::now() - std::time::Duration::from_millis(1);
        let out =
            budget::with_deadline(Some(past), || buchberger(&r, &gens, &GbOptions::default()));
        assert!(matches!(out, Err(crate::Error::BudgetExceeded(_))));
    }
}
