//! Sparse multivariate polynomials over prime fields.

mod monomial;
mod order;
mod polynomial;
mod rational;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term};

pub(crate) use polynomial::merge_terms;
pub use rational::RationalFunction;
pub use ring::{Ring, RingRef};

pub(crate) use ring::{fresh_name, is_identifier};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::field::{FieldElement, PrimeField};
    use crate::parser::parse_polynomial;
    use proptest::prelude::*;

    fn ring(q: u64, vars: &[&str], order: MonomialOrder) -> RingRef {
        Ring::new(PrimeField::new(q).unwrap(), vars.iter().copied(), order).unwrap()
    }

    fn p(src: &str, r: &RingRef) -> Polynomial {
        parse_polynomial(src, r).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(5, &["y1", "y2"], MonomialOrder::GrevLex);
        let prod = p("y1 + 1", &r).checked_mul(&p("y2 + 1", &r)).unwrap();
        assert_eq!(prod.render(), "y1*y2 + y1 + y2 + 1");

        let r2 = ring(2, &["y1"], MonomialOrder::GrevLex);
        assert!(p("y1 + 1", &r2).checked_add(&p("y1 + 1", &r2)).unwrap().is_zero());

        let r3 = ring(3, &["t1", "t2"], MonomialOrder::GrevLex);
        let d = p("t1 - t2", &r3).checked_mul(&p("t1 + t2", &r3)).unwrap();
        assert_eq!(d, p("t1^2 + 2*t2^2", &r3));

        let other = ring(3, &["u"], MonomialOrder::GrevLex);
        assert_eq!(p("t1", &r3).checked_add(&p("u", &other)), Err(Error::RingMismatch));
    }

    #[test]
    fn mixed_orders_combine() {
        let lex = ring(5, &["x", "y"], MonomialOrder::Lex);
        let grev = lex.with_order(MonomialOrder::GrevLex);
        let a = p("x + y^3", &lex);
        let b = p("x + y^3", &grev);
        assert_eq!(a, b);
        assert_eq!(a.leading_monomial().unwrap().exponents(), &[1, 0]);
        assert_eq!(b.leading_monomial().unwrap().exponents(), &[0, 3]);
        assert!(a.checked_sub(&b).unwrap().is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let f = PrimeField::new(5).unwrap();
        let r = ring(5, &["y1", "y2"], MonomialOrder::GrevLex);
        let pt = |a: i64, b: i64| vec![f.element(a), f.element(b)];
        assert_eq!(p("y1*y2", &r).evaluate(&pt(2, 3)).unwrap().value(), 1);
        assert_eq!(p("y1 + 1", &r).evaluate(&pt(4, 0)).unwrap().value(), 0);
        assert_eq!(p("3*y1^2 + y2 + 4", &r).evaluate(&pt(0, 0)).unwrap().value(), 4);
        assert_eq!(
            p("y1", &r).evaluate(&[f.element(1)]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
        let g3 = PrimeField::new(3).unwrap();
        let bad: Vec<FieldElement> = vec![g3.element(1), g3.element(1)];
        assert_eq!(p("y1", &r).evaluate(&bad), Err(Error::FieldMismatch(5, 3)));
    }

    #[test]
    fn division_examples() {
        let r = ring(5, &["t1", "t2"], MonomialOrder::GrevLex);
        let (q, rem) = p("t1^2", &r).divide(&[p("t1", &r)], MonomialOrder::Lex).unwrap();
        assert_eq!(q, vec![p("t1", &r)]);
        assert!(rem.is_zero());

        // y1^6 = y1 * (y1^5 - y1) + y1^2
        let r1 = ring(5, &["y1"], MonomialOrder::Lex);
        let (q, rem) = p("y1^6", &r1).divide(&[p("y1^5 - y1", &r1)], MonomialOrder::Lex).unwrap();
        assert_eq!(q, vec![p("y1", &r1)]);
        assert_eq!(rem, p("y1^2", &r1));

        let f = p("t1 + 1", &r);
        let (q, rem) = f.divide(&[p("t2^2", &r)], MonomialOrder::GrevLex).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, f);

        assert_eq!(f.divide(&[Polynomial::zero(&r)], MonomialOrder::Lex), Err(Error::ZeroDivisor));
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring(5, &["t1", "t2", "t3"], MonomialOrder::GrevLex);
        let f = p("t1*t2 - t3^2", &r);
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), 2);
        let g = p("t1^5 - t1", &r);
        assert!(!g.is_homogeneous());
        assert_eq!(g.homogeneous_components(), vec![p("t1^5", &r), p("-t1", &r)]);
        let z = Polynomial::zero(&r);
        assert!(z.is_homogeneous());
        assert_eq!(z.total_degree(), -1);
        assert!(z.homogeneous_components().is_empty());
    }

    fn poly_strategy(nvars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), 0i64..5), 0..5)
    }

    fn build(r: &RingRef, terms: &[(Vec<u32>, i64)]) -> Polynomial {
        Polynomial::from_terms(r, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), *c)))
    }

    proptest! {
        #[test]
        fn division_identity_holds(
            q in prop::sample::select(vec![2u64, 3, 5]),
            f in poly_strategy(3),
            divs in prop::collection::vec(poly_strategy(3), 1..3),
            order in prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::GrevLex), Just(MonomialOrder::Block(1))],
        ) {
            let r = ring(q, &["a", "b", "c"], order);
            let f = build(&r, &f);
            let divs: Vec<Polynomial> = divs.iter().map(|d| build(&r, d)).filter(|d| !d.is_zero()).collect();
            prop_assume!(!divs.is_empty());
            let (qs, rem) = f.divide(&divs, order).unwrap();
            let mut acc = rem.clone();
            for (qi, di) in qs.iter().zip(&divs) {
                acc = &acc + &(qi * di);
                if !qi.is_zero() {
                    let lm = (qi * di).leading_monomial().unwrap().clone();
                    prop_assert_ne!(order.compare(&lm, f.leading_monomial().unwrap()), std::cmp::Ordering::Greater);
                }
            }
            prop_assert_eq!(&acc, &f);
            for (m, _) in rem.terms() {
                for d in &divs {
                    prop_assert!(!d.leading_monomial().unwrap().divides(m));
                }
            }
            prop_assert_eq!(f.divide(&divs, order).unwrap(), (qs, rem));
        }

        #[test]
        fn components_sum_back(terms in poly_strategy(2)) {
            let r = ring(3, &["a", "b"], MonomialOrder::GrevLex);
            let f = build(&r, &terms);
            let comps = f.homogeneous_components();
            let sum = comps.iter().fold(Polynomial::zero(&r), |acc, c| &acc + c);
            prop_assert_eq!(sum, f.clone());
            prop_assert!(comps.iter().all(|c| c.is_homogeneous()));
            prop_assert_eq!(f.is_homogeneous(), comps.len() <= 1);
        }
    }

    /// A polynomial of degree < q in each variable that vanishes on all of
    /// `F_q^n` is zero; checked over every coefficient vector.
    #[test]
    fn grid_vanishing_is_exhaustive_for_small_fields() {
        for (q, n) in [(2u64, 1usize), (2, 2), (3, 1), (3, 2)] {
            let field = PrimeField::new(q).unwrap();
            let vars: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
            let r = Ring::new(field, vars, MonomialOrder::GrevLex).unwrap();
            let q32 = q as u32;
            let monos: Vec<Monomial> = (0..q32.pow(n as u32))
                .map(|mut k| {
                    let e: Vec<u32> = (0..n).map(|_| { let d = k % q32; k /= q32; d }).collect();
                    Monomial::from_exponents(&e)
                })
                .collect();
            let grid: Vec<Vec<u32>> = (0..q32.pow(n as u32))
                .map(|mut k| (0..n).map(|_| { let d = k % q32; k /= q32; d }).collect())
                .collect();
            let total = q.pow(monos.len() as u32);
            let mut vanishing = 0;
            for mut code in 0..total {
                let terms: Vec<(Monomial, i64)> = monos
                    .iter()
                    .map(|m| { let c = (code % q) as i64; code /= q; (m.clone(), c) })
                    .collect();
                let f = Polynomial::from_terms(&r, terms);
                if grid.iter().all(|x| f.evaluate_raw(x) == 0) {
                    vanishing += 1;
                    assert!(f.is_zero(), "{f} vanishes on F_{q}^{n}");
                }
            }
            assert_eq!(vanishing, 1);
        }
    }
}
