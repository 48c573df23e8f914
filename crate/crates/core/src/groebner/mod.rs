//! Ideals, reduced Gröbner bases, and the ideal-level toolkit built on them:
//! elimination, membership, intersection, colon ideals and equality.

mod buchberger;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{fresh_name, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

pub use buchberger::s_polynomial;

/// An ideal given by generators. The empty generator list is the zero ideal.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`'s
    /// variables and are re-sorted by `ring`'s order.
    pub fn new(ring: &RingRef, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if !g.ring().same_space(ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g.to_ring(ring));
            }
        }
        Ok(Ideal { ring: ring.clone(), generators: gens })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), generators: vec![Polynomial::one(ring)] }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The reduced Gröbner basis under the ring's own order.
    pub fn groebner_basis(&self) -> GroebnerBasis {
        buchberger(self, self.ring.order())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner_basis().contains(f)
    }

    pub fn to_ring(&self, ring: &RingRef) -> Ideal {
        Ideal::new(ring, self.generators.iter().cloned()).expect("same variables")
    }
}

/// A Gröbner basis; when `reduced` it is the unique reduced basis for its
/// ideal and order, listed by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { ring: self.ring.clone(), generators: self.elements.clone() }
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|g| g.render()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let ring =
        if ideal.ring.order() == order { ideal.ring.clone() } else { ideal.ring.with_order(order) };
    let elements = buchberger::reduced_basis(&ring, &ideal.generators);
    GroebnerBasis { ring, elements, reduced: true }
}

/// Remainder of `f` on division by `basis`; zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    assert!(f.ring().same_space(&basis.ring), "normal_form: ring mismatch");
    let f = f.to_ring(&basis.ring);
    let refs: Vec<&Polynomial> = basis.elements.iter().collect();
    buchberger::reduce(&f, &refs)
}

/// `ideal ∩ K[x_{k+1}, ..., x_n]`, returned in the ring of the remaining
/// variables under graded reverse lex. The generators are that ideal's reduced
/// Gröbner basis.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal> {
    let n = ideal.ring.nvars();
    if k > n {
        return Err(Error::InvalidInput(format!("cannot eliminate {k} of {n} variables")));
    }
    let gb = buchberger(ideal, MonomialOrder::Block(k));
    let tail = ideal.ring.tail(k, MonomialOrder::GrevLex);
    let generators = gb
        .elements
        .iter()
        .filter(|g| g.free_of_leading(k))
        .map(|g| g.restrict_tail(k, &tail))
        .collect();
    Ok(Ideal { ring: tail, generators })
}

/// `I ∩ J` by eliminating `w` from `w·I + (1 − w)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !i.ring.same_space(&j.ring) {
        return Err(Error::RingMismatch);
    }
    let ring = &i.ring;
    let target = ring.with_order(MonomialOrder::GrevLex);
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&target));
    }
    let taken: HashSet<String> = ring.vars().iter().cloned().collect();
    let w_name = fresh_name("w", &taken);
    let mut vars = vec![w_name];
    vars.extend(ring.vars().iter().cloned());
    let big = Ring::new(ring.field(), vars, MonomialOrder::Block(1))?;
    let map: Vec<usize> = (1..=ring.nvars()).collect();
    let w = Polynomial::var(&big, 0);
    let one_minus_w = &Polynomial::one(&big) - &w;
    let mut gens = Vec::with_capacity(i.generators.len() + j.generators.len());
    gens.extend(i.generators.iter().map(|f| &w * &f.embed(&big, &map)));
    gens.extend(j.generators.iter().map(|g| &one_minus_w * &g.embed(&big, &map)));
    let elim = eliminate(&Ideal { ring: big, generators: gens }, 1)?;
    Ok(elim.to_ring(&target))
}

/// `(I : h) = {f : f·h ∈ I}` via `I ∩ (h)` followed by exact division by `h`.
pub fn colon(i: &Ideal, h: &Polynomial) -> Result<Ideal> {
    if h.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !h.ring().same_space(&i.ring) {
        return Err(Error::RingMismatch);
    }
    let principal = Ideal::new(&i.ring, [h.clone()])?;
    let both = intersect(i, &principal)?;
    let mut quotients = Vec::with_capacity(both.generators.len());
    for g in &both.generators {
        let (q, r) = g.divide(std::slice::from_ref(h), MonomialOrder::GrevLex)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("colon: {g} is not divisible by {h}")));
        }
        quotients.push(q.into_iter().next().unwrap());
    }
    let ideal = Ideal::new(both.ring(), quotients)?;
    Ok(ideal.groebner_basis().to_ideal())
}

/// Equality of ideals by comparing reduced Gröbner bases under `order`.
pub fn ideal_equal(i: &Ideal, j: &Ideal, order: MonomialOrder) -> Result<bool> {
    if !i.ring.same_space(&j.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(buchberger(i, order).elements == buchberger(j, order).elements)
}

/// Every element has at most two terms.
pub fn is_binomial_basis(basis: &GroebnerBasis) -> bool {
    basis.elements.iter().all(|g| g.len() <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parser::parse_polynomial;
    use proptest::prelude::*;

    fn ring(q: u64, vars: &[&str], order: MonomialOrder) -> RingRef {
        Ring::new(PrimeField::new(q).unwrap(), vars.iter().copied(), order).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    fn rendered(i: &Ideal) -> Vec<String> {
        i.generators().iter().map(|g| g.render()).collect()
    }

    fn assert_buchberger_criterion(gb: &GroebnerBasis) {
        for (a, f) in gb.elements().iter().enumerate() {
            for g in &gb.elements()[a + 1..] {
                assert!(gb.normal_form(&s_polynomial(f, g)).is_zero(), "S({f}, {g}) does not reduce to 0");
            }
        }
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring(2, &["t1"], MonomialOrder::GrevLex);
        let gb = ideal(&r, &["t1^2 - t1"]).groebner_basis();
        assert_eq!(gb.to_string(), "{t1^2 + t1}");

        let r = ring(5, &["a", "b"], MonomialOrder::GrevLex);
        let gb = ideal(&r, &["3*a*b + 2*b^2 + 1"]).groebner_basis();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0].leading_coeff().unwrap().value(), 1);
    }

    #[test]
    fn elimination_of_a_two_point_parameterization() {
        // (t1 - y1 z, t2 - (y1+1) z, y1^2 - y1) over F_2, eliminating z and y1.
        let r = ring(2, &["z", "y1", "t1", "t2"], MonomialOrder::Block(2));
        let i = ideal(&r, &["t1 - y1*z", "t2 - (y1+1)*z", "y1^2 - y1"]);
        let gb = buchberger(&i, MonomialOrder::Block(2));
        assert_buchberger_criterion(&gb);
        let free: Vec<_> = gb.elements().iter().filter(|g| g.free_of_leading(2)).collect();
        assert_eq!(free.len(), 1);
        assert_eq!(free[0].render(), "t1*t2");
        let elim = eliminate(&i, 2).unwrap();
        assert_eq!(rendered(&elim), vec!["t1*t2"]);
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(3, &["z", "t1", "t2"], MonomialOrder::GrevLex);
        let i = ideal(&r, &["t1 - z", "t2 - z"]);
        assert_eq!(rendered(&eliminate(&i, 1).unwrap()), vec!["t1 + 2*t2"]);
        let whole = eliminate(&i, 0).unwrap();
        assert_eq!(whole.generators(), i.groebner_basis().elements());
        for e in eliminate(&i, 1).unwrap().generators() {
            let lifted = e.embed(&r, &[1, 2]);
            assert!(i.contains(&lifted));
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(5, &["y1"], MonomialOrder::GrevLex);
        let gb = ideal(&r, &["y1^5 - y1"]).groebner_basis();
        let y5 = parse_polynomial("y1^5", &r).unwrap();
        assert_eq!(gb.normal_form(&y5).render(), "y1");
        assert!(gb.contains(&parse_polynomial("y1^7 - y1^3", &r).unwrap()));
        assert_eq!(gb.normal_form(&Polynomial::one(&r)), Polynomial::one(&r));
    }

    #[test]
    fn intersection_examples() {
        let r = ring(5, &["t1", "t2"], MonomialOrder::GrevLex);
        let a = ideal(&r, &["t1"]);
        let b = ideal(&r, &["t2"]);
        assert_eq!(rendered(&intersect(&a, &b).unwrap()), vec!["t1*t2"]);
        let c = ideal(&r, &["t1^2 - t2", "t2^3"]);
        let cc = intersect(&c, &c).unwrap();
        assert!(ideal_equal(&cc, &c, MonomialOrder::GrevLex).unwrap());
        // point ideals of [0:1] and [1:0]
        let p01 = ideal(&r, &["t1"]);
        let p10 = ideal(&r, &["t2"]);
        assert_eq!(rendered(&intersect(&p01, &p10).unwrap()), vec!["t1*t2"]);
        assert!(intersect(&a, &Ideal::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn colon_examples() {
        let r = ring(5, &["t1", "t2"], MonomialOrder::GrevLex);
        let i = ideal(&r, &["t1*t2"]);
        let t2 = parse_polynomial("t2", &r).unwrap();
        assert_eq!(rendered(&colon(&i, &t2).unwrap()), vec!["t1"]);
        let j = ideal(&r, &["t1^2 - t2", "t2^3"]);
        let same = colon(&j, &Polynomial::one(&r)).unwrap();
        assert!(ideal_equal(&same, &j, MonomialOrder::GrevLex).unwrap());
        assert_eq!(colon(&i, &Polynomial::zero(&r)).unwrap_err(), Error::DivisionByZero);
        let t1t2 = parse_polynomial("t1*t2", &r).unwrap();
        assert!(colon(&i, &t1t2).unwrap().groebner_basis().is_unit());
    }

    #[test]
    fn equality_and_binomial_examples() {
        let r = ring(3, &["t1", "t2", "t3"], MonomialOrder::GrevLex);
        let a = ideal(&r, &["t1"]);
        assert!(ideal_equal(&a, &a, MonomialOrder::Lex).unwrap());
        assert!(!ideal_equal(&a, &ideal(&r, &["t1^2"]), MonomialOrder::GrevLex).unwrap());
        assert!(!is_binomial_basis(&ideal(&r, &["t1 + t2 + t3"]).groebner_basis()));
        assert!(is_binomial_basis(&ideal(&r, &["t1*t2 - t3^2"]).groebner_basis()));
    }

    #[test]
    fn inconsistent_system_gives_unit_basis() {
        let r = ring(5, &["x", "y"], MonomialOrder::Lex);
        let gb = ideal(&r, &["x*y - 1", "x"]).groebner_basis();
        assert!(gb.is_unit());
    }

    fn random_poly(r: &RingRef, terms: &[(u32, u32, u32, i64)]) -> Polynomial {
        Polynomial::from_terms(
            r,
            terms.iter().map(|&(a, b, c, k)| (Monomial::from_exponents(&[a, b, c]), k)),
        )
    }

    fn gen_strategy() -> impl Strategy<Value = Vec<Vec<(u32, u32, u32, i64)>>> {
        prop::collection::vec(prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 1i64..5), 1..4), 1..4)
    }

    fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::Block(1)),
            Just(MonomialOrder::Block(2)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduced_basis_properties(gens in gen_strategy(), order in order_strategy(), q in prop::sample::select(vec![2u64, 3, 5])) {
            let r = ring(q, &["x", "y", "z"], order);
            let polys: Vec<Polynomial> = gens.iter().map(|t| random_poly(&r, t)).collect();
            let i = Ideal::new(&r, polys.clone()).unwrap();
            let gb = i.groebner_basis();
            assert_buchberger_criterion(&gb);
            for g in i.generators() {
                prop_assert!(gb.contains(g));
            }
            let lms = gb.leading_monomials();
            for (a, g) in gb.elements().iter().enumerate() {
                prop_assert_eq!(g.leading_coeff().unwrap().value(), 1);
                for (b, lm) in lms.iter().enumerate() {
                    if a != b {
                        prop_assert!(g.terms().iter().all(|(m, _)| !lm.divides(m)));
                    }
                }
            }
            let mut shuffled = polys;
            shuffled.reverse();
            let again = Ideal::new(&r, shuffled).unwrap().groebner_basis();
            prop_assert_eq!(gb.elements(), again.elements());
        }
    }
}
