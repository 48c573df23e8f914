use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::RingRef;
use crate::error::{Error, Result};
use crate::field::{ArithOp, FieldElement};

pub type Term = (Monomial, u32);

/// Sparse polynomial over a prime field.
///
/// Terms are kept sorted by the ring's order, largest first, and never carry a
/// zero coefficient. The zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Self::term(ring, 1, Monomial::var(index, ring.nvars()))
    }

    pub fn term(ring: &RingRef, c: i64, mono: Monomial) -> Self {
        let c = ring.field().reduce(c);
        let terms = if c == 0 { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Collects like terms, drops zeros, and sorts.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce(c));
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef, acc: HashMap<Monomial, u32>) -> Self {
        let order = ring.order();
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Terms already sorted descending with nonzero reduced coefficients.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.terms.first().map(|&(_, c)| self.ring.field().element(c as i64))
    }

    /// Total degree; the zero polynomial has degree -1.
    pub fn total_degree(&self) -> i64 {
        self.terms.iter().map(|(m, _)| m.degree() as i64).max().unwrap_or(-1)
    }

    /// Coefficient of `mono`, zero when absent.
    pub fn coeff(&self, mono: &Monomial) -> u32 {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|(m, _)| order.compare(mono, m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_space(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `other` with its terms sorted by this polynomial's order.
    fn aligned<'a>(&self, other: &'a Polynomial) -> std::borrow::Cow<'a, Polynomial> {
        if self.ring.order() == other.ring.order() {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.to_ring(&self.ring))
        }
    }

    pub fn arith(&self, op: ArithOp, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = self.aligned(other);
        Ok(match op {
            ArithOp::Add => self.merge(1, None, &other),
            ArithOp::Sub => self.merge(self.ring.field().neg(1), None, &other),
            ArithOp::Mul => self.mul_unchecked(&other),
        })
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(ArithOp::Add, other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(ArithOp::Sub, other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(ArithOp::Mul, other)
    }

    /// `self + c * m * g`, assuming `g` is sorted by the same order.
    fn merge(&self, c: u32, m: Option<&Monomial>, g: &Polynomial) -> Polynomial {
        let terms = merge_terms(&self.ring, &self.terms, c, m, &g.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_scaled(&self, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        let f = self.ring.field();
        let terms = merge_terms(&self.ring, &self.terms, f.neg(c), Some(m), &g.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = f.add(*e, f.mul(*ca, *cb));
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.order();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
        }
    }

    /// `c * m * self`; term order is preserved because orders are multiplicative.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.order();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(*a, c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, 1)) => self.clone(),
            Some(&(_, c)) => {
                let inv = self.ring.field().inv(c).expect("nonzero leading coefficient");
                self.scale(inv)
            }
        }
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let field = self.ring.field();
        if point.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        if let Some(p) = point.iter().find(|p| p.field() != field) {
            return Err(Error::FieldMismatch(field.order(), p.field().order()));
        }
        let raw: Vec<u32> = point.iter().map(|p| p.value()).collect();
        Ok(field.element(self.evaluate_raw(&raw) as i64))
    }

    /// Evaluation at reduced residues; the caller guarantees arity.
    pub fn evaluate_raw(&self, point: &[u32]) -> u32 {
        let f = self.ring.field();
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (&x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                    if v == 0 {
                        break;
                    }
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    /// Graded pieces of nonzero degree content, highest degree first.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut by_degree: Vec<(u64, Vec<Term>)> = Vec::new();
        for t in &self.terms {
            let d = t.0.degree();
            match by_degree.iter_mut().find(|(e, _)| *e == d) {
                Some((_, v)) => v.push(t.clone()),
                None => by_degree.push((d, vec![t.clone()])),
            }
        }
        by_degree.sort_by_key(|e| std::cmp::Reverse(e.0));
        by_degree
            .into_iter()
            .map(|(_, terms)| Polynomial { ring: self.ring.clone(), terms })
            .collect()
    }

    /// Reinterpret in a ring with the same variables but possibly another order.
    pub fn to_ring(&self, ring: &RingRef) -> Polynomial {
        assert!(self.ring.same_space(ring), "to_ring needs the same variables");
        let mut terms = self.terms.clone();
        if ring.order() != self.ring.order() {
            let order = ring.order();
            terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Map variable `i` of this ring to variable `map[i]` of `target`.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        assert_eq!(target.field(), self.ring.field());
        let n = target.nvars();
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exponents(&e), *c)
            })
            .collect();
        let order = target.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring: target.clone(), terms }
    }

    /// True if no term involves any of the first `k` variables.
    pub fn free_of_leading(&self, k: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
    }

    /// Drop the first `k` variables; the caller checks they do not occur.
    pub fn restrict_tail(&self, k: usize, target: &RingRef) -> Polynomial {
        debug_assert!(self.free_of_leading(k));
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[k..]), *c))
            .collect();
        let order = target.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring: target.clone(), terms }
    }

    /// Multivariate division by an ordered list of divisors under `order`.
    ///
    /// Returns quotients and remainder with `self = sum q_i d_i + r`, where no
    /// term of `r` is divisible by a leading monomial of the divisors.
    pub fn divide(
        &self,
        divisors: &[Polynomial],
        order: MonomialOrder,
    ) -> Result<(Vec<Polynomial>, Polynomial)> {
        for d in divisors {
            self.check_ring(d)?;
            if d.is_zero() {
                return Err(Error::ZeroDivisor);
            }
        }
        let ring = if self.ring.order() == order { self.ring.clone() } else { self.ring.with_order(order) };
        let divs: Vec<Polynomial> = divisors.iter().map(|d| d.to_ring(&ring)).collect();
        let f = ring.field();
        let mut p = self.to_ring(&ring);
        let mut quotients: Vec<Vec<(Monomial, i64)>> = vec![Vec::new(); divs.len()];
        let mut rem: Vec<Term> = Vec::new();
        while let Some((m, c)) = p.terms.first().cloned() {
            let hit = divs.iter().enumerate().find_map(|(i, d)| {
                let (lm, lc) = d.leading_term().unwrap();
                m.checked_div(lm).map(|shift| (i, shift, *lc))
            });
            match hit {
                Some((i, shift, lc)) => {
                    let coef = f.mul(c, f.inv(lc)?);
                    p = p.sub_scaled(coef, &shift, &divs[i]);
                    quotients[i].push((shift, coef as i64));
                }
                None => {
                    rem.push(p.terms.remove(0));
                }
            }
        }
        let quotients = quotients.into_iter().map(|t| Polynomial::from_terms(&ring, t)).collect();
        Ok((quotients, Polynomial { ring, terms: rem }))
    }

    /// Render with the ring's variable names, largest term first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = self.ring.vars();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else if *c == 1 {
                    m.render(names)
                } else {
                    format!("{c}*{}", m.render(names))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// `a + c * m * b` for term lists sorted by the ring's order.
pub(crate) fn merge_terms(
    ring: &RingRef,
    a: &[Term],
    c: u32,
    m: Option<&Monomial>,
    b: &[Term],
) -> Vec<Term> {
    let f = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    if c == 0 {
        out.extend_from_slice(a);
        return out;
    }
    let shifted = |t: &Term| -> Term {
        let mono = match m {
            Some(m) => t.0.mul(m),
            None => t.0.clone(),
        };
        (mono, f.mul(t.1, c))
    };
    let (mut i, mut j) = (0, 0);
    let mut pending_b: Option<Term> = b.first().map(shifted);
    while i < a.len() || pending_b.is_some() {
        match (a.get(i), pending_b.as_ref()) {
            (Some(ta), Some(tb)) => match order.compare(&ta.0, &tb.0) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending_b.take().unwrap());
                    j += 1;
                    pending_b = b.get(j).map(shifted);
                }
                Ordering::Equal => {
                    let s = f.add(ta.1, tb.1);
                    if s != 0 {
                        out.push((ta.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    pending_b = b.get(j).map(shifted);
                }
            },
            (Some(ta), None) => {
                out.push(ta.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending_b.take().unwrap());
                j += 1;
                pending_b = b.get(j).map(shifted);
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_space(&other.ring) {
            return false;
        }
        if self.ring.order() == other.ring.order() {
            self.terms == other.terms
        } else {
            self.terms == other.to_ring(&self.ring).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Operator forms panic on ring mismatch; use the checked_* methods for fallible code.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}
