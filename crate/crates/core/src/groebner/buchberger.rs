//! Buchberger's algorithm with the Gebauer–Möller pair update and the sugar
//! selection strategy.
//!
//! Every basis element carries a sugar degree, the degree it would have if the
//! input had been homogenized. Pairs are processed by increasing sugar. For
//! degree-compatible orders on homogeneous input this is the normal strategy;
//! for elimination orders it avoids the expression swell that selecting by
//! lcm degree produces.

use std::cmp::Ordering;

use crate::poly::{merge_terms, Monomial, Polynomial, RingRef, Term};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct State {
    ring: RingRef,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    sugar: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

/// Fully reduce `p` by `basis`, whose elements must be monic and sorted by
/// `p`'s ring order.
pub(crate) fn reduce(p: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let mut terms: Vec<Term> = p.terms().to_vec();
    let mut rem: Vec<Term> = Vec::new();
    let mut pos = 0;
    while pos < terms.len() {
        let (m, c) = &terms[pos];
        let hit = basis.iter().find_map(|g| {
            let lm = g.leading_monomial().expect("nonzero basis element");
            m.checked_div(lm).map(|shift| (shift, *g))
        });
        match hit {
            Some((shift, g)) => {
                let coef = ring.field().neg(*c);
                let merged = merge_terms(&ring, &terms[pos..], coef, Some(&shift), g.terms());
                rem.extend_from_slice(&terms[..pos]);
                terms = merged;
                pos = 0;
            }
            None => pos += 1,
        }
    }
    rem.extend(terms);
    Polynomial::from_sorted_terms(&ring, rem)
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, cf) = f.leading_term().expect("nonzero");
    let (lg, cg) = g.leading_term().expect("nonzero");
    let field = f.ring().field();
    let lcm = lf.lcm(lg);
    let a = f.mul_term(field.inv(*cf).unwrap(), &lcm.checked_div(lf).unwrap());
    let b = g.mul_term(field.inv(*cg).unwrap(), &lcm.checked_div(lg).unwrap());
    &a - &b
}

impl State {
    fn active_basis(&self) -> Vec<&Polynomial> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    /// Insert a new monic basis element and update the pair set.
    fn update(&mut self, h: Polynomial, sugar: u64) {
        let lh = h.leading_monomial().unwrap().clone();
        let hi = self.polys.len();
        self.polys.push(h);
        self.lms.push(lh.clone());
        self.sugar.push(sugar);

        let mut candidates: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| (g, lh.lcm(&self.lms[g]), lh.is_coprime(&self.lms[g])))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(p1) = candidates.pop() {
            let dominated = candidates.iter().chain(kept.iter()).any(|p2| p2.1.divides(&p1.1));
            if p1.2 || !dominated {
                kept.push(p1);
            }
        }

        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lms[p.i].lcm(&lh) != p.lcm && lms[p.j].lcm(&lh) != p.lcm)
        });
        let sugars = &self.sugar;
        self.pairs.extend(kept.into_iter().filter(|p| !p.2).map(|(g, lcm, _)| {
            let d = lcm.degree();
            let sugar = (sugars[g] + d - lms[g].degree()).max(sugar + d - lh.degree());
            Pair { i: g, j: hi, lcm, sugar }
        }));
        self.active.retain(|&g| !lh.divides(&lms[g]));
        self.active.push(hi);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Returns false once the ideal is known to be the unit ideal.
    fn add(&mut self, p: &Polynomial, sugar: u64) -> bool {
        let h = reduce(p, &self.active_basis());
        if h.is_zero() {
            return true;
        }
        let h = h.monic();
        if h.is_constant() {
            return false;
        }
        let sugar = sugar.max(h.total_degree() as u64);
        self.update(h, sugar);
        true
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens`, under the
/// order of `ring`, sorted by increasing leading monomial.
pub(crate) fn reduced_basis(ring: &RingRef, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        lms: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let unit = vec![Polynomial::one(ring)];
    for g in gens {
        if !st.add(&g.to_ring(ring), g.total_degree().max(0) as u64) {
            return unit;
        }
    }
    while let Some(pair) = st.next_pair() {
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        if !st.add(&s, pair.sugar) {
            return unit;
        }
    }

    let minimal: Vec<Polynomial> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
            let lead = Polynomial::from_sorted_terms(ring, vec![minimal[i].terms()[0].clone()]);
            let tail = Polynomial::from_sorted_terms(ring, minimal[i].terms()[1..].to_vec());
            &lead + &reduce(&tail, &others)
        })
        .collect();
    let order = ring.order();
    reduced.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    debug_assert!(reduced
        .windows(2)
        .all(|w| order.compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
            == Ordering::Less));
    reduced
}
