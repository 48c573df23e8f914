//! Hilbert function, Krull dimension, degree and index of regularity of `S/I`.
//!
//! Everything is read off the leading monomials of a graded-reverse-lex
//! Gröbner basis. The Hilbert series of `S/in(I)` is `N(t) / (1 − t)^s`, and
//! `N(t) = h(t) (1 − t)^(s − k)` with `k` the Krull dimension; the degree is
//! `h(1)` and, for `k = 1`, the index of regularity is `deg h`.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder};

/// Hilbert data of a graded ideal of Krull dimension 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertProfile {
    /// `H(0), ..., H(D)`.
    pub values: Vec<u64>,
    pub dimension: i64,
    pub degree: u64,
    /// Least `r` with `H(d)` equal to the Hilbert polynomial for all `d ≥ r`.
    pub regularity: u64,
    /// `values` reaches the regularity index.
    pub stabilized: bool,
}

/// Numerator `N(t)` of the Hilbert series, coefficients by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    /// Coefficient of `t^d` in `N(t) / (1 − t)^nvars`.
    pub fn coefficient(&self, d: u64) -> i128 {
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(i, _)| i as u64 <= d)
            .map(|(i, &c)| c as i128 * binomial(d - i as u64 + self.nvars as u64 - 1, self.nvars as u64 - 1))
            .sum()
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn graded_order_basis(ideal: &Ideal) -> GroebnerBasis {
    let order = ideal.ring().order();
    let order = if order.is_degree_compatible() { order } else { MonomialOrder::GrevLex };
    buchberger(ideal, order)
}

fn graded_basis(ideal: &Ideal) -> Result<GroebnerBasis> {
    let gb = graded_order_basis(ideal);
    if let Some(g) = gb.elements().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotGraded(format!("{} is not homogeneous", g.render())));
    }
    Ok(gb)
}

/// `H(d) = dim_K (S/I)_d`, counted as degree-`d` standard monomials.
pub fn hilbert_function(ideal: &Ideal, d: u32) -> Result<u64> {
    let gb = graded_basis(ideal)?;
    let lead = gb.leading_monomials();
    let s = ideal.ring().nvars();
    Ok(monomials_of_degree(s, d).iter().filter(|m| !lead.iter().any(|l| l.divides(m))).count() as u64)
}

/// Krull dimension of `S/I`: the size of a largest set of variables carrying
/// no leading monomial. `-1` for the unit ideal.
pub fn krull_dimension(ideal: &Ideal) -> i64 {
    dimension_of_basis(&graded_order_basis(ideal))
}

fn dimension_of_basis(gb: &GroebnerBasis) -> i64 {
    if gb.is_unit() {
        return -1;
    }
    let s = gb.ring().nvars();
    assert!(s < 64, "brute-force dimension needs fewer than 64 variables");
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | 1 << i))
        .collect();
    (0u64..1 << s)
        .filter(|&v| supports.iter().all(|&sup| sup & !v != 0))
        .map(|v| v.count_ones() as i64)
        .max()
        .unwrap_or(0)
}

/// Hilbert series of `S/in(I)` under a degree-compatible order.
pub fn hilbert_series(ideal: &Ideal) -> HilbertSeries {
    series_of_basis(&graded_order_basis(ideal))
}

fn series_of_basis(gb: &GroebnerBasis) -> HilbertSeries {
    let mut numerator = monomial_numerator(gb.leading_monomials());
    trim(&mut numerator);
    HilbertSeries { nvars: gb.ring().nvars(), numerator }
}

/// Degree (multiplicity) of `S/I` for Krull dimension 0 or 1.
pub fn degree(ideal: &Ideal) -> Result<u64> {
    let gb = graded_order_basis(ideal);
    let (_, h) = reduced_numerator(&gb)?;
    Ok(h.iter().sum::<i64>() as u64)
}

/// Index of regularity of a graded ideal of Krull dimension 0 or 1.
pub fn regularity(ideal: &Ideal) -> Result<u64> {
    let gb = graded_basis(ideal)?;
    let (k, h) = reduced_numerator(&gb)?;
    Ok(regularity_of(k, &h))
}

/// `H(0..=dmax)` together with dimension, degree and regularity.
pub fn hilbert_profile(ideal: &Ideal, dmax: u32) -> Result<HilbertProfile> {
    let gb = graded_basis(ideal)?;
    let (k, h) = reduced_numerator(&gb)?;
    let series = series_of_basis(&gb);
    let values = (0..=dmax as u64).map(|d| series.coefficient(d) as u64).collect();
    let regularity = regularity_of(k, &h);
    Ok(HilbertProfile {
        values,
        dimension: k,
        degree: h.iter().sum::<i64>() as u64,
        regularity,
        stabilized: dmax as u64 >= regularity,
    })
}

/// For `k = 1`, `H(d) = h_0 + ... + h_d`, constant from `deg h` on; for
/// `k = 0`, `H(d) = h_d`, zero past `deg h`.
fn regularity_of(k: i64, h: &[i64]) -> u64 {
    let top = h.len() as u64 - 1;
    if k == 0 {
        top + 1
    } else {
        top
    }
}

/// Krull dimension `k` and `h(t) = N(t) / (1 − t)^(s − k)`.
fn reduced_numerator(gb: &GroebnerBasis) -> Result<(i64, Vec<i64>)> {
    let k = dimension_of_basis(gb);
    if k < 0 {
        return Err(Error::UnitIdeal);
    }
    if k > 1 {
        return Err(Error::Unsupported(format!("degree and regularity for Krull dimension {k}")));
    }
    let series = series_of_basis(gb);
    let mut h = series.numerator;
    for _ in 0..series.nvars as i64 - k {
        h = divide_one_minus_t(&h)
            .ok_or_else(|| Error::Internal("Hilbert numerator not divisible by 1 - t".into()))?;
    }
    trim(&mut h);
    Ok((k, h))
}

/// Exact division by `1 − t`; `None` when `p(1) ≠ 0`.
fn divide_one_minus_t(p: &[i64]) -> Option<Vec<i64>> {
    if p.iter().sum::<i64>() != 0 {
        return None;
    }
    let mut acc = 0;
    let mut out: Vec<i64> = p.iter().map(|&c| {
        acc += c;
        acc
    }).collect();
    out.pop();
    if out.is_empty() {
        out.push(0);
    }
    Some(out)
}

fn trim(p: &mut Vec<i64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Numerator of the Hilbert series of `S/(gens)` for a monomial ideal, via
/// `N(J + (m)) = N(J) − t^deg(m) N(J : m)`.
fn monomial_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    let pivot = gens.iter().position(|m| m.support().nth(1).is_some());
    let Some(pivot) = pivot else {
        // Pure powers of distinct variables: a complete intersection.
        return gens.iter().fold(vec![1], |acc, m| {
            let d = m.degree() as usize;
            let mut out = vec![0; acc.len() + d];
            for (i, &c) in acc.iter().enumerate() {
                out[i] += c;
                out[i + d] -= c;
            }
            out
        });
    };
    let mut rest = gens;
    let m = rest.swap_remove(pivot);
    let quotient: Vec<Monomial> =
        rest.iter().map(|g| g.checked_div(&g.gcd(&m)).expect("gcd divides")).collect();
    let a = monomial_numerator(rest);
    let b = monomial_numerator(quotient);
    let shift = m.degree() as usize;
    let mut out = vec![0; a.len().max(b.len() + shift)];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}
