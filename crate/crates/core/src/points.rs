//! Brute-force enumeration of parameterized sets, the point-ideal oracle, and
//! the monoid / Laurent-monomial utilities for `{0,1}` point sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::{map_range, map_slice, Config};
use crate::field::PrimeField;
use crate::groebner::{intersect, Ideal};
use crate::parser::{Mode, ParameterizationSpec};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RationalFunction, Ring};
use crate::vanishing::coordinate_ring;

/// Grid points evaluated per work item.
const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint(Vec<u32>);

impl AffinePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        AffinePoint(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A point of projective space, scaled so its leftmost nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(Vec<u32>);

impl ProjectivePoint {
    /// `None` for the zero vector.
    pub fn normalize(field: PrimeField, coords: &[u32]) -> Option<Self> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let inv = field.inv(lead).ok()?;
        Some(ProjectivePoint(coords.iter().map(|&c| field.mul(c, inv)).collect()))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Index of the leftmost nonzero coordinate.
    pub fn pivot(&self) -> usize {
        self.0.iter().position(|&c| c != 0).expect("nonzero point")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// A deduplicated, sorted finite point set. Projective kinds hold normalized
/// representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    field: PrimeField,
    kind: Mode,
    dim: usize,
    points: Vec<Vec<u32>>,
}

impl PointSet {
    /// Normalizes (for projective kinds), sorts and deduplicates.
    pub fn new(field: PrimeField, kind: Mode, dim: usize, points: Vec<Vec<u32>>) -> Result<Self> {
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != dim {
                return Err(Error::ArityMismatch { expected: dim, got: p.len() });
            }
            if p.iter().any(|&c| c >= field.order()) {
                return Err(Error::InvalidInput(format!("coordinate out of range in {p:?}")));
            }
            if kind.is_projective() {
                let n = ProjectivePoint::normalize(field, &p)
                    .ok_or_else(|| Error::InvalidInput("the zero vector is not a projective point".into()))?;
                out.push(n.0);
            } else {
                out.push(p);
            }
        }
        out.sort();
        out.dedup();
        Ok(PointSet { field, kind, dim, points: out })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn kind(&self) -> Mode {
        self.kind
    }

    /// Number of coordinates `s`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn raw_points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn contains(&self, coords: &[u32]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(coords)).is_ok()
    }

    pub fn projective_points(&self) -> impl Iterator<Item = ProjectivePoint> + '_ {
        debug_assert!(self.kind.is_projective());
        self.points.iter().map(|p| ProjectivePoint(p.clone()))
    }

    pub fn affine_points(&self) -> impl Iterator<Item = AffinePoint> + '_ {
        self.points.iter().map(|p| AffinePoint(p.clone()))
    }

    pub fn render_point(&self, p: &[u32]) -> String {
        if self.kind.is_projective() {
            ProjectivePoint(p.to_vec()).to_string()
        } else {
            AffinePoint(p.to_vec()).to_string()
        }
    }
}

/// The image point of `x`, or `None` when `x` contributes nothing to the set.
fn image(field: PrimeField, functions: &[RationalFunction], kind: Mode, x: &[u32]) -> Option<Vec<u32>> {
    let mut values = Vec::with_capacity(functions.len());
    for f in functions {
        values.push(f.evaluate_raw(x)?);
    }
    if kind.is_algebraic() && values.contains(&0) {
        return None;
    }
    if kind.is_projective() {
        return ProjectivePoint::normalize(field, &values).map(|p| p.0);
    }
    Some(values)
}

/// Number of grid points `q^n`.
pub fn grid_size(spec: &ParameterizationSpec) -> u128 {
    (spec.q() as u128).pow(spec.n() as u32)
}

/// Evaluate the parameterization over all of `F_q^n` and collect the set of
/// the requested kind. Refuses when `q^n` exceeds `config.grid_cap`.
pub fn enumerate_set(spec: &ParameterizationSpec, kind: Mode, config: &Config) -> Result<PointSet> {
    let total = grid_size(spec);
    if total > config.grid_cap as u128 {
        return Err(Error::CapExceeded { requested: total, cap: config.grid_cap });
    }
    let total = total as u64;
    let field = spec.field();
    let q = spec.q() as u64;
    let n = spec.n();
    let functions = spec.functions();
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<Vec<Vec<u32>>> = map_range(config.exec, chunks, |c| {
        let start = c * CHUNK;
        let end = (start + CHUNK).min(total);
        let mut x = decode(start, q, n);
        let mut found = Vec::new();
        for _ in start..end {
            if let Some(p) = image(field, functions, kind, &x) {
                found.push(p);
            }
            increment(&mut x, q as u32);
        }
        found.sort();
        found.dedup();
        found
    });
    let mut points: Vec<Vec<u32>> = parts.into_iter().flatten().collect();
    points.sort();
    points.dedup();
    Ok(PointSet { field, kind, dim: spec.s(), points })
}

fn decode(mut index: u64, q: u64, n: usize) -> Vec<u32> {
    let mut x = vec![0u32; n];
    for slot in x.iter_mut().rev() {
        *slot = (index % q) as u32;
        index /= q;
    }
    x
}

fn increment(x: &mut [u32], q: u32) {
    for slot in x.iter_mut().rev() {
        *slot += 1;
        if *slot < q {
            return;
        }
        *slot = 0;
    }
}

/// Prime ideal of a projective point: `α_k t_i − α_i t_k` for `i ≠ k`, where
/// `k` is the pivot (so `α_k = 1`).
pub fn point_ideal(field: PrimeField, p: &ProjectivePoint) -> Ideal {
    let s = p.0.len();
    let ring = coordinate_ring(field, s);
    let k = p.pivot();
    let gens = (0..s).filter(|&i| i != k).map(|i| {
        let ti = Polynomial::var(&ring, i);
        let tk = Polynomial::var(&ring, k).scale(p.0[i]);
        &ti - &tk
    });
    Ideal::new(&ring, gens).expect("same ring")
}

/// Maximal ideal `(t_1 − a_1, ..., t_s − a_s)` of an affine point.
pub fn affine_point_ideal(field: PrimeField, p: &AffinePoint) -> Ideal {
    let ring = coordinate_ring(field, p.0.len());
    let gens = p.0.iter().enumerate().map(|(i, &a)| {
        &Polynomial::var(&ring, i) - &Polynomial::constant(&ring, a as i64)
    });
    Ideal::new(&ring, gens).expect("same ring")
}

/// Vanishing ideal of a point set as the intersection of its point ideals.
///
/// The intersections are combined pairwise in a balanced tree; the result is
/// a reduced Gröbner basis in graded reverse lex and does not depend on the
/// order of the points.
pub fn oracle_vanishing_ideal(set: &PointSet, config: &Config) -> Result<Ideal> {
    if set.is_empty() {
        return Err(Error::InvalidInput("the oracle needs a nonempty point set".into()));
    }
    if set.len() > config.oracle_cap {
        return Err(Error::CapExceeded { requested: set.len() as u128, cap: config.oracle_cap as u64 });
    }
    let mut level: Vec<Ideal> = if set.kind().is_projective() {
        set.projective_points().map(|p| point_ideal(set.field, &p)).collect()
    } else {
        set.affine_points().map(|p| affine_point_ideal(set.field, &p)).collect()
    };
    while level.len() > 1 {
        let pairs: Vec<&[Ideal]> = level.chunks(2).collect();
        level = map_slice(config.exec, &pairs, |pair| match pair {
            [a, b] => intersect(a, b),
            [a] => Ok(a.clone()),
            _ => unreachable!(),
        })
        .into_iter()
        .collect::<Result<_>>()?;
    }
    let ideal = level.pop().unwrap();
    Ok(ideal.groebner_basis().to_ideal())
}

/// `Y ∪ {[0]}` is closed under componentwise multiplication and `Y`
/// contains the identity `[1:...:1]`.
pub fn is_multiplicative_monoid(set: &PointSet) -> bool {
    if !set.kind().is_projective() {
        return false;
    }
    let field = set.field;
    let identity = vec![1u32; set.dim];
    if !set.contains(&identity) {
        return false;
    }
    set.points.iter().all(|a| {
        set.points.iter().all(|b| {
            let prod: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| field.mul(x, y)).collect();
            match ProjectivePoint::normalize(field, &prod) {
                None => true,
                Some(p) => set.contains(&p.0),
            }
        })
    })
}

/// Laurent-monomial parameterization of a `{0,1}` monoid `Y = {[α_1], ..., [α_m]}`.
///
/// Uses variables `y_1..y_m, z_1..z_m`; with `h_ik = y_i^(q-1)` when
/// `α_ik = 1` and `h_ik = z_i^(q-1) / y_i^(q-1)` otherwise, coordinate `k`
/// is `F_k = h_1k ⋯ h_mk`. The result is re-enumerated and must reproduce `Y`.
pub fn monoid_to_laurent_parameterization(set: &PointSet, config: &Config) -> Result<ParameterizationSpec> {
    if !set.kind().is_projective() {
        return Err(Error::InvalidInput("a projective point set is required".into()));
    }
    if set.points.iter().flatten().any(|&c| c > 1) {
        return Err(Error::InvalidInput("every point must have coordinates in {0,1}".into()));
    }
    if !is_multiplicative_monoid(set) {
        return Err(Error::InvalidInput("Y ∪ {[0]} is not a multiplicative monoid".into()));
    }
    let field = set.field;
    let m = set.len();
    let e = field.order() - 1;
    let mut vars: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    vars.extend((1..=m).map(|i| format!("z{i}")));
    let ring = Ring::new(field, vars, MonomialOrder::GrevLex)?;
    let functions = (0..set.dim)
        .map(|k| {
            let mut num = vec![0u32; 2 * m];
            let mut den = vec![0u32; 2 * m];
            for (i, alpha) in set.points.iter().enumerate() {
                if alpha[k] == 1 {
                    num[i] += e;
                } else {
                    num[m + i] += e;
                    den[i] += e;
                }
            }
            RationalFunction::new(
                Polynomial::term(&ring, 1, Monomial::from_exponents(&num)),
                Polynomial::term(&ring, 1, Monomial::from_exponents(&den)),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = ParameterizationSpec::new(ring, functions, Mode::Projective)?;
    let check = enumerate_set(&spec, Mode::Projective, config)?;
    if check.points != set.points {
        return Err(Error::Internal(format!(
            "constructed parameterization enumerates {} points, expected {}",
            check.len(),
            set.len()
        )));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::parser::parse_spec;

    fn spec(src: &str) -> ParameterizationSpec {
        parse_spec(src).unwrap()
    }

    fn two_point() -> ParameterizationSpec {
        spec("q = 2\nvars = y1\nf1 = y1\nf2 = y1 + 1\n")
    }

    fn pts(set: &PointSet) -> Vec<String> {
        set.raw_points().iter().map(|p| set.render_point(p)).collect()
    }

    #[test]
    fn two_point_sets() {
        let s = two_point();
        let cfg = Config::default();
        assert_eq!(pts(&enumerate_set(&s, Mode::Projective, &cfg).unwrap()), vec!["[0:1]", "[1:0]"]);
        assert_eq!(pts(&enumerate_set(&s, Mode::Affine, &cfg).unwrap()), vec!["(0,1)", "(1,0)"]);
        assert!(enumerate_set(&s, Mode::ProjectiveAlgebraic, &cfg).unwrap().is_empty());
        assert!(enumerate_set(&s, Mode::AffineAlgebraic, &cfg).unwrap().is_empty());
    }

    #[test]
    fn example_surface_cardinalities() {
        let s = spec("q = 5\nvars = y1, y2\nf1 = y1+1\nf2 = y2+1\nf3 = y1*y2\n");
        let cfg = Config::default();
        assert_eq!(enumerate_set(&s, Mode::Projective, &cfg).unwrap().len(), 19);
        assert_eq!(enumerate_set(&s, Mode::ProjectiveAlgebraic, &cfg).unwrap().len(), 6);
        assert_eq!(enumerate_set(&s, Mode::Affine, &cfg).unwrap().len(), 25);
    }

    #[test]
    fn parallel_and_sequential_enumeration_agree() {
        let s = spec("q = 5\nvars = a, b, c, d, e, f\nf1 = a*b + c\nf2 = d^2 - e\nf3 = f + a ; g3 = b + 1\n");
        let par = enumerate_set(&s, Mode::Projective, &Config::default()).unwrap();
        let seq = enumerate_set(&s, Mode::Projective, &Config::sequential()).unwrap();
        assert_eq!(par, seq);
        assert!(par.len() > 1);
    }

    #[test]
    fn grid_cap_is_enforced() {
        let s = spec("q = 5\nvars = a, b, c\nf1 = a\n");
        let cfg = Config { grid_cap: 100, ..Config::default() };
        assert_eq!(
            enumerate_set(&s, Mode::Projective, &cfg).unwrap_err(),
            Error::CapExceeded { requested: 125, cap: 100 }
        );
    }

    #[test]
    fn subset_relations() {
        let s = spec("q = 3\nvars = a, b\nf1 = a + b\nf2 = a*b ; g2 = a + 1\nf3 = b^2\n");
        let cfg = Config::default();
        let big = enumerate_set(&s, Mode::Projective, &cfg).unwrap();
        let alg = enumerate_set(&s, Mode::ProjectiveAlgebraic, &cfg).unwrap();
        assert!(alg.raw_points().iter().all(|p| big.contains(p)));
        let aff = enumerate_set(&s, Mode::Affine, &cfg).unwrap();
        let aff_alg = enumerate_set(&s, Mode::AffineAlgebraic, &cfg).unwrap();
        assert!(aff_alg.raw_points().iter().all(|p| aff.contains(p)));
    }

    #[test]
    fn point_ideal_examples() {
        let f = PrimeField::new(5).unwrap();
        let render = |i: &Ideal| i.generators().iter().map(|g| g.render()).collect::<Vec<_>>();
        let p10 = ProjectivePoint::normalize(f, &[1, 0]).unwrap();
        assert_eq!(render(&point_ideal(f, &p10)), vec!["t2"]);
        let p01 = ProjectivePoint::normalize(f, &[0, 3]).unwrap();
        assert_eq!(p01.coords(), &[0, 1]);
        assert_eq!(render(&point_ideal(f, &p01)), vec!["t1"]);
        let p111 = ProjectivePoint::normalize(f, &[2, 2, 2]).unwrap();
        let expected = Ideal::new(
            &coordinate_ring(f, 3),
            ["t1 - t2", "t1 - t3"].iter().map(|s| crate::parse_polynomial(s, &coordinate_ring(f, 3)).unwrap()),
        )
        .unwrap();
        assert!(ideal_equal(&point_ideal(f, &p111), &expected, MonomialOrder::GrevLex).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let cfg = Config::default();
        let set = enumerate_set(&two_point(), Mode::Projective, &cfg).unwrap();
        let ideal = oracle_vanishing_ideal(&set, &cfg).unwrap();
        assert_eq!(ideal.generators()[0].render(), "t1*t2");
        assert_eq!(ideal.generators().len(), 1);

        let f = PrimeField::new(3).unwrap();
        let one = PointSet::new(f, Mode::Projective, 2, vec![vec![2, 2]]).unwrap();
        let ideal = oracle_vanishing_ideal(&one, &cfg).unwrap();
        assert_eq!(ideal.generators()[0].render(), "t1 + 2*t2");

        let empty = PointSet::new(f, Mode::Projective, 2, vec![]).unwrap();
        assert!(oracle_vanishing_ideal(&empty, &cfg).is_err());
    }

    #[test]
    fn oracle_is_permutation_invariant() {
        let f = PrimeField::new(3).unwrap();
        let pts = vec![vec![1, 0, 2], vec![0, 1, 1], vec![1, 1, 1], vec![1, 2, 0], vec![0, 0, 1]];
        let cfg = Config::default();
        let a = PointSet::new(f, Mode::Projective, 3, pts.clone()).unwrap();
        let base = oracle_vanishing_ideal(&a, &cfg).unwrap();
        for p in &pts {
            let ideal = point_ideal(f, &ProjectivePoint::normalize(f, p).unwrap());
            let mut acc = ideal.clone();
            for other in pts.iter().rev().filter(|o| *o != p) {
                acc = intersect(&acc, &point_ideal(f, &ProjectivePoint::normalize(f, other).unwrap())).unwrap();
            }
            assert!(ideal_equal(&acc, &base, MonomialOrder::GrevLex).unwrap());
        }
        for g in base.generators() {
            assert!(a.raw_points().iter().all(|p| g.evaluate_raw(p) == 0));
        }
    }

    fn set3(points: &[[u32; 3]]) -> PointSet {
        PointSet::new(
            PrimeField::new(3).unwrap(),
            Mode::Projective,
            3,
            points.iter().map(|p| p.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn monoid_examples() {
        assert!(is_multiplicative_monoid(&set3(&[[1, 1, 0], [0, 1, 1], [0, 1, 0], [1, 1, 1]])));
        let f = PrimeField::new(3).unwrap();
        let ident = PointSet::new(f, Mode::Projective, 2, vec![vec![1, 1]]).unwrap();
        assert!(is_multiplicative_monoid(&ident));
        let axes = PointSet::new(f, Mode::Projective, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!is_multiplicative_monoid(&axes));
        assert!(!is_multiplicative_monoid(&set3(&[[1, 1, 0], [0, 1, 1], [1, 1, 1]])));
    }

    #[test]
    fn laurent_constructor_examples() {
        let cfg = Config::default();
        let f = PrimeField::new(3).unwrap();
        let ident = PointSet::new(f, Mode::Projective, 2, vec![vec![1, 1]]).unwrap();
        let spec = monoid_to_laurent_parameterization(&ident, &cfg).unwrap();
        let rendered: Vec<String> = spec.functions().iter().map(|r| r.to_string()).collect();
        assert_eq!(rendered, vec!["y1^2", "y1^2"]);

        let y = set3(&[[1, 1, 0], [0, 1, 1], [0, 1, 0], [1, 1, 1]]);
        let spec = monoid_to_laurent_parameterization(&y, &cfg).unwrap();
        assert_eq!(spec.n(), 8);
        assert!(spec.is_monomial());

        let not_01 = set3(&[[1, 2, 0], [1, 1, 1]]);
        assert!(monoid_to_laurent_parameterization(&not_01, &cfg).is_err());
        let not_monoid = set3(&[[1, 1, 0], [0, 1, 1], [1, 1, 1]]);
        assert!(monoid_to_laurent_parameterization(&not_monoid, &cfg).is_err());
    }
}
