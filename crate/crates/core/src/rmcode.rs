//! Projective Reed–Muller-type evaluation codes `C_Y(d)` and their basic
//! parameters.
//!
//! Points are stored with leftmost nonzero coordinate 1, so the evaluation map
//! `f ↦ (f(P_1)/t_j(P_1)^d, ...)` is plain evaluation at the representatives.

use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::exec::{map_slice, Config, Exec};
use crate::field::PrimeField;
use crate::invariants::regularity;
use crate::linalg::row_reduce;
use crate::parser::{Mode, ParameterizationSpec};
use crate::points::{enumerate_set, PointSet};
use crate::poly::monomials_of_degree;
use crate::vanishing::vanishing_ideal;

/// Default cap on enumerated projective message classes.
pub const DEFAULT_DISTANCE_CAP: u64 = 5_000_000;

/// Upper bound on the messages swept by one work item.
const INNER_DIGITS_TARGET: u32 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationCode {
    field: PrimeField,
    degree: u32,
    points: Vec<Vec<u32>>,
    generator: Vec<Vec<u32>>,
}

impl EvaluationCode {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    /// Generator matrix in reduced row echelon form, `dimension × length`.
    pub fn generator(&self) -> &[Vec<u32>] {
        &self.generator
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    /// `(q^k − 1) / (q − 1)`.
    pub fn message_classes(&self) -> u128 {
        let q = self.field.order() as u128;
        let mut total = 0u128;
        for _ in 0..self.dimension() {
            total = total.saturating_mul(q).saturating_add(1);
        }
        total
    }
}

/// `C_Y(d)`: images of all degree-`d` monomials (lex order) at the points of `Y`.
pub fn build_code(set: &PointSet, d: u32) -> Result<EvaluationCode> {
    if !set.kind().is_projective() {
        return Err(Error::InvalidInput("evaluation codes need a projective point set".into()));
    }
    if set.is_empty() {
        return Err(Error::InvalidInput("the point set is empty".into()));
    }
    if d < 1 {
        return Err(Error::InvalidInput("the code degree must be at least 1".into()));
    }
    let field = set.field();
    let points = set.raw_points().to_vec();
    let rows: Vec<Vec<u32>> = monomials_of_degree(set.dim(), d)
        .iter()
        .map(|m| {
            points
                .iter()
                .map(|p| {
                    m.exponents().iter().zip(p).fold(1, |acc, (&e, &c)| field.mul(acc, field.pow(c, e as u64)))
                })
                .collect()
        })
        .collect();
    let generator = row_reduce(field, rows);
    Ok(EvaluationCode { field, degree: d, points, generator })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDistance {
    Computed(u64),
    /// The number of message classes exceeded the cap.
    NotComputed { classes: u128 },
}

impl MinDistance {
    pub fn value(self) -> Option<u64> {
        match self {
            MinDistance::Computed(v) => Some(v),
            MinDistance::NotComputed { .. } => None,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Computed(v) => write!(f, "{v}"),
            MinDistance::NotComputed { .. } => f.write_str("-"),
        }
    }
}

/// Minimum Hamming weight of a nonzero codeword.
///
/// Returns 1 without enumeration when `d ≥ reg` or the code is all of
/// `K^m`. Otherwise every message whose leading nonzero coefficient is 1 is
/// enumerated; scaling does not change the weight, so this covers the code.
pub fn minimum_distance(code: &EvaluationCode, cap: u64, reg: Option<u64>, exec: Exec) -> MinDistance {
    if reg.is_some_and(|r| code.degree as u64 >= r) || code.dimension() == code.length() {
        return MinDistance::Computed(1);
    }
    let classes = code.message_classes();
    if classes > cap as u128 {
        return MinDistance::NotComputed { classes };
    }
    let jobs = work_items(code);
    let best = map_slice(exec, &jobs, |job| job.min_weight(code));
    MinDistance::Computed(best.into_iter().min().expect("nonzero dimension"))
}

/// Messages `e_lead + Σ_{j>lead} c_j e_j` whose first `prefix.len()` free
/// digits are fixed; the rest are swept by an odometer.
struct Job {
    lead: usize,
    prefix: Vec<u32>,
}

fn work_items(code: &EvaluationCode) -> Vec<Job> {
    let q = code.field.order();
    let k = code.dimension();
    let mut jobs = Vec::new();
    for lead in 0..k {
        let free = k - 1 - lead;
        let mut inner = free;
        let mut prefix_len = 0;
        while inner > 0 && (q as u64).saturating_pow(inner as u32) > INNER_DIGITS_TARGET as u64 {
            inner -= 1;
            prefix_len += 1;
        }
        let count = (q as u64).pow(prefix_len as u32);
        for idx in 0..count {
            let mut prefix = vec![0u32; prefix_len];
            let mut rest = idx;
            for slot in prefix.iter_mut().rev() {
                *slot = (rest % q as u64) as u32;
                rest /= q as u64;
            }
            jobs.push(Job { lead, prefix });
        }
    }
    jobs
}

impl Job {
    fn min_weight(&self, code: &EvaluationCode) -> u64 {
        let field = code.field;
        let q = field.order();
        let g = &code.generator;
        let mut word = g[self.lead].clone();
        for (j, &c) in self.prefix.iter().enumerate() {
            add_scaled(field, &mut word, c, &g[self.lead + 1 + j]);
        }
        let first_free = self.lead + 1 + self.prefix.len();
        let free = code.dimension() - first_free;
        let mut digits = vec![0u32; free];
        let mut best = weight(&word);
        loop {
            // Stepping a digit from c to c + 1, or wrapping q − 1 to 0, adds
            // one copy of its row in both cases.
            let mut pos = free;
            loop {
                if pos == 0 {
                    return best;
                }
                pos -= 1;
                add_scaled(field, &mut word, 1, &g[first_free + pos]);
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
            }
            best = best.min(weight(&word));
            if best == 1 {
                return 1;
            }
        }
    }
}

fn add_scaled(field: PrimeField, word: &mut [u32], c: u32, row: &[u32]) {
    if c == 0 {
        return;
    }
    for (w, &r) in word.iter_mut().zip(row) {
        *w = field.add(*w, field.mul(c, r));
    }
}

fn weight(word: &[u32]) -> u64 {
    word.iter().filter(|&&c| c != 0).count() as u64
}

/// One column of a parameter table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRow {
    pub degree: u32,
    pub length: usize,
    pub dimension: usize,
    pub min_distance: MinDistance,
}

/// Basic parameters of `C_Y(d)` for each `d` in `degrees`.
pub fn parameter_table_for_set(
    set: &PointSet,
    degrees: RangeInclusive<u32>,
    reg: Option<u64>,
    config: &Config,
) -> Result<Vec<CodeRow>> {
    if degrees.is_empty() {
        return Err(Error::InvalidInput("empty degree range".into()));
    }
    degrees
        .map(|d| {
            let code = build_code(set, d)?;
            let min_distance = minimum_distance(&code, config.distance_cap, reg, config.exec);
            Ok(CodeRow { degree: d, length: code.length(), dimension: code.dimension(), min_distance })
        })
        .collect()
}

/// Parameter table of the set parameterized by `spec` in a projective `mode`.
/// The regularity used for the `δ = 1` shortcut comes from the elimination ideal.
pub fn parameter_table(
    spec: &ParameterizationSpec,
    mode: Mode,
    degrees: RangeInclusive<u32>,
    config: &Config,
) -> Result<Vec<CodeRow>> {
    if !mode.is_projective() {
        return Err(Error::InvalidInput("codes are defined for projective modes".into()));
    }
    let set = enumerate_set(spec, mode, config)?;
    if set.is_empty() {
        return Err(Error::InvalidInput(format!("the {mode} set is empty")));
    }
    let ideal = vanishing_ideal(&spec.with_mode(mode))?.ideal;
    let reg = regularity(&ideal)?;
    parameter_table_for_set(&set, degrees, Some(reg), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_spec;

    const SURFACE: &str = "q = 5\nvars = y1, y2\nf1 = y1+1\nf2 = y2+1\nf3 = y1*y2\n";

    fn brute_force_distance(code: &EvaluationCode) -> u64 {
        let q = code.field.order();
        let k = code.dimension();
        let total = (q as u64).pow(k as u32);
        (1..total)
            .map(|mut idx| {
                let mut word = vec![0u32; code.length()];
                for row in &code.generator {
                    add_scaled(code.field, &mut word, (idx % q as u64) as u32, row);
                    idx /= q as u64;
                }
                weight(&word)
            })
            .min()
            .unwrap()
    }

    #[test]
    fn surface_tables() {
        let spec = parse_spec(SURFACE).unwrap();
        let cfg = Config::default();
        let full = parameter_table(&spec, Mode::Projective, 1..=5, &cfg).unwrap();
        let dims: Vec<usize> = full.iter().map(|r| r.dimension).collect();
        assert_eq!(dims, vec![3, 6, 10, 15, 19]);
        assert!(full.iter().all(|r| r.length == 19));
        assert_eq!(full[0].min_distance, MinDistance::Computed(13));
        assert_eq!(full[1].min_distance, MinDistance::Computed(8));
        assert!(matches!(full[3].min_distance, MinDistance::NotComputed { .. }));
        assert_eq!(full[3].min_distance.to_string(), "-");
        assert_eq!(full[4].min_distance, MinDistance::Computed(1));
        let alg = parameter_table(&spec, Mode::ProjectiveAlgebraic, 1..=2, &cfg).unwrap();
        let cells: Vec<(usize, usize, Option<u64>)> =
            alg.iter().map(|r| (r.length, r.dimension, r.min_distance.value())).collect();
        assert_eq!(cells, vec![(6, 3, Some(3)), (6, 6, Some(1))]);
    }

    #[test]
    fn single_point_code() {
        let set = PointSet::new(PrimeField::new(3).unwrap(), Mode::Projective, 2, vec![vec![1, 1]]).unwrap();
        for d in 1..4 {
            let code = build_code(&set, d).unwrap();
            assert_eq!((code.length(), code.dimension()), (1, 1));
            assert_eq!(minimum_distance(&code, 10, None, Exec::Sequential), MinDistance::Computed(1));
        }
    }

    #[test]
    fn rejects_bad_input() {
        let field = PrimeField::new(3).unwrap();
        let set = PointSet::new(field, Mode::Projective, 2, vec![vec![1, 1]]).unwrap();
        assert!(build_code(&set, 0).is_err());
        let empty = PointSet::new(field, Mode::Projective, 2, vec![]).unwrap();
        assert!(build_code(&empty, 1).is_err());
        let affine = PointSet::new(field, Mode::Affine, 2, vec![vec![1, 1]]).unwrap();
        assert!(build_code(&affine, 1).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_and_strategies_agree() {
        // All of P^2 over F_3 (13 points) and over F_2 (7 points).
        for q in [2u32, 3] {
            let field = PrimeField::new(q as u64).unwrap();
            let mut pts = Vec::new();
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        pts.push(vec![a, b, c]);
                    }
                }
            }
            pts.retain(|p| p.iter().any(|&x| x != 0));
            let set = PointSet::new(field, Mode::Projective, 3, pts).unwrap();
            for d in 1..=2 {
                let code = build_code(&set, d).unwrap();
                let expected = brute_force_distance(&code);
                for exec in [Exec::Sequential, Exec::Parallel] {
                    assert_eq!(minimum_distance(&code, u64::MAX, None, exec), MinDistance::Computed(expected));
                }
            }
        }
    }

    #[test]
    fn cap_reports_class_count() {
        let spec = parse_spec(SURFACE).unwrap();
        let set = enumerate_set(&spec, Mode::Projective, &Config::default()).unwrap();
        let code = build_code(&set, 2).unwrap();
        assert_eq!(code.message_classes(), 3906);
        assert_eq!(minimum_distance(&code, 3905, None, Exec::Sequential), MinDistance::NotComputed { classes: 3906 });
    }
}
