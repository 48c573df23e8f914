use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::expr::parse_polynomial_at;
use super::{ParseError, ParseErrorKind};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{MonomialOrder, Polynomial, RationalFunction, Ring, RingRef};

/// Which of the four parameterized sets a spec asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Projective set: points `[f_1/g_1 : ... : f_s/g_s]`, some `f_i` nonzero.
    #[default]
    Projective,
    /// Projective algebraic set: every coordinate nonzero.
    ProjectiveAlgebraic,
    /// Affine set of points `(f_1/g_1, ..., f_s/g_s)`.
    Affine,
    /// Affine algebraic set: every coordinate nonzero.
    AffineAlgebraic,
}

impl Mode {
    pub const ALL: [Mode; 4] =
        [Mode::Projective, Mode::ProjectiveAlgebraic, Mode::Affine, Mode::AffineAlgebraic];

    pub fn is_projective(self) -> bool {
        matches!(self, Mode::Projective | Mode::ProjectiveAlgebraic)
    }

    pub fn is_algebraic(self) -> bool {
        matches!(self, Mode::ProjectiveAlgebraic | Mode::AffineAlgebraic)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Projective => "projective",
            Mode::ProjectiveAlgebraic => "projective_algebraic",
            Mode::Affine => "affine",
            Mode::AffineAlgebraic => "affine_algebraic",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mode `{s}` (expected one of projective, projective_algebraic, affine, affine_algebraic)"))
    }
}

/// A validated parameterization `F = (f_1/g_1, ..., f_s/g_s)` over `F_q[y_1..y_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterizationSpec {
    ring: RingRef,
    functions: Vec<RationalFunction>,
    mode: Mode,
}

impl ParameterizationSpec {
    /// Build from already-parsed functions; all must live in `ring`.
    pub fn new(ring: RingRef, functions: Vec<RationalFunction>, mode: Mode) -> Result<Self> {
        if ring.nvars() == 0 {
            return Err(Error::InvalidInput("at least one parameter variable is required".into()));
        }
        if functions.is_empty() {
            return Err(Error::InvalidInput("at least one function is required".into()));
        }
        for f in &functions {
            if !f.numerator().ring().same_space(&ring) {
                return Err(Error::RingMismatch);
            }
        }
        let ring = ring.with_order(MonomialOrder::GrevLex);
        let functions = functions
            .into_iter()
            .map(|f| {
                RationalFunction::new(f.numerator().to_ring(&ring), f.denominator().to_ring(&ring))
            })
            .collect::<Result<_>>()?;
        Ok(ParameterizationSpec { ring, functions, mode })
    }

    /// Polynomial parameterization (all denominators 1).
    pub fn from_polynomials(ring: RingRef, numerators: Vec<Polynomial>, mode: Mode) -> Result<Self> {
        let functions = numerators.into_iter().map(RationalFunction::polynomial).collect();
        Self::new(ring, functions, mode)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn q(&self) -> u32 {
        self.ring.field().order()
    }

    pub fn vars(&self) -> &[String] {
        self.ring.vars()
    }

    /// Number of parameter variables `n`.
    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    /// Number of coordinate functions `s`.
    pub fn s(&self) -> usize {
        self.functions.len()
    }

    pub fn functions(&self) -> &[RationalFunction] {
        &self.functions
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        ParameterizationSpec { mode, ..self.clone() }
    }

    pub fn is_polynomial(&self) -> bool {
        self.functions.iter().all(|f| f.has_trivial_denominator())
    }

    /// Every `f_i` and `g_i` is a single term.
    pub fn is_monomial(&self) -> bool {
        self.functions.iter().all(|f| f.numerator().len() == 1 && f.denominator().len() == 1)
    }

    /// `s = n` and `f_i = y_i`, `g_i = 1`.
    pub fn is_identity(&self) -> bool {
        self.s() == self.n()
            && self.functions.iter().enumerate().all(|(i, f)| {
                f.has_trivial_denominator() && *f.numerator() == Polynomial::var(&self.ring, i)
            })
    }

    /// Render in the key = value file format; `parse_spec` reads it back.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("q = {}\nvars = {}\n", self.q(), self.vars().join(", "));
        for (i, f) in self.functions.iter().enumerate() {
            out.push_str(&format!("f{0} = {1} ; g{0} = {2}\n", i + 1, f.numerator(), f.denominator()));
        }
        out.push_str(&format!("mode = {}\n", self.mode));
        out
    }
}

struct Entry {
    value: String,
    line: usize,
    column: usize,
}

/// Parse a parameterization file:
///
/// ```text
/// q = 5
/// vars = y1, y2
/// f1 = y1+1 ; g1 = 1
/// mode = projective
/// ```
///
/// Keys `f1..fs` define `s`; a missing `gi` defaults to `1`. `#` starts a comment.
pub fn parse_spec(src: &str) -> Result<ParameterizationSpec, ParseError> {
    let mut entries: BTreeMap<String, Entry> = BTreeMap::new();
    for (lineno, raw_line) in src.lines().enumerate() {
        let line = lineno + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        let mut offset = 0;
        for item in content.split(';') {
            let item_col = offset + 1;
            offset += item.len() + 1;
            if item.trim().is_empty() {
                continue;
            }
            let Some(eq) = item.find('=') else {
                let col = item_col + item.len() - item.trim_start().len();
                return Err(ParseError::new(
                    line,
                    col,
                    ParseErrorKind::Unexpected { found: format!("`{}`", item.trim()), expected: "`key = value`".into() },
                ));
            };
            let key = item[..eq].trim().to_string();
            let value_raw = &item[eq + 1..];
            let value = value_raw.trim().to_string();
            let value_col = item_col + eq + 1 + (value_raw.len() - value_raw.trim_start().len());
            let key_col = item_col + item.len() - item.trim_start().len();
            if key.is_empty() {
                return Err(ParseError::new(
                    line,
                    key_col,
                    ParseErrorKind::Unexpected { found: "`=`".into(), expected: "a key".into() },
                ));
            }
            if !is_known_key(&key) {
                return Err(ParseError::new(line, key_col, ParseErrorKind::UnknownKey(key)));
            }
            if entries.contains_key(&key) {
                return Err(ParseError::new(line, key_col, ParseErrorKind::DuplicateKey(key)));
            }
            entries.insert(key, Entry { value, line, column: value_col });
        }
    }

    let q_entry = entries.get("q").ok_or_else(|| missing("q"))?;
    let q: u64 = q_entry.value.parse().map_err(|_| {
        ParseError::new(
            q_entry.line,
            q_entry.column,
            ParseErrorKind::InvalidValue { key: "q".into(), reason: "expected a positive integer".into() },
        )
    })?;
    let field = PrimeField::new(q)
        .map_err(|_| ParseError::new(q_entry.line, q_entry.column, ParseErrorKind::NotPrime(q)))?;

    let vars_entry = entries.get("vars").ok_or_else(|| missing("vars"))?;
    let mut vars: Vec<String> = Vec::new();
    for v in vars_entry.value.split(',').map(str::trim) {
        if !crate::poly::is_identifier(v) {
            return Err(ParseError::new(
                vars_entry.line,
                vars_entry.column,
                ParseErrorKind::InvalidValue { key: "vars".into(), reason: format!("`{v}` is not a variable name") },
            ));
        }
        if vars.iter().any(|w| w == v) {
            return Err(ParseError::new(
                vars_entry.line,
                vars_entry.column,
                ParseErrorKind::DuplicateVariable(v.to_string()),
            ));
        }
        vars.push(v.to_string());
    }
    let ring = Ring::new(field, vars, MonomialOrder::GrevLex).expect("validated variable list");

    let mode = match entries.get("mode") {
        None => Mode::Projective,
        Some(e) => e.value.parse().map_err(|reason| {
            ParseError::new(e.line, e.column, ParseErrorKind::InvalidValue { key: "mode".into(), reason })
        })?,
    };

    let s = entries.keys().filter(|k| k.starts_with('f')).count();
    if s == 0 {
        return Err(missing("f1"));
    }
    let mut functions = Vec::with_capacity(s);
    for i in 1..=s {
        let fe = entries.get(&format!("f{i}")).ok_or_else(|| missing(&format!("f{i}")))?;
        let f = parse_polynomial_at(&fe.value, &ring, fe.line, fe.column)?;
        let g = match entries.get(&format!("g{i}")) {
            Some(ge) => {
                let g = parse_polynomial_at(&ge.value, &ring, ge.line, ge.column)?;
                if g.is_zero() {
                    return Err(ParseError::new(ge.line, ge.column, ParseErrorKind::ZeroDenominator(i)));
                }
                g
            }
            None => Polynomial::one(&ring),
        };
        functions.push(RationalFunction::new(f, g).expect("nonzero denominator"));
    }
    if let Some(extra) = entries.keys().find(|k| {
        k.starts_with('g') && k[1..].parse::<usize>().map_or(true, |i| i == 0 || i > s)
    }) {
        let e = &entries[extra];
        return Err(ParseError::new(e.line, e.column, ParseErrorKind::UnknownKey(extra.clone())));
    }
    Ok(ParameterizationSpec::new(ring, functions, mode).expect("validated spec"))
}

fn is_known_key(key: &str) -> bool {
    match key {
        "q" | "vars" | "mode" => true,
        _ => {
            let (head, tail) = key.split_at(1);
            (head == "f" || head == "g")
                && !tail.is_empty()
                && tail.bytes().all(|b| b.is_ascii_digit())
                && !tail.starts_with('0')
        }
    }
}

fn missing(key: &str) -> ParseError {
    ParseError::new(1, 1, ParseErrorKind::MissingKey(key.to_string()))
}
