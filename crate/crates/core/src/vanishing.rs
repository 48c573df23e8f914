//! Vanishing ideals of parameterized sets by elimination.
//!
//! For `F = (f_1/g_1, ..., f_s/g_s)` over `K = F_q` the auxiliary ring is
//! `B = K[y_0, (w), y_1..y_n, (z), t_1..t_s]` with the block
//! `{y_0, w, y_1..y_n, z}` eliminated, and
//!
//! * projective set: `({g_i t_i − f_i z}, {y_j^q − y_j}, y_0 g_1⋯g_s − 1) ∩ S`
//! * projective algebraic set: additionally `{f_i^(q−1) − 1}`
//! * affine set: `({g_i t_i − f_i}, {y_j^q − y_j}, y_0 g_1⋯g_s − 1) ∩ S`
//! * affine algebraic set: the affine ideal colon `t_1⋯t_s`
//!
//! where `S = K[t_1..t_s]`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{colon, eliminate, Ideal};
use crate::parser::{Mode, ParameterizationSpec};
use crate::poly::{fresh_name, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// `K[t_1, ..., t_s]` under graded reverse lex.
pub fn coordinate_ring(field: PrimeField, s: usize) -> RingRef {
    Ring::new(field, (1..=s).map(|i| format!("t{i}")), MonomialOrder::GrevLex).expect("valid names")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Proper,
    /// `I ∩ S = S`: no parameter value is admissible.
    EmptySet,
    /// `I ∩ S = (t_1, ..., t_s)`: the affine set is the origin alone.
    OriginOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Proper => "proper",
            Status::EmptySet => "empty-set",
            Status::OriginOnly => "origin-only",
        }
    }
}

/// The auxiliary ideal that was eliminated.
#[derive(Debug, Clone)]
pub struct Construction {
    pub ring: RingRef,
    pub generators: Vec<Polynomial>,
    pub eliminated: usize,
}

#[derive(Debug, Clone)]
pub struct VanishingResult {
    /// Generators are the reduced Gröbner basis under graded reverse lex.
    pub ideal: Ideal,
    pub status: Status,
    pub mode: Mode,
    pub construction: Option<Construction>,
}

impl VanishingResult {
    fn classify(ideal: Ideal, mode: Mode, construction: Option<Construction>) -> Self {
        let status = classify(&ideal);
        VanishingResult { ideal, status, mode, construction }
    }
}

/// Status of an ideal of `S` given by its reduced graded-reverse-lex basis.
pub fn classify(ideal: &Ideal) -> Status {
    let gens = ideal.generators();
    if gens.len() == 1 && gens[0].is_one() {
        return Status::EmptySet;
    }
    let s = ideal.ring().nvars();
    let mut vars_seen = vec![false; s];
    let all_vars = gens.len() == s
        && gens.iter().all(|g| {
            g.len() == 1
                && g.terms()[0].1 == 1
                && g.terms()[0].0.degree() == 1
                && {
                    let i = g.terms()[0].0.support().next().unwrap();
                    !std::mem::replace(&mut vars_seen[i], true)
                }
        });
    if all_vars {
        Status::OriginOnly
    } else {
        Status::Proper
    }
}

struct Layout {
    ring: RingRef,
    y0: Option<usize>,
    w: Option<usize>,
    y: Vec<usize>,
    z: Option<usize>,
    t: Vec<usize>,
    eliminated: usize,
}

impl Layout {
    fn new(spec: &ParameterizationSpec, y0: bool, w: bool, z: bool) -> Result<Layout> {
        let mut taken: HashSet<String> = spec.vars().iter().cloned().collect();
        let mut names: Vec<String> = Vec::new();
        let aux = |base: &str, names: &mut Vec<String>, taken: &mut HashSet<String>| {
            let name = fresh_name(base, taken);
            taken.insert(name.clone());
            names.push(name);
            names.len() - 1
        };
        let y0_idx = y0.then(|| aux("y0", &mut names, &mut taken));
        let w_idx = w.then(|| aux("w", &mut names, &mut taken));
        let y: Vec<usize> = spec
            .vars()
            .iter()
            .map(|v| {
                names.push(v.clone());
                names.len() - 1
            })
            .collect();
        let z_idx = z.then(|| aux("z", &mut names, &mut taken));
        let eliminated = names.len();
        let t: Vec<usize> =
            (1..=spec.s()).map(|i| aux(&format!("t{i}"), &mut names, &mut taken)).collect();
        let ring = Ring::new(spec.field(), names, MonomialOrder::Block(eliminated))?;
        Ok(Layout { ring, y0: y0_idx, w: w_idx, y, z: z_idx, t, eliminated })
    }

    fn lift(&self, f: &Polynomial) -> Polynomial {
        f.embed(&self.ring, &self.y)
    }

    fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, i)
    }

    /// `x^q − x` for each parameter variable.
    fn field_equations(&self, q: u32) -> Vec<Polynomial> {
        self.field_equations_for(&self.y, q)
    }

    /// `x^q − x` for the auxiliary variables `y_0`, `w` and, when there is
    /// no `z`, every `t_i`. The auxiliary ideals are radical and each of these
    /// variables takes values in `F_q` on their zero sets, so the equations
    /// already lie in the ideal. Adding them caps the degrees reached during
    /// elimination; without `z` to homogenize, the `t_i` degrees otherwise
    /// grow far beyond `q`.
    fn redundant_field_equations(&self, q: u32) -> Vec<Polynomial> {
        let t: &[usize] = if self.z.is_none() { &self.t } else { &[] };
        let vars: Vec<usize> = self.y0.iter().chain(&self.w).chain(t).copied().collect();
        self.field_equations_for(&vars, q)
    }

    fn field_equations_for(&self, vars: &[usize], q: u32) -> Vec<Polynomial> {
        let n = self.ring.nvars();
        vars.iter()
            .map(|&i| {
                let mut e = vec![0u32; n];
                e[i] = q;
                &Polynomial::term(&self.ring, 1, Monomial::from_exponents(&e)) - &self.var(i)
            })
            .collect()
    }

    /// `v · Π p_i − 1` for the auxiliary variable `v`.
    fn inverse_of_product(&self, v: usize, factors: impl Iterator<Item = Polynomial>) -> Polynomial {
        let prod = factors.fold(Polynomial::one(&self.ring), |acc, f| &acc * &f);
        &(&self.var(v) * &prod) - &Polynomial::one(&self.ring)
    }

    fn eliminate(self, gens: Vec<Polynomial>, mode: Mode, s: usize) -> Result<VanishingResult> {
        let ideal = Ideal::new(&self.ring, gens.clone())?;
        let elim = eliminate(&ideal, self.eliminated)?;
        let target = coordinate_ring(self.ring.field(), s);
        let identity: Vec<usize> = (0..s).collect();
        let ideal = Ideal::new(&target, elim.generators().iter().map(|g| g.embed(&target, &identity)))?;
        let construction = Construction { ring: self.ring, generators: gens, eliminated: self.eliminated };
        Ok(VanishingResult::classify(ideal, mode, Some(construction)))
    }
}

fn lifted_parts(spec: &ParameterizationSpec, layout: &Layout) -> (Vec<Polynomial>, Vec<Polynomial>) {
    spec.functions()
        .iter()
        .map(|f| (layout.lift(f.numerator()), layout.lift(f.denominator())))
        .unzip()
}

/// `I(𝕏)` for the projective set parameterized by the spec's functions.
pub fn projective_vanishing_ideal(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    let layout = Layout::new(spec, true, false, true)?;
    let (fs, gs) = lifted_parts(spec, &layout);
    let z = layout.var(layout.z.unwrap());
    let mut gens: Vec<Polynomial> = fs
        .iter()
        .zip(&gs)
        .zip(&layout.t)
        .map(|((f, g), &t)| &(g * &layout.var(t)) - &(f * &z))
        .collect();
    gens.extend(layout.field_equations(spec.q()));
    gens.extend(layout.redundant_field_equations(spec.q()));
    gens.push(layout.inverse_of_product(layout.y0.unwrap(), gs.iter().cloned()));
    layout.eliminate(gens, Mode::Projective, spec.s())
}

/// `I(X)` using the generators `f_i^(q−1) − 1` for nonvanishing coordinates.
pub fn projective_algebraic_vanishing_ideal(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    let layout = Layout::new(spec, true, false, true)?;
    let (fs, gs) = lifted_parts(spec, &layout);
    let z = layout.var(layout.z.unwrap());
    let one = Polynomial::one(&layout.ring);
    let mut gens: Vec<Polynomial> = fs
        .iter()
        .zip(&gs)
        .zip(&layout.t)
        .map(|((f, g), &t)| &(g * &layout.var(t)) - &(f * &z))
        .collect();
    gens.extend(layout.field_equations(spec.q()));
    gens.extend(layout.redundant_field_equations(spec.q()));
    gens.extend(fs.iter().map(|f| &f.pow(spec.q() - 1) - &one));
    gens.push(layout.inverse_of_product(layout.y0.unwrap(), gs.iter().cloned()));
    layout.eliminate(gens, Mode::ProjectiveAlgebraic, spec.s())
}

/// `I(X)` using an extra variable `w` with `w f_1⋯f_s − 1`.
pub fn projective_algebraic_vanishing_ideal_w(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    let layout = Layout::new(spec, true, true, true)?;
    let (fs, gs) = lifted_parts(spec, &layout);
    let z = layout.var(layout.z.unwrap());
    let mut gens: Vec<Polynomial> = fs
        .iter()
        .zip(&gs)
        .zip(&layout.t)
        .map(|((f, g), &t)| &(g * &layout.var(t)) - &(f * &z))
        .collect();
    gens.extend(layout.field_equations(spec.q()));
    gens.extend(layout.redundant_field_equations(spec.q()));
    gens.push(layout.inverse_of_product(layout.y0.unwrap(), gs.iter().cloned()));
    gens.push(layout.inverse_of_product(layout.w.unwrap(), fs.iter().cloned()));
    layout.eliminate(gens, Mode::ProjectiveAlgebraic, spec.s())
}

/// `I(𝕏*)` for the affine set.
pub fn affine_vanishing_ideal(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    let layout = Layout::new(spec, true, false, false)?;
    let (fs, gs) = lifted_parts(spec, &layout);
    let mut gens: Vec<Polynomial> = fs
        .iter()
        .zip(&gs)
        .zip(&layout.t)
        .map(|((f, g), &t)| &(g * &layout.var(t)) - f)
        .collect();
    gens.extend(layout.field_equations(spec.q()));
    gens.extend(layout.redundant_field_equations(spec.q()));
    gens.push(layout.inverse_of_product(layout.y0.unwrap(), gs.iter().cloned()));
    layout.eliminate(gens, Mode::Affine, spec.s())
}

/// `I(X*) = (I(𝕏*) : t_1⋯t_s)`.
pub fn affine_algebraic_vanishing_ideal(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    let affine = affine_vanishing_ideal(spec)?;
    let mut out = colon_by_coordinates(&affine)?;
    out.mode = Mode::AffineAlgebraic;
    Ok(out)
}

/// `I(X*)` directly: the affine generators plus `{t_i^(q−1) − 1}`, which cut
/// the affine set down to its points with all coordinates nonzero.
pub fn affine_algebraic_vanishing_ideal_direct(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    let layout = Layout::new(spec, true, false, false)?;
    let (fs, gs) = lifted_parts(spec, &layout);
    let one = Polynomial::one(&layout.ring);
    let mut gens: Vec<Polynomial> = fs
        .iter()
        .zip(&gs)
        .zip(&layout.t)
        .map(|((f, g), &t)| &(g * &layout.var(t)) - f)
        .collect();
    gens.extend(layout.field_equations(spec.q()));
    gens.extend(layout.redundant_field_equations(spec.q()));
    gens.extend(layout.t.iter().map(|&t| &layout.var(t).pow(spec.q() - 1) - &one));
    gens.push(layout.inverse_of_product(layout.y0.unwrap(), gs.iter().cloned()));
    layout.eliminate(gens, Mode::AffineAlgebraic, spec.s())
}

/// `(I(𝕏) : t_1⋯t_s)`, which is `I(X)` whenever `X` is nonempty. Computed
/// unconditionally; the caller decides whether the hypothesis holds.
pub fn colon_to_algebraic(projective: &VanishingResult) -> Result<VanishingResult> {
    let mut out = colon_by_coordinates(projective)?;
    out.mode = match projective.mode {
        Mode::Affine | Mode::AffineAlgebraic => Mode::AffineAlgebraic,
        _ => Mode::ProjectiveAlgebraic,
    };
    Ok(out)
}

fn colon_by_coordinates(result: &VanishingResult) -> Result<VanishingResult> {
    let ring = result.ideal.ring();
    let s = ring.nvars();
    let prod = Polynomial::term(ring, 1, Monomial::from_exponents(&vec![1; s]));
    let ideal = colon(&result.ideal, &prod)?;
    Ok(VanishingResult::classify(ideal, result.mode, result.construction.clone()))
}

/// Polynomial parameterizations (every `g_i = 1`) without the `y_0` variable:
/// `({t_i − f_i z}, {y_j^q − y_j}) ∩ S` for `I(𝕏)`, plus `{f_i^(q−1) − 1}`
/// for `I(X)` when `algebraic` is set.
pub fn polynomial_shortcut(spec: &ParameterizationSpec, algebraic: bool) -> Result<VanishingResult> {
    if !spec.is_polynomial() {
        return Err(Error::InvalidInput(
            "the shortcut needs trivial denominators; use the general formulas".into(),
        ));
    }
    let layout = Layout::new(spec, false, false, true)?;
    let (fs, _) = lifted_parts(spec, &layout);
    let z = layout.var(layout.z.unwrap());
    let one = Polynomial::one(&layout.ring);
    let mut gens: Vec<Polynomial> =
        fs.iter().zip(&layout.t).map(|(f, &t)| &layout.var(t) - &(f * &z)).collect();
    gens.extend(layout.field_equations(spec.q()));
    gens.extend(layout.redundant_field_equations(spec.q()));
    if algebraic {
        gens.extend(fs.iter().map(|f| &f.pow(spec.q() - 1) - &one));
    }
    let mode = if algebraic { Mode::ProjectiveAlgebraic } else { Mode::Projective };
    layout.eliminate(gens, mode, spec.s())
}

/// Dispatch on `spec.mode()`.
pub fn vanishing_ideal(spec: &ParameterizationSpec) -> Result<VanishingResult> {
    match spec.mode() {
        Mode::Projective => projective_vanishing_ideal(spec),
        Mode::ProjectiveAlgebraic => projective_algebraic_vanishing_ideal(spec),
        Mode::Affine => affine_vanishing_ideal(spec),
        Mode::AffineAlgebraic => affine_algebraic_vanishing_ideal(spec),
    }
}
