//! `vanish verify`: each elimination ideal against an independent route.

use serde_json::json;
use vanish_core::groebner::{ideal_equal, is_binomial_basis};
use vanish_core::invariants::{degree, krull_dimension};
use vanish_core::points::{enumerate_set, oracle_vanishing_ideal, PointSet};
use vanish_core::vanishing::{
    affine_algebraic_vanishing_ideal_direct, colon_to_algebraic, coordinate_ring,
    projective_algebraic_vanishing_ideal_w, vanishing_ideal, Status, VanishingResult,
};
use vanish_core::{Config, Error, Ideal, Mode, MonomialOrder, ParameterizationSpec, Polynomial};

use crate::commands::{load, CmdResult, Outcome, EXIT_VERIFY};
use crate::output::Report;
use crate::Common;

enum Verdict {
    Pass,
    Fail(String),
    Skipped(String),
}

struct Checks {
    report: Report,
    failed: usize,
    skipped: usize,
    total: usize,
}

impl Checks {
    fn push(&mut self, name: &str, verdict: Verdict) {
        self.total += 1;
        let (tag, detail) = match &verdict {
            Verdict::Pass => ("PASS", None),
            Verdict::Fail(d) => {
                self.failed += 1;
                ("FAIL", Some(d.as_str()))
            }
            Verdict::Skipped(d) => {
                self.skipped += 1;
                ("SKIPPED", Some(d.as_str()))
            }
        };
        let text = match detail {
            Some(d) => format!("{tag:<8}{name}: {d}"),
            None => format!("{tag:<8}{name}"),
        };
        self.report.record(text, json!({"type": "check", "name": name, "verdict": tag, "detail": detail}));
    }
}

fn equal(a: &Ideal, b: &Ideal) -> Verdict {
    match ideal_equal(a, b, MonomialOrder::GrevLex) {
        Ok(true) => Verdict::Pass,
        Ok(false) => Verdict::Fail("ideals differ".into()),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

/// Status implied by the enumerated sets.
fn expected_status(mode: Mode, sets: &Sets) -> Status {
    match mode {
        Mode::Projective if sets.affine.is_empty() => Status::EmptySet,
        Mode::Projective if sets.projective.is_empty() => Status::OriginOnly,
        Mode::Affine if sets.affine.is_empty() => Status::EmptySet,
        Mode::Affine if sets.affine.len() == 1 && sets.affine.raw_points()[0].iter().all(|&c| c == 0) => {
            Status::OriginOnly
        }
        m if sets.get(m).is_empty() => Status::EmptySet,
        _ => Status::Proper,
    }
}

struct Sets {
    projective: PointSet,
    projective_algebraic: PointSet,
    affine: PointSet,
    affine_algebraic: PointSet,
}

impl Sets {
    fn get(&self, mode: Mode) -> &PointSet {
        match mode {
            Mode::Projective => &self.projective,
            Mode::ProjectiveAlgebraic => &self.projective_algebraic,
            Mode::Affine => &self.affine,
            Mode::AffineAlgebraic => &self.affine_algebraic,
        }
    }

    fn enumerate(spec: &ParameterizationSpec, config: &Config) -> Result<Sets, Error> {
        Ok(Sets {
            projective: enumerate_set(spec, Mode::Projective, config)?,
            projective_algebraic: enumerate_set(spec, Mode::ProjectiveAlgebraic, config)?,
            affine: enumerate_set(spec, Mode::Affine, config)?,
            affine_algebraic: enumerate_set(spec, Mode::AffineAlgebraic, config)?,
        })
    }
}

pub fn run(c: &Common) -> CmdResult {
    let spec = load(c)?;
    let config = c.config();
    let mut checks = Checks { report: Report::new(c.format), failed: 0, skipped: 0, total: 0 };
    let results: Vec<VanishingResult> = Mode::ALL
        .iter()
        .map(|&m| vanishing_ideal(&spec.with_mode(m)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let by_mode = |m: Mode| &results[Mode::ALL.iter().position(|&x| x == m).unwrap()];

    let sets = match Sets::enumerate(&spec, &config) {
        Ok(sets) => Some(sets),
        Err(e @ Error::CapExceeded { .. }) => {
            checks.push("enumeration", Verdict::Skipped(e.to_string()));
            None
        }
        Err(e) => return Err(e.to_string()),
    };

    for &mode in &Mode::ALL {
        let result = by_mode(mode);
        let Some(sets) = &sets else { continue };
        let set = sets.get(mode);
        let expected = expected_status(mode, sets);
        checks.push(
            &format!("status {mode}"),
            if result.status == expected {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("got {}, enumeration implies {}", result.status.as_str(), expected.as_str()))
            },
        );
        if set.is_empty() {
            continue;
        }
        let name = format!("point-ideal oracle {mode}");
        match oracle_vanishing_ideal(set, &config) {
            Ok(oracle) => checks.push(&name, equal(&result.ideal, &oracle)),
            Err(e @ Error::CapExceeded { .. }) => checks.push(&name, Verdict::Skipped(e.to_string())),
            Err(e) => checks.push(&name, Verdict::Fail(e.to_string())),
        }
        let name = format!("degree = |set| {mode}");
        match degree(&result.ideal) {
            Ok(d) if d == set.len() as u64 => checks.push(&name, Verdict::Pass),
            Ok(d) => checks.push(&name, Verdict::Fail(format!("degree {d}, {} points", set.len()))),
            Err(e) => checks.push(&name, Verdict::Fail(e.to_string())),
        }
    }

    let projective = by_mode(Mode::Projective);
    let proj_alg = by_mode(Mode::ProjectiveAlgebraic);
    let affine_alg = by_mode(Mode::AffineAlgebraic);

    let nonempty = |m: Mode, status: Status| match &sets {
        Some(s) => !s.get(m).is_empty(),
        None => status == Status::Proper,
    };
    let name = "colon identity projective";
    if nonempty(Mode::ProjectiveAlgebraic, proj_alg.status) {
        match colon_to_algebraic(projective) {
            Ok(colon) => checks.push(name, equal(&colon.ideal, &proj_alg.ideal)),
            Err(e) => checks.push(name, Verdict::Fail(e.to_string())),
        }
    } else {
        checks.push(name, Verdict::Skipped("the algebraic set is empty".into()));
    }
    let name = "colon identity affine";
    if nonempty(Mode::AffineAlgebraic, affine_alg.status) {
        match affine_algebraic_vanishing_ideal_direct(&spec) {
            Ok(direct) => checks.push(name, equal(&affine_alg.ideal, &direct.ideal)),
            Err(e) => checks.push(name, Verdict::Fail(e.to_string())),
        }
    } else {
        checks.push(name, Verdict::Skipped("the algebraic set is empty".into()));
    }
    match projective_algebraic_vanishing_ideal_w(&spec) {
        Ok(w) => checks.push("w-form of I(X) projective", equal(&w.ideal, &proj_alg.ideal)),
        Err(e) => checks.push("w-form of I(X) projective", Verdict::Fail(e.to_string())),
    }

    for r in [projective, proj_alg] {
        let bad = r.ideal.generators().iter().find(|g| !g.is_homogeneous());
        checks.push(
            &format!("homogeneous basis {}", r.mode),
            match bad {
                None => Verdict::Pass,
                Some(g) => Verdict::Fail(format!("{} is not homogeneous", g.render())),
            },
        );
    }

    if spec.is_monomial() && projective.status == Status::Proper {
        let gb = projective.ideal.groebner_basis();
        let binomial = is_binomial_basis(&gb);
        checks.report.record(
            format!("reduced GB is binomial: {}", if binomial { "yes" } else { "no" }),
            json!({"type": "binomial", "value": binomial}),
        );
        checks.push("binomial basis projective", if binomial { Verdict::Pass } else { Verdict::Fail("a generator has three or more terms".into()) });
        let dim = krull_dimension(&projective.ideal);
        checks.push(
            "dimension 1 projective",
            if dim == 1 { Verdict::Pass } else { Verdict::Fail(format!("dimension {dim}")) },
        );
    }

    if spec.is_identity() {
        let ring = coordinate_ring(spec.field(), spec.s());
        let q = spec.q();
        let field_eqs = (0..spec.s()).map(|i| {
            let t = Polynomial::var(&ring, i);
            &t.pow(q) - &t
        });
        let expected = Ideal::new(&ring, field_eqs).expect("same ring");
        checks.push("identity parameterization: affine ideal = (t_i^q - t_i)", equal(&by_mode(Mode::Affine).ideal, &expected));
    }

    let summary = format!("checks {}, failed {}, skipped {}", checks.total, checks.failed, checks.skipped);
    checks.report.record(
        &summary,
        json!({"type": "summary", "checks": checks.total, "failed": checks.failed, "skipped": checks.skipped}),
    );
    let code = if checks.failed > 0 { EXIT_VERIFY } else { 0 };
    let message = (checks.failed > 0).then(|| format!("{} check(s) failed", checks.failed));
    Ok(Outcome { report: checks.report.into_string(), code, message })
}
