use std::fs;

use serde_json::json;
use vanish_core::invariants::{degree, hilbert_profile, krull_dimension, regularity};
use vanish_core::points::enumerate_set;
use vanish_core::rmcode::parameter_table_for_set;
use vanish_core::vanishing::{vanishing_ideal, Status, VanishingResult};
use vanish_core::{parse_spec, Mode, ParameterizationSpec};

use crate::output::{table, Report};
use crate::Common;

pub const EXIT_EMPTY: u8 = 2;
pub const EXIT_ORIGIN: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

pub struct Outcome {
    pub report: String,
    pub code: u8,
    /// Printed to stderr after the report.
    pub message: Option<String>,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report: report.into_string(), code: 0, message: None }
    }
}

pub type CmdResult = Result<Outcome, String>;

pub fn load(c: &Common) -> Result<ParameterizationSpec, String> {
    let path = c.spec.display();
    let src = fs::read_to_string(&c.spec).map_err(|e| format!("{path}: {e}"))?;
    let spec = parse_spec(&src).map_err(|e| format!("{path}:{e}"))?;
    Ok(match c.mode {
        Some(m) => spec.with_mode(m),
        None => spec,
    })
}

/// Exit code and stderr note for a degenerate status.
fn status_exit(mode: Mode, status: Status) -> (u8, Option<String>) {
    match status {
        Status::Proper => (0, None),
        Status::EmptySet => {
            (EXIT_EMPTY, Some(format!("the {mode} set is empty: its vanishing ideal is the whole ring")))
        }
        Status::OriginOnly => (
            EXIT_ORIGIN,
            Some(format!("the {mode} set lies at the origin: its vanishing ideal is (t1, ..., ts)")),
        ),
    }
}

fn header(report: &mut Report, result: &VanishingResult) {
    report.record(format!("mode {}", result.mode), json!({"type": "mode", "value": result.mode.as_str()}));
    report.record(
        format!("status {}", result.status.as_str()),
        json!({"type": "status", "value": result.status.as_str()}),
    );
}

pub fn ideal(c: &Common) -> CmdResult {
    let spec = load(c)?;
    let result = vanishing_ideal(&spec).map_err(|e| e.to_string())?;
    let mut report = Report::new(c.format);
    header(&mut report, &result);
    let gens = result.ideal.generators();
    report.text(format!("generators {}", gens.len()));
    for g in gens {
        let s = g.render();
        report.record(format!("  {s}"), json!({"type": "generator", "value": s}));
    }
    if result.status == Status::Proper {
        let dim = krull_dimension(&result.ideal);
        report.record(format!("dim {dim}"), json!({"type": "dimension", "value": dim}));
        if let Ok(deg) = degree(&result.ideal) {
            report.record(format!("degree {deg}"), json!({"type": "degree", "value": deg}));
        }
    }
    let (code, message) = status_exit(result.mode, result.status);
    Ok(Outcome { report: report.into_string(), code, message })
}

pub fn invariants(c: &Common, dmax: Option<u32>) -> CmdResult {
    let spec = load(c)?;
    let result = vanishing_ideal(&spec).map_err(|e| e.to_string())?;
    let mut report = Report::new(c.format);
    header(&mut report, &result);
    if result.status != Status::Proper {
        let (code, message) = status_exit(result.mode, result.status);
        return Ok(Outcome { report: report.into_string(), code, message });
    }
    if !result.mode.is_projective() {
        let dim = krull_dimension(&result.ideal);
        let deg = degree(&result.ideal).map_err(|e| e.to_string())?;
        report.record(
            format!("dim {dim}, degree {deg}, reg -"),
            json!({"type": "invariants", "dimension": dim, "degree": deg, "regularity": null}),
        );
        return Ok(Outcome::ok(report));
    }
    let reg = regularity(&result.ideal).map_err(|e| e.to_string())?;
    let dmax = dmax.unwrap_or(reg as u32 + 1);
    let profile = hilbert_profile(&result.ideal, dmax).map_err(|e| e.to_string())?;
    report.record(
        format!("dim {}, degree {}, reg {}", profile.dimension, profile.degree, profile.regularity),
        json!({
            "type": "invariants",
            "dimension": profile.dimension,
            "degree": profile.degree,
            "regularity": profile.regularity,
        }),
    );
    let mut rows = vec![vec!["d".to_string(), "H(d)".to_string()]];
    for (d, v) in profile.values.iter().enumerate() {
        rows.push(vec![d.to_string(), v.to_string()]);
    }
    let lines = table(&rows);
    report.text(&lines[0]);
    for (line, (d, v)) in lines[1..].iter().zip(profile.values.iter().enumerate()) {
        report.record(line, json!({"type": "hilbert", "d": d, "value": v}));
    }
    Ok(Outcome::ok(report))
}

pub fn code(c: &Common, dmin: u32, dmax: Option<u32>) -> CmdResult {
    let spec = load(c)?;
    let mode = spec.mode();
    if !mode.is_projective() {
        return Err(format!("codes need a projective mode, got {mode}"));
    }
    if dmin < 1 {
        return Err("--dmin must be at least 1".into());
    }
    if let Some(dmax) = dmax {
        if dmin > dmax {
            return Err(format!("--dmin {dmin} exceeds --dmax {dmax}"));
        }
    }
    let config = c.config();
    let mut report = Report::new(c.format);
    let result = vanishing_ideal(&spec).map_err(|e| e.to_string())?;
    if result.status != Status::Proper {
        let (code, message) = status_exit(mode, result.status);
        return Ok(Outcome { report: report.into_string(), code, message });
    }
    let set = enumerate_set(&spec, mode, &config).map_err(|e| e.to_string())?;
    let reg = regularity(&result.ideal).map_err(|e| e.to_string())?;
    let dmax = dmax.unwrap_or((reg as u32).max(dmin));
    let rows = parameter_table_for_set(&set, dmin..=dmax, Some(reg), &config).map_err(|e| e.to_string())?;
    report.record(format!("mode {mode}"), json!({"type": "mode", "value": mode.as_str()}));
    let mut cells = vec![vec!["d".to_string(), "length".into(), "dim".into(), "delta".into()]];
    cells.extend(rows.iter().map(|r| {
        vec![r.degree.to_string(), r.length.to_string(), r.dimension.to_string(), r.min_distance.to_string()]
    }));
    let lines = table(&cells);
    report.text(&lines[0]);
    for (line, r) in lines[1..].iter().zip(&rows) {
        report.record(
            line,
            json!({
                "type": "code",
                "d": r.degree,
                "length": r.length,
                "dimension": r.dimension,
                "min_distance": r.min_distance.value(),
            }),
        );
    }
    Ok(Outcome::ok(report))
}

pub fn points(c: &Common) -> CmdResult {
    let spec = load(c)?;
    let set = enumerate_set(&spec, spec.mode(), &c.config()).map_err(|e| e.to_string())?;
    let mut report = Report::new(c.format);
    report.record(format!("mode {}", spec.mode()), json!({"type": "mode", "value": spec.mode().as_str()}));
    report.record(format!("count {}", set.len()), json!({"type": "count", "value": set.len()}));
    for p in set.raw_points() {
        let s = set.render_point(p);
        report.record(format!("  {s}"), json!({"type": "point", "value": s}));
    }
    if set.is_empty() {
        let (code, message) = status_exit(spec.mode(), Status::EmptySet);
        return Ok(Outcome { report: report.into_string(), code, message });
    }
    Ok(Outcome::ok(report))
}
