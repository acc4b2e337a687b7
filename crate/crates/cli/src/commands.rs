//! One function per subcommand, each building a [`Report`].

use std::f64::consts::{FRAC_PI_2, PI};

use pendulum_agm::{
    amplitude_threshold, certified_digits, elliptic_i_quadrature, ingham_bound_closed,
    ingham_bound_trace, measured_error, period_approx, period_exact, renormalize_iter,
    significant_digits, ApproxMethod, ApproximantKind, BoundKind, Error, Measurement,
    PendulumConfig, Result, Tolerance,
};

use crate::report::{AngleUnit, Cell, OutputSpec, Report};

/// Absolute error target for `K` from the quadrature oracle.
pub const ORACLE_TOL: f64 = 1e-13;

/// Exact and oracle periods must agree this well for `--verify` to pass.
pub const VERIFY_TOL: f64 = 1e-11;

const FLOOR_TEXT: &str = "below measurement floor";

fn angle(name: &str, unit: AngleUnit) -> String {
    format!("{name}_{}", unit.label())
}

/// Converts an input amplitude to radians, rejecting values outside the open
/// half-turn with a message in the caller's unit.
fn amplitude_rad(x: f64, unit: AngleUnit) -> Result<f64> {
    let max = unit.rad_to_unit(PI);
    if !(x > 0.0 && x < max) {
        return Err(Error::Domain(format!(
            "amplitude must lie strictly between 0 and {max} {}, got {x}",
            unit.label()
        )));
    }
    Ok(unit.to_rad(x))
}

fn count(n: usize) -> Cell {
    Cell::Int(n as i64)
}

/// `T/T₀ = K / (π/2)` from quadrature, independent of the AGM.
fn oracle_ratio(alpha: f64) -> Result<f64> {
    Ok(elliptic_i_quadrature(1.0, (0.5 * alpha).cos(), ORACLE_TOL)?.value / FRAC_PI_2)
}

#[derive(Debug, Clone, Copy)]
pub enum PeriodMethod {
    Exact,
    Approx(ApproxMethod),
}

impl PeriodMethod {
    pub fn label(&self) -> String {
        match self {
            PeriodMethod::Exact => "exact".into(),
            PeriodMethod::Approx(m) => m.to_string(),
        }
    }
}

pub struct PeriodArgs {
    pub amplitude: f64,
    pub length: f64,
    pub gravity: f64,
    pub method: PeriodMethod,
    pub verify: bool,
}

pub fn period(args: &PeriodArgs, out: &OutputSpec) -> Result<Report> {
    let alpha = amplitude_rad(args.amplitude, out.unit)?;
    let cfg = PendulumConfig::new(args.length, args.gravity, alpha)?;
    let t0 = cfg.small_angle_period();
    let t = match args.method {
        PeriodMethod::Exact => period_exact(&cfg, Tolerance::default())?,
        PeriodMethod::Approx(m) => period_approx(&cfg, m),
    };
    let mut columns = vec![
        angle("amplitude", out.unit),
        "length_m".into(),
        "gravity_m_s2".into(),
        "method".into(),
        "period_s".into(),
        "small_angle_period_s".into(),
        "ratio".into(),
    ];
    let mut row = vec![
        Cell::Num(args.amplitude),
        Cell::Num(args.length),
        Cell::Num(args.gravity),
        Cell::Text(args.method.label()),
        Cell::Num(t),
        Cell::Num(t0),
        Cell::Num(t / t0),
    ];
    let mut notes = Vec::new();
    if args.verify {
        let oracle = t0 * oracle_ratio(alpha)?;
        let rel = (t - oracle) / oracle;
        columns.extend(["oracle_period_s".into(), "rel_error_vs_oracle".into()]);
        row.extend([Cell::Num(oracle), Cell::Num(rel)]);
        if let PeriodMethod::Exact = args.method {
            let verdict = if rel.abs() <= VERIFY_TOL {
                "agree"
            } else {
                "DISAGREE"
            };
            notes.push(format!(
                "AGM and quadrature {verdict}: |relative difference| = {:.2e} (tolerance {VERIFY_TOL:.0e})",
                rel.abs()
            ));
        }
    }
    let mut report = Report::new("period", columns);
    report.push(row);
    report.notes = notes;
    Ok(report)
}

fn measured_cell(m: &Measurement) -> Cell {
    if m.is_resolved() {
        Cell::Num(m.raw)
    } else {
        Cell::Text(FLOOR_TEXT.into())
    }
}

pub fn bounds(amplitude: f64, order: usize, kind: BoundKind, out: &OutputSpec) -> Result<Report> {
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let alpha = amplitude_rad(amplitude, out.unit)?;
    let budget = match kind {
        BoundKind::GeneralTrace => ingham_bound_trace(alpha, order)?,
        BoundKind::ClosedForm => ingham_bound_closed(alpha, order)?,
    };
    let big_r = measured_error(alpha, order, ApproximantKind::Arithmetic, ORACLE_TOL)?;
    let small_r = measured_error(alpha, order, ApproximantKind::Geometric, ORACLE_TOL)?;
    let digits = match big_r.relative_error() {
        Some(r) => count(significant_digits(&r) as usize),
        None => Cell::Text(FLOOR_TEXT.into()),
    };
    let mut report = Report::new(
        "bounds",
        vec![
            angle("amplitude", out.unit),
            "order".into(),
            "kind".into(),
            "bound".into(),
            "certified_digits".into(),
            "measured_R".into(),
            "measured_r".into(),
            "measured_digits".into(),
            "measurement_floor".into(),
        ],
    );
    report.push(vec![
        Cell::Num(amplitude),
        count(order),
        Cell::Text(kind_label(kind).into()),
        Cell::Num(budget.bound),
        count(certified_digits(budget.bound) as usize),
        measured_cell(&big_r),
        measured_cell(&small_r),
        digits,
        Cell::Num(big_r.floor),
    ]);
    report.notes.push(format!(
        "bound is on R (approximant T0/a_{order}); r is the error of T0/b_{order}"
    ));
    Ok(report)
}

pub fn kind_label(kind: BoundKind) -> &'static str {
    match kind {
        BoundKind::GeneralTrace => "trace",
        BoundKind::ClosedForm => "closed",
    }
}

pub fn threshold(order: usize, epsilon: f64, kind: BoundKind, out: &OutputSpec) -> Result<Report> {
    let cell = match amplitude_threshold(order, epsilon, kind) {
        Ok(alpha) => {
            // down, so every amplitude up to the printed one meets epsilon
            let deg = (alpha.to_degrees() * 100.0).floor() / 100.0;
            match out.unit {
                AngleUnit::Deg => Cell::Fixed(deg, 2),
                AngleUnit::Rad => Cell::Num(deg.to_radians()),
            }
        }
        Err(Error::NoSolution { nearest }) if nearest == PI => Cell::Text("whole domain".into()),
        Err(Error::NoSolution { .. }) => Cell::Text("none".into()),
        Err(e) => return Err(e),
    };
    let mut report = Report::new(
        "threshold",
        vec![
            "order".into(),
            "epsilon".into(),
            "kind".into(),
            angle("max_amplitude", out.unit),
        ],
    );
    report.push(vec![
        count(order),
        Cell::Num(epsilon),
        Cell::Text(kind_label(kind).into()),
        cell,
    ]);
    Ok(report)
}

pub fn renorm(
    amplitude: f64,
    length: f64,
    gravity: f64,
    steps: usize,
    out: &OutputSpec,
) -> Result<Report> {
    let cfg = PendulumConfig::new(length, gravity, amplitude_rad(amplitude, out.unit)?)?;
    let t = period_exact(&cfg, Tolerance::default())?;
    let mut report = Report::new(
        "renorm",
        vec![
            "step".into(),
            angle("amplitude", out.unit),
            "length_m".into(),
            "ingham_bound_n3".into(),
            "period_residual".into(),
        ],
    );
    for s in renormalize_iter(&cfg, steps)? {
        let a = s.after.amplitude();
        let bound = if a > 0.0 {
            ingham_bound_closed(a, 3)?.bound
        } else {
            0.0
        };
        let ts = period_exact(&s.after, Tolerance::default())?;
        report.push(vec![
            count(s.index),
            Cell::Num(out.unit.rad_to_unit(a)),
            Cell::Num(s.after.length()),
            Cell::Num(bound),
            Cell::Num((ts - t) / t),
        ]);
    }
    Ok(report)
}

pub struct TableArgs {
    pub from: f64,
    pub to: f64,
    pub step: f64,
    pub methods: Vec<ApproxMethod>,
}

/// Amplitudes `from, from + step, …` up to `to`, in input units.
pub fn amplitude_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && from <= to) {
        return Err(Error::Domain(format!(
            "need from <= to, got {from} .. {to}"
        )));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::Domain(format!("step must be positive, got {step}")));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| from + i as f64 * step).collect())
}

pub fn table(args: &TableArgs, out: &OutputSpec) -> Result<Report> {
    if args.methods.is_empty() {
        return Err(Error::Domain("need at least one method".into()));
    }
    let grid = amplitude_grid(args.from, args.to, args.step)?;
    let mut columns = vec![
        angle("amplitude", out.unit),
        "exact".into(),
        "oracle".into(),
    ];
    for m in &args.methods {
        columns.push(m.to_string());
        columns.push(format!("{m}_rel_error"));
    }
    let mut report = Report::new("table", columns);
    for x in grid {
        // ratios do not depend on l and g
        let cfg = PendulumConfig::new(1.0, 1.0, amplitude_rad(x, out.unit)?)?;
        let t0 = cfg.small_angle_period();
        let exact = period_exact(&cfg, Tolerance::default())? / t0;
        let oracle = oracle_ratio(cfg.amplitude())?;
        let mut row = vec![Cell::Num(x), Cell::Num(exact), Cell::Num(oracle)];
        for &m in &args.methods {
            let v = period_approx(&cfg, m) / t0;
            row.push(Cell::Num(v));
            row.push(Cell::Num((v - oracle) / oracle));
        }
        report.push(row);
    }
    report
        .notes
        .push("ratios are T/T0; rel_error = (method − oracle)/oracle".into());
    Ok(report)
}
