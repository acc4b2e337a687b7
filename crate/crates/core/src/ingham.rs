//! Rigorous relative-error bounds for the AGM approximants of `T/T₀`.
//!
//! Running the AGM on `(1, cos(α/2))` gives `T/T₀ = 1/μ`, and the two
//! approximants `1/a_n` and `1/b_n` bracket it. Their relative errors
//!
//! ```text
//! 1/μ = (1/(1 − R_n)) · 1/a_n = (1/(1 + r_n)) · 1/b_n
//! ```
//!
//! satisfy `0 < R_n < (a_n − b_n) / (2 a_{n+1})` (Ingham), which for
//! `n = 2, 3` collapses to closed forms in `α`. The geometric error obeys
//! `0 < r_n < (a_n − b_n) / (2 b_n)`, since `μ < a_{n+1}`.
//!
//! Note that `r_n > R_n`: although `b_n` is closer to `μ` than `a_n`, the
//! reciprocal `1/b_n` is the worse approximation to `1/μ`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::agm::agm_sequence;
use crate::elliptic::elliptic_i_quadrature;
use crate::error::{Error, Result};
use crate::solve::last_true;

/// Returned by [`significant_digits`] for an exact approximation.
pub const MAX_SIGNIFICANT_DIGITS: u32 = 17;

/// Relative errors measured against the quadrature oracle below this are
/// not distinguishable from rounding noise.
pub const MEASUREMENT_FLOOR: f64 = 1e-13;

/// Which quantity a relative error is normalized by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelativeErrorBasis {
    /// `R = (true − approx) / true`.
    TrueValue,
    /// `R̄ = (true − approx) / approx`.
    ApproximateValue,
}

/// A nonnegative relative error together with its normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeError {
    value: f64,
    basis: RelativeErrorBasis,
}

impl RelativeError {
    pub fn new(value: f64, basis: RelativeErrorBasis) -> Result<Self> {
        if !(value >= 0.0 && value.is_finite()) {
            return Err(Error::domain(format!(
                "relative error must be finite and nonnegative, got {value}"
            )));
        }
        if basis == RelativeErrorBasis::TrueValue && value >= 1.0 {
            return Err(Error::domain(format!(
                "relative error w.r.t. the true value must be < 1, got {value}"
            )));
        }
        Ok(RelativeError { value, basis })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn basis(&self) -> RelativeErrorBasis {
        self.basis
    }
}

/// Switches basis: `R̄ = R/(1 − R)` and `R = R̄/(1 + R̄)`.
pub fn relative_error_convert(e: RelativeError) -> RelativeError {
    match e.basis {
        RelativeErrorBasis::TrueValue => RelativeError {
            value: e.value / (1.0 - e.value),
            basis: RelativeErrorBasis::ApproximateValue,
        },
        RelativeErrorBasis::ApproximateValue => RelativeError {
            value: e.value / (1.0 + e.value),
            basis: RelativeErrorBasis::TrueValue,
        },
    }
}

/// Largest `n` with `R < ½·10⁻ⁿ`, i.e. the number of correct significant
/// digits. Errors given relative to the approximate value are converted first.
pub fn significant_digits(r: &RelativeError) -> u32 {
    let r = match r.basis {
        RelativeErrorBasis::TrueValue => *r,
        RelativeErrorBasis::ApproximateValue => relative_error_convert(*r),
    };
    digits_where(|threshold| r.value < threshold, r.value)
}

/// Digits certified by an upper bound: the largest `n` with
/// `bound <= ½·10⁻ⁿ`. Since the error is strictly below the bound this
/// guarantees `R < ½·10⁻ⁿ`.
pub fn certified_digits(bound: f64) -> u32 {
    digits_where(|threshold| bound <= threshold, bound)
}

fn digits_where<P: Fn(f64) -> bool>(holds: P, value: f64) -> u32 {
    if value == 0.0 {
        return MAX_SIGNIFICANT_DIGITS;
    }
    let mut n = 0;
    if !holds(0.5) {
        return 0;
    }
    while n < MAX_SIGNIFICANT_DIGITS && holds(0.5 * 10f64.powi(-(n as i32 + 1))) {
        n += 1;
    }
    n
}

/// How an [`ErrorBudget`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// From the AGM trace, valid for every order.
    GeneralTrace,
    /// Closed form in `α`, orders 2 and 3.
    ClosedForm,
}

/// Which approximant an [`ErrorBudget`] bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certifies {
    /// `R_n`, the error of `1/a_n`.
    Arithmetic,
    /// `r_n`, the error of `1/b_n`.
    Geometric,
}

/// A rigorous upper bound on a relative error of order `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorBudget {
    pub order_n: usize,
    pub bound: f64,
    pub kind: BoundKind,
    pub certifies: Certifies,
}

/// The two AGM approximants to `T/T₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproximantKind {
    /// `1/a_n`, too small.
    Arithmetic,
    /// `1/b_n`, too large.
    Geometric,
}

fn check_amplitude(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::domain(format!(
            "amplitude must lie in (0, π), got {alpha}"
        )));
    }
    Ok(())
}

/// `(a_n, b_n, a_{n+1}, a_n − b_n)` for the AGM on `(1, cos(α/2))`.
///
/// The gap is carried through `c_n = c_{n−1}² / (8 a_{n+1})` from
/// `c_0 = 2 sin²(α/4)` so it keeps full relative precision after `a_n` and
/// `b_n` agree to every printed digit.
fn pendulum_trace(alpha: f64, n: usize) -> (f64, f64, f64, f64) {
    let pairs =
        agm_sequence(1.0, (0.5 * alpha).cos(), n + 1).expect("cos(α/2) is finite and nonnegative");
    let mut gap = 2.0 * (0.25 * alpha).sin().powi(2);
    for j in 1..=n {
        gap = gap * gap / (8.0 * pairs[j + 1].a());
    }
    (pairs[n].a(), pairs[n].b(), pairs[n + 1].a(), gap)
}

/// Ingham's bound `R_n < (a_n − b_n) / (2 a_{n+1})`.
pub fn ingham_bound_trace(alpha: f64, n: usize) -> Result<ErrorBudget> {
    check_amplitude(alpha)?;
    let (_, _, a_next, gap) = pendulum_trace(alpha, n);
    Ok(ErrorBudget {
        order_n: n,
        bound: gap / (2.0 * a_next),
        kind: BoundKind::GeneralTrace,
        certifies: Certifies::Arithmetic,
    })
}

/// `r_n < (a_n − b_n) / (2 b_n)`, from `μ < a_{n+1} = b_n + (a_n − b_n)/2`.
pub fn geometric_bound_trace(alpha: f64, n: usize) -> Result<ErrorBudget> {
    check_amplitude(alpha)?;
    let (_, b, _, gap) = pendulum_trace(alpha, n);
    Ok(ErrorBudget {
        order_n: n,
        bound: gap / (2.0 * b),
        kind: BoundKind::GeneralTrace,
        certifies: Certifies::Geometric,
    })
}

/// Closed-form bounds on `R_n`:
///
/// ```text
/// n = 2:  (sin(α/4) tan(α/4))⁴ / (2⁶ cos(α/2))
/// n = 3:  (sin(α/4) tan(α/4))⁸ / (2¹⁴ cos²(α/2))
/// ```
pub fn ingham_bound_closed(alpha: f64, n: usize) -> Result<ErrorBudget> {
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedOrder(n));
    }
    check_amplitude(alpha)?;
    let quarter = 0.25 * alpha;
    let x = quarter.sin() * quarter.tan();
    let c = (0.5 * alpha).cos();
    let bound = if n == 2 {
        x.powi(4) / (64.0 * c)
    } else {
        x.powi(8) / (16384.0 * c * c)
    };
    Ok(ErrorBudget {
        order_n: n,
        bound,
        kind: BoundKind::ClosedForm,
        certifies: Certifies::Arithmetic,
    })
}

/// A relative error measured against the quadrature oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    /// Signed measured value; may be slightly negative inside the noise floor.
    pub raw: f64,
    /// Below this the measurement carries no information.
    pub floor: f64,
}

impl Measurement {
    pub fn is_resolved(&self) -> bool {
        self.raw > self.floor
    }

    /// The measured error, or `None` when it is below the floor.
    pub fn relative_error(&self) -> Option<RelativeError> {
        if self.is_resolved() {
            RelativeError::new(self.raw, RelativeErrorBasis::TrueValue).ok()
        } else {
            None
        }
    }
}

/// Measures `R_n = (a_n − μ)/a_n` or `r_n = (μ − b_n)/b_n` with
/// `μ = π / (2 K)` and `K` taken from the quadrature oracle, not the AGM.
pub fn measured_error(
    alpha: f64,
    n: usize,
    kind: ApproximantKind,
    oracle_tol: f64,
) -> Result<Measurement> {
    check_amplitude(alpha)?;
    let q = elliptic_i_quadrature(1.0, (0.5 * alpha).cos(), oracle_tol)?;
    let mu = FRAC_PI_2 / q.value;
    let pairs = agm_sequence(1.0, (0.5 * alpha).cos(), n)?;
    let p = pairs[n];
    let raw = match kind {
        ApproximantKind::Arithmetic => (p.a() - mu) / p.a(),
        ApproximantKind::Geometric => (mu - p.b()) / p.b(),
    };
    let floor = MEASUREMENT_FLOOR.max(2.0 * q.abs_error_estimate / q.value + 4.0 * f64::EPSILON);
    Ok(Measurement { raw, floor })
}

fn bound_value(alpha: f64, n: usize, kind: BoundKind) -> Result<f64> {
    Ok(match kind {
        BoundKind::GeneralTrace => ingham_bound_trace(alpha, n)?.bound,
        BoundKind::ClosedForm => ingham_bound_closed(alpha, n)?.bound,
    })
}

/// Lower end of the amplitude search interval, radians.
pub const THRESHOLD_MIN_AMPLITUDE: f64 = 1e-9;
/// Upper end of the amplitude search interval is `π − THRESHOLD_PI_MARGIN`.
pub const THRESHOLD_PI_MARGIN: f64 = 1e-9;

/// Largest amplitude whose order-`n` bound is at most `epsilon`, by bisection
/// to 1e-12 rad. The bounds increase strictly with `α`.
///
/// Fails with [`Error::NoSolution`] when every amplitude in the search
/// interval qualifies (`nearest = π`) or none does (`nearest = 0`).
pub fn amplitude_threshold(n: usize, epsilon: f64, kind: BoundKind) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("order must be at least 1"));
    }
    if kind == BoundKind::ClosedForm && n != 2 && n != 3 {
        return Err(Error::UnsupportedOrder(n));
    }
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::domain(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let ok = |alpha: f64| bound_value(alpha, n, kind).is_ok_and(|b| b <= epsilon);
    let hi = PI - THRESHOLD_PI_MARGIN;
    if ok(hi) {
        return Err(Error::NoSolution { nearest: PI });
    }
    last_true(ok, THRESHOLD_MIN_AMPLITUDE, hi, 1e-12).ok_or(Error::NoSolution { nearest: 0.0 })
}
