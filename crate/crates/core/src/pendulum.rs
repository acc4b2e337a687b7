//! The physical layer: exact period, classical approximations, and clock rates.
//!
//! Amplitude `α` is always the maximum angular displacement from the
//! vertical, so a pendulum "swinging through 6°" has `α = 3°`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::agm::{agm_sequence, Tolerance};
use crate::elliptic::{elliptic_k_agm, Modulus};
use crate::error::{Error, Result};
use crate::solve::last_true;

/// Seconds in a day.
pub const SECONDS_PER_DAY: f64 = 86_400.0;

/// Coefficients of `α², α⁴, α⁶, α⁸` in the expansion of `T/T₀`.
pub const SERIES_COEFFICIENTS: [f64; 4] = [
    1.0 / 16.0,
    11.0 / 3072.0,
    173.0 / 737_280.0,
    22_931.0 / 1_321_205_760.0,
];

/// A simple pendulum: length `l`, gravity `g`, amplitude `α ∈ (0, π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PendulumConfig {
    length: f64,
    gravity: f64,
    amplitude: f64,
}

impl PendulumConfig {
    pub fn new(length: f64, gravity: f64, amplitude: f64) -> Result<Self> {
        if !(amplitude > 0.0 && amplitude < PI) {
            return Err(Error::domain(format!(
                "amplitude must lie in (0, π) radians, got {amplitude}"
            )));
        }
        Self::with_rest(length, gravity, amplitude)
    }

    /// Like [`PendulumConfig::new`] but also admits the resting pendulum
    /// `α = 0`, which renormalization reaches once the amplitude underflows.
    pub(crate) fn with_rest(length: f64, gravity: f64, amplitude: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::domain(format!(
                "length must be positive, got {length}"
            )));
        }
        if !(gravity > 0.0 && gravity.is_finite()) {
            return Err(Error::domain(format!(
                "gravity must be positive, got {gravity}"
            )));
        }
        if !(0.0..PI).contains(&amplitude) {
            return Err(Error::domain(format!(
                "amplitude must lie in (0, π) radians, got {amplitude}"
            )));
        }
        Ok(PendulumConfig {
            length,
            gravity,
            amplitude,
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn gravity(&self) -> f64 {
        self.gravity
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// `k = sin(α/2)`.
    pub fn modulus(&self) -> Result<Modulus> {
        Modulus::from_amplitude(self.amplitude)
    }

    /// Huygens' small-angle period `T₀ = 2π sqrt(l/g)`.
    pub fn small_angle_period(&self) -> f64 {
        TAU * (self.length / self.gravity).sqrt()
    }
}

/// Truncation order of the `α`-power series, `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesOrder(u8);

impl SeriesOrder {
    pub fn new(order: u8) -> Result<Self> {
        if !(1..=4).contains(&order) {
            return Err(Error::domain(format!(
                "series order must be 1..=4 (powers through α⁸), got {order}"
            )));
        }
        Ok(SeriesOrder(order))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

/// An approximation to the period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxMethod {
    /// `T₀`, independent of amplitude.
    Huygens,
    /// `T₀ (1 + ¼ sin²(α/2))`.
    P2,
    /// Bernoulli's `T₀ (1 + α²/16)`.
    Bernoulli,
    /// `T₀ (1 + α²/16 + 11α⁴/3072 + …)` through `α^{2m}`.
    Series(SeriesOrder),
    /// `T₀ / a_n` from the AGM on `(1, cos(α/2))`.
    AgmArithmetic(usize),
    /// `T₀ / b_n`.
    AgmGeometric(usize),
}

impl fmt::Display for ApproxMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxMethod::Huygens => write!(f, "huygens"),
            ApproxMethod::P2 => write!(f, "p2"),
            ApproxMethod::Bernoulli => write!(f, "bernoulli"),
            ApproxMethod::Series(m) => write!(f, "series:{}", m.get()),
            ApproxMethod::AgmArithmetic(n) => write!(f, "agm-arithmetic:{n}"),
            ApproxMethod::AgmGeometric(n) => write!(f, "agm-geometric:{n}"),
        }
    }
}

impl FromStr for ApproxMethod {
    type Err = Error;

    /// Parses `huygens`, `p2`, `bernoulli`, `series:M`, `agm-arithmetic:N`,
    /// `agm-geometric:N`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let order = |what: &str| -> Result<usize> {
            let arg =
                arg.ok_or_else(|| Error::domain(format!("{what} needs an order, e.g. {what}:2")))?;
            arg.trim()
                .parse()
                .map_err(|_| Error::domain(format!("invalid order '{arg}' for {what}")))
        };
        let no_arg = |m: ApproxMethod| match arg {
            Some(_) => Err(Error::domain(format!("method '{name}' takes no order"))),
            None => Ok(m),
        };
        match name.trim().to_ascii_lowercase().as_str() {
            "huygens" => no_arg(ApproxMethod::Huygens),
            "p2" => no_arg(ApproxMethod::P2),
            "bernoulli" => no_arg(ApproxMethod::Bernoulli),
            "series" => {
                let m = u8::try_from(order("series")?)
                    .map_err(|_| Error::domain("series order out of range"))?;
                Ok(ApproxMethod::Series(SeriesOrder::new(m)?))
            }
            "agm-arithmetic" => Ok(ApproxMethod::AgmArithmetic(order("agm-arithmetic")?)),
            "agm-geometric" => Ok(ApproxMethod::AgmGeometric(order("agm-geometric")?)),
            other => Err(Error::domain(format!("unknown method '{other}'"))),
        }
    }
}

/// `T = 4 sqrt(l/g) K(sin(α/2))`.
pub fn period_exact(cfg: &PendulumConfig, tol: Tolerance) -> Result<f64> {
    let k = elliptic_k_agm(&cfg.modulus()?, tol)?;
    Ok(4.0 * (cfg.length / cfg.gravity).sqrt() * k)
}

/// Closed forms of `(a_n, b_n)` for the AGM on `(1, cos(α/2))`, `n <= 3`.
///
/// With `c = cos(α/2)` and `q = cos(α/4)`:
///
/// ```text
/// a₁ = q²                b₁ = c^{1/2}
/// a₂ = ¼(1 + c^{1/2})²   b₂ = q c^{1/4}
/// a₃ = ¼(q + c^{1/4})²   b₃ = ½(1 + c^{1/2}) q^{1/2} c^{1/8}
/// ```
pub fn agm_closed_form(alpha: f64, n: usize) -> Option<(f64, f64)> {
    let c = (0.5 * alpha).cos();
    let q = (0.25 * alpha).cos();
    let c2 = c.sqrt();
    let c4 = c2.sqrt();
    match n {
        0 => Some((1.0, c)),
        1 => Some((q * q, c2)),
        2 => Some((0.25 * (1.0 + c2).powi(2), q * c4)),
        3 => Some((
            0.25 * (q + c4).powi(2),
            0.5 * (1.0 + c2) * q.sqrt() * c4.sqrt(),
        )),
        _ => None,
    }
}

/// `(a_n, b_n)` for the AGM on `(1, cos(α/2))`: closed form for `n <= 3`,
/// iterated beyond.
pub fn pendulum_agm_pair(alpha: f64, n: usize) -> (f64, f64) {
    agm_closed_form(alpha, n).unwrap_or_else(|| {
        let pairs = agm_sequence(1.0, (0.5 * alpha).cos(), n)
            .expect("cos(α/2) is finite and nonnegative for α in [0, π]");
        let p = pairs[n];
        (p.a(), p.b())
    })
}

/// Approximate period by the given method.
pub fn period_approx(cfg: &PendulumConfig, method: ApproxMethod) -> f64 {
    let t0 = cfg.small_angle_period();
    let alpha = cfg.amplitude;
    match method {
        ApproxMethod::Huygens => t0,
        ApproxMethod::P2 => t0 * (1.0 + 0.25 * (0.5 * alpha).sin().powi(2)),
        ApproxMethod::Bernoulli => t0 * (1.0 + alpha * alpha / 16.0),
        ApproxMethod::Series(order) => {
            let a2 = alpha * alpha;
            let mut power = 1.0;
            let mut sum = 1.0;
            for c in &SERIES_COEFFICIENTS[..order.get() as usize] {
                power *= a2;
                sum += c * power;
            }
            t0 * sum
        }
        ApproxMethod::AgmArithmetic(n) => t0 / pendulum_agm_pair(alpha, n).0,
        ApproxMethod::AgmGeometric(n) => t0 / pendulum_agm_pair(alpha, n).1,
    }
}

/// Bounds `(α/2)/sin(α/2) <= T/T₀ <= sqrt(α / sin α)` for `0 < α <= π/2`.
pub fn pars_thurston_bounds(alpha: f64) -> Result<(f64, f64)> {
    if !(alpha > 0.0 && alpha <= 0.5 * PI) {
        return Err(Error::domain(format!(
            "Pars–Thurston bounds need 0 < α <= π/2, got {alpha}"
        )));
    }
    let half = 0.5 * alpha;
    Ok((half / half.sin(), (alpha / alpha.sin()).sqrt()))
}

/// How the clock's rate is referenced in [`clock_loss_seconds_per_day`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClockCalibration {
    /// The pendulum beats exactly one second (half period) at the base
    /// amplitude; `sqrt(g/l)` follows from that condition.
    SecondsPendulum,
    /// Use the given length and gravity as they are.
    Raw { length: f64, gravity: f64 },
}

/// Beats lost per day when the amplitude grows from `alpha` to `alpha_new`:
///
/// ```text
/// 43200 sqrt(g/l) (1/K(α) − 1/K(α_new))
/// ```
///
/// For a seconds pendulum this is `86400 (1 − K(α)/K(α_new))` seconds.
pub fn clock_loss_seconds_per_day(
    alpha: f64,
    alpha_new: f64,
    calibration: ClockCalibration,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= alpha_new && alpha_new < PI) {
        return Err(Error::domain(format!(
            "need 0 < α <= α_new < π, got α = {alpha}, α_new = {alpha_new}"
        )));
    }
    let k0 = Modulus::from_amplitude(alpha)?.complete_k();
    let k1 = Modulus::from_amplitude(alpha_new)?.complete_k();
    match calibration {
        ClockCalibration::SecondsPendulum => Ok(SECONDS_PER_DAY * (k1 - k0) / k1),
        ClockCalibration::Raw { length, gravity } => {
            PendulumConfig::new(length, gravity, alpha)?;
            Ok(0.5 * SECONDS_PER_DAY * (gravity / length).sqrt() * (1.0 / k0 - 1.0 / k1))
        }
    }
}

/// First-order estimate `N sin(α) δα / 8` of the beats lost per day.
pub fn small_angle_loss_approx(alpha: f64, delta_alpha: f64, beats_per_day: u64) -> f64 {
    beats_per_day as f64 * alpha.sin() * delta_alpha / 8.0
}

/// Seconds lost over `interval` by a clock whose length was set with the
/// Huygens formula while it actually swings at amplitude `alpha`:
/// `interval · (1 − T₀/T)`.
pub fn huygens_clock_loss(alpha: f64, interval: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::domain(format!(
            "amplitude must lie in (0, π), got {alpha}"
        )));
    }
    let ratio = Modulus::from_amplitude(alpha)?.complete_k() / (0.5 * PI);
    Ok(interval * (1.0 - 1.0 / ratio))
}

/// Largest amplitude at which the Huygens period is within `rel` of the
/// true period, i.e. `(T − T₀)/T <= rel`.
pub fn huygens_accuracy_threshold(rel: f64) -> Result<f64> {
    if !(rel > 0.0 && rel < 1.0) {
        return Err(Error::domain(format!(
            "relative accuracy must lie in (0, 1), got {rel}"
        )));
    }
    let huygens_error = |alpha: f64| -> f64 {
        match Modulus::from_amplitude(alpha) {
            Ok(m) => 1.0 - 0.5 * PI / m.complete_k(),
            Err(_) => 1.0,
        }
    };
    last_true(|a| huygens_error(a) <= rel, 0.0, PI, 1e-12).ok_or(Error::NoSolution { nearest: 0.0 })
}
