//! Period of the simple pendulum through Gauss' arithmetic-geometric mean.
//!
//! The crate is layered bottom-up:
//!
//! * [`agm`]: the AGM iteration and its limit.
//! * [`elliptic`]: `K(k)` and `I(a, b)` by the AGM, by series, and by an
//!   independent adaptive quadrature used as ground truth.
//! * [`pendulum`]: exact period, classical approximations, clock rates.
//! * [`ingham`]: rigorous upper bounds on the relative error of the AGM
//!   approximants `1/a_n`, `1/b_n`, and amplitude thresholds derived from them.
//! * [`renorm`]: the length/amplitude map that leaves the period unchanged,
//!   and singular moduli with `K(k)/K(k′)` fixed.
//!
//! ```
//! use pendulum_agm::{period_exact, PendulumConfig, Tolerance};
//!
//! let cfg = PendulumConfig::new(1.0, 9.80665, 30f64.to_radians()).unwrap();
//! let t = period_exact(&cfg, Tolerance::default()).unwrap();
//! assert!(t > cfg.small_angle_period());
//! ```

// `!(x > 0.0)` is deliberate throughout: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod agm;
pub mod elliptic;
pub mod error;
pub mod ingham;
pub mod pendulum;
pub mod renorm;
mod solve;

pub use agm::{agm_mean, agm_sequence, agm_step, gap_bound, AgmPair, AgmTrace, Tolerance};
pub use elliptic::{
    elliptic_i_agm, elliptic_i_quadrature, elliptic_k_agm, elliptic_k_series, gauss_substitution,
    predict_iterations, Modulus, QuadratureResult,
};
pub use error::{Error, Result};
pub use ingham::{
    amplitude_threshold, certified_digits, geometric_bound_trace, ingham_bound_closed,
    ingham_bound_trace, measured_error, relative_error_convert, significant_digits,
    ApproximantKind, BoundKind, Certifies, ErrorBudget, Measurement, RelativeError,
    RelativeErrorBasis,
};
pub use pendulum::{
    agm_closed_form, clock_loss_seconds_per_day, huygens_accuracy_threshold, huygens_clock_loss,
    pars_thurston_bounds, pendulum_agm_pair, period_approx, period_exact, small_angle_loss_approx,
    ApproxMethod, ClockCalibration, PendulumConfig, SeriesOrder,
};
pub use renorm::{
    find_singular_modulus, renormalize, renormalize_iter, singular_ratio, RenormStep,
};
