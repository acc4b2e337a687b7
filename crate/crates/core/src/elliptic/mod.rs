//! Complete elliptic integrals of the first kind.
//!
//! ```text
//! I(a, b) = ∫₀^{π/2} dφ / sqrt(a² cos²φ + b² sin²φ) = π / (2 M(a, b))
//! K(k)    = ∫₀^{π/2} dφ / sqrt(1 − k² sin²φ)        = I(1, k′)
//! ```
//!
//! The AGM route is the production path. [`elliptic_i_quadrature`] evaluates
//! the same integral by adaptive quadrature and exists to check it.

mod quadrature;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::agm::{agm_mean, Tolerance};
use crate::error::{Error, Result};

pub use quadrature::{integrate, QuadratureResult, MAX_SUBINTERVALS};

/// Largest accepted modulus. `K` diverges logarithmically as `k -> 1`.
pub const MAX_MODULUS: f64 = 1.0 - 1e-12;

/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: usize = 1000;

/// Elliptic modulus `k` together with its complement `k′ = sqrt(1 − k²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    k_prime: f64,
    modular_angle: Option<f64>,
}

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        check_k(k)?;
        // (1 - k)(1 + k) keeps k′ accurate when k is close to one
        let k_prime = ((1.0 - k) * (1.0 + k)).sqrt();
        Ok(Modulus {
            k,
            k_prime,
            modular_angle: None,
        })
    }

    /// Modulus `sin θ` for modular angle `θ` in `[0, π/2)`.
    pub fn from_modular_angle(theta: f64) -> Result<Self> {
        if !(0.0..FRAC_PI_2).contains(&theta) {
            return Err(Error::domain(format!(
                "modular angle must lie in [0, π/2), got {theta}"
            )));
        }
        let (k, k_prime) = theta.sin_cos();
        check_k(k)?;
        Ok(Modulus {
            k,
            k_prime,
            modular_angle: Some(theta),
        })
    }

    /// Modulus `sin(α/2)` of a pendulum with amplitude `α` in `[0, π)`.
    pub fn from_amplitude(alpha: f64) -> Result<Self> {
        Self::from_modular_angle(0.5 * alpha)
    }

    /// The modulus whose value is this one's complement.
    pub fn complement(&self) -> Result<Self> {
        check_k(self.k_prime)?;
        Ok(Modulus {
            k: self.k_prime,
            k_prime: self.k,
            modular_angle: self.modular_angle.map(|t| FRAC_PI_2 - t),
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn k_prime(&self) -> f64 {
        self.k_prime
    }

    pub fn modular_angle(&self) -> Option<f64> {
        self.modular_angle
    }

    /// `K(k)` by the AGM at the default tolerance.
    pub fn complete_k(&self) -> f64 {
        elliptic_k_agm(self, Tolerance::default())
            .expect("default tolerance converges for every valid modulus")
    }
}

fn check_k(k: f64) -> Result<()> {
    if !(0.0..MAX_MODULUS).contains(&k) {
        return Err(Error::domain(format!(
            "modulus must lie in [0, 1 - 1e-12), got {k}"
        )));
    }
    Ok(())
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!(
            "{name} must be positive and finite, got {x}"
        )));
    }
    Ok(())
}

/// `I(a, b) = π / (2 M(a, b))`.
pub fn elliptic_i_agm(a: f64, b: f64, tol: Tolerance) -> Result<f64> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    let trace = agm_mean(a, b, tol)?;
    Ok(FRAC_PI_2 / trace.mean())
}

/// `I(a, b)` by adaptive Gauss–Kronrod quadrature of the defining integral.
pub fn elliptic_i_quadrature(a: f64, b: f64, target_abs_err: f64) -> Result<QuadratureResult> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    integrate(
        |phi: f64| {
            let (s, c) = phi.sin_cos();
            1.0 / (a * c).hypot(b * s)
        },
        0.0,
        FRAC_PI_2,
        target_abs_err,
    )
}

/// `K(k) = I(1, k′)`.
pub fn elliptic_k_agm(m: &Modulus, tol: Tolerance) -> Result<f64> {
    if m.k == 0.0 {
        return Ok(FRAC_PI_2);
    }
    elliptic_i_agm(1.0, m.k_prime, tol)
}

/// Partial sum of
///
/// ```text
/// K(k) = (π/2) {1 + Σ_{n≥1} [(2n−1)!! / (2n)!!]² k^{2n}}
/// ```
///
/// through `k^{2·terms}`. Stops early once a term drops below machine
/// epsilon relative to the running sum; capped at [`MAX_SERIES_TERMS`].
pub fn elliptic_k_series(m: &Modulus, terms: usize) -> f64 {
    let k2 = m.k * m.k;
    let mut sum = 1.0;
    let mut ratio = 1.0; // (2n-1)!!/(2n)!!
    let mut power = 1.0;
    for n in 1..=terms.min(MAX_SERIES_TERMS) {
        let nf = n as f64;
        ratio *= (2.0 * nf - 1.0) / (2.0 * nf);
        power *= k2;
        let term = ratio * ratio * power;
        if term < f64::EPSILON * sum {
            break;
        }
        sum += term;
    }
    FRAC_PI_2 * sum
}

/// Gauss' change of variable
///
/// ```text
/// sin φ = 2a sin φ′ / (a + b + (a − b) sin² φ′)
/// ```
///
/// mapping `[0, π/2]` onto itself for `a >= b > 0`.
pub fn gauss_substitution(phi_prime: f64, a: f64, b: f64) -> f64 {
    let s = phi_prime.sin();
    let d = a + b + (a - b) * s * s;
    let sin_phi = 2.0 * a * s / d;
    // d² − 4a²s² = (1 − s)(a(1 − s) + b(1 + s)) · (d + 2as), with
    // 1 − sin x = 2 sin²(π/4 − x/2) to avoid cancellation near π/2
    let one_minus_s = 2.0 * (FRAC_PI_4 - 0.5 * phi_prime).sin().powi(2);
    let cos2 = one_minus_s * (a * one_minus_s + b * (1.0 + s)) * (d + 2.0 * a * s);
    let cos_phi = cos2.max(0.0).sqrt() / d;
    sin_phi.atan2(cos_phi)
}

/// `N(ε) = ln((a − b)/(b² ε)) / ln 2`: beyond this many AGM steps the
/// integrand `1/sqrt(a_n² cos²φ + b_n² sin²φ)` is within `ε` of `1/M(a, b)`
/// for every `φ`.
pub fn predict_iterations(a: f64, b: f64, eps: f64) -> Result<f64> {
    check_positive("b", b)?;
    check_positive("eps", eps)?;
    if !(a > b) || !a.is_finite() {
        return Err(Error::domain(format!("need a > b, got a = {a}, b = {b}")));
    }
    Ok(((a - b) / (b * b * eps)).log2())
}
