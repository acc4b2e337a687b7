//! Renormalization of the pendulum.
//!
//! One AGM step on `(1, cos(α/2))` rewrites the period integral as that of a
//! longer pendulum swinging through a smaller angle:
//!
//! ```text
//! l₁ = l / cos⁴(α/4)        α₁ = 2 arcsin(tan²(α/4))
//! ```
//!
//! Iterating drives the amplitude to zero quadratically, where the small-angle
//! formulas become exact. Singular moduli (`K(k)/K(k′)` equal to `√3`, `√7`,
//! …) give other period-preserving pairs.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::agm::Tolerance;
use crate::elliptic::{elliptic_k_agm, Modulus};
use crate::error::{Error, Result};
use crate::pendulum::PendulumConfig;

/// Bisection cap for [`find_singular_modulus`].
pub const SINGULAR_MAX_ITER: usize = 200;

/// One application of the renormalization map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenormStep {
    pub before: PendulumConfig,
    pub after: PendulumConfig,
    /// 1 for the first application.
    pub index: usize,
}

/// `(l, α) ↦ (l / cos⁴(α/4), 2 arcsin(tan²(α/4)))`, preserving the period.
pub fn renormalize(cfg: &PendulumConfig) -> Result<RenormStep> {
    step(cfg, 1)
}

fn step(cfg: &PendulumConfig, index: usize) -> Result<RenormStep> {
    let quarter = 0.25 * cfg.amplitude();
    let cos_q = quarter.cos();
    let x = quarter.tan().powi(2);
    // 1 − tan²(α/4) = cos(α/2) / cos²(α/4), free of cancellation near α = π
    let one_minus_x = (0.5 * cfg.amplitude()).cos() / (cos_q * cos_q);
    let alpha1 = 2.0 * x.atan2((one_minus_x * (1.0 + x)).sqrt());
    let length1 = cfg.length() / cos_q.powi(4);
    let after = PendulumConfig::with_rest(length1, cfg.gravity(), alpha1)?;
    Ok(RenormStep {
        before: *cfg,
        after,
        index,
    })
}

/// Applies [`renormalize`] `steps` times, each step starting from the
/// previous result.
pub fn renormalize_iter(cfg: &PendulumConfig, steps: usize) -> Result<Vec<RenormStep>> {
    if steps == 0 {
        return Err(Error::domain("need at least one renormalization step"));
    }
    let mut out: Vec<RenormStep> = Vec::with_capacity(steps);
    let mut current = *cfg;
    for i in 1..=steps {
        let s = step(&current, i)?;
        current = s.after;
        out.push(s);
    }
    Ok(out)
}

/// `K(k) / K(k₂)`.
pub fn singular_ratio(k: &Modulus, k2: &Modulus, tol: Tolerance) -> Result<f64> {
    Ok(elliptic_k_agm(k, tol)? / elliptic_k_agm(k2, tol)?)
}

fn ratio_at(theta: f64) -> Result<f64> {
    let m = Modulus::from_modular_angle(theta)?;
    singular_ratio(&m, &m.complement()?, Tolerance::default())
}

/// Modulus `k` with `K(k)/K(k′) = ratio`, by bisection on the modular angle.
///
/// `ratio = 1` gives `k = 1/√2`, `√3` gives `sin 75°`.
pub fn find_singular_modulus(ratio: f64, tol: f64) -> Result<Modulus> {
    if !(ratio >= 1.0 && ratio.is_finite()) {
        return Err(Error::domain(format!(
            "ratio must be at least 1, got {ratio}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut lo = FRAC_PI_4;
    // largest modular angle whose sine passes the Modulus guard
    let mut hi = FRAC_PI_2 - 2e-6;
    if ratio_at(hi)? < ratio {
        return Err(Error::domain(format!(
            "ratio {ratio} needs a modulus closer to 1 than supported"
        )));
    }
    if (ratio_at(lo)? - ratio).abs() <= tol {
        return Modulus::from_modular_angle(lo);
    }
    for _ in 0..SINGULAR_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let r = ratio_at(mid)?;
        if (r - ratio).abs() <= tol {
            return Modulus::from_modular_angle(mid);
        }
        if mid <= lo || mid >= hi {
            break;
        }
        if r < ratio {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    Err(Error::NonConvergence {
        iterations: SINGULAR_MAX_ITER,
        gap: (ratio_at(mid)? - ratio).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pendulum::period_exact;
    use std::f64::consts::PI;

    fn cfg(deg: f64) -> PendulumConfig {
        PendulumConfig::new(1.0, 9.80665, deg.to_radians()).unwrap()
    }

    #[test]
    fn small_amplitude_is_nearly_fixed() {
        let s = renormalize(&cfg(1e-6)).unwrap();
        assert!((s.after.length() - 1.0).abs() < 1e-15);
        assert!(s.after.amplitude() < 1e-15);
    }

    #[test]
    fn near_flip_over() {
        let s = renormalize(&cfg(179.99)).unwrap();
        let a1 = s.after.amplitude().to_degrees();
        assert!((a1 - 177.85).abs() < 0.01, "{a1}");
    }

    #[test]
    fn right_angle_preserves_period() {
        let s = renormalize(&cfg(90.0)).unwrap();
        let expected = 2.0 * (PI / 8.0).tan().powi(2).asin();
        assert!((s.after.amplitude() - expected).abs() < 1e-15);
        let t0 = period_exact(&s.before, Tolerance::default()).unwrap();
        let t1 = period_exact(&s.after, Tolerance::default()).unwrap();
        assert!((t0 - t1).abs() / t0 < 1e-14);
    }

    #[test]
    fn iteration_is_monotone() {
        let steps = renormalize_iter(&cfg(90.0), 4).unwrap();
        assert_eq!(steps.len(), 4);
        for (i, s) in steps.iter().enumerate() {
            assert_eq!(s.index, i + 1);
            assert!(s.after.amplitude() < s.before.amplitude());
            assert!(s.after.length() > s.before.length());
        }
        assert!(steps[3].after.amplitude().to_degrees() < 0.05);
        assert!(renormalize_iter(&cfg(90.0), 0).is_err());
    }

    #[test]
    fn tiny_amplitude_can_reach_rest() {
        let steps = renormalize_iter(&cfg(1e-60), 3).unwrap();
        assert_eq!(steps[2].after.amplitude(), 0.0);
        assert_eq!(steps[2].after.length(), 1.0);
    }

    #[test]
    fn ratio_examples() {
        let tol = Tolerance::default();
        let half = Modulus::new(0.5f64.sqrt()).unwrap();
        assert!((singular_ratio(&half, &half, tol).unwrap() - 1.0).abs() < 1e-15);
        let k75 = Modulus::from_modular_angle(75f64.to_radians()).unwrap();
        let k15 = Modulus::from_modular_angle(15f64.to_radians()).unwrap();
        assert!((singular_ratio(&k75, &k15, tol).unwrap() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn singular_modulus_examples() {
        let m = find_singular_modulus(1.0, 1e-13).unwrap();
        assert!((m.k() - 0.5f64.sqrt()).abs() < 1e-15);
        let m = find_singular_modulus(3f64.sqrt(), 1e-13).unwrap();
        assert!((m.k() - 75f64.to_radians().sin()).abs() < 1e-10);
        let m = find_singular_modulus(7f64.sqrt(), 1e-13).unwrap();
        let r = singular_ratio(&m, &m.complement().unwrap(), Tolerance::default()).unwrap();
        assert!((r - 7f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn singular_modulus_errors() {
        assert!(find_singular_modulus(0.5, 1e-10).is_err());
        assert!(find_singular_modulus(1e6, 1e-10).is_err());
    }
}
