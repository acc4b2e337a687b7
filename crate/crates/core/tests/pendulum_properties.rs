use std::f64::consts::{FRAC_PI_2, PI};

use pendulum_agm::{
    clock_loss_seconds_per_day, elliptic_i_quadrature, huygens_accuracy_threshold,
    huygens_clock_loss, pars_thurston_bounds, period_approx, period_exact, small_angle_loss_approx,
    ApproxMethod, ClockCalibration, PendulumConfig, SeriesOrder, Tolerance,
};
use proptest::prelude::*;

fn cfg(alpha: f64) -> PendulumConfig {
    PendulumConfig::new(1.0, 9.80665, alpha).unwrap()
}

fn exact(c: &PendulumConfig) -> f64 {
    period_exact(c, Tolerance::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn exact_matches_quadrature(l in 0.01f64..100.0, g in 0.1f64..30.0, alpha in 1e-3f64..3.1) {
        let c = PendulumConfig::new(l, g, alpha).unwrap();
        let k = elliptic_i_quadrature(1.0, (0.5 * alpha).cos(), 1e-13).unwrap().value;
        let t = 4.0 * (l / g).sqrt() * k;
        prop_assert!((exact(&c) - t).abs() <= 1e-11 * t);
    }

    #[test]
    fn approximations_fall_short(alpha in 1e-3f64..3.1) {
        let c = cfg(alpha);
        let t = exact(&c);
        let huygens = period_approx(&c, ApproxMethod::Huygens);
        prop_assert!(huygens <= t);
        let mut methods = vec![ApproxMethod::P2, ApproxMethod::Bernoulli];
        methods.extend((1..=4).map(|m| ApproxMethod::Series(SeriesOrder::new(m).unwrap())));
        for m in methods {
            let v = period_approx(&c, m);
            prop_assert!(huygens <= v, "{}", m);
            prop_assert!(v <= t * (1.0 + 1e-15), "{}", m);
        }
    }

    #[test]
    fn series_orders_improve(alpha in 1e-3f64..1.5) {
        let c = cfg(alpha);
        let t = exact(&c);
        let mut prev = f64::INFINITY;
        for m in 1..=4 {
            let e = t - period_approx(&c, ApproxMethod::Series(SeriesOrder::new(m).unwrap()));
            prop_assert!(e <= prev);
            prev = e;
        }
    }

    #[test]
    fn agm_approximants_bracket(alpha in 1e-3f64..3.1, n in 0usize..=5) {
        let c = cfg(alpha);
        let t = exact(&c);
        let lo = period_approx(&c, ApproxMethod::AgmArithmetic(n));
        let hi = period_approx(&c, ApproxMethod::AgmGeometric(n));
        prop_assert!(lo <= t * (1.0 + 1e-15));
        prop_assert!(t <= hi * (1.0 + 1e-15));
    }

    #[test]
    fn period_grows_with_amplitude(a in 1e-3f64..3.0, d in 1e-3f64..0.1) {
        prop_assert!(exact(&cfg(a)) < exact(&cfg(a + d)));
    }

    #[test]
    fn period_scales_with_sqrt_length(l in 0.01f64..100.0, alpha in 1e-3f64..3.0) {
        let t1 = exact(&cfg(alpha));
        let tl = exact(&PendulumConfig::new(l, 9.80665, alpha).unwrap());
        prop_assert!((tl - l.sqrt() * t1).abs() <= 1e-14 * tl);
    }

    #[test]
    fn pars_thurston_contains_ratio(alpha in 1e-4f64..=FRAC_PI_2) {
        let c = cfg(alpha);
        let r = exact(&c) / c.small_angle_period();
        let (lo, hi) = pars_thurston_bounds(alpha).unwrap();
        prop_assert!(lo <= r * (1.0 + 1e-15) && r <= hi * (1.0 + 1e-15));
    }

    #[test]
    fn clock_loss_grows_with_new_amplitude(a in 0.01f64..1.0, d1 in 0.0f64..0.2, d2 in 0.0f64..0.2) {
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        let cal = ClockCalibration::SecondsPendulum;
        let l1 = clock_loss_seconds_per_day(a, a + lo, cal).unwrap();
        let l2 = clock_loss_seconds_per_day(a, a + hi, cal).unwrap();
        prop_assert!(l1 >= 0.0 && l1 <= l2);
    }

    #[test]
    fn first_order_loss_estimate(a in 0.02f64..0.2, d in 1e-6f64..1e-4) {
        let exact = clock_loss_seconds_per_day(a, a + d, ClockCalibration::SecondsPendulum).unwrap();
        let approx = small_angle_loss_approx(a, d, 86_400);
        // second-order terms are O(α² + δα/α) relative
        prop_assert!((exact - approx).abs() <= 0.05 * exact);
    }
}

#[test]
fn raw_calibration_is_seconds_pendulum_rescaled() {
    let (a, a1) = (3f64.to_radians(), 4f64.to_radians());
    let seconds = clock_loss_seconds_per_day(a, a1, ClockCalibration::SecondsPendulum).unwrap();
    // length that beats seconds at amplitude a
    let c = cfg(a);
    let scale = 2.0 / exact(&c);
    let length = scale * scale;
    let raw = clock_loss_seconds_per_day(
        a,
        a1,
        ClockCalibration::Raw {
            length,
            gravity: 9.80665,
        },
    )
    .unwrap();
    assert!((raw - seconds).abs() < 1e-9 * seconds);
}

#[test]
fn huygens_threshold_is_consistent() {
    let alpha = huygens_accuracy_threshold(0.01).unwrap();
    assert!((alpha.to_degrees() - 22.93).abs() < 0.01);
    let loss = huygens_clock_loss(alpha, 1.0).unwrap();
    assert!((loss - 0.01).abs() < 1e-10);
    assert!(huygens_accuracy_threshold(0.0).is_err());
    assert!(huygens_clock_loss(PI, 1.0).is_err());
}
