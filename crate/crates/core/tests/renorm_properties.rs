use pendulum_agm::{
    elliptic_k_agm, find_singular_modulus, period_exact, renormalize, renormalize_iter,
    singular_ratio, Modulus, PendulumConfig, Tolerance,
};
use proptest::prelude::*;

fn k_of(alpha: f64) -> f64 {
    elliptic_k_agm(
        &Modulus::from_amplitude(alpha).unwrap(),
        Tolerance::default(),
    )
    .unwrap()
}

fn ratio(theta: f64) -> f64 {
    let m = Modulus::from_modular_angle(theta).unwrap();
    singular_ratio(&m, &m.complement().unwrap(), Tolerance::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn map_shrinks_amplitude_and_stretches_length(l in 0.01f64..100.0, deg in 0.01f64..179.9) {
        let c = PendulumConfig::new(l, 9.80665, deg.to_radians()).unwrap();
        let s = renormalize(&c).unwrap();
        prop_assert!(s.after.amplitude() < s.before.amplitude());
        prop_assert!(s.after.length() > s.before.length());
        prop_assert_eq!(s.after.gravity(), s.before.gravity());
    }

    #[test]
    fn map_is_monotone(d1 in 0.01f64..179.9, d2 in 0.01f64..179.9) {
        prop_assume!(d1 != d2);
        let (lo, hi) = if d1 < d2 { (d1, d2) } else { (d2, d1) };
        let a = |d: f64| {
            let c = PendulumConfig::new(1.0, 9.80665, d.to_radians()).unwrap();
            renormalize(&c).unwrap().after.amplitude()
        };
        prop_assert!(a(lo) <= a(hi));
    }

    #[test]
    fn new_modulus_is_tan_squared(deg in 0.01f64..179.9) {
        let alpha = deg.to_radians();
        let c = PendulumConfig::new(1.0, 9.80665, alpha).unwrap();
        let a1 = renormalize(&c).unwrap().after.amplitude();
        let x = (0.25 * alpha).tan().powi(2);
        prop_assert!(((0.5 * a1).sin() - x).abs() <= 4.0 * f64::EPSILON * x.max(f64::MIN_POSITIVE));
    }

    #[test]
    fn landen_identity_for_k(deg in 0.01f64..179.0) {
        let alpha = deg.to_radians();
        let c = PendulumConfig::new(1.0, 9.80665, alpha).unwrap();
        let a1 = renormalize(&c).unwrap().after.amplitude();
        let lhs = k_of(a1) / (0.25 * alpha).cos().powi(2);
        let rhs = k_of(alpha);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs);
    }

    #[test]
    fn iterated_map_keeps_period(l in 0.1f64..10.0, deg in 1.0f64..179.0, steps in 1usize..6) {
        let c = PendulumConfig::new(l, 9.80665, deg.to_radians()).unwrap();
        let t = period_exact(&c, Tolerance::default()).unwrap();
        for s in renormalize_iter(&c, steps).unwrap() {
            let ts = period_exact(&s.after, Tolerance::default()).unwrap();
            prop_assert!((ts - t).abs() <= 1e-12 * t, "step {}", s.index);
        }
    }

    #[test]
    fn ratio_increases_with_modular_angle(t1 in 0.05f64..1.5, t2 in 0.05f64..1.5) {
        prop_assume!((t1 - t2).abs() > 1e-9);
        let (lo, hi) = if t1 < t2 { (t1, t2) } else { (t2, t1) };
        prop_assert!(ratio(lo) < ratio(hi));
    }

    #[test]
    fn ratio_inverts_under_complement(theta in 0.05f64..1.5) {
        let m = Modulus::from_modular_angle(theta).unwrap();
        let c = m.complement().unwrap();
        let r = singular_ratio(&m, &c, Tolerance::default()).unwrap();
        let rc = singular_ratio(&c, &m, Tolerance::default()).unwrap();
        prop_assert!((r * rc - 1.0).abs() <= 1e-14);
    }
}

#[test]
fn greenhill_modulus() {
    let m = find_singular_modulus(7f64.sqrt(), 1e-13).unwrap();
    assert!((m.k() - 0.998_037_259_236_653_3).abs() < 1e-10);
    assert!((m.modular_angle().unwrap().to_degrees() - 86.4096).abs() < 1e-4);
}

#[test]
fn legendre_modulus() {
    let m = find_singular_modulus(3f64.sqrt(), 1e-13).unwrap();
    assert!((m.k() - 75f64.to_radians().sin()).abs() < 1e-10);
}
