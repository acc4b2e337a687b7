use std::f64::consts::FRAC_PI_2;

use pendulum_agm::{
    agm_mean, agm_sequence, elliptic_i_agm, elliptic_i_quadrature, elliptic_k_agm,
    elliptic_k_series, gauss_substitution, predict_iterations, Modulus, Tolerance,
};
use proptest::prelude::*;

fn tol() -> Tolerance {
    Tolerance::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn agm_matches_quadrature(k in 0.0f64..0.999) {
        let m = Modulus::new(k).unwrap();
        let agm = elliptic_k_agm(&m, tol()).unwrap();
        let quad = elliptic_i_quadrature(1.0, m.k_prime(), 1e-13).unwrap();
        prop_assert!((agm - quad.value).abs() <= 1e-11 * quad.value);
    }

    #[test]
    fn quadrature_is_landen_invariant(a in 0.1f64..10.0, r in 0.05f64..1.0) {
        let b = a * r;
        let i0 = elliptic_i_quadrature(a, b, 1e-14 / a).unwrap().value;
        let i1 = elliptic_i_quadrature(0.5 * (a + b), (a * b).sqrt(), 1e-14 / a).unwrap().value;
        prop_assert!((i0 - i1).abs() <= 1e-12 * i0);
    }

    #[test]
    fn i_is_homogeneous_of_degree_minus_one(a in 0.1f64..10.0, r in 0.01f64..1.0, s in 0.01f64..100.0) {
        let b = a * r;
        let i = elliptic_i_agm(a, b, tol()).unwrap();
        let is = elliptic_i_agm(s * a, s * b, Tolerance::for_scale(s * a)).unwrap();
        prop_assert!((s * is - i).abs() <= 1e-13 * i);
    }

    #[test]
    fn series_partial_sums_increase_to_k(k in 0.0f64..0.9) {
        let m = Modulus::new(k).unwrap();
        let exact = elliptic_k_agm(&m, tol()).unwrap();
        let mut prev = 0.0;
        for terms in [0, 1, 2, 4, 8, 16, 32] {
            let s = elliptic_k_series(&m, terms);
            prop_assert!(s >= prev);
            prop_assert!(s <= exact * (1.0 + 1e-15));
            prev = s;
        }
        let full = elliptic_k_series(&m, 1000);
        prop_assert!((full - exact).abs() <= 1e-14 * exact);
    }

    #[test]
    fn claim_one(a in 0.1f64..10.0, r in 0.01f64..1.0, t in 0.0f64..1.0) {
        let b = a * r;
        let (a1, b1) = (0.5 * (a + b), (a * b).sqrt());
        let pp = t * FRAC_PI_2;
        let (s, c) = pp.sin_cos();
        let d = a + b + (a - b) * s * s;
        let rhs = 2.0 * c * (a1 * a1 * c * c + b1 * b1 * s * s).sqrt() / d;
        prop_assert!((gauss_substitution(pp, a, b).cos() - rhs).abs() <= 1e-13);
    }

    #[test]
    fn claim_two(a in 0.1f64..10.0, r in 0.01f64..1.0, t in 0.0f64..1.0) {
        let b = a * r;
        let pp = t * FRAC_PI_2;
        let s2 = pp.sin().powi(2);
        let (sp, cp) = gauss_substitution(pp, a, b).sin_cos();
        let lhs = (a * a * cp * cp + b * b * sp * sp).sqrt();
        let rhs = a * ((a + b) - (a - b) * s2) / ((a + b) + (a - b) * s2);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * a);
    }

    #[test]
    fn substitution_is_increasing(a in 0.1f64..10.0, r in 0.01f64..1.0) {
        let b = a * r;
        let mut prev = gauss_substitution(0.0, a, b);
        prop_assert_eq!(prev, 0.0);
        for i in 1..=100 {
            let phi = gauss_substitution(FRAC_PI_2 * i as f64 / 100.0, a, b);
            prop_assert!(phi >= prev);
            prev = phi;
        }
        prop_assert!((prev - FRAC_PI_2).abs() <= 1e-15);
    }

    #[test]
    fn integrand_is_squeezed(a in 0.1f64..10.0, r in 0.01f64..1.0, n in 0usize..6, t in 0.0f64..1.0) {
        let p = agm_sequence(a, a * r, n).unwrap()[n];
        let (s, c) = (t * FRAC_PI_2).sin_cos();
        let f = 1.0 / (p.a() * p.a() * c * c + p.b() * p.b() * s * s).sqrt();
        prop_assert!(1.0 / p.a() <= f * (1.0 + 1e-15));
        prop_assert!(f <= (1.0 / p.b()) * (1.0 + 1e-15));
    }

    #[test]
    fn predicted_iterations_suffice(b in 0.05f64..0.99, e in -14.0f64..-2.0) {
        let eps = 10f64.powf(e);
        let n = predict_iterations(1.0, b, eps).unwrap().ceil().max(0.0) as usize;
        let p = agm_sequence(1.0, b, n).unwrap()[n];
        let mu = agm_mean(1.0, b, tol()).unwrap().mean();
        for i in 0..=32 {
            let (s, c) = (FRAC_PI_2 * i as f64 / 32.0).sin_cos();
            let f = 1.0 / (p.a() * p.a() * c * c + p.b() * p.b() * s * s).sqrt();
            prop_assert!((f - 1.0 / mu).abs() <= eps + 1e-15);
        }
    }
}

#[test]
fn complement_swaps_moduli() {
    let m = Modulus::from_modular_angle(0.3).unwrap();
    let c = m.complement().unwrap();
    assert!((c.k() - m.k_prime()).abs() < 1e-16);
    assert!((c.k_prime() - m.k()).abs() < 1e-16);
}

#[test]
fn lemniscate_constant() {
    // K(1/√2) = Γ(1/4)² / (4√π)
    let m = Modulus::new(0.5f64.sqrt()).unwrap();
    let k = elliptic_k_agm(&m, tol()).unwrap();
    assert!((k - 1.854_074_677_301_372).abs() < 1e-15);
}
