use noisy_grover::analytics::{peak_decay_ratio, peak_iteration_estimate, success_probability};
use noisy_grover::model::iterate_affine;
use noisy_grover::spectral::{
    asymptotic_success, chebyshev_u, closed_form_state, closed_form_transient, determinant,
    fixed_point, initial_transient, regime_boundary_gamma, small_gamma_transient, spectral_data,
    Regime, TransientComponent,
};
use noisy_grover::trajectory::{bloch_states, state_at};
use noisy_grover::{make_params, BlochState, SearchParams};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = SearchParams> {
    (2u32..=16, 0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(k, mfrac, g)| {
        let n = 1u64 << k;
        let m = 1 + ((n / 2 - 1) as f64 * mfrac) as u64;
        make_params(n, m, g).unwrap()
    })
}

/// `(ϖM)ᵗ s(0)` by repeated matrix-vector products.
fn iterate_transient(p: &SearchParams, s0: BlochState, t: u64) -> BlochState {
    // the affine step minus its drive is the homogeneous step
    let zero = iterate_affine(BlochState::default(), p);
    (0..t).fold(s0, |s, _| iterate_affine(s, p) - zero)
}

fn recurrence_u(t: i64, xi: f64) -> f64 {
    if t == -1 {
        return 0.0;
    }
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 0..t {
        (prev, cur) = (cur, 2.0 * xi * cur - prev);
    }
    cur
}

proptest! {
    #[test]
    fn vieta_relations(p in params()) {
        let sd = spectral_data(&p);
        let w = p.wamma();
        let product = sd.lambda_plus * sd.lambda_minus;
        let sum = sd.lambda_plus + sd.lambda_minus;
        prop_assert!((product - Complex64::new(w, 0.0)).norm() <= 1e-12);
        prop_assert!((sum - Complex64::new((1.0 + w) * p.cos_2theta(), 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn regime_dichotomy(p in params()) {
        let sd = spectral_data(&p);
        match sd.regime {
            Regime::Trigonometric => {
                prop_assert!(sd.discriminant < 0.0);
                prop_assert!((sd.lambda_plus - sd.lambda_minus.conj()).norm() <= 1e-15);
                prop_assert!((sd.lambda_plus.norm() - p.wamma().sqrt()).abs() <= 1e-12);
                prop_assert!((sd.lambda_minus.norm() - p.wamma().sqrt()).abs() <= 1e-12);
            }
            Regime::Hyperbolic => {
                prop_assert!(sd.discriminant > 0.0);
                prop_assert_eq!(sd.lambda_plus.im, 0.0);
                prop_assert_eq!(sd.lambda_minus.im, 0.0);
            }
            Regime::Degenerate => {}
        }
    }

    #[test]
    fn determinant_positive(p in params()) {
        prop_assert!(determinant(&p) > 0.0);
    }

    #[test]
    fn asymptote_is_probability(p in params()) {
        prop_assume!(p.gamma() > 0.0);
        let a = asymptotic_success(&p).unwrap();
        prop_assert!((0.0..=1.0).contains(&a));
    }

    #[test]
    fn chebyshev_matches_recurrence(t in -1i64..60, xi in -3.0f64..3.0) {
        let a = chebyshev_u(t, xi);
        let b = recurrence_u(t, xi);
        prop_assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "t={t} xi={xi}: {a} vs {b}");
    }
}

#[test]
fn chebyshev_trig_definition() {
    for phi in [0.1f64, 0.7, 1.3, 2.9] {
        for t in 0..50 {
            let lhs = chebyshev_u(t, phi.cos()) * phi.sin();
            assert!((lhs - ((t + 1) as f64 * phi).sin()).abs() < 1e-10);
        }
    }
}

#[test]
fn closed_form_transient_matches_matrix_powers() {
    let p = make_params(128, 2, 0.01).unwrap();
    let s0 = initial_transient(&p).unwrap();
    let closed = closed_form_transient(&p, s0, 50).unwrap();
    let iter = iterate_transient(&p, s0.as_state(), 50);
    let rel = closed.as_state().distance(&iter) / iter.norm();
    assert!(rel < 1e-9, "relative error {rel:e}");
    assert_eq!(closed.t, 50);
}

#[test]
fn closed_form_matches_iteration_on_random_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut hyperbolic = 0;
    while checked < 200 {
        let n = 1u64 << rng.gen_range(2..=12);
        let m = rng.gen_range(1..=n / 2);
        let g: f64 = rng.gen();
        let p = make_params(n, m, g).unwrap();
        let sd = spectral_data(&p);
        if sd.regime == Regime::Degenerate {
            continue;
        }
        if sd.regime == Regime::Hyperbolic {
            hyperbolic += 1;
        }
        let t = rng.gen_range(0..=300);
        let iterated = state_at(&p, t);
        let closed = closed_form_state(&p, t).unwrap();
        let rel = closed.distance(&iterated) / iterated.norm();
        assert!(rel <= 1e-9, "N={n} M={m} g={g} t={t}: rel {rel:e}");
        checked += 1;
    }
    assert!(hyperbolic > 10, "sample should cover both regimes");
}

#[test]
fn hyperbolic_regime_does_not_overflow() {
    // ξ far above 1: U_t alone would overflow for t ~ 10⁴
    let p = make_params(1 << 20, 1, 0.999).unwrap();
    assert_eq!(spectral_data(&p).regime, Regime::Hyperbolic);
    let r = closed_form_state(&p, 10_000).unwrap();
    assert!(r.r_x.is_finite() && r.r_z.is_finite());
    assert!(r.distance(&fixed_point(&p).unwrap()) < 1e-12);
}

#[test]
fn closed_form_converges_to_fixed_point() {
    for g in [0.01, 0.05, 0.5, 0.9] {
        for (n, m) in [(128, 2), (512, 2), (16, 4)] {
            let p = make_params(n, m, g).unwrap();
            if spectral_data(&p).regime == Regime::Degenerate {
                continue;
            }
            let r = closed_form_state(&p, 10_000).unwrap();
            assert!(r.distance(&fixed_point(&p).unwrap()) < 1e-8);
        }
    }
}

#[test]
fn fixed_point_success_matches_long_run() {
    let p = make_params(128, 2, 0.01).unwrap();
    let settled = success_probability(state_at(&p, 10_000));
    assert!((settled - 0.5046).abs() < 5e-5, "{settled}");
    let fp = fixed_point(&p).unwrap();
    assert!((success_probability(fp) - settled).abs() < 1e-6);
    assert!((asymptotic_success(&p).unwrap() - settled).abs() < 1e-6);
}

#[test]
fn asymptote_near_one_half_for_sparse_search() {
    for k in 5..=14 {
        let n = 1u64 << k;
        for m in [1u64, 2, 4, 8] {
            if (m as f64) / (n as f64) > 1.0 / 32.0 {
                continue;
            }
            for g in [0.001, 0.01, 0.02, 0.05] {
                let p = make_params(n, m, g).unwrap();
                if g > p.theta() / 4.0 {
                    continue;
                }
                let a = asymptotic_success(&p).unwrap();
                assert!((a - 0.5).abs() < 0.05, "N={n} M={m} g={g}: {a}");
            }
        }
    }
    for (n, g) in [(128, 0.05), (512, 0.05), (512, 0.01)] {
        let a = asymptotic_success(&make_params(n, 2, g).unwrap()).unwrap();
        assert!((a - 0.5).abs() < 0.05);
    }
}

#[test]
fn strong_damping_pulls_limit_towards_uniform_overlap() {
    // damping much larger than θ: the limit drifts from 1/2 towards sin²θ
    let p = make_params(1024, 1, 0.05).unwrap();
    let a = asymptotic_success(&p).unwrap();
    assert!(a < 0.4);
    let p = make_params(1 << 14, 1, 0.05).unwrap();
    let a = asymptotic_success(&p).unwrap();
    assert!(a < 0.1 && a > p.theta().sin().powi(2));
}

#[test]
fn transient_bound_from_chebyshev_growth() {
    let p = make_params(128, 2, 0.001).unwrap();
    let s0 = initial_transient(&p).unwrap();
    let w = p.wamma();
    let factor = 1.0 + p.sin_2theta() / w.sqrt() + p.cos_2theta() * w.sqrt();
    for t in [10u64, 100, 1000, 5000] {
        let s = closed_form_transient(&p, s0, t).unwrap();
        let bound = w.powf(1.5 * t as f64) * (t + 1) as f64 * s0.norm() * factor;
        assert!(s.s_z.abs() <= bound, "t={t}");
    }
}

#[test]
fn transient_decays() {
    for g in [0.01, 0.05, 0.2] {
        for (n, m) in [(128, 2), (512, 2), (16, 1)] {
            let p = make_params(n, m, g).unwrap();
            let s0 = initial_transient(&p).unwrap();
            let norm = |t| {
                let st = bloch_states(&p, t).unwrap()[t as usize];
                TransientComponent::from_state(st, &p, t).unwrap().norm()
            };
            for t in [10u64, 20, 40, 100, 200] {
                if norm(t) < 1e-12 {
                    break;
                }
                assert!(norm(2 * t) < norm(t), "N={n} g={g} t={t}");
            }
            let far = closed_form_transient(&p, s0, 10_000).unwrap();
            assert!(far.norm() < 1e-8);
        }
    }
}

#[test]
fn small_gamma_approximation() {
    let g = 1e-3;
    let p = make_params(128, 2, g).unwrap();
    let s0 = initial_transient(&p).unwrap();
    let t1 = peak_iteration_estimate(&p, 1).unwrap().floor() as u64;
    for t in 0..=t1 {
        let exact = closed_form_transient(&p, s0, t).unwrap();
        let approx = small_gamma_transient(&p, t);
        let tol = 10.0 * g * p.wamma().powf(1.5 * t as f64);
        assert!((exact.s_x - approx.s_x).abs() <= tol, "t={t}");
        assert!((exact.s_z - approx.s_z).abs() <= tol, "t={t}");
    }
}

#[test]
fn phase_shift_is_quadratic_in_gamma() {
    let p = make_params(128, 2, 0.0).unwrap();
    let two_theta = 2.0 * p.theta();
    for g in [1e-3, 1e-4] {
        let phi = spectral_data(&p.with_gamma(g).unwrap()).angle;
        assert!((phi - two_theta).abs() <= 1.0 * g * g);
    }
}

#[test]
fn boundary_gamma_is_degenerate() {
    for (n, m) in [(16, 1), (128, 2), (512, 2), (1024, 3), (64, 20)] {
        let p = make_params(n, m, 0.0).unwrap();
        let g = regime_boundary_gamma(&p);
        let p = p.with_gamma(g).unwrap();
        let sd = spectral_data(&p);
        assert_eq!(sd.regime, Regime::Degenerate, "N={n} M={m}");
        let w = p.wamma();
        let lhs = (1.0 + w).powi(2) * p.cos_2theta().powi(2);
        assert!((lhs - 4.0 * w).abs() < 1e-12);
    }
}

/// Measured ratio of transient amplitudes at the first peak, N = 128 vs 512.
#[test]
fn decay_ratio_prediction_for_larger_space() {
    let small = make_params(128, 2, 0.01).unwrap();
    let large = make_params(512, 2, 0.01).unwrap();
    let predicted = peak_decay_ratio(&small, &large, 1).unwrap();
    let expected = {
        let alpha = -1.5 * 0.99f64.ln();
        (std::f64::consts::PI * alpha * (512f64.sqrt() - 128f64.sqrt()) / (4.0 * 2f64.sqrt())).exp()
    };
    assert!((predicted - expected).abs() < 1e-12);

    let measured_sz = |p: &SearchParams| {
        let t = peak_iteration_estimate(p, 1).unwrap().round() as u64;
        closed_form_transient(p, initial_transient(p).unwrap(), t)
            .unwrap()
            .s_z
    };
    let measured = measured_sz(&small) / measured_sz(&large);
    assert!(
        (measured - predicted).abs() / predicted < 0.2,
        "measured {measured} predicted {predicted}"
    );
}

#[test]
fn decay_ratio_prediction_for_stronger_damping() {
    let a = make_params(128, 2, 0.01).unwrap();
    let b = make_params(128, 2, 0.03).unwrap();
    let predicted = peak_decay_ratio(&a, &b, 1).unwrap();
    let t = peak_iteration_estimate(&a, 1).unwrap().round() as u64;
    let sz = |p: &SearchParams| {
        closed_form_transient(p, initial_transient(p).unwrap(), t)
            .unwrap()
            .s_z
    };
    let measured = sz(&a) / sz(&b);
    assert!(
        (measured - predicted).abs() / predicted < 0.2,
        "measured {measured} predicted {predicted}"
    );
}
