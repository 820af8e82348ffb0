//! Hyperboloid geometry, chart conversions, 5-vector field assembly, and
//! the energy-operator eigencheck along the 0-5 rotation flow.

use ads_spin1::five_dim::{
    conformal_to_embedding, embedding_to_conformal, embedding_to_static, evaluate_5d_field,
    j50_eigen_check, random_static_points, static_to_embedding, transversality_check,
    verify_2_10_relations, FiveVectorField, EMBEDDING_METRIC,
};
use ads_spin1::radial_modes::{build_5d_mode, build_j_wave};
use ads_spin1::verifier::default_grid;
use ads_spin1::{tolerances, Complex64, EmbeddingPoint, Error, WaveType};
use approx::assert_abs_diff_eq;

#[test]
fn metric_signature_is_three_two() {
    assert_eq!(EMBEDDING_METRIC, [1.0, -1.0, -1.0, -1.0, 1.0]);
}

#[test]
fn conformal_chart_origin_and_roundtrip() {
    let p = conformal_to_embedding([0.0, 0.0, 0.0, 0.0]).unwrap();
    assert_eq!(p.xi, [0.0, 0.0, 0.0, 0.0, 1.0]);
    let xs = [
        [0.3, -0.2, 0.5, 0.1],
        [1.9, 0.4, -0.7, 2.2],
        [-0.6, 0.0, 0.0, 0.9],
    ];
    for x in xs {
        let p = conformal_to_embedding(x).unwrap();
        assert!(p.constraint_residual() < 1e-14, "constraint {:.3e}", p.constraint_residual());
        let back = embedding_to_conformal(&p).unwrap();
        for k in 0..4 {
            assert_abs_diff_eq!(back[k], x[k], epsilon = 1e-14);
        }
    }
}

#[test]
fn static_chart_quarter_turn_and_roundtrip() {
    let p = static_to_embedding(std::f64::consts::FRAC_PI_2, 1.0, std::f64::consts::FRAC_PI_2, 0.0)
        .unwrap();
    assert_abs_diff_eq!(p.xi[0], std::f64::consts::SQRT_2, epsilon = 1e-15);
    assert_abs_diff_eq!(p.xi[1], 1.0, epsilon = 1e-15);
    assert!(p.xi[2].abs() < 1e-15 && p.xi[3].abs() < 1e-15);
    assert!(p.xi[4].abs() < 1e-15);

    // Angles come back as principal values, so keep phi within (-pi, pi].
    for (t, r, theta, phi) in [(0.4, 1.3, 0.8, 1.9), (-2.1, 0.2, 2.8, -2.4), (3.0, 4.5, 1.2, 0.1)] {
        let p = static_to_embedding(t, r, theta, phi).unwrap();
        assert!(p.constraint_residual() < 1e-14);
        let (t2, r2, th2, ph2) = embedding_to_static(&p);
        assert_abs_diff_eq!(t2, t, epsilon = 1e-12);
        assert_abs_diff_eq!(r2, r, epsilon = 1e-12);
        assert_abs_diff_eq!(th2, theta, epsilon = 1e-12);
        assert_abs_diff_eq!(ph2, phi, epsilon = 1e-12);
    }
}

#[test]
fn random_points_sit_on_the_hyperboloid() {
    let points = random_static_points(1000, 7);
    assert_eq!(points.len(), 1000);
    for [t, r, theta, phi] in points {
        let p = static_to_embedding(t, r, theta, phi).unwrap();
        assert!(
            p.constraint_residual() < tolerances::EMBEDDING_CONSTRAINT,
            "constraint {:.3e}",
            p.constraint_residual()
        );
    }
    // Reproducible sampling.
    assert_eq!(random_static_points(5, 42), random_static_points(5, 42));
    assert_ne!(random_static_points(5, 42), random_static_points(5, 43));
}

#[test]
fn chart_boundaries_are_rejected() {
    // Conformal chart degenerates where 1 + x.x = 0.
    assert!(matches!(
        conformal_to_embedding([0.0, 1.0, 0.0, 0.0]),
        Err(Error::Domain(_))
    ));
    // Inverse chart degenerates on the xi5 = -1 slice.
    let p = EmbeddingPoint::new([0.0, 0.0, 0.0, 0.0, -1.0]);
    assert!(matches!(embedding_to_conformal(&p), Err(Error::Domain(_))));
    assert!(matches!(
        static_to_embedding(0.0, -1.0, 0.7, 0.3),
        Err(Error::Domain(_))
    ));
}

#[test]
fn quadratic_form_and_rotation_flow() {
    let p = static_to_embedding(0.3, 2.0, 1.0, 0.5).unwrap();
    assert_abs_diff_eq!(p.quadratic_form(), 1.0, epsilon = 1e-13);
    // The 0-5 rotation preserves the quadratic form and shifts static time.
    let s = 0.37;
    let q = p.rotate_05(s);
    assert!(q.constraint_residual() < 1e-13);
    let (t0, r0, th0, ph0) = embedding_to_static(&p);
    let (t1, r1, th1, ph1) = embedding_to_static(&q);
    assert_abs_diff_eq!(t1 - t0, s, epsilon = 1e-13);
    assert_abs_diff_eq!(r1, r0, epsilon = 1e-13);
    assert_abs_diff_eq!(th1, th0, epsilon = 1e-13);
    assert_abs_diff_eq!(ph1, ph0, epsilon = 1e-13);
    // Inverse flow restores the point.
    let back = q.rotate_05(-s);
    for k in 0..5 {
        assert_abs_diff_eq!(back.xi[k], p.xi[k], epsilon = 1e-14);
    }
}

#[test]
fn pure_orbital_family_has_no_scalar_components() {
    let b = build_5d_mode(2.0, 0, 1, WaveType::J).unwrap();
    let field = FiveVectorField::new(b, 0).unwrap();
    let a = field.at_static(0.3, 1.4, 0.8, 2.0).unwrap();
    assert_eq!(a[0], Complex64::new(0.0, 0.0));
    assert_eq!(a[4], Complex64::new(0.0, 0.0));
    let spatial_norm: f64 = a[1..4].iter().map(|z| z.norm_sqr()).sum();
    assert!(spatial_norm > 1e-8);
}

#[test]
fn scalar_components_split_into_two_rotating_channels() {
    // (A0 - i A5)/2 oscillates at eps - 1, (A0 + i A5)/2 at eps + 1.
    let b = build_5d_mode(2.0, 0, 1, WaveType::JPlus).unwrap();
    let eps = b.spec.epsilon;
    let field = FiveVectorField::new(b, 0).unwrap();
    let (r, theta, phi) = (1.2, 0.9, 0.4);
    let (t1, t2) = (0.3, 1.1);
    let a1 = field.at_static(t1, r, theta, phi).unwrap();
    let a2 = field.at_static(t2, r, theta, phi).unwrap();
    let half = Complex64::new(0.5, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let lower = ((a2[0] - i * a2[4]) * half) / ((a1[0] - i * a1[4]) * half);
    let raise = ((a2[0] + i * a2[4]) * half) / ((a1[0] + i * a1[4]) * half);
    let dt = t2 - t1;
    assert!((lower - Complex64::from_polar(1.0, -(eps - 1.0) * dt)).norm() < 1e-12);
    assert!((raise - Complex64::from_polar(1.0, -(eps + 1.0) * dt)).norm() < 1e-12);
}

#[test]
fn field_values_agree_between_charts() {
    let b = build_5d_mode(2.0, 1, 2, WaveType::JMinus).unwrap();
    let field = FiveVectorField::new(b, 1).unwrap();
    let (t, r, theta, phi) = (0.6, 1.7, 1.1, 2.5);
    let direct = field.at_static(t, r, theta, phi).unwrap();
    let p = static_to_embedding(t, r, theta, phi).unwrap();
    let via_point = field.at_embedding(&p).unwrap();
    for k in 0..5 {
        assert!((direct[k] - via_point[k]).norm() < 1e-12);
    }
}

#[test]
fn field_is_transverse_to_the_position_vector() {
    for wave_type in [WaveType::J, WaveType::JPlus, WaveType::JMinus] {
        let b = build_5d_mode(2.0, 0, 2, wave_type).unwrap();
        let field = FiveVectorField::new(b, 1).unwrap();
        let worst = transversality_check(&field, 400, 11).unwrap();
        assert!(
            worst < tolerances::TRANSVERSALITY,
            "{wave_type:?}: transversality {worst:.3e}"
        );
    }
}

#[test]
fn energy_operator_eigencheck_on_the_rotation_flow() {
    let b = build_5d_mode(2.0, 0, 0, WaveType::JPlus).unwrap();
    let field = FiveVectorField::new(b, 0).unwrap();
    let samples = random_static_points(20, 3);
    let report = j50_eigen_check(&field, &samples, 1e-4).unwrap();
    assert!(
        report.passes(tolerances::BOOST_EIGENCHECK),
        "residual {:.3e}",
        report.per_equation_max
    );

    // Pure truncation error: halving the step divides the residual by 4.
    let coarse = j50_eigen_check(&field, &samples, 2e-4).unwrap();
    let fine = j50_eigen_check(&field, &samples, 1e-4).unwrap();
    let ratio = coarse.per_equation_max / fine.per_equation_max;
    assert!((3.5..4.5).contains(&ratio), "convergence ratio {ratio}");
}

#[test]
fn eigencheck_covers_all_families() {
    let samples = random_static_points(12, 5);
    for (wave_type, j) in [(WaveType::J, 1), (WaveType::JPlus, 1), (WaveType::JMinus, 2)] {
        let b = build_5d_mode(2.0, 0, j, wave_type).unwrap();
        let field = FiveVectorField::new(b, 0).unwrap();
        let report = j50_eigen_check(&field, &samples, 3e-5).unwrap();
        assert!(
            report.passes(tolerances::BOOST_EIGENCHECK),
            "{wave_type:?}: {:.3e}",
            report.per_equation_max
        );
    }
}

#[test]
fn eigencheck_rejects_degenerate_input() {
    let b = build_5d_mode(2.0, 0, 0, WaveType::JPlus).unwrap();
    let zeroed = b.scaled(Complex64::new(0.0, 0.0));
    let field = FiveVectorField::new(zeroed, 0).unwrap();
    let samples = random_static_points(5, 9);
    assert!(matches!(
        j50_eigen_check(&field, &samples, 1e-4),
        Err(Error::Domain(_))
    ));
    let live = FiveVectorField::new(build_5d_mode(2.0, 0, 0, WaveType::JPlus).unwrap(), 0).unwrap();
    assert!(j50_eigen_check(&live, &[], 1e-4).is_err());
    assert!(j50_eigen_check(&live, &samples, 0.0).is_err());
    assert!(j50_eigen_check(&live, &samples, 0.5).is_err());
}

#[test]
fn scalar_profile_relations_hold_for_mixed_families() {
    let grid = default_grid();
    for wave_type in [WaveType::JPlus, WaveType::JMinus] {
        for n in 0..=3 {
            for j in 1..=4 {
                let b = build_5d_mode(2.0, n, j, wave_type).unwrap();
                let report = verify_2_10_relations(&b, &grid).unwrap();
                assert!(
                    report.per_equation_max < tolerances::SYSTEM_RESIDUAL,
                    "{wave_type:?} n={n} j={j}: {:.3e}",
                    report.per_equation_max
                );
            }
        }
    }
    // The pure orbital family has nothing to relate.
    let b = build_5d_mode(2.0, 0, 1, WaveType::J).unwrap();
    assert!(verify_2_10_relations(&b, &grid).unwrap().degenerate);
}

#[test]
fn field_construction_rejects_bad_input() {
    let dkp = build_j_wave(2.0, 0, 1).unwrap();
    assert!(matches!(
        FiveVectorField::new(dkp, 0),
        Err(Error::IncompatibleBundle(_))
    ));
    let b = build_5d_mode(2.0, 0, 1, WaveType::J).unwrap();
    assert!(matches!(
        FiveVectorField::new(b.clone(), 2),
        Err(Error::IndexOutOfRange(_))
    ));
    let field = FiveVectorField::new(b, 0).unwrap();
    assert!(matches!(
        field.at_static(0.0, -1.0, 0.7, 0.3),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        field.at_static(0.0, 1.0, 3.5, 0.3),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        evaluate_5d_field(&build_5d_mode(2.0, 0, 1, WaveType::J).unwrap(), 5, 0.0, 1.0, 0.7, 0.3),
        Err(Error::IndexOutOfRange(_))
    ));
}
