//! Hypergeometric, rotation-function, and angular-harmonic checks against
//! independently computed high-precision reference values.

use ads_spin1::special_functions::{
    hyp2f1, hyp2f1_derivative, spherical_harmonic, vector_spherical_harmonic, verify_recursions,
    wigner_big_d, wigner_d,
};
use ads_spin1::{tolerances, Complex64, Error, Hyp2F1Params};
use approx::assert_abs_diff_eq;
use proptest::prelude::*;

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

// Reference values computed with 30-digit arithmetic.
const HYP_TERMINATING: f64 = 10.18216; // (-2, 2.7; 1.5) at z = -1.3
const HYP_GENERIC: f64 = 0.711_938_919_280_134_834_6; // (0.35, 1.1; 2.25) at z = -4
const HYP_LARGE_Z: f64 = 4.673_120_713_635_087_253_6; // (1.25, -0.75; 3.5) at z = -20

#[test]
fn terminating_series_matches_reference() {
    let p = Hyp2F1Params::new(-2.0, 2.7, 1.5);
    assert!(p.is_polynomial());
    assert_eq!(p.terminating_degree(), Some(2));
    let v = hyp2f1(&p, -1.3).unwrap();
    assert_abs_diff_eq!(v, HYP_TERMINATING, epsilon = 1e-12);
}

#[test]
fn generic_negative_argument_matches_reference() {
    let p = Hyp2F1Params::new(0.35, 1.1, 2.25);
    assert!(!p.is_polynomial());
    let v = hyp2f1(&p, -4.0).unwrap();
    assert_abs_diff_eq!(v, HYP_GENERIC, epsilon = 1e-13);
}

#[test]
fn large_negative_argument_matches_reference() {
    let p = Hyp2F1Params::new(1.25, -0.75, 3.5);
    let v = hyp2f1(&p, -20.0).unwrap();
    assert_abs_diff_eq!(v, HYP_LARGE_Z, epsilon = 1e-12);
}

#[test]
fn positive_argument_is_rejected() {
    let p = Hyp2F1Params::new(0.5, 1.0, 2.0);
    assert!(matches!(hyp2f1(&p, 0.5), Err(Error::Domain(_))));
}

#[test]
fn nonpositive_integer_denominator_parameter_is_rejected() {
    for gamma in [0.0, -1.0, -3.0] {
        let p = Hyp2F1Params::new(0.5, 1.0, gamma);
        assert!(matches!(hyp2f1(&p, -0.5), Err(Error::Domain(_))), "gamma = {gamma}");
    }
}

#[test]
fn value_at_zero_is_one() {
    for p in [
        Hyp2F1Params::new(0.35, 1.1, 2.25),
        Hyp2F1Params::new(-3.0, 0.7, 1.5),
        Hyp2F1Params::one(),
    ] {
        assert_abs_diff_eq!(hyp2f1(&p, 0.0).unwrap(), 1.0, epsilon = 1e-15);
    }
}

#[test]
fn derivative_matches_finite_difference() {
    let cases = [
        (Hyp2F1Params::new(0.35, 1.1, 2.25), -2.0),
        (Hyp2F1Params::new(-2.0, 2.7, 1.5), -1.1),
        (Hyp2F1Params::new(1.25, -0.75, 3.5), -7.0),
    ];
    for (p, z) in cases {
        let h = 1e-6;
        let fd = (hyp2f1(&p, z + h).unwrap() - hyp2f1(&p, z - h).unwrap()) / (2.0 * h);
        let an = hyp2f1_derivative(&p, z).unwrap();
        let scale = an.abs().max(1.0);
        assert!(
            (an - fd).abs() / scale < 1e-8,
            "params {p:?} z {z}: analytic {an} vs fd {fd}"
        );
    }
}

// Reference rotation-function values computed with 30-digit arithmetic.
#[test]
fn rotation_functions_match_reference() {
    let cases: [(u32, i32, i32, f64, f64); 3] = [
        (2, 1, 0, 0.7, -0.603_462_251_408_796_409_1),
        (3, -2, 1, 0.7, 0.197_285_461_796_171_221_0),
        (5, 2, -3, 1.9, 0.332_766_520_457_978_206_5),
    ];
    for (j, mp, m, beta, want) in cases {
        let got = wigner_d(j, mp, m, beta).unwrap();
        assert_abs_diff_eq!(got, want, epsilon = 1e-13);
    }
}

#[test]
fn rotation_function_closed_form_small_j() {
    // d^1 in closed form: d^1_{1,1} = (1+cos)/2, d^1_{1,0} = -sin/sqrt2,
    // d^1_{0,0} = cos.
    let b = 1.234;
    assert_abs_diff_eq!(wigner_d(1, 1, 1, b).unwrap(), (1.0 + b.cos()) / 2.0, epsilon = 1e-15);
    assert_abs_diff_eq!(
        wigner_d(1, 1, 0, b).unwrap(),
        -b.sin() / std::f64::consts::SQRT_2,
        epsilon = 1e-15
    );
    assert_abs_diff_eq!(wigner_d(1, 0, 0, b).unwrap(), b.cos(), epsilon = 1e-15);
}

#[test]
fn rotation_function_index_symmetry() {
    for j in 1..=4u32 {
        for mp in -(j as i32)..=(j as i32) {
            for m in -(j as i32)..=(j as i32) {
                let beta = 0.913;
                let lhs = wigner_d(j, mp, m, beta).unwrap();
                let sign = if (mp - m).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                let rhs = sign * wigner_d(j, m, mp, beta).unwrap();
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-13);
            }
        }
    }
}

#[test]
fn rotation_function_rejects_out_of_range_indices() {
    assert!(matches!(wigner_d(2, 3, 0, 0.5), Err(Error::IndexOutOfRange(_))));
    assert!(matches!(wigner_d(2, 0, -3, 0.5), Err(Error::IndexOutOfRange(_))));
}

#[test]
fn full_rotation_function_carries_azimuthal_phase() {
    let (j, mp, m, theta, phi) = (3u32, -1, 2, 0.8, 1.1);
    let d = wigner_d(j, mp, m, theta).unwrap();
    let big = wigner_big_d(j, mp, m, theta, phi).unwrap();
    let expected = Complex64::from_polar(1.0, -(mp as f64) * phi) * d;
    assert!((big - expected).norm() < 1e-14);
}

#[test]
fn recursion_relations_hold_on_theta_grid() {
    let grid = linspace(0.2, std::f64::consts::PI - 0.2, 50);
    for j in 1..=6u32 {
        for m in -(j as i32)..=(j as i32) {
            let report = verify_recursions(j, m, &grid).unwrap();
            assert_eq!(report.sub_equation_max.len(), 6);
            assert!(
                report.passes(tolerances::RECURSION_RESIDUAL),
                "j = {j}, m = {m}: max residual {:.3e}",
                report.per_equation_max
            );
        }
    }
}

#[test]
fn scalar_harmonic_matches_closed_form() {
    let (theta, phi) = (0.7_f64, 0.3_f64);
    // Y_{2,1} = -sqrt(15/8pi) sin(theta) cos(theta) e^{i phi}
    let want = Complex64::from_polar(1.0, phi)
        * (-(15.0 / (8.0 * std::f64::consts::PI)).sqrt() * theta.sin() * theta.cos());
    let got = spherical_harmonic(2, 1, theta, phi).unwrap();
    assert!((got - want).norm() < 1e-14);
    let iso = spherical_harmonic(0, 0, 1.9, 2.3).unwrap();
    assert!((iso - Complex64::new(0.5 / std::f64::consts::PI.sqrt(), 0.0)).norm() < 1e-15);
}

// Reference vector-harmonic values at (theta, phi) = (0.7, 0.3), computed
// with 30-digit arithmetic from the Clebsch-Gordan coupling of scalar
// harmonics with the cyclic unit vectors.
#[test]
fn vector_harmonic_components_match_reference() {
    let (theta, phi) = (0.7_f64, 0.3_f64);
    let y21 = vector_spherical_harmonic(2, 1, 0, theta, phi).unwrap();
    assert_abs_diff_eq!(y21[0].re, -0.281_683_994_028_454_49, epsilon = 1e-13);
    assert!(y21[0].im.abs() < 1e-15);

    let y11 = vector_spherical_harmonic(1, 1, 1, theta, phi).unwrap();
    assert_abs_diff_eq!(y11[0].re, 0.186_851_906_958_262_29, epsilon = 1e-13);
    assert!(y11[0].im.abs() < 1e-15);

    let y10 = vector_spherical_harmonic(1, 0, 0, theta, phi).unwrap();
    assert_abs_diff_eq!(y10[0].re, -0.173_613_734_214_815_65, epsilon = 1e-13);
    assert!(y10[0].im.abs() < 1e-15);
}

fn radial_projection_ratio(nu: u32, j: u32, m: i32, theta: f64, phi: f64) -> Complex64 {
    let y = vector_spherical_harmonic(nu, j, m, theta, phi).unwrap();
    let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let dot = y[0] * n[0] + y[1] * n[1] + y[2] * n[2];
    dot / spherical_harmonic(j, m, theta, phi).unwrap()
}

#[test]
fn radial_projection_of_orbital_branches() {
    // nu = j + 1 projects onto the radial direction with a constant
    // -sqrt((j+1)/(2j+1)); nu = j - 1 with +sqrt(j/(2j+1)); nu = j is
    // transverse. The ratios are angle-independent.
    for (theta, phi) in [(0.7, 0.3), (1.9, 4.0)] {
        let r_plus = radial_projection_ratio(2, 1, 0, theta, phi);
        assert_abs_diff_eq!(r_plus.re, -(2.0f64 / 3.0).sqrt(), epsilon = 1e-13);
        assert!(r_plus.im.abs() < 1e-13);

        let r_minus = radial_projection_ratio(0, 1, 0, theta, phi);
        assert_abs_diff_eq!(r_minus.re, (1.0f64 / 3.0).sqrt(), epsilon = 1e-13);

        let r0 = radial_projection_ratio(1, 0, 0, theta, phi);
        assert_abs_diff_eq!(r0.re, -1.0, epsilon = 1e-13);

        let y_transverse = vector_spherical_harmonic(1, 1, 1, theta, phi).unwrap();
        let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
        let dot = y_transverse[0] * n[0] + y_transverse[1] * n[1] + y_transverse[2] * n[2];
        assert!(dot.norm() < 1e-14);
    }
}

#[test]
fn vector_harmonic_rejects_invalid_indices() {
    assert!(matches!(
        vector_spherical_harmonic(3, 1, 0, 0.7, 0.3),
        Err(Error::InvalidQuantumNumbers(_))
    ));
    assert!(matches!(
        vector_spherical_harmonic(1, 1, 2, 0.7, 0.3),
        Err(Error::IndexOutOfRange(_))
    ));
}

proptest! {
    // Rows of the rotation matrix are unit vectors: sum_m d^j_{m'm}^2 = 1.
    #[test]
    fn rotation_matrix_rows_are_normalized(
        j in 1u32..=6,
        mp_frac in 0.0f64..1.0,
        theta in 0.05f64..3.0,
    ) {
        let mp = ((mp_frac * (2 * j + 1) as f64) as i32 - j as i32).clamp(-(j as i32), j as i32);
        let mut total = 0.0;
        for m in -(j as i32)..=(j as i32) {
            let d = wigner_d(j, mp, m, theta).unwrap();
            total += d * d;
        }
        prop_assert!((total - 1.0).abs() < 1e-12, "row norm {total}");
    }

    // The series and its analytic derivative stay mutually consistent over
    // the whole working parameter range.
    #[test]
    fn derivative_consistency_random_parameters(
        alpha in -4.0f64..3.0,
        beta in 0.1f64..3.0,
        gamma_extra in 0.3f64..3.0,
        z in -15.0f64..-0.1,
    ) {
        let p = Hyp2F1Params::new(alpha, beta, beta + gamma_extra);
        let h = 1e-5 * z.abs().max(1.0);
        let fd = (hyp2f1(&p, z + h).unwrap() - hyp2f1(&p, z - h).unwrap()) / (2.0 * h);
        let an = hyp2f1_derivative(&p, z).unwrap();
        let scale = an.abs().max(fd.abs()).max(1e-6);
        prop_assert!((an - fd).abs() / scale < 1e-5, "analytic {an} vs fd {fd}");
    }
}
