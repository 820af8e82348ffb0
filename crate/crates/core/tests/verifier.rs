//! Residual verification layer: every constructed mode satisfies its
//! applicable equations, corrupted modes are detected, and the report
//! plumbing (grids, degeneracy flags, identifiers) behaves.

use ads_spin1::radial_modes::{
    build_5d_mode, build_j0_mode, build_j_wave, build_jminus_wave, build_jplus_wave,
    build_massless_gauge_j0, build_massless_j_wave, gauge_polynomial_epsilon, u_radial,
};
use ads_spin1::verifier::{
    applicable_equations, cross_formalism_compare, decay_exponent, decay_exponent_of,
    default_grid, log_grid, lorentz_residual, max_applicable_residual, mutation_probe,
    residual_system, rs_eq1_dependence_residual, FitWindow, LorentzVariant,
};
use ads_spin1::{tolerances, Complex64, EquationId, Error, ModeSpec, RadialBundle, RadialFn, WaveType};
use proptest::prelude::*;
use std::str::FromStr;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

const MASSES: [f64; 3] = [0.75, 2.0, 6.0];

fn quantized_bundles(mass_sq: f64, n_max: u32, j_max: u32) -> Vec<RadialBundle> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.push(build_j0_mode(mass_sq, n).unwrap());
        for j in 0..=j_max {
            out.push(build_jplus_wave(mass_sq, n, j).unwrap());
            if j >= 1 {
                out.push(build_j_wave(mass_sq, n, j).unwrap());
                out.push(build_jminus_wave(mass_sq, n, j).unwrap());
            }
        }
    }
    out
}

#[test]
fn all_massive_modes_satisfy_their_equations() {
    let grid = default_grid();
    for mass_sq in MASSES {
        for bundle in quantized_bundles(mass_sq, 2, 3) {
            let worst = max_applicable_residual(&bundle, &grid).unwrap();
            assert!(
                worst < tolerances::DEFAULT_VERIFY,
                "mass_sq {mass_sq}, {:?} n={} j={}: residual {worst:.3e}",
                bundle.spec.wave_type,
                bundle.spec.n,
                bundle.spec.j
            );
        }
    }
}

#[test]
fn massless_tensor_and_gauge_modes_satisfy_their_equations() {
    let grid = default_grid();
    for n in 0..=2 {
        for j in 1..=4 {
            let b = build_massless_j_wave(n, j).unwrap();
            let worst = max_applicable_residual(&b, &grid).unwrap();
            assert!(worst < tolerances::DEFAULT_VERIFY, "massless n={n} j={j}: {worst:.3e}");
        }
        let g = build_massless_gauge_j0(gauge_polynomial_epsilon(n)).unwrap();
        let worst = max_applicable_residual(&g, &grid).unwrap();
        assert!(worst < tolerances::DEFAULT_VERIFY, "gauge n={n}: {worst:.3e}");
    }
}

#[test]
fn five_dim_modes_satisfy_their_equations() {
    let grid = default_grid();
    for wave_type in [WaveType::J, WaveType::JPlus, WaveType::JMinus] {
        for n in 0..=2 {
            for j in 1..=3 {
                let b = build_5d_mode(2.0, n, j, wave_type).unwrap();
                let worst = max_applicable_residual(&b, &grid).unwrap();
                assert!(
                    worst < tolerances::SYSTEM_RESIDUAL,
                    "{wave_type:?} n={n} j={j}: {worst:.3e}"
                );
            }
        }
    }
}

#[test]
fn applicable_equation_sets_per_class() {
    use EquationId::*;
    let j = build_j_wave(2.0, 0, 1).unwrap();
    assert_eq!(applicable_equations(&j), vec![Sys15a, Ode21b, Lorentz25a]);
    let plus = build_jplus_wave(2.0, 0, 2).unwrap();
    assert_eq!(
        applicable_equations(&plus),
        vec![Sys15b, Ode26a, Ode27a, Lorentz25a, Lorentz25cI]
    );
    let minus = build_jminus_wave(2.0, 0, 2).unwrap();
    assert_eq!(
        applicable_equations(&minus),
        vec![Sys15b, Ode26b, Ode27b, Lorentz25a, Lorentz25cII]
    );
    let scalar = build_j0_mode(2.0, 0).unwrap();
    assert_eq!(
        applicable_equations(&scalar),
        vec![Sys15b, Sys16c, Ode18, Lorentz25a]
    );
    let gauge = build_massless_gauge_j0(3.0).unwrap();
    assert_eq!(applicable_equations(&gauge), vec![Sys36, Lorentz25a]);
    let five = build_5d_mode(2.0, 0, 1, WaveType::J).unwrap();
    assert_eq!(applicable_equations(&five), vec![Ode27prime, Rel210prime]);
}

#[test]
fn equation_ids_round_trip_as_strings() {
    for id in EquationId::ALL {
        let s = id.as_str();
        assert_eq!(EquationId::from_str(s).unwrap(), id);
        assert_eq!(EquationId::from_str(&s.to_lowercase()).unwrap(), id);
        assert_eq!(format!("{id}"), s);
    }
    assert!(EquationId::from_str("SYS_9_9x").is_err());
    assert_eq!(
        serde_json::to_value(EquationId::Sys15a).unwrap(),
        serde_json::json!("SYS_1_5a")
    );
}

#[test]
fn equation_and_bundle_mismatches_are_rejected() {
    let grid = default_grid();
    let j = build_j_wave(2.0, 0, 1).unwrap();
    // The six-equation mixed system divides by the mass weight; the
    // massless tensor bundle must be refused, not silently zeroed.
    let massless = build_massless_j_wave(0, 1).unwrap();
    assert!(matches!(
        residual_system(&massless, EquationId::Sys15b, &grid),
        Err(Error::IncompatibleBundle(_))
    ));
    // Structural identities have no per-grid residual form.
    assert!(matches!(
        residual_system(&j, EquationId::AlgIdentity, &grid),
        Err(Error::IncompatibleBundle(_))
    ));
    // Photon equations need the 4-component bundle.
    assert!(matches!(
        residual_system(&j, EquationId::Sys55prime, &grid),
        Err(Error::IncompatibleBundle(_))
    ));
    // Empty grids prove nothing.
    assert!(matches!(
        residual_system(&j, EquationId::Ode21b, &[]),
        Err(Error::Domain(_))
    ));
}

#[test]
fn grid_constructors() {
    let g = default_grid();
    assert_eq!(g.len(), 60);
    assert!((g[0] - 1e-3).abs() < 1e-18);
    assert!((g[59] - 50.0).abs() < 1e-12);
    assert!(g.windows(2).all(|w| w[0] < w[1]));
    // Log spacing: constant ratio.
    let ratio = g[1] / g[0];
    for w in g.windows(2) {
        assert!((w[1] / w[0] - ratio).abs() < 1e-9);
    }
    assert_eq!(log_grid(1.0, 2.0, 2), vec![1.0, 2.0]);
}

#[test]
fn identically_zero_equations_are_flagged_degenerate() {
    let grid = default_grid();
    // The odd-parity tensor family zeroes every term of the divergence
    // condition; the report must say so rather than claim a verified pass.
    let j = build_j_wave(2.0, 0, 1).unwrap();
    let report = residual_system(&j, EquationId::Lorentz25a, &grid).unwrap();
    assert!(report.degenerate);
    assert_eq!(report.per_equation_max, 0.0);
    assert!(report.passes(1e-12));
    // A 5-vector J-family mode has no scalar components, so the F-G
    // relations degenerate as well.
    let five = build_5d_mode(2.0, 0, 1, WaveType::J).unwrap();
    let rel = residual_system(&five, EquationId::Rel210prime, &grid).unwrap();
    assert!(rel.degenerate);
    // A genuinely verified equation is not flagged.
    let ode = residual_system(&j, EquationId::Ode21b, &grid).unwrap();
    assert!(!ode.degenerate);
}

#[test]
fn divergence_condition_variants() {
    let grid = default_grid();
    let plus = build_jplus_wave(2.0, 1, 2).unwrap();
    let r1 = lorentz_residual(&plus, LorentzVariant::Full, &grid).unwrap();
    assert!(r1.per_equation_max < tolerances::SYSTEM_RESIDUAL);
    let r2 = lorentz_residual(&plus, LorentzVariant::FormI, &grid).unwrap();
    assert!(r2.per_equation_max < tolerances::SYSTEM_RESIDUAL);

    let minus = build_jminus_wave(2.0, 1, 2).unwrap();
    let r3 = lorentz_residual(&minus, LorentzVariant::FormII, &grid).unwrap();
    assert!(r3.per_equation_max < tolerances::SYSTEM_RESIDUAL);

    // The rotated forms exist only for the mixed families.
    let j = build_j_wave(2.0, 0, 1).unwrap();
    assert!(lorentz_residual(&j, LorentzVariant::FormI, &grid).is_err());
}

#[test]
fn mutation_of_any_referenced_component_is_detected() {
    let grid = default_grid();
    // Components the reduced equations never reference: the odd-parity
    // partners f7, f10 are eliminated before the systems are written, so
    // no residual can see them. Their construction-time parity links are
    // asserted in the radial-mode tests instead.
    let invisible = ["f7", "f10"];
    let classes: Vec<RadialBundle> = vec![
        build_j_wave(2.0, 0, 1).unwrap(),
        build_jplus_wave(2.0, 0, 0).unwrap(),
        build_jplus_wave(2.0, 1, 2).unwrap(),
        build_jminus_wave(2.0, 0, 1).unwrap(),
        build_j0_mode(2.0, 1).unwrap(),
        build_massless_j_wave(1, 2).unwrap(),
        build_massless_gauge_j0(5.0).unwrap(),
        build_5d_mode(2.0, 0, 1, WaveType::J).unwrap(),
        build_5d_mode(2.0, 1, 2, WaveType::JPlus).unwrap(),
        build_5d_mode(2.0, 0, 2, WaveType::JMinus).unwrap(),
    ];
    for bundle in classes {
        for label in bundle.nonzero_labels() {
            let probed = mutation_probe(&bundle, label, &grid).unwrap();
            if invisible.contains(&label) && bundle.formalism == ads_spin1::Formalism::Dkp {
                assert!(
                    probed < tolerances::DEFAULT_VERIFY,
                    "{label} unexpectedly visible: {probed:.3e}"
                );
            } else {
                assert!(
                    probed > tolerances::MUTATION_FLOOR,
                    "{:?} {:?} n={} j={} label {label}: probe {probed:.3e}",
                    bundle.formalism,
                    bundle.spec.wave_type,
                    bundle.spec.n,
                    bundle.spec.j
                );
            }
        }
    }
}

#[test]
fn ramped_seed_profile_fails_its_radial_equation() {
    let grid = default_grid();
    let j = build_j_wave(2.0, 0, 1).unwrap();
    let corrupted = j.with_perturbed_component("f2").unwrap();
    let report = residual_system(&corrupted, EquationId::Ode21b, &grid).unwrap();
    assert!(report.per_equation_max > 1e-3, "residual {:.3e}", report.per_equation_max);
}

#[test]
fn constant_rescaling_of_a_coupled_component_is_detected() {
    let grid = default_grid();
    let j = build_j_wave(2.0, 0, 1).unwrap();
    let skewed = j.with_scaled_component("f5", re(1.01)).unwrap();
    assert!(max_applicable_residual(&skewed, &grid).unwrap() > tolerances::MUTATION_FLOOR);
}

#[test]
fn decay_exponents_track_the_mass() {
    let window = FitWindow::default();
    assert_eq!(window, FitWindow { r_min: 20.0, r_max: 50.0, points: 40 });
    for mass_sq in MASSES {
        let s = (mass_sq + 0.25_f64).sqrt();
        let expected = -1.5 - s;
        let eps = 1.5 + 1.0 + s; // n = 0, j = 1
        let u = u_radial(eps, 1, mass_sq);
        let slope = decay_exponent_of(&u, window).unwrap();
        assert!(
            (slope - expected).abs() / expected.abs() < tolerances::DECAY_FIT_REL,
            "mass_sq {mass_sq}: slope {slope} vs {expected}"
        );
    }
    // Formal massless limit of the same display.
    let u0 = u_radial(5.0, 1, 0.0);
    let slope0 = decay_exponent_of(&u0, window).unwrap();
    assert!((slope0 + 2.0).abs() / 2.0 < tolerances::DECAY_FIT_REL);
}

#[test]
fn decay_fit_is_exact_on_pure_powers() {
    let window = FitWindow::default();
    for k in [1, 2, 5] {
        let f = RadialFn::monomial(re(3.0), -k, 0.0);
        let slope = decay_exponent_of(&f, window).unwrap();
        assert!((slope + k as f64).abs() < 1e-10, "k = {k}: slope {slope}");
    }
}

#[test]
fn decay_fit_rejects_vanishing_components() {
    assert!(matches!(
        decay_exponent_of(&RadialFn::zero(), FitWindow::default()),
        Err(Error::Domain(_))
    ));
    let b = build_j_wave(2.0, 0, 1).unwrap();
    // f1 is identically zero for the odd-parity family.
    assert!(decay_exponent(&b, "f1", FitWindow::default()).is_err());
    assert!(decay_exponent(&b, "f2", FitWindow::default()).is_ok());
}

#[test]
fn matched_profiles_agree_across_descriptions() {
    for mass_sq in MASSES {
        for wave_type in [WaveType::J, WaveType::JPlus, WaveType::JMinus] {
            for n in 0..=1 {
                for j in 1..=2 {
                    let spec = ModeSpec::massive(mass_sq, n, j, 0, wave_type).unwrap();
                    let report = cross_formalism_compare(&spec).unwrap();
                    assert!(
                        report.per_equation_max < tolerances::CROSS_FORMALISM,
                        "{wave_type:?} mass_sq={mass_sq} n={n} j={j}: {:.3e}",
                        report.per_equation_max
                    );
                    assert_eq!(report.scale, "pointwise relative");
                }
            }
        }
    }
    let massless = ModeSpec::massless_dkp(0, 1, 0).unwrap();
    assert!(matches!(
        cross_formalism_compare(&massless),
        Err(Error::IncompatibleBundle(_))
    ));
}

#[test]
fn first_photon_equation_follows_from_the_others() {
    let grid = log_grid(0.05, 20.0, 40);
    // Arbitrary smooth non-solution profiles: the combination identity is
    // structural, not a property of solutions.
    let f1 = RadialFn::monomial(re(1.3), 1, -2.0).add(&RadialFn::monomial(re(-0.4), 3, -3.0));
    let f3 = RadialFn::monomial(re(0.7), 2, -1.5).add(&RadialFn::monomial(re(0.2), 0, -1.0));
    for (omega, j) in [(4.0, 2u32), (7.0, 1), (5.0, 4)] {
        let res = rs_eq1_dependence_residual(omega, j, &f1, &f3, &grid);
        assert!(res < 1e-12, "omega={omega} j={j}: {res:.3e}");
    }
}

#[test]
fn report_serialization_is_stable() {
    let grid = log_grid(0.5, 5.0, 4);
    let j = build_j_wave(2.0, 0, 1).unwrap();
    let report = residual_system(&j, EquationId::Ode21b, &grid).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["equation_id"], "ODE_2_1b");
    assert_eq!(json["scale"], "per-point max-term");
    assert_eq!(json["degenerate"], false);
    assert_eq!(json["grid"].as_array().unwrap().len(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Residuals are invariant under global rescaling of the bundle by any
    // nonzero complex constant.
    #[test]
    fn residuals_are_scale_invariant(
        mag in 0.05f64..40.0,
        phase in 0.0f64..6.28,
    ) {
        let grid = log_grid(1e-3, 50.0, 24);
        let b = build_jminus_wave(2.0, 1, 2).unwrap();
        let base = max_applicable_residual(&b, &grid).unwrap();
        let scaled = b.scaled(Complex64::from_polar(mag, phase));
        let after = max_applicable_residual(&scaled, &grid).unwrap();
        // Same tiny roundoff class: both far under tolerance and within a
        // small factor of each other.
        prop_assert!(after < tolerances::DEFAULT_VERIFY);
        prop_assert!(after < 50.0 * base.max(1e-14));
    }

    // The dependence identity holds for random smooth profile pairs.
    #[test]
    fn photon_equation_dependence_random_profiles(
        c1 in -2.0f64..2.0,
        c3 in -2.0f64..2.0,
        p1 in -3.0f64..0.0,
        p3 in -3.0f64..0.0,
        omega_half in 1u32..5,
        j in 1u32..5,
    ) {
        prop_assume!(c1.abs() > 0.05 && c3.abs() > 0.05);
        let grid = log_grid(0.1, 10.0, 20);
        let f1 = RadialFn::monomial(re(c1), 2, p1);
        let f3 = RadialFn::monomial(re(c3), 1, p3);
        let res = rs_eq1_dependence_residual(2.0 * omega_half as f64, j, &f1, &f3, &grid);
        prop_assert!(res < 1e-11, "residual {res:.3e}");
    }
}
