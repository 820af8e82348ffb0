//! Complex (self-dual) formulation of source-free electrodynamics on the
//! static curved background: spin matrices in the lab and cyclic bases,
//! quantized photon modes from the hypergeometric reduction, and the
//! angular-operator check for the separation ansatz.

use crate::radial_modes::{RadialBundle, RadialFn};
use crate::special_functions::{ansatz_d, Hyp2F1Params};
use crate::tolerances;
use crate::verifier::{EquationId, ResidualReport};
use crate::{Error, Formalism, ModeSpec, Result};
use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;

pub type Matrix3C = SMatrix<Complex64, 3, 3>;
pub type Matrix4C = SMatrix<Complex64, 4, 4>;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Spin-1 matrix set: lab-basis generators and first-order matrices, the
/// cyclic-basis transform, and its images of both. Built once by
/// [`build_rs_matrices`], which cross-checks every matrix against its
/// closed form and unitarity/commutation identities.
#[derive(Debug, Clone)]
pub struct RsMatrices {
    /// Real so(3) generators (tau_k)_{ln} = -eps_{kln}.
    pub tau: [SMatrix<f64, 3, 3>; 3],
    /// 4x4 embeddings s_k = diag(0, tau_k).
    pub s: [Matrix4C; 3],
    /// Cyclic-basis transform on the 4-component column, diag(1, U).
    pub u4: Matrix4C,
    pub u4_inv: Matrix4C,
    /// Lab-basis first-order matrices: (alpha^k)_{0l} = delta_{kl},
    /// (alpha^k)_{l0} = -delta_{kl}, (alpha^k)_{ln} = -eps_{kln}.
    pub alpha_lab: [Matrix4C; 3],
    /// Scalar member alpha^0 = -i I.
    pub alpha0: Matrix4C,
    /// U4 alpha^k U4^{-1}; matches the printed displays entrywise.
    pub alpha_cyclic: [Matrix4C; 3],
    /// U tau_k U^{-1} (3x3); tau'_3 = -i diag(1, 0, -1).
    pub tau_cyclic: [Matrix3C; 3],
    /// diag(0, tau'_k): the spin part entering the angular operator.
    pub s_cyclic: [Matrix4C; 3],
}

fn epsilon_symbol(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn embed4(m: &Matrix3C) -> Matrix4C {
    let mut out = Matrix4C::zeros();
    for r in 0..3 {
        for c in 0..3 {
            out[(r + 1, c + 1)] = m[(r, c)];
        }
    }
    out
}

fn max_abs4(m: &Matrix4C) -> f64 {
    m.iter().fold(0.0_f64, |acc, c| acc.max(c.norm()))
}

fn max_abs3(m: &Matrix3C) -> f64 {
    m.iter().fold(0.0_f64, |acc, c| acc.max(c.norm()))
}

/// Constructs the full matrix set and asserts the printed displays, the
/// unitarity of the basis change, and the carried-over so(3) commutator,
/// all entrywise below the display tolerance.
pub fn build_rs_matrices() -> RsMatrices {
    let tau: [SMatrix<f64, 3, 3>; 3] = std::array::from_fn(|k| {
        SMatrix::<f64, 3, 3>::from_fn(|l, n| -epsilon_symbol(k, l, n))
    });
    let tau_c: [Matrix3C; 3] =
        std::array::from_fn(|k| Matrix3C::from_fn(|l, n| re(tau[k][(l, n)])));
    let s: [Matrix4C; 3] = std::array::from_fn(|k| embed4(&tau_c[k]));

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let u = Matrix3C::from_row_slice(&[
        re(-h),
        I * re(h),
        re(0.0),
        re(0.0),
        re(0.0),
        re(1.0),
        re(h),
        I * re(h),
        re(0.0),
    ]);
    let u_dagger = u.adjoint();
    assert!(
        max_abs3(&(&u * &u_dagger - Matrix3C::identity())) < tolerances::MATRIX_DISPLAY,
        "cyclic transform is not unitary"
    );
    let u_inv = u_dagger;

    let mut u4 = Matrix4C::identity();
    let mut u4_inv = Matrix4C::identity();
    for r in 0..3 {
        for c in 0..3 {
            u4[(r + 1, c + 1)] = u[(r, c)];
            u4_inv[(r + 1, c + 1)] = u_inv[(r, c)];
        }
    }

    let alpha_lab: [Matrix4C; 3] = std::array::from_fn(|k| {
        Matrix4C::from_fn(|r, c| match (r, c) {
            (0, 0) => re(0.0),
            (0, c) => re(if c - 1 == k { 1.0 } else { 0.0 }),
            (r, 0) => re(if r - 1 == k { -1.0 } else { 0.0 }),
            (r, c) => re(-epsilon_symbol(k, r - 1, c - 1)),
        })
    });
    let alpha0 = Matrix4C::identity() * (-I);

    let tau_cyclic: [Matrix3C; 3] = std::array::from_fn(|k| &u * &tau_c[k] * &u_inv);
    let s_cyclic: [Matrix4C; 3] = std::array::from_fn(|k| embed4(&tau_cyclic[k]));
    let alpha_cyclic: [Matrix4C; 3] =
        std::array::from_fn(|k| &u4 * &alpha_lab[k] * &u4_inv);

    // Printed displays, entrywise.
    let z = re(0.0);
    let printed_tau3 = Matrix3C::from_diagonal(&SVector::<Complex64, 3>::new(
        -I,
        z,
        I,
    ));
    let printed_tau1 = Matrix3C::from_row_slice(&[
        z, -I * re(h), z,
        -I * re(h), z, -I * re(h),
        z, -I * re(h), z,
    ]);
    let printed_tau2 = Matrix3C::from_row_slice(&[
        z, re(-h), z,
        re(h), z, re(-h),
        z, re(h), z,
    ]);
    for (built, printed, name) in [
        (&tau_cyclic[0], &printed_tau1, "tau'_1"),
        (&tau_cyclic[1], &printed_tau2, "tau'_2"),
        (&tau_cyclic[2], &printed_tau3, "tau'_3"),
    ] {
        assert!(
            max_abs3(&(built - printed)) < tolerances::MATRIX_DISPLAY,
            "{name} deviates from its printed display"
        );
    }

    let printed_alpha1 = Matrix4C::from_row_slice(&[
        z, re(-h), z, re(h),
        re(h), z, -I * re(h), z,
        z, -I * re(h), z, -I * re(h),
        re(-h), z, -I * re(h), z,
    ]);
    let printed_alpha2 = Matrix4C::from_row_slice(&[
        z, -I * re(h), z, -I * re(h),
        -I * re(h), z, re(-h), z,
        z, re(h), z, re(-h),
        -I * re(h), z, re(h), z,
    ]);
    let printed_alpha3 = Matrix4C::from_row_slice(&[
        z, z, re(1.0), z,
        z, -I, z, z,
        re(-1.0), z, z, z,
        z, z, z, I,
    ]);
    for (built, printed, name) in [
        (&alpha_cyclic[0], &printed_alpha1, "alpha'_1"),
        (&alpha_cyclic[1], &printed_alpha2, "alpha'_2"),
        (&alpha_cyclic[2], &printed_alpha3, "alpha'_3"),
    ] {
        assert!(
            max_abs4(&(built - printed)) < tolerances::MATRIX_DISPLAY,
            "{name} deviates from its printed display"
        );
    }

    // so(3) commutator survives the basis change.
    let comm = &tau_cyclic[0] * &tau_cyclic[1] - &tau_cyclic[1] * &tau_cyclic[0];
    assert!(
        max_abs3(&(comm - tau_cyclic[2])) < tolerances::MATRIX_DISPLAY,
        "[tau'_1, tau'_2] != tau'_3"
    );

    RsMatrices { tau, s, u4, u4_inv, alpha_lab, alpha0, alpha_cyclic, tau_cyclic, s_cyclic }
}

/// One quantized photon mode: omega = 2n + j + 1 with the regular,
/// decaying hypergeometric branch, leading coefficient 1.
#[derive(Debug, Clone)]
pub struct PhotonMode {
    pub n: u32,
    pub j: u32,
    pub m: i32,
    pub omega: f64,
    /// Root exponent (j+1)/2: the branch regular at the origin.
    pub a: f64,
    /// Weight exponent -omega/2: the branch decaying at large r.
    pub b: f64,
    pub hyp: Hyp2F1Params,
    bundle: RadialBundle,
}

impl PhotonMode {
    pub fn bundle(&self) -> &RadialBundle {
        &self.bundle
    }

    pub fn component(&self, label: &str) -> Result<&RadialFn> {
        self.bundle.component(label)
    }
}

/// Builds the photon mode (n, j, m): G = r^{j+1} (1+r^2)^{-omega/2}
/// 2F1(a+b, a+b+1/2; 2a+1/2; -r^2), F from i omega F = (1+r^2) G',
/// f = F/(r sqrt(1+r^2)), g = G/(r sqrt(1+r^2)), then the cyclic
/// components f1 = (f+g)/sqrt2, f3 = (f-g)/sqrt2, and
/// f2 = i nu G / (omega r^2) with nu = sqrt(j(j+1)).
/// The j = 0 sector carries no transverse photon.
pub fn build_photon_mode(n: u32, j: u32, m: i32) -> Result<PhotonMode> {
    let spec = ModeSpec::photon(n, j, m)?;
    let omega = spec.epsilon;
    let a = (j as f64 + 1.0) / 2.0;
    let b = -omega / 2.0;
    let hyp = Hyp2F1Params::new(a + b, a + b + 0.5, 2.0 * a + 0.5);

    let big_g = RadialFn::hypergeometric_term(re(1.0), j as i32 + 1, b, hyp);
    let big_f = big_g.derivative().mul_phi_pow(1.0).scale(-I / re(omega));
    let f = big_f.mul_r_pow(-1).mul_phi_pow(-0.5);
    let g = big_g.mul_r_pow(-1).mul_phi_pow(-0.5);
    let inv_sqrt2 = re(std::f64::consts::FRAC_1_SQRT_2);
    let nu = (j as f64 * (j as f64 + 1.0)).sqrt();

    let mut bundle = RadialBundle::new(Formalism::Rs, spec);
    bundle.set("f1", f.add(&g).scale(inv_sqrt2));
    bundle.set("f3", f.add(&g.scale(re(-1.0))).scale(inv_sqrt2));
    bundle.set("f2", big_g.mul_r_pow(-2).scale(I * re(nu / omega)));
    bundle.set("F", big_f);
    bundle.set("G", big_g);

    Ok(PhotonMode { n, j, m, omega, a, b, hyp, bundle })
}

/// Residuals of the four-equation first-order photon system plus the
/// reduced three-equation set: seven sub-equation maxima.
pub fn rs_system_residual(mode: &PhotonMode, grid: &[f64]) -> Result<ResidualReport> {
    crate::verifier::residual_system(&mode.bundle, EquationId::Sys55prime, grid)
}

/// Applies the angular operator alpha'_1 d/dtheta
/// + alpha'_2 (d/dphi + s'_3 cos theta)/sin theta to the separation
/// ansatz (0, D_{-1}, D_0, D_{+1}) with unit radial placeholders
/// (the action never touches the radial profiles), using finite
/// differences in theta, and compares against the closed-form image
/// (nu/sqrt2) (2 D_0, -i D_{-1}, 0, +i D_{+1}), nu = sqrt(j(j+1)).
pub fn angular_action_check(j: u32, m: i32, theta_grid: &[f64]) -> Result<ResidualReport> {
    if j < 1 {
        return Err(Error::InvalidQuantumNumbers(
            "the angular action check needs j >= 1".into(),
        ));
    }
    if m.unsigned_abs() > j {
        return Err(Error::IndexOutOfRange(format!(
            "|m| = {} exceeds j = {j}",
            m.unsigned_abs()
        )));
    }
    if theta_grid.is_empty() {
        return Err(Error::Domain("theta grid is empty".into()));
    }
    let matrices = build_rs_matrices();
    let a1 = &matrices.alpha_cyclic[0];
    let a2 = &matrices.alpha_cyclic[1];
    let s3 = &matrices.s_cyclic[2];
    let nu = (j as f64 * (j as f64 + 1.0)).sqrt();
    let over_sqrt2 = re(nu / std::f64::consts::SQRT_2);

    let psi = |theta: f64| -> SVector<Complex64, 4> {
        SVector::<Complex64, 4>::new(
            re(0.0),
            ansatz_d(j, m, -1, theta, 0.0),
            ansatz_d(j, m, 0, theta, 0.0),
            ansatz_d(j, m, 1, theta, 0.0),
        )
    };

    let mut worst = 0.0_f64;
    for &theta in theta_grid {
        if !(theta > 0.05 && theta < std::f64::consts::PI - 0.05) {
            return Err(Error::Domain(format!(
                "theta = {theta} too close to the axis for the 1/sin(theta) factor"
            )));
        }
        let value = psi(theta);
        let mut derivative = SVector::<Complex64, 4>::zeros();
        for k in 0..4 {
            derivative[k] =
                re(crate::special_functions::theta_derivative(
                    |t| psi(t)[k].re,
                    theta,
                ));
        }
        let azimuthal = (value * (I * re(m as f64)) + s3 * value * re(theta.cos()))
            * re(1.0 / theta.sin());
        let lhs = a1 * derivative + a2 * azimuthal;
        let d0 = ansatz_d(j, m, 0, theta, 0.0);
        let dm = ansatz_d(j, m, -1, theta, 0.0);
        let dp = ansatz_d(j, m, 1, theta, 0.0);
        let rhs = SVector::<Complex64, 4>::new(
            over_sqrt2 * re(2.0) * d0,
            -over_sqrt2 * I * dm,
            re(0.0),
            over_sqrt2 * I * dp,
        );
        let scale = (0..4)
            .map(|k| lhs[k].norm().max(rhs[k].norm()))
            .fold(0.0_f64, f64::max)
            .max(tolerances::RESIDUAL_SCALE_FLOOR);
        let deviation = (0..4).map(|k| (lhs[k] - rhs[k]).norm()).fold(0.0_f64, f64::max);
        worst = worst.max(deviation / scale);
    }
    Ok(ResidualReport::new(
        EquationId::AlgIdentity,
        vec![worst],
        theta_grid.to_vec(),
        "per-point max component",
    ))
}

/// Convenience back-transform of a cyclic-basis column to the lab basis,
/// splitting its 3-vector part into real and imaginary parts (the electric
/// field and c times the magnetic field for a physical solution).
pub fn electric_magnetic(
    matrices: &RsMatrices,
    psi_cyclic: [Complex64; 4],
) -> ([f64; 3], [f64; 3]) {
    let column = SVector::<Complex64, 4>::from_row_slice(&psi_cyclic);
    let lab = &matrices.u4_inv * column;
    let mut e = [0.0; 3];
    let mut cb = [0.0; 3];
    for k in 0..3 {
        e[k] = lab[k + 1].re;
        cb[k] = lab[k + 1].im;
    }
    (e, cb)
}
