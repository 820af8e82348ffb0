//! Gauss hypergeometric evaluation on z <= 0, Wigner d-functions with their
//! ladder recursions, and vector spherical harmonics.
//!
//! Every radial profile in the catalogue is c * r^s * (1+r^2)^q * 2F1(z) with
//! z = -r^2, so the hypergeometric function is only ever needed on z <= 0.
//! Quantized modes make the series terminate; everything else goes through
//! the Pfaff transformation, whose argument w = z/(z-1) stays inside [0, 1).

use crate::tolerances;
use crate::verifier::{EquationId, ResidualReport};
use crate::{Error, Result};
use num_complex::Complex64;

/// Parameter triple of the Gauss hypergeometric function 2F1(alpha, beta; gamma; z).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Hyp2F1Params {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Hyp2F1Params {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma }
    }

    /// The trivial factor F(0, *; *; z) = 1, used for terms with no
    /// hypergeometric dependence.
    pub fn one() -> Self {
        Self { alpha: 0.0, beta: 0.0, gamma: 1.0 }
    }

    /// True iff the series terminates (alpha or beta is a non-positive
    /// integer within the detection window).
    pub fn is_polynomial(&self) -> bool {
        self.terminating_degree().is_some()
    }

    /// Degree at which the series terminates, if it does. When both
    /// parameters are non-positive integers the smaller degree wins.
    pub fn terminating_degree(&self) -> Option<u32> {
        match (nonpos_integer(self.alpha), nonpos_integer(self.beta)) {
            (Some(na), Some(nb)) => Some(na.min(nb)),
            (Some(na), None) => Some(na),
            (None, Some(nb)) => Some(nb),
            (None, None) => None,
        }
    }

    /// Parameters of the derivative series: d/dz 2F1 = (alpha*beta/gamma) *
    /// 2F1(alpha+1, beta+1; gamma+1; z).
    pub fn raised(&self) -> Self {
        Self { alpha: self.alpha + 1.0, beta: self.beta + 1.0, gamma: self.gamma + 1.0 }
    }
}

fn nonpos_integer(x: f64) -> Option<u32> {
    let n = (-x).round();
    if n >= 0.0 && n <= u32::MAX as f64 && (x + n).abs() < tolerances::POLYNOMIAL_DETECT {
        Some(n as u32)
    } else {
        None
    }
}

/// Maximum series length for the transformed general branch. The argument
/// w = r^2/(1+r^2) approaches 1 only as r grows; r <= 50 keeps w <= 0.9996,
/// which converges within this budget.
const MAX_SERIES_TERMS: usize = 500_000;

/// Evaluates 2F1(alpha, beta; gamma; z) for z <= 0.
///
/// Terminating branch: exact finite sum. General branch: Pfaff transform
/// 2F1(alpha, beta; gamma; z) = (1-z)^(-alpha) 2F1(alpha, gamma-beta; gamma; w)
/// with w = z/(z-1) in [0, 1), then the power series with a term-ratio cutoff.
pub fn hyp2f1(params: &Hyp2F1Params, z: f64) -> Result<f64> {
    if let Some(ng) = nonpos_integer(params.gamma) {
        return Err(Error::Domain(format!(
            "gamma = {} is a non-positive integer (offset {ng})",
            params.gamma
        )));
    }
    if z > 0.0 {
        return Err(Error::Domain(format!("hyp2f1 argument z = {z} must be <= 0")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if let Some(degree) = params.terminating_degree() {
        // Symmetry in (alpha, beta): the non-terminating parameter rides along.
        let b = if nonpos_integer(params.alpha) == Some(degree) {
            params.beta
        } else {
            params.alpha
        };
        return Ok(polynomial_sum(b, params.gamma, z, degree));
    }
    let w = z / (z - 1.0);
    let a = params.alpha;
    let b = params.gamma - params.beta;
    let c = params.gamma;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut small_streak = 0;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * w;
        sum += term;
        if term.abs() <= tolerances::SERIES_CUTOFF * sum.abs() {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok((1.0 - z).powf(-params.alpha) * sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::SeriesDivergence(format!(
        "2F1({}, {}; {}; z={z}): transformed argument w = {w} too close to 1",
        params.alpha, params.beta, params.gamma
    )))
}

/// Exact finite sum for the terminating branch: the stopping parameter is
/// taken as exactly -degree so the series ends sharply even when the
/// upstream energy arithmetic carried rounding.
fn polynomial_sum(b: f64, c: f64, z: f64, degree: u32) -> f64 {
    let a = -(degree as f64);
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for k in 0..degree {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
    }
    sum
}

/// d/dz 2F1(alpha, beta; gamma; z) via the contiguous relation.
pub fn hyp2f1_derivative(params: &Hyp2F1Params, z: f64) -> Result<f64> {
    let scale = params.alpha * params.beta / params.gamma;
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok(scale * hyp2f1(&params.raised(), z)?)
}

/// Factorials exact in f64 up to 18!; entries beyond that are correctly
/// rounded and only enter j > 9 evaluations, far above any tolerance here.
const FACTORIALS: usize = 35;

fn factorial(n: i64) -> f64 {
    debug_assert!((0..FACTORIALS as i64).contains(&n));
    let mut f = 1.0_f64;
    for k in 2..=n {
        f *= k as f64;
    }
    f
}

/// Wigner small-d function d^j_{mp,m}(theta) = <j mp| exp(-i theta J_y) |j m>
/// by the explicit sum formula (Varshalovich convention).
pub fn wigner_d(j: u32, mp: i32, m: i32, theta: f64) -> Result<f64> {
    let ji = j as i64;
    let (mp, m) = (mp as i64, m as i64);
    if mp.abs() > ji || m.abs() > ji {
        return Err(Error::IndexOutOfRange(format!(
            "wigner_d indices (j, mp, m) = ({j}, {mp}, {m})"
        )));
    }
    let pre = (factorial(ji + mp) * factorial(ji - mp) * factorial(ji + m) * factorial(ji - m))
        .sqrt();
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let k_min = 0.max(m - mp);
    let k_max = (ji + m).min(ji - mp);
    let mut sum = 0.0_f64;
    for k in k_min..=k_max {
        let sign = if (mp - m + k) % 2 == 0 { 1.0 } else { -1.0 };
        let num = sign
            * c.powi((2 * ji + m - mp - 2 * k) as i32)
            * s.powi((mp - m + 2 * k) as i32);
        let den = factorial(ji + m - k) * factorial(k) * factorial(ji - mp - k)
            * factorial(mp - m + k);
        sum += num / den;
    }
    Ok(pre * sum)
}

/// Full Wigner D-function with the third Euler angle zero:
/// D^j_{mp,m}(phi, theta, 0) = exp(-i mp phi) d^j_{mp,m}(theta).
pub fn wigner_big_d(j: u32, mp: i32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    let d = wigner_d(j, mp, m, theta)?;
    Ok(Complex64::from_polar(1.0, -(mp as f64) * phi) * d)
}

/// The angular factor attached to a spin-1 radial component: D_sigma =
/// D^j_{-m,sigma}(phi, theta, 0). Returns 0 when |sigma| > j or |m| > j.
pub fn ansatz_d(j: u32, m: i32, sigma: i32, theta: f64, phi: f64) -> Complex64 {
    if sigma.unsigned_abs() > j || m.unsigned_abs() > j {
        return Complex64::new(0.0, 0.0);
    }
    wigner_big_d(j, -m, sigma, theta, phi).expect("indices validated above")
}

/// 9-point central difference, 8th order: stencil error ~ h^8 * d^(9), far
/// below the recursion tolerance for h = 1e-2 at j <= 6.
pub(crate) fn theta_derivative<F: Fn(f64) -> f64>(f: F, theta: f64) -> f64 {
    const H: f64 = 1e-2;
    const W: [f64; 9] = [
        1.0 / 280.0,
        -4.0 / 105.0,
        1.0 / 5.0,
        -4.0 / 5.0,
        0.0,
        4.0 / 5.0,
        -1.0 / 5.0,
        4.0 / 105.0,
        -1.0 / 280.0,
    ];
    W.iter()
        .enumerate()
        .map(|(i, w)| w * f(theta + (i as f64 - 4.0) * H))
        .sum::<f64>()
        / H
}

/// Verifies the six ladder recursions tying the theta-derivative and the
/// m/sin(theta) multiplication of D_sigma to its sigma-neighbours, with
/// coefficients nu = sqrt(j(j+1)) and a = sqrt((j-1)(j+2)). The derivative
/// side uses a high-order finite difference, so this check is independent of
/// any analytic derivative identity and pins the d-function convention.
pub fn verify_recursions(j: u32, m: i32, theta_grid: &[f64]) -> Result<ResidualReport> {
    if j < 1 {
        return Err(Error::InvalidQuantumNumbers("recursions need j >= 1".into()));
    }
    if m.unsigned_abs() > j {
        return Err(Error::IndexOutOfRange(format!("|m| = {} > j = {j}", m.abs())));
    }
    let nu = (j as f64 * (j as f64 + 1.0)).sqrt();
    let a = ((j as f64 - 1.0) * (j as f64 + 2.0)).sqrt();
    let d = |sigma: i32, th: f64| -> f64 {
        if sigma.unsigned_abs() > j {
            0.0
        } else {
            wigner_d(j, -m, sigma, th).expect("validated indices")
        }
    };
    let mf = m as f64;
    let mut sub = vec![0.0_f64; 6];
    for &th in theta_grid {
        let (dm2, dm1, d0, dp1, dp2) = (d(-2, th), d(-1, th), d(0, th), d(1, th), d(2, th));
        let ddm1 = theta_derivative(|t| d(-1, t), th);
        let dd0 = theta_derivative(|t| d(0, t), th);
        let ddp1 = theta_derivative(|t| d(1, t), th);
        let (sin, cos) = (th.sin(), th.cos());
        let relations: [[f64; 3]; 6] = [
            [ddm1, -0.5 * a * dm2, 0.5 * nu * d0],
            [(mf - cos) / sin * dm1, -0.5 * a * dm2, -0.5 * nu * d0],
            [dd0, -0.5 * nu * dm1, 0.5 * nu * dp1],
            [mf / sin * d0, -0.5 * nu * dm1, -0.5 * nu * dp1],
            [ddp1, -0.5 * nu * d0, 0.5 * a * dp2],
            [(mf + cos) / sin * dp1, -0.5 * nu * d0, -0.5 * a * dp2],
        ];
        for (i, terms) in relations.iter().enumerate() {
            let total: f64 = terms.iter().sum();
            let scale = terms
                .iter()
                .fold(tolerances::RESIDUAL_SCALE_FLOOR, |acc, t| acc.max(t.abs()));
            sub[i] = sub[i].max(total.abs() / scale);
        }
    }
    Ok(ResidualReport::new(
        EquationId::AlgIdentity,
        sub,
        theta_grid.to_vec(),
        "per-point max-term",
    ))
}

/// Spherical harmonic Y_lm(theta, phi) with the Condon-Shortley phase,
/// expressed through the d-function: sqrt((2l+1)/4pi) e^(i m phi) d^l_{m,0}.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    let d = wigner_d(l, m, 0, theta)?;
    let norm = ((2.0 * l as f64 + 1.0) / (4.0 * std::f64::consts::PI)).sqrt();
    Ok(Complex64::from_polar(1.0, m as f64 * phi) * norm * d)
}

/// Clebsch-Gordan coefficient <l, m - sigma; 1, sigma | j, m> for coupling an
/// orbital harmonic with a spin-1 unit vector; closed forms for j - l in
/// {-1, 0, +1}.
pub(crate) fn cg_orbital_spin1(l: u32, j: u32, m: i32, sigma: i32) -> f64 {
    let lf = l as f64;
    let mf = m as f64;
    let sq = |x: f64| if x > 0.0 { x.sqrt() } else { 0.0 };
    match (j as i64 - l as i64, sigma) {
        (1, 1) => sq((lf + mf) * (lf + mf + 1.0) / ((2.0 * lf + 1.0) * (2.0 * lf + 2.0))),
        (1, 0) => sq((lf - mf + 1.0) * (lf + mf + 1.0) / ((2.0 * lf + 1.0) * (lf + 1.0))),
        (1, -1) => sq((lf - mf) * (lf - mf + 1.0) / ((2.0 * lf + 1.0) * (2.0 * lf + 2.0))),
        (0, 1) => -sq((lf + mf) * (lf - mf + 1.0) / (2.0 * lf * (lf + 1.0))),
        (0, 0) => mf / sq(lf * (lf + 1.0)),
        (0, -1) => sq((lf - mf) * (lf + mf + 1.0) / (2.0 * lf * (lf + 1.0))),
        (-1, 1) => sq((lf - mf) * (lf - mf + 1.0) / (2.0 * lf * (2.0 * lf + 1.0))),
        (-1, 0) => -sq((lf - mf) * (lf + mf) / (lf * (2.0 * lf + 1.0))),
        (-1, -1) => sq((lf + mf) * (lf + mf + 1.0) / (2.0 * lf * (2.0 * lf + 1.0))),
        _ => 0.0,
    }
}

/// Vector spherical harmonic Y^nu_{jm}(theta, phi) as a Cartesian complex
/// 3-vector: the Clebsch-Gordan coupling of Y_{nu,mu} with the cyclic unit
/// vectors e_{+1} = -(x + iy)/sqrt2, e_0 = z, e_{-1} = (x - iy)/sqrt2.
/// Eigenfunction of orbital l^2 with eigenvalue nu(nu+1) and of (J^2, J_3)
/// with (j(j+1), m); unit-normalized over the sphere.
pub fn vector_spherical_harmonic(
    nu: u32,
    j: u32,
    m: i32,
    theta: f64,
    phi: f64,
) -> Result<[Complex64; 3]> {
    let dv = nu as i64 - j as i64;
    if !(-1..=1).contains(&dv) {
        return Err(Error::InvalidQuantumNumbers(format!(
            "vector harmonic needs nu in {{j-1, j, j+1}}, got nu = {nu}, j = {j}"
        )));
    }
    if m.unsigned_abs() > j {
        return Err(Error::IndexOutOfRange(format!("|m| = {} > j = {j}", m.abs())));
    }
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for sigma in [-1i32, 0, 1] {
        let mu = m - sigma;
        if mu.unsigned_abs() > nu {
            continue;
        }
        let cg = cg_orbital_spin1(nu, j, m, sigma);
        if cg == 0.0 {
            continue;
        }
        let y = spherical_harmonic(nu, mu, theta, phi)?;
        let e: [Complex64; 3] = match sigma {
            1 => [
                Complex64::new(-inv_sqrt2, 0.0),
                Complex64::new(0.0, -inv_sqrt2),
                Complex64::new(0.0, 0.0),
            ],
            -1 => [
                Complex64::new(inv_sqrt2, 0.0),
                Complex64::new(0.0, -inv_sqrt2),
                Complex64::new(0.0, 0.0),
            ],
            _ => [
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        };
        for c in 0..3 {
            out[c] += cg * y * e[c];
        }
    }
    Ok(out)
}
