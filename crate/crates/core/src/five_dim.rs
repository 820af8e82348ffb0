//! Hyperboloid geometry and the 5-vector field description: coordinate
//! charts on the quadric (xi0)^2 - |xi_vec|^2 + (xi5)^2 = 1, assembly of the
//! complex 5-vector field from a radial bundle, transversality, and the
//! energy-eigenvalue check for the 0-5 rotation generator.

use crate::radial_modes::RadialBundle;
use crate::special_functions::{spherical_harmonic, vector_spherical_harmonic};
use crate::tolerances;
use crate::verifier::{EquationId, ResidualReport};
use crate::{Error, Formalism, Result};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Metric on the embedding indices (0, 1, 2, 3, 5).
pub const EMBEDDING_METRIC: [f64; 5] = [1.0, -1.0, -1.0, -1.0, 1.0];

/// A point of the embedding space, stored as (xi0, xi1, xi2, xi3, xi5).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmbeddingPoint {
    pub xi: [f64; 5],
}

impl EmbeddingPoint {
    pub fn new(xi: [f64; 5]) -> Self {
        Self { xi }
    }

    /// Indefinite square xi.xi with metric (+,-,-,-,+).
    pub fn quadratic_form(&self) -> f64 {
        self.xi
            .iter()
            .zip(EMBEDDING_METRIC)
            .map(|(x, g)| g * x * x)
            .sum()
    }

    /// |xi.xi - 1|: zero on the hyperboloid.
    pub fn constraint_residual(&self) -> f64 {
        (self.quadratic_form() - 1.0).abs()
    }

    /// Rotation by angle s in the 0-5 plane, the time-translation flow:
    /// it maps static time t to t + s and preserves the hyperboloid.
    pub fn rotate_05(&self, s: f64) -> EmbeddingPoint {
        let (sin, cos) = s.sin_cos();
        let mut xi = self.xi;
        xi[0] = self.xi[0] * cos + self.xi[4] * sin;
        xi[4] = self.xi[4] * cos - self.xi[0] * sin;
        EmbeddingPoint { xi }
    }
}

/// Conformal chart onto the hyperboloid: xi^alpha = x^alpha / Phi_c,
/// xi5 = (1 - x.x)/(1 + x.x), with Phi_c = (1 + x.x)/2 and x.x the
/// Minkowski square of the 4-coordinates.
pub fn conformal_to_embedding(x: [f64; 4]) -> Result<EmbeddingPoint> {
    let xsq = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    let denom = 1.0 + xsq;
    if denom.abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "conformal boundary: 1 + x.x = {denom:.3e} is singular"
        )));
    }
    let phi_c = denom / 2.0;
    Ok(EmbeddingPoint::new([
        x[0] / phi_c,
        x[1] / phi_c,
        x[2] / phi_c,
        x[3] / phi_c,
        (1.0 - xsq) / denom,
    ]))
}

/// Inverse of the conformal chart: x^alpha = xi^alpha / (1 + xi5).
pub fn embedding_to_conformal(p: &EmbeddingPoint) -> Result<[f64; 4]> {
    let denom = 1.0 + p.xi[4];
    if denom.abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "conformal chart breaks down: 1 + xi5 = {denom:.3e}"
        )));
    }
    Ok([
        p.xi[0] / denom,
        p.xi[1] / denom,
        p.xi[2] / denom,
        p.xi[3] / denom,
    ])
}

/// Static chart: xi0 = sin t sqrt(1+r^2), xi5 = cos t sqrt(1+r^2),
/// spatial part r times the unit direction (theta, phi).
pub fn static_to_embedding(t: f64, r: f64, theta: f64, phi: f64) -> Result<EmbeddingPoint> {
    if r < 0.0 {
        return Err(Error::Domain(format!("static chart needs r >= 0, got {r}")));
    }
    let w = (1.0 + r * r).sqrt();
    let (st, ct) = t.sin_cos();
    let (sth, cth) = theta.sin_cos();
    let (sph, cph) = phi.sin_cos();
    Ok(EmbeddingPoint::new([
        st * w,
        r * sth * cph,
        r * sth * sph,
        r * cth,
        ct * w,
    ]))
}

/// Inverse static chart; t lands in (-pi, pi], theta in [0, pi].
pub fn embedding_to_static(p: &EmbeddingPoint) -> (f64, f64, f64, f64) {
    let t = p.xi[0].atan2(p.xi[4]);
    let rho = p.xi[1].hypot(p.xi[2]);
    let r = rho.hypot(p.xi[3]);
    let theta = rho.atan2(p.xi[3]);
    let phi = p.xi[2].atan2(p.xi[1]);
    (t, r, theta, phi)
}

/// Assembles the complex 5-vector at a static-chart point, ordered
/// (A0, A1, A2, A3, A5). The scalar pair uses the split-frequency phases
/// e^{-i(eps-1)t} F and e^{-i(eps+1)t} G; the spatial part carries
/// e^{-i eps t} times the three vector-harmonic channels, with the
/// orbital-mixing weights sqrt((2j+1)/(j+1)) and sqrt((2j+1)/j) applied to
/// the stored plain profiles f and g.
pub fn evaluate_5d_field(
    bundle: &RadialBundle,
    m: i32,
    t: f64,
    r: f64,
    theta: f64,
    phi: f64,
) -> Result<[Complex64; 5]> {
    if bundle.formalism != Formalism::FiveDim {
        return Err(Error::IncompatibleBundle(format!(
            "5-vector assembly needs a FIVE_DIM bundle, got {}",
            bundle.formalism.as_str()
        )));
    }
    let j = bundle.spec.j;
    if m.unsigned_abs() > j {
        return Err(Error::IndexOutOfRange(format!(
            "|m| = {} exceeds j = {j}",
            m.unsigned_abs()
        )));
    }
    if r <= 0.0 {
        return Err(Error::Domain(format!("field evaluation needs r > 0, got {r}")));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::Domain(format!(
            "field evaluation needs theta strictly inside (0, pi), got {theta}"
        )));
    }
    let eps = bundle.spec.epsilon;
    let phase_low = Complex64::from_polar(1.0, -(eps - 1.0) * t);
    let phase_high = Complex64::from_polar(1.0, -(eps + 1.0) * t);
    let phase_mid = Complex64::from_polar(1.0, -eps * t);
    let i = Complex64::new(0.0, 1.0);

    let big_f = bundle.component("F")?.eval(r);
    let big_g = bundle.component("G")?.eval(r);
    let y = spherical_harmonic(j, m, theta, phi)?;
    let a0 = (phase_low * big_f + i * phase_high * big_g) * y;
    let a5 = (i * phase_low * big_f + phase_high * big_g) * y;

    let jf = j as f64;
    let mut spatial = [Complex64::new(0.0, 0.0); 3];
    // (label, orbital index, mixing weight); channels with zero profiles
    // are skipped, which also keeps j = 0 clear of the 1/sqrt(j) weight.
    let channels: [(&str, i64, f64); 3] = [
        ("f", j as i64 + 1, ((2.0 * jf + 1.0) / (jf + 1.0)).sqrt()),
        ("g", j as i64 - 1, if j > 0 { ((2.0 * jf + 1.0) / jf).sqrt() } else { f64::NAN }),
        ("h", j as i64, 1.0),
    ];
    for (label, nu, weight) in channels {
        let profile = bundle.component(label)?;
        if profile.is_zero() {
            continue;
        }
        if nu < 0 {
            return Err(Error::InvalidQuantumNumbers(
                "the g channel (orbital index j - 1) needs j >= 1".into(),
            ));
        }
        let vsh = vector_spherical_harmonic(nu as u32, j, m, theta, phi)?;
        let amplitude = phase_mid * profile.eval(r) * weight;
        for k in 0..3 {
            spatial[k] += amplitude * vsh[k];
        }
    }
    Ok([a0, spatial[0], spatial[1], spatial[2], a5])
}

/// A radial bundle together with a fixed azimuthal index: a complex
/// 5-vector field evaluable on the hyperboloid.
#[derive(Debug, Clone)]
pub struct FiveVectorField {
    pub bundle: RadialBundle,
    pub m: i32,
}

impl FiveVectorField {
    pub fn new(bundle: RadialBundle, m: i32) -> Result<Self> {
        if bundle.formalism != Formalism::FiveDim {
            return Err(Error::IncompatibleBundle(format!(
                "5-vector field needs a FIVE_DIM bundle, got {}",
                bundle.formalism.as_str()
            )));
        }
        if m.unsigned_abs() > bundle.spec.j {
            return Err(Error::IndexOutOfRange(format!(
                "|m| = {} exceeds j = {}",
                m.unsigned_abs(),
                bundle.spec.j
            )));
        }
        Ok(Self { bundle, m })
    }

    pub fn at_static(&self, t: f64, r: f64, theta: f64, phi: f64) -> Result<[Complex64; 5]> {
        evaluate_5d_field(&self.bundle, self.m, t, r, theta, phi)
    }

    pub fn at_embedding(&self, p: &EmbeddingPoint) -> Result<[Complex64; 5]> {
        let (t, r, theta, phi) = embedding_to_static(p);
        self.at_static(t, r, theta, phi)
    }
}

/// Random static-chart sample points (t, r, theta, phi), kept away from the
/// time branch cut, the origin, and the polar axis so finite differencing
/// and angular factors stay regular.
pub fn random_static_points(count: usize, seed: u64) -> Vec<[f64; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            [
                rng.gen_range(-3.0..3.0),
                rng.gen_range(0.2..5.0),
                rng.gen_range(0.15..std::f64::consts::PI - 0.15),
                rng.gen_range(0.0..2.0 * std::f64::consts::PI),
            ]
        })
        .collect()
}

/// Max over random sample points of |A.xi| (embedding metric) divided by
/// the product of Euclidean norms |A||xi|; zero within tolerance for every
/// constructed mode.
pub fn transversality_check(field: &FiveVectorField, num_points: usize, seed: u64) -> Result<f64> {
    let mut worst = 0.0_f64;
    for [t, r, theta, phi] in random_static_points(num_points, seed) {
        let a = field.at_static(t, r, theta, phi)?;
        let xi = static_to_embedding(t, r, theta, phi)?.xi;
        let dot: Complex64 = a
            .iter()
            .zip(xi)
            .zip(EMBEDDING_METRIC)
            .map(|((ak, xk), g)| ak * g * xk)
            .sum();
        let a_norm = a.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let xi_norm = xi.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = (a_norm * xi_norm).max(tolerances::RESIDUAL_SCALE_FLOOR);
        worst = worst.max(dot.norm() / scale);
    }
    Ok(worst)
}

/// Checks i(L50 + sigma50) A = eps A at the sample points: L50 is a central
/// finite difference of the components along the 0-5 rotation flow, and
/// sigma50 is the constant spin matrix mixing the 0 and 5 components
/// ((sigma A)^0 = -A^5, (sigma A)^5 = +A^0). The residual at each point is
/// the max component deviation over the max component magnitude; the
/// finite difference limits accuracy to O(step^2).
pub fn j50_eigen_check(
    field: &FiveVectorField,
    samples: &[[f64; 4]],
    step: f64,
) -> Result<ResidualReport> {
    if samples.is_empty() {
        return Err(Error::Domain("eigenvalue check needs at least one sample point".into()));
    }
    if !(step > 0.0 && step < 0.1) {
        return Err(Error::Domain(format!(
            "flow step must lie in (0, 0.1), got {step}"
        )));
    }
    let eps = field.bundle.spec.epsilon;
    let i = Complex64::new(0.0, 1.0);
    let mut worst = 0.0_f64;
    let mut radii = Vec::with_capacity(samples.len());
    for &[t, r, theta, phi] in samples {
        let p = static_to_embedding(t, r, theta, phi)?;
        let a = field.at_embedding(&p)?;
        let scale = a.iter().fold(0.0_f64, |acc, c| acc.max(c.norm()));
        if scale < 1e-12 {
            return Err(Error::Domain(format!(
                "degenerate sample: field magnitude {scale:.3e} at r = {r} cannot anchor \
                 a relative eigenvalue residual"
            )));
        }
        let forward = field.at_embedding(&p.rotate_05(step))?;
        let backward = field.at_embedding(&p.rotate_05(-step))?;
        let mut point_worst = 0.0_f64;
        for k in 0..5 {
            let flow = (forward[k] - backward[k]) / (2.0 * step);
            let spin = match k {
                0 => -a[4],
                4 => a[0],
                _ => Complex64::new(0.0, 0.0),
            };
            let residual = i * (flow + spin) - eps * a[k];
            point_worst = point_worst.max(residual.norm());
        }
        worst = worst.max(point_worst / scale);
        radii.push(r);
    }
    Ok(ResidualReport::new(
        EquationId::AlgIdentity,
        vec![worst],
        radii,
        "per-point field max",
    ))
}

/// Residuals of the two first-order relations tying the scalar profiles
/// F, G to the spatial profiles f, g.
pub fn verify_2_10_relations(bundle: &RadialBundle, grid: &[f64]) -> Result<ResidualReport> {
    crate::verifier::residual_system(bundle, EquationId::Rel210prime, grid)
}
