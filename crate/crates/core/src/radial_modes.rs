//! Closed-form radial profiles for every wave family, in the 10-component
//! and 5-vector descriptions, and the symbolic function type they share.
//!
//! Every profile is a finite sum of terms c * r^s * (1+r^2)^q * 2F1(-r^2),
//! closed under d/dr via the contiguous derivative of 2F1, so all residual
//! checks downstream run with analytic derivatives.

use crate::special_functions::{hyp2f1, Hyp2F1Params};
use crate::spectrum::{ModeSpec, WaveType};
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Halved angular coupling sqrt(j(j+1)/2) appearing in the 10-component
/// radial systems; distinct from the orbital index nu in {j-1, j, j+1}.
pub fn nu_half(j: u32) -> f64 {
    (j as f64 * (j as f64 + 1.0) / 2.0).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Term {
    coeff: Complex64,
    r_pow: i32,
    phi_pow: f64,
    hyp: Hyp2F1Params,
}

impl Term {
    fn eval(&self, r: f64) -> Complex64 {
        let phi = 1.0 + r * r;
        let hyp = if self.hyp.alpha == 0.0 || self.hyp.beta == 0.0 {
            1.0
        } else {
            hyp2f1(&self.hyp, -r * r).expect("radial profile series on r in (0, ~1e3)")
        };
        self.coeff * r.powi(self.r_pow) * phi.powf(self.phi_pow) * hyp
    }
}

/// Finite sum of hypergeometric terms, closed under differentiation,
/// scaling, addition, and multiplication by powers of r and 1 + r^2.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RadialFn {
    terms: Vec<Term>,
}

impl RadialFn {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Plain power term c * r^s * (1+r^2)^q, mostly for synthetic inputs.
    pub fn monomial(coeff: Complex64, r_pow: i32, phi_pow: f64) -> Self {
        Self::hypergeometric_term(coeff, r_pow, phi_pow, Hyp2F1Params::one())
    }

    /// General single term c * r^s * (1+r^2)^q * 2F1(params; -r^2).
    pub fn hypergeometric_term(
        coeff: Complex64,
        r_pow: i32,
        phi_pow: f64,
        hyp: Hyp2F1Params,
    ) -> Self {
        let mut f = Self { terms: vec![Term { coeff, r_pow, phi_pow, hyp }] };
        f.normalize();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, r: f64) -> Complex64 {
        self.terms.iter().map(|t| t.eval(r)).sum()
    }

    /// Exact derivative: each term maps to at most three (power rule on
    /// r^s and (1+r^2)^q, contiguous relation on the hypergeometric factor
    /// with chain factor dz/dr = -2r).
    pub fn derivative(&self) -> Self {
        let mut terms = Vec::with_capacity(3 * self.terms.len());
        for t in &self.terms {
            if t.r_pow != 0 {
                terms.push(Term {
                    coeff: t.coeff * re(t.r_pow as f64),
                    r_pow: t.r_pow - 1,
                    ..*t
                });
            }
            if t.phi_pow != 0.0 {
                terms.push(Term {
                    coeff: t.coeff * re(2.0 * t.phi_pow),
                    r_pow: t.r_pow + 1,
                    phi_pow: t.phi_pow - 1.0,
                    hyp: t.hyp,
                });
            }
            let slope = t.hyp.alpha * t.hyp.beta / t.hyp.gamma;
            if slope != 0.0 {
                terms.push(Term {
                    coeff: t.coeff * re(-2.0 * slope),
                    r_pow: t.r_pow + 1,
                    phi_pow: t.phi_pow,
                    hyp: t.hyp.raised(),
                });
            }
        }
        let mut f = Self { terms };
        f.normalize();
        f
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut f = self.clone();
        for t in &mut f.terms {
            t.coeff *= c;
        }
        f.normalize();
        f
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut f = self.clone();
        f.terms.extend_from_slice(&other.terms);
        f.normalize();
        f
    }

    pub fn mul_r_pow(&self, k: i32) -> Self {
        let mut f = self.clone();
        for t in &mut f.terms {
            t.r_pow += k;
        }
        f
    }

    /// Multiplies by (1+r^2)^dq; half-integer dq covers the sqrt(Phi)
    /// weights throughout.
    pub fn mul_phi_pow(&self, dq: f64) -> Self {
        let mut f = self.clone();
        for t in &mut f.terms {
            t.phi_pow += dq;
        }
        f
    }

    /// Merges terms with bit-identical structure and drops exact zeros;
    /// keeps term counts bounded across repeated differentiation.
    fn normalize(&mut self) {
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.coeff == Complex64::new(0.0, 0.0) {
                continue;
            }
            if let Some(prev) = merged.iter_mut().find(|p| {
                p.r_pow == t.r_pow
                    && p.phi_pow == t.phi_pow
                    && p.hyp == t.hyp
            }) {
                prev.coeff += t.coeff;
            } else {
                merged.push(*t);
            }
        }
        merged.retain(|t| t.coeff != Complex64::new(0.0, 0.0));
        self.terms = merged;
    }
}

/// Basic radial profile U_{eps,j}(r) = r^j (1+r^2)^(-eps/2) 2F1(alpha, beta;
/// gamma; -r^2) with gamma = j + 3/2 and alpha, beta =
/// (3/2 + j - eps +- sqrt(mass_sq + 1/4))/2. Quantized eps makes alpha = -n
/// and the series a degree-n polynomial; any real eps is accepted.
pub fn u_radial(epsilon: f64, j: u32, mass_sq: f64) -> RadialFn {
    let s = (mass_sq + 0.25).sqrt();
    let base = 1.5 + j as f64 - epsilon;
    let hyp = Hyp2F1Params::new((base + s) / 2.0, (base - s) / 2.0, j as f64 + 1.5);
    RadialFn::hypergeometric_term(re(1.0), j as i32, -epsilon / 2.0, hyp)
}

/// Which first-order description a bundle's component labels refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Formalism {
    #[serde(rename = "DKP")]
    Dkp,
    #[serde(rename = "FIVE_DIM")]
    FiveDim,
    #[serde(rename = "RS")]
    Rs,
}

impl Formalism {
    pub fn as_str(&self) -> &'static str {
        match self {
            Formalism::Dkp => "DKP",
            Formalism::FiveDim => "FIVE_DIM",
            Formalism::Rs => "RS",
        }
    }

    /// Canonical component order for output listings.
    pub fn canonical_labels(&self) -> &'static [&'static str] {
        match self {
            Formalism::Dkp => &DKP_LABELS,
            Formalism::FiveDim => &FIVE_DIM_LABELS,
            Formalism::Rs => &RS_LABELS,
        }
    }
}

pub const DKP_LABELS: [&str; 10] =
    ["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10"];
pub const FIVE_DIM_LABELS: [&str; 5] = ["f", "g", "h", "F", "G"];
pub const RS_LABELS: [&str; 5] = ["f1", "f2", "f3", "F", "G"];

/// Angular index sigma of each 10-component label in the separation ansatz:
/// component k pairs with D^j_{-m,sigma_k}(phi, theta, 0).
pub const DKP_SIGMA: [i32; 10] = [0, -1, 0, 1, -1, 0, 1, -1, 0, 1];

/// A complete set of radial profiles for one mode in one formalism.
#[derive(Debug, Clone)]
pub struct RadialBundle {
    pub formalism: Formalism,
    pub spec: ModeSpec,
    components: BTreeMap<&'static str, RadialFn>,
}

impl RadialBundle {
    pub(crate) fn new(formalism: Formalism, spec: ModeSpec) -> Self {
        let mut components = BTreeMap::new();
        for &label in formalism.canonical_labels() {
            components.insert(label, RadialFn::zero());
        }
        Self { formalism, spec, components }
    }

    pub(crate) fn set(&mut self, label: &'static str, f: RadialFn) {
        self.components.insert(label, f);
    }

    pub fn component(&self, label: &str) -> Result<&RadialFn> {
        self.components
            .get(label)
            .ok_or_else(|| Error::MissingComponent(format!(
                "{} bundle has no component '{label}'",
                self.formalism.as_str()
            )))
    }

    /// Labels in canonical order.
    pub fn labels(&self) -> &'static [&'static str] {
        self.formalism.canonical_labels()
    }

    /// Labels of components that are not identically zero, canonical order.
    pub fn nonzero_labels(&self) -> Vec<&'static str> {
        self.labels()
            .iter()
            .copied()
            .filter(|l| !self.components[l].is_zero())
            .collect()
    }

    /// Copy with one component multiplied by a constant; the mutation-test
    /// entry point.
    pub fn with_scaled_component(&self, label: &str, factor: Complex64) -> Result<Self> {
        let target = self.component(label)?.scale(factor);
        let mut out = self.clone();
        let key = out
            .labels()
            .iter()
            .copied()
            .find(|l| *l == label)
            .expect("label present per component() check");
        out.set(key, target);
        Ok(out)
    }

    /// Copy with one component multiplied by the 1% ramp (1 + 0.01 r). The
    /// ramp changes the profile's shape, so even a homogeneous equation in
    /// that single component registers the corruption.
    pub fn with_perturbed_component(&self, label: &str) -> Result<Self> {
        let f = self.component(label)?;
        let target = f.add(&f.mul_r_pow(1).scale(Complex64::new(0.01, 0.0)));
        let mut out = self.clone();
        let key = out
            .labels()
            .iter()
            .copied()
            .find(|l| *l == label)
            .expect("label present per component() check");
        out.set(key, target);
        Ok(out)
    }

    /// Copy with every component scaled by the same constant; residuals are
    /// invariant under this.
    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        let keys: Vec<&'static str> = out.components.keys().copied().collect();
        for key in keys {
            let f = out.components[key].scale(factor);
            out.set(key, f);
        }
        out
    }
}

fn mass_of(mass_sq: f64) -> Result<f64> {
    if mass_sq <= 0.0 {
        Err(Error::Domain(format!(
            "massive builder needs mass_sq > 0, got {mass_sq}"
        )))
    } else {
        Ok(mass_sq.sqrt())
    }
}

/// J-family mode: the pure tensor wave with f1 = f3 = f6 = 0 and odd parity
/// link f4 = -f2. Seeds f2 = U_{eps,j} and recovers f5, f8, f9 from the
/// first-order system.
pub fn build_j_wave(mass_sq: f64, n: u32, j: u32) -> Result<RadialBundle> {
    let m = mass_of(mass_sq)?;
    let spec = ModeSpec::massive(mass_sq, n, j, 0, WaveType::J)?;
    let eps = spec.epsilon;
    let f2 = u_radial(eps, j, mass_sq);
    let f5 = f2.mul_phi_pow(-0.5).scale(-I * re(eps / m));
    let f8 = f2
        .derivative()
        .add(&f2.mul_r_pow(-1))
        .mul_phi_pow(0.5)
        .scale(-I * re(1.0 / m));
    let f9 = f2.mul_r_pow(-1).scale(I * re(2.0 * nu_half(j) / m));
    let mut b = RadialBundle::new(Formalism::Dkp, spec);
    b.set("f4", f2.scale(re(-1.0)));
    b.set("f2", f2);
    b.set("f7", f5.scale(re(-1.0)));
    b.set("f5", f5);
    b.set("f10", f8.clone());
    b.set("f8", f8);
    b.set("f9", f9);
    Ok(b)
}

/// Massless J-family mode: only the tensor components survive, the energy
/// is eps = 2n + j + 2, and the mass factors of the massive system drop to
/// unit weights.
pub fn build_massless_j_wave(n: u32, j: u32) -> Result<RadialBundle> {
    let spec = ModeSpec::massless_dkp(n, j, 0)?;
    let eps = spec.epsilon;
    let f2 = u_radial(eps, j, 0.0);
    let f5 = f2.mul_phi_pow(-0.5).scale(-I * re(eps));
    let f8 = f2
        .derivative()
        .add(&f2.mul_r_pow(-1))
        .mul_phi_pow(0.5)
        .scale(-I);
    let f9 = f2.mul_r_pow(-1).scale(I * re(2.0 * nu_half(j)));
    let mut b = RadialBundle::new(Formalism::Dkp, spec);
    b.set("f4", f2.scale(re(-1.0)));
    b.set("f2", f2);
    b.set("f7", f5.scale(re(-1.0)));
    b.set("f5", f5);
    b.set("f10", f8.clone());
    b.set("f8", f8);
    b.set("f9", f9);
    Ok(b)
}

/// Shared tail of the two mixed-parity builders: given the vector-sector
/// profiles (F1, F2, F3) in the sqrt(Phi)-weighted variables, reconstructs
/// the tensor sector from the first-order system and maps back to the
/// stored f-variables with the even parity link f4 = +f2.
fn finish_mixed_wave(
    spec: ModeSpec,
    big_f1: RadialFn,
    big_f2: RadialFn,
    big_f3: RadialFn,
) -> RadialBundle {
    let m = spec.mass_sq.sqrt();
    let eps = spec.epsilon;
    let nh = nu_half(spec.j);
    let f5_big = big_f2
        .scale(-I * re(eps))
        .add(&big_f1.mul_r_pow(-1).scale(re(nh)))
        .scale(re(1.0 / m));
    let f6_big = big_f3
        .scale(I * re(eps))
        .add(&big_f1.derivative().mul_phi_pow(1.0))
        .mul_phi_pow(-1.0)
        .scale(re(-1.0 / m));
    let f8_big = big_f2
        .derivative()
        .add(&big_f2.mul_r_pow(-1))
        .mul_phi_pow(1.0)
        .scale(I)
        .add(&big_f3.mul_r_pow(-1).scale(I * re(nh)))
        .scale(re(-1.0 / m));
    let mut b = RadialBundle::new(Formalism::Dkp, spec);
    b.set("f1", big_f1.mul_phi_pow(-0.5));
    b.set("f4", big_f2.clone());
    b.set("f2", big_f2);
    b.set("f3", big_f3.mul_phi_pow(-0.5));
    let f5 = f5_big.mul_phi_pow(-0.5);
    b.set("f7", f5.clone());
    b.set("f5", f5);
    b.set("f6", f6_big);
    let f8 = f8_big.mul_phi_pow(-0.5);
    b.set("f10", f8.scale(re(-1.0)));
    b.set("f8", f8);
    b
}

/// (j+1)-family mode: orbital index nu = j + 1, even parity (f4 = +f2),
/// two-term vector profile G1 = r U_{eps,j+1} - ((2j+3)/eps) sqrt(Phi)
/// U_{eps-1,j}. Defined for j >= 0; at j = 0 the f2 = f4 channel closes.
pub fn build_jplus_wave(mass_sq: f64, n: u32, j: u32) -> Result<RadialBundle> {
    mass_of(mass_sq)?;
    let spec = ModeSpec::massive(mass_sq, n, j, 0, WaveType::JPlus)?;
    let eps = spec.epsilon;
    let jf = j as f64;
    let u = u_radial(eps, j + 1, mass_sq);
    let u_shift = u_radial(eps - 1.0, j, mass_sq);
    let g1 = u
        .mul_r_pow(1)
        .add(&u_shift.mul_phi_pow(0.5).scale(re(-(2.0 * jf + 3.0) / eps)));
    let big_f1 = g1.scale(re((jf + 1.0).sqrt()));
    let big_f2 = u.scale(I * re((jf / 2.0).sqrt()));
    let big_f3 = u.scale(I * re((jf + 1.0).sqrt()));
    Ok(finish_mixed_wave(spec, big_f1, big_f2, big_f3))
}

/// (j-1)-family mode: orbital index nu = j - 1, even parity, two-term
/// vector profile G1 = -r U_{eps,j-1} - (2 a b / (eps c)) sqrt(Phi)
/// U_{eps-1,j} where a, b, c are the hypergeometric parameters of the
/// nu = j - 1 branch.
pub fn build_jminus_wave(mass_sq: f64, n: u32, j: u32) -> Result<RadialBundle> {
    mass_of(mass_sq)?;
    let spec = ModeSpec::massive(mass_sq, n, j, 0, WaveType::JMinus)?;
    let eps = spec.epsilon;
    let jf = j as f64;
    let s = (mass_sq + 0.25).sqrt();
    let a = (0.5 + jf - eps + s) / 2.0;
    let b = (0.5 + jf - eps - s) / 2.0;
    let c = jf + 0.5;
    let u = u_radial(eps, j - 1, mass_sq);
    let u_shift = u_radial(eps - 1.0, j, mass_sq);
    let g1 = u
        .mul_r_pow(1)
        .scale(re(-1.0))
        .add(&u_shift.mul_phi_pow(0.5).scale(re(-2.0 * a * b / (eps * c))));
    let big_f1 = g1.scale(re(jf.sqrt()));
    let big_f2 = u.scale(I * re(((jf + 1.0) / 2.0).sqrt()));
    let big_f3 = u.scale(-I * re(jf.sqrt()));
    Ok(finish_mixed_wave(spec, big_f1, big_f2, big_f3))
}

/// j = 0 massive mode (level N = 2n + 1): seeds f6 = U_{eps,1} and derives
/// f1, f3 from the three-equation j = 0 system; f9 = 0 identically.
pub fn build_j0_mode(mass_sq: f64, n: u32) -> Result<RadialBundle> {
    let m = mass_of(mass_sq)?;
    let spec = ModeSpec::massive(mass_sq, n, 0, 0, WaveType::JPlus)?;
    let eps = spec.epsilon;
    let f6 = u_radial(eps, 1, mass_sq);
    let f3 = f6.mul_phi_pow(-0.5).scale(I * re(eps / m));
    let f1 = f6
        .derivative()
        .add(&f6.mul_r_pow(-1).scale(re(2.0)))
        .mul_phi_pow(0.5)
        .scale(re(-1.0 / m));
    let mut b = RadialBundle::new(Formalism::Dkp, spec);
    b.set("f1", f1);
    b.set("f3", f3);
    b.set("f6", f6);
    Ok(b)
}

/// Polynomial-termination energy found for the massless j = 0 scalar
/// sector: the hypergeometric factor of its radial profile terminates at
/// degree n exactly when epsilon = 2n + 3. Reported as the condition the
/// reduction produces; no quantization is asserted for this pure-gauge
/// sector.
pub fn gauge_polynomial_epsilon(n: u32) -> f64 {
    2.0 * n as f64 + 3.0
}

/// Massless j = 0 gauge mode: a pure-potential configuration with all
/// field-strength components zero. F1 solves the scalar radial equation
/// (hypergeometric form with the formal parameter shift s = 3/2) and F3
/// follows from the first-order pair. Accepts any epsilon > 0; the profile
/// is polynomial iff epsilon = 2n + 3.
pub fn build_massless_gauge_j0(epsilon: f64) -> Result<RadialBundle> {
    if epsilon <= 0.0 {
        return Err(Error::Domain(format!("gauge mode needs epsilon > 0, got {epsilon}")));
    }
    let spec = ModeSpec {
        mass_sq: 0.0,
        n: quantized_gauge_n(epsilon).unwrap_or(0),
        j: 0,
        m: 0,
        wave_type: WaveType::JPlus,
        massless: true,
        epsilon,
    };
    let big_f1 = u_radial(epsilon, 0, 2.0);
    let big_f3 = big_f1
        .derivative()
        .mul_phi_pow(1.0)
        .scale(I * re(1.0 / epsilon));
    let mut b = RadialBundle::new(Formalism::Dkp, spec);
    b.set("f1", big_f1.mul_phi_pow(-0.5));
    b.set("f3", big_f3.mul_phi_pow(-0.5));
    Ok(b)
}

fn quantized_gauge_n(epsilon: f64) -> Option<u32> {
    let n = (epsilon - 3.0) / 2.0;
    if n >= 0.0 && n.fract() == 0.0 {
        Some(n as u32)
    } else {
        None
    }
}

/// 5-vector mode profiles, stored without the angular reassembly factors
/// (those enter when the field is evaluated; the stored f, g, h, F, G are
/// the plain hypergeometric profiles with unit leading constants).
///
/// J family: h = U_{eps,j}, scalar components zero. (j+1) family:
/// f = U_{eps,j+1}, G = ((j+3/2)/eps) U_{eps+1,j}, F = i ((j+3/2)/eps)
/// U_{eps-1,j}. (j-1) family: g = U_{eps,j-1}, G = ((a-c)(b-c)/(eps c))
/// U_{eps+1,j}, F = i (a b/(eps c)) U_{eps-1,j}, with a, b, c the
/// hypergeometric parameters of the nu = j - 1 branch.
pub fn build_5d_mode(mass_sq: f64, n: u32, j: u32, wave_type: WaveType) -> Result<RadialBundle> {
    mass_of(mass_sq)?;
    let spec = ModeSpec::massive(mass_sq, n, j, 0, wave_type)?;
    let eps = spec.epsilon;
    let jf = j as f64;
    let mut b = RadialBundle::new(Formalism::FiveDim, spec);
    match wave_type {
        WaveType::J => {
            b.set("h", u_radial(eps, j, mass_sq));
        }
        WaveType::JPlus => {
            let coef = (jf + 1.5) / eps;
            b.set("f", u_radial(eps, j + 1, mass_sq));
            b.set("G", u_radial(eps + 1.0, j, mass_sq).scale(re(coef)));
            b.set("F", u_radial(eps - 1.0, j, mass_sq).scale(I * re(coef)));
        }
        WaveType::JMinus => {
            let s = (mass_sq + 0.25).sqrt();
            let a = (0.5 + jf - eps + s) / 2.0;
            let bb = (0.5 + jf - eps - s) / 2.0;
            let c = jf + 0.5;
            b.set("g", u_radial(eps, j - 1, mass_sq));
            b.set(
                "G",
                u_radial(eps + 1.0, j, mass_sq).scale(re((a - c) * (bb - c) / (eps * c))),
            );
            b.set("F", u_radial(eps - 1.0, j, mass_sq).scale(I * re(a * bb / (eps * c))));
        }
    }
    Ok(b)
}

/// The 10-component wavefunction value at a spacetime point: entries 1-4
/// (indices 0..4) are the vector part, 5-10 the tensor part, matching the
/// matrix-algebra ordering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveFunction10 {
    pub value: [Complex64; 10],
}

/// Assembles the full 10-component wavefunction from a DKP bundle at
/// (t, r, theta, phi) for magnetic number m: component k carries
/// f_k(r) * D^j_{-m,sigma_k}(phi, theta, 0) * exp(-i eps t).
pub fn evaluate_wavefunction(
    bundle: &RadialBundle,
    t: f64,
    r: f64,
    theta: f64,
    phi: f64,
    m: i32,
) -> Result<WaveFunction10> {
    if bundle.formalism != Formalism::Dkp {
        return Err(Error::IncompatibleBundle(format!(
            "wavefunction assembly needs a DKP bundle, got {}",
            bundle.formalism.as_str()
        )));
    }
    if r <= 0.0 {
        return Err(Error::Domain(format!("r = {r} must be positive")));
    }
    if theta <= 0.0 || theta >= std::f64::consts::PI {
        return Err(Error::Domain(format!(
            "theta = {theta} lies on an angular axis; need theta in (0, pi)"
        )));
    }
    let j = bundle.spec.j;
    if m.unsigned_abs() > j {
        return Err(Error::IndexOutOfRange(format!("|m| = {} > j = {j}", m.abs())));
    }
    let phase = Complex64::from_polar(1.0, -bundle.spec.epsilon * t);
    let mut value = [Complex64::new(0.0, 0.0); 10];
    for (k, label) in DKP_LABELS.iter().enumerate() {
        let f = bundle.component(label)?;
        if f.is_zero() {
            continue;
        }
        let ang = crate::special_functions::ansatz_d(j, m, DKP_SIGMA[k], theta, phi);
        value[k] = phase * f.eval(r) * ang;
    }
    Ok(WaveFunction10 { value })
}
