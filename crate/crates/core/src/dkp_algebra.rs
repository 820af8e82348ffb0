//! The 10-dimensional matrix algebra underlying the first-order spin-1 wave
//! operator, with exhaustive identity checks.
//!
//! State ordering: four vector components, then the six antisymmetric tensor
//! components in the pair order 01, 02, 03, 23, 31, 12. Each beta matrix is
//! block off-diagonal: an upper-right 4x6 block mapping tensor to vector and
//! a lower-left 6x4 block mapping vector to tensor.

use crate::verifier::{EquationId, ResidualReport};
use crate::{Error, Result};
use num_complex::Complex64;

/// Dense complex 10x10 matrix used throughout the algebra layer.
pub type Matrix10 = nalgebra::SMatrix<Complex64, 10, 10>;

/// Diagonal of the flat metric, signature (+, -, -, -).
pub type MetricSignature = [f64; 4];
pub const METRIC_DIAG: MetricSignature = [1.0, -1.0, -1.0, -1.0];

/// Antisymmetric index pairs in storage order.
pub const TENSOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

fn metric(a: usize, b: usize) -> f64 {
    if a == b {
        METRIC_DIAG[a]
    } else {
        0.0
    }
}

fn kronecker(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// Generalized Kronecker delta of two index pairs:
/// delta^{ab}_{mn} = delta^a_m delta^b_n - delta^a_n delta^b_m.
fn pair_delta(a: usize, b: usize, m: usize, n: usize) -> f64 {
    kronecker(a, m) * kronecker(b, n) - kronecker(a, n) * kronecker(b, m)
}

fn check_index(a: usize) -> Result<()> {
    if a < 4 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!("spacetime index {a} out of 0..4")))
    }
}

/// Builds beta^a. Upper-right block entries (row j < 4, pair column [mn]):
/// -i (delta^m_j g^{na} - delta^n_j g^{ma}); lower-left block entries
/// (pair row [mn], column j < 4): -i delta^{aj}_{mn}.
pub fn build_beta(a: usize) -> Result<Matrix10> {
    check_index(a)?;
    let mi = Complex64::new(0.0, -1.0);
    let mut beta = Matrix10::zeros();
    for j in 0..4 {
        for (p, &(m, n)) in TENSOR_PAIRS.iter().enumerate() {
            beta[(j, 4 + p)] = mi * (kronecker(m, j) * metric(n, a) - kronecker(n, j) * metric(m, a));
            beta[(4 + p, j)] = mi * pair_delta(a, j, m, n);
        }
    }
    Ok(beta)
}

/// Rotation/boost generator j^{ab} = beta^a beta^b - beta^b beta^a.
pub fn build_generator(a: usize, b: usize) -> Result<Matrix10> {
    check_index(a)?;
    check_index(b)?;
    let (ba, bb) = (build_beta(a)?, build_beta(b)?);
    Ok(ba * bb - bb * ba)
}

/// Projector onto the six tensor components, the part of the wavefunction
/// that survives in the massless limit.
pub fn build_massless_projector() -> Matrix10 {
    let mut p = Matrix10::zeros();
    for k in 4..10 {
        p[(k, k)] = Complex64::new(1.0, 0.0);
    }
    p
}

fn max_abs(m: &Matrix10) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

fn identity_report(sub: Vec<f64>) -> ResidualReport {
    ResidualReport::new(EquationId::AlgIdentity, sub, Vec::new(), "absolute entrywise")
}

/// Checks the defining trilinear relation
/// beta^c beta^a beta^b + beta^b beta^a beta^c = beta^c g^{ab} + beta^b g^{ac}
/// over all 64 index triples. Sub-residuals are per-triple maxima in
/// lexicographic (c, a, b) order.
pub fn verify_trilinear() -> Result<ResidualReport> {
    let betas: Vec<Matrix10> = (0..4).map(build_beta).collect::<Result<_>>()?;
    let mut sub = Vec::with_capacity(64);
    for c in 0..4 {
        for a in 0..4 {
            for b in 0..4 {
                let lhs = betas[c] * betas[a] * betas[b] + betas[b] * betas[a] * betas[c];
                let rhs = betas[c] * Complex64::from(metric(a, b))
                    + betas[b] * Complex64::from(metric(a, c));
                sub.push(max_abs(&(lhs - rhs)));
            }
        }
    }
    Ok(identity_report(sub))
}

/// Checks both commutator families: the vector transformation law
/// [beta^c, j^{ab}] = g^{ca} beta^b - g^{cb} beta^a (64 triples), then the
/// generator algebra
/// [j^{mn}, j^{ab}] = (g^{na} j^{mb} - g^{nb} j^{ma}) - (g^{ma} j^{nb} - g^{mb} j^{na})
/// (256 quadruples). Sub-residuals list the triples first.
pub fn verify_commutators() -> Result<ResidualReport> {
    let betas: Vec<Matrix10> = (0..4).map(build_beta).collect::<Result<_>>()?;
    let mut gens = Vec::with_capacity(16);
    for a in 0..4 {
        for b in 0..4 {
            gens.push(betas[a] * betas[b] - betas[b] * betas[a]);
        }
    }
    let gen = |a: usize, b: usize| &gens[4 * a + b];
    let mut sub = Vec::with_capacity(64 + 256);
    for c in 0..4 {
        for a in 0..4 {
            for b in 0..4 {
                let lhs = betas[c] * gen(a, b) - gen(a, b) * betas[c];
                let rhs = betas[b] * Complex64::from(metric(c, a))
                    - betas[a] * Complex64::from(metric(c, b));
                sub.push(max_abs(&(lhs - rhs)));
            }
        }
    }
    for m in 0..4 {
        for n in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    let lhs = gen(m, n) * gen(a, b) - gen(a, b) * gen(m, n);
                    let rhs = gen(m, b) * Complex64::from(metric(n, a))
                        - gen(m, a) * Complex64::from(metric(n, b))
                        - gen(n, b) * Complex64::from(metric(m, a))
                        + gen(n, a) * Complex64::from(metric(m, b));
                    sub.push(max_abs(&(lhs - rhs)));
                }
            }
        }
    }
    Ok(identity_report(sub))
}

/// Checks the closed forms of the triple block products. The product
/// beta^c beta^a beta^b is block off-diagonal with
/// upper-right (row j, pair [mn]):
///   i [ delta^a_j (g^{cm} g^{bn} - g^{cn} g^{bm})
///       + g^{ac} (delta^n_j g^{mb} - delta^m_j g^{nb}) ],
/// lower-left (pair [mn], column j):
///   i ( delta^{cb}_{mn} g^{aj} - delta^{cj}_{mn} g^{ab} ),
/// and exactly zero diagonal blocks. All 64 triples are compared entrywise.
pub fn verify_block_products() -> Result<ResidualReport> {
    let betas: Vec<Matrix10> = (0..4).map(build_beta).collect::<Result<_>>()?;
    let i = Complex64::new(0.0, 1.0);
    let mut sub = Vec::with_capacity(64);
    for c in 0..4 {
        for a in 0..4 {
            for b in 0..4 {
                let direct = betas[c] * betas[a] * betas[b];
                let mut closed = Matrix10::zeros();
                for j in 0..4 {
                    for (p, &(m, n)) in TENSOR_PAIRS.iter().enumerate() {
                        closed[(j, 4 + p)] = i * (kronecker(a, j)
                            * (metric(c, m) * metric(b, n) - metric(c, n) * metric(b, m))
                            + metric(a, c)
                                * (kronecker(n, j) * metric(m, b)
                                    - kronecker(m, j) * metric(n, b)));
                        closed[(4 + p, j)] = i * (pair_delta(c, b, m, n) * metric(a, j)
                            - pair_delta(c, j, m, n) * metric(a, b));
                    }
                }
                sub.push(max_abs(&(direct - closed)));
            }
        }
    }
    Ok(identity_report(sub))
}

/// Checks the cube relation (beta^a)^3 = g^{aa} beta^a for each index; the
/// spectrum {0, +-1} of each beta matrix follows from it.
pub fn verify_beta_cubes() -> Result<ResidualReport> {
    let mut sub = Vec::with_capacity(4);
    for a in 0..4 {
        let beta = build_beta(a)?;
        let rhs = beta * Complex64::from(metric(a, a));
        sub.push(max_abs(&(beta * beta * beta - rhs)));
    }
    Ok(identity_report(sub))
}

/// Runs the full identity suite and reports the worst deviation; passes when
/// everything is below [`tolerances::ALGEBRA`].
pub fn verify_all() -> Result<ResidualReport> {
    let mut sub = Vec::new();
    for report in [
        verify_trilinear()?,
        verify_commutators()?,
        verify_block_products()?,
        verify_beta_cubes()?,
    ] {
        sub.push(report.per_equation_max);
    }
    Ok(identity_report(sub))
}
