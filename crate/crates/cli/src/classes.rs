//! Mode-class names shared by `mode --type` and `verify --mode`: every
//! constructible bundle family under one spelling.

use crate::error::{usage, CliError};
use ads_spin1::maxwell_rs::build_photon_mode;
use ads_spin1::radial_modes::{
    build_5d_mode, build_j0_mode, build_j_wave, build_jminus_wave, build_jplus_wave,
    build_massless_gauge_j0, build_massless_j_wave, gauge_polynomial_epsilon,
};
use ads_spin1::{RadialBundle, WaveType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeClass {
    J,
    JMinus,
    JPlus,
    J0,
    MasslessJ,
    GaugeJ0,
    Photon,
    FiveDimJ,
    FiveDimJMinus,
    FiveDimJPlus,
}

impl ModeClass {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "j" => Ok(Self::J),
            "j_minus" => Ok(Self::JMinus),
            "j_plus" => Ok(Self::JPlus),
            "j0" => Ok(Self::J0),
            "massless_j" => Ok(Self::MasslessJ),
            "gauge_j0" => Ok(Self::GaugeJ0),
            "photon" => Ok(Self::Photon),
            "five_dim_j" => Ok(Self::FiveDimJ),
            "five_dim_j_minus" => Ok(Self::FiveDimJMinus),
            "five_dim_j_plus" => Ok(Self::FiveDimJPlus),
            other => Err(usage(format!(
                "unknown mode class '{other}' (expected one of j, j_minus, j_plus, j0, \
                 massless_j, gauge_j0, photon, five_dim_j, five_dim_j_minus, five_dim_j_plus)"
            ))),
        }
    }

    pub fn needs_j(self) -> bool {
        !matches!(self, Self::J0 | Self::GaugeJ0)
    }

    /// Builds the radial bundle for this class. `mass_sq` is ignored by the
    /// massless classes; `j` is ignored by the scalar classes.
    pub fn build(self, mass_sq: Option<f64>, n: u32, j: u32) -> Result<RadialBundle, CliError> {
        let mass = || {
            mass_sq.ok_or_else(|| usage(format!("mode class {self:?} requires --mass-sq")))
        };
        let core = |r: ads_spin1::Result<RadialBundle>| r.map_err(|e| usage(e.to_string()));
        match self {
            Self::J => core(build_j_wave(mass()?, n, j)),
            Self::JMinus => core(build_jminus_wave(mass()?, n, j)),
            Self::JPlus => core(build_jplus_wave(mass()?, n, j)),
            Self::J0 => core(build_j0_mode(mass()?, n)),
            Self::MasslessJ => core(build_massless_j_wave(n, j)),
            Self::GaugeJ0 => core(build_massless_gauge_j0(gauge_polynomial_epsilon(n))),
            Self::Photon => build_photon_mode(n, j, 0)
                .map(|m| m.bundle().clone())
                .map_err(|e| usage(e.to_string())),
            Self::FiveDimJ => core(build_5d_mode(mass()?, n, j, WaveType::J)),
            Self::FiveDimJMinus => core(build_5d_mode(mass()?, n, j, WaveType::JMinus)),
            Self::FiveDimJPlus => core(build_5d_mode(mass()?, n, j, WaveType::JPlus)),
        }
    }
}

/// Parses the compact `verify --mode` string. Massive and 5-vector classes
/// read `TYPE:mass_sq:n:j` (the scalar channel `j0:mass_sq:n`); the massless
/// classes drop the mass: `massless_j:n:j`, `gauge_j0:n`, `photon:n:j`.
pub fn parse_mode_string(s: &str) -> Result<RadialBundle, CliError> {
    let mut parts = s.split(':');
    let head = parts.next().unwrap_or_default();
    let class = ModeClass::parse(head)?;
    let rest: Vec<&str> = parts.collect();
    let num = |field: &str, raw: &str| -> Result<f64, CliError> {
        raw.parse::<f64>()
            .map_err(|_| usage(format!("mode '{s}': bad {field} value '{raw}'")))
    };
    let int = |field: &str, raw: &str| -> Result<u32, CliError> {
        raw.parse::<u32>()
            .map_err(|_| usage(format!("mode '{s}': bad {field} value '{raw}'")))
    };
    let arity = |want: usize| -> Result<(), CliError> {
        if rest.len() == want {
            Ok(())
        } else {
            Err(usage(format!(
                "mode '{s}': expected {want} fields after the class, got {}",
                rest.len()
            )))
        }
    };
    match class {
        ModeClass::J
        | ModeClass::JMinus
        | ModeClass::JPlus
        | ModeClass::FiveDimJ
        | ModeClass::FiveDimJMinus
        | ModeClass::FiveDimJPlus => {
            arity(3)?;
            let mass = num("mass_sq", rest[0])?;
            class.build(Some(mass), int("n", rest[1])?, int("j", rest[2])?)
        }
        ModeClass::J0 => {
            arity(2)?;
            let mass = num("mass_sq", rest[0])?;
            class.build(Some(mass), int("n", rest[1])?, 0)
        }
        ModeClass::MasslessJ | ModeClass::Photon => {
            arity(2)?;
            class.build(None, int("n", rest[0])?, int("j", rest[1])?)
        }
        ModeClass::GaugeJ0 => {
            arity(1)?;
            class.build(None, int("n", rest[0])?, 0)
        }
    }
}
