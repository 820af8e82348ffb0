//! Discrete energy spectra of the spherical spin-1 modes and the level
//! degeneracy table.
//!
//! Energies are in units of the inverse curvature radius. Every massive mode
//! family shares the form epsilon = 2n + nu + 3/2 + sqrt(m^2 + 1/4), where
//! nu is the orbital index of the dominant angular harmonic: j for the
//! J-wave, j + 1 and j - 1 for the two mixed waves.

use crate::{Error, Result};
use serde::Serialize;

/// The three angular families of a spin-1 mode, named by the orbital index
/// nu of the radial profile: `J` has nu = j, `JMinus` nu = j - 1, `JPlus`
/// nu = j + 1. The declaration order is the canonical table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WaveType {
    #[serde(rename = "J")]
    J,
    #[serde(rename = "J_MINUS")]
    JMinus,
    #[serde(rename = "J_PLUS")]
    JPlus,
}

impl WaveType {
    pub fn as_str(&self) -> &'static str {
        match self {
            WaveType::J => "J",
            WaveType::JMinus => "J_MINUS",
            WaveType::JPlus => "J_PLUS",
        }
    }

    /// Orbital index nu of the radial profile for total angular momentum j.
    /// Errors when j = 0 would make nu negative or the family empty.
    pub fn orbital_index(&self, j: u32) -> Result<u32> {
        match self {
            WaveType::J => {
                if j == 0 {
                    Err(Error::InvalidQuantumNumbers("J wave needs j >= 1".into()))
                } else {
                    Ok(j)
                }
            }
            WaveType::JMinus => {
                if j == 0 {
                    Err(Error::InvalidQuantumNumbers("J_MINUS wave needs j >= 1".into()))
                } else {
                    Ok(j - 1)
                }
            }
            WaveType::JPlus => Ok(j + 1),
        }
    }

    pub const ALL: [WaveType; 3] = [WaveType::J, WaveType::JMinus, WaveType::JPlus];
}

impl std::str::FromStr for WaveType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "j" => Ok(WaveType::J),
            "j-minus" | "jminus" | "j-1" => Ok(WaveType::JMinus),
            "j-plus" | "jplus" | "j+1" => Ok(WaveType::JPlus),
            other => Err(Error::InvalidQuantumNumbers(format!(
                "unknown wave type '{other}' (expected j, j-minus or j-plus)"
            ))),
        }
    }
}

impl std::fmt::Display for WaveType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Full label of one quantized mode: quantum numbers, family, mass, and the
/// energy eigenvalue they determine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeSpec {
    pub mass_sq: f64,
    pub n: u32,
    pub j: u32,
    pub m: i32,
    pub wave_type: WaveType,
    pub massless: bool,
    pub epsilon: f64,
}

impl ModeSpec {
    /// Massive mode with quantized energy. Requires mass_sq > 0 and a valid
    /// (wave_type, j) combination.
    pub fn massive(mass_sq: f64, n: u32, j: u32, m: i32, wave_type: WaveType) -> Result<Self> {
        if mass_sq <= 0.0 {
            return Err(Error::Domain(format!(
                "massive mode needs mass_sq > 0, got {mass_sq}"
            )));
        }
        check_m(j, m)?;
        let epsilon = energy_massive(mass_sq, n, j, wave_type)?;
        Ok(Self { mass_sq, n, j, m, wave_type, massless: false, epsilon })
    }

    /// Massless tensor mode (the J family is the only one carrying field
    /// strength); j = 0 is pure gauge.
    pub fn massless_dkp(n: u32, j: u32, m: i32) -> Result<Self> {
        check_m(j, m)?;
        let epsilon = energy_massless_dkp(n, j)?;
        Ok(Self { mass_sq: 0.0, n, j, m, wave_type: WaveType::J, massless: true, epsilon })
    }

    /// Massless photon mode in the first-order 4-component description.
    pub fn photon(n: u32, j: u32, m: i32) -> Result<Self> {
        check_m(j, m)?;
        let epsilon = energy_photon_rs(n, j)?;
        Ok(Self { mass_sq: 0.0, n, j, m, wave_type: WaveType::J, massless: true, epsilon })
    }
}

fn check_m(j: u32, m: i32) -> Result<()> {
    if m.unsigned_abs() > j {
        Err(Error::IndexOutOfRange(format!("|m| = {} exceeds j = {j}", m.abs())))
    } else {
        Ok(())
    }
}

/// Energy of a massive mode: epsilon = 2n + nu + 3/2 + sqrt(mass_sq + 1/4).
pub fn energy_massive(mass_sq: f64, n: u32, j: u32, wave_type: WaveType) -> Result<f64> {
    if mass_sq < 0.0 {
        return Err(Error::Domain(format!("mass_sq = {mass_sq} must be >= 0")));
    }
    let nu = wave_type.orbital_index(j)?;
    Ok(2.0 * n as f64 + nu as f64 + 1.5 + (mass_sq + 0.25).sqrt())
}

/// Energy of a massless tensor mode: epsilon = 2n + j + 2, defined for
/// j >= 1. The j = 0 sector of the massless field carries no field strength.
pub fn energy_massless_dkp(n: u32, j: u32) -> Result<f64> {
    if j == 0 {
        return Err(Error::PureGauge);
    }
    Ok(2.0 * n as f64 + j as f64 + 2.0)
}

/// Photon energy in the first-order description: omega = 2n + j + 1 for
/// j >= 1.
pub fn energy_photon_rs(n: u32, j: u32) -> Result<f64> {
    if j == 0 {
        return Err(Error::PureGauge);
    }
    Ok(2.0 * n as f64 + j as f64 + 1.0)
}

/// Variant photon rule omega = 2n + (j + 1) + 1 obtained when the radial
/// quantization is run on the companion profile; kept for comparison, not
/// used by the mode builders.
pub fn energy_photon_rs_shifted(n: u32, j: u32) -> Result<f64> {
    if j == 0 {
        return Err(Error::PureGauge);
    }
    Ok(2.0 * n as f64 + j as f64 + 2.0)
}

/// One admissible (wave_type, n, j) combination at level N = 2n + nu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    /// Level number N = 2n + nu.
    #[serde(rename = "N")]
    pub level: u32,
    pub wave_type: WaveType,
    pub n: u32,
    pub j: u32,
}

impl LevelRow {
    /// Energy this row acquires for a given mass; with mass_sq = 0 the
    /// formal value is N + 2 across all families.
    pub fn epsilon(&self, mass_sq: f64) -> Result<f64> {
        energy_massive(mass_sq, self.n, self.j, self.wave_type)
    }
}

/// Degeneracy table: for each level N, every (family, n, j) that reaches it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelTable {
    pub n_max: u32,
    pub rows: Vec<LevelRow>,
}

/// Enumerates all modes level by level for N = 1..=n_max, ordered by
/// (N, family, n). Within a level: the J family needs j = N - 2n >= 1, the
/// J_MINUS family j = N - 2n + 1 >= 1, and the J_PLUS family
/// j = N - 2n - 1 >= 0.
pub fn build_level_table(n_max: u32) -> LevelTable {
    let mut rows = Vec::new();
    for level in 1..=n_max {
        for wave_type in WaveType::ALL {
            let mut n = 0;
            loop {
                let nu = level as i64 - 2 * n as i64;
                let j = match wave_type {
                    WaveType::J => nu,
                    WaveType::JMinus => nu + 1,
                    WaveType::JPlus => nu - 1,
                };
                let j_min = match wave_type {
                    WaveType::JPlus => 0,
                    _ => 1,
                };
                if nu < 0 || j < j_min {
                    break;
                }
                rows.push(LevelRow { level, wave_type, n, j: j as u32 });
                n += 1;
            }
        }
    }
    LevelTable { n_max, rows }
}
