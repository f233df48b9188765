use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical constants of the oscillator: reduced Planck constant, mass and
/// angular frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    hbar: f64,
    mass: f64,
    omega: f64,
}

impl OscillatorParams {
    pub fn new(hbar: f64, mass: f64, omega: f64) -> Result<Self> {
        for (name, value) in [("hbar", hbar), ("mass", mass), ("omega", omega)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParams(format!(
                    "{name} must be finite and strictly positive, got {value}"
                )));
            }
        }
        let params = Self { hbar, mass, omega };
        let length = params.length_scale();
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidParams(format!(
                "length scale sqrt(hbar/(mass*omega)) = {length} is degenerate"
            )));
        }
        Ok(params)
    }

    /// ħ = M = ω = 1.
    pub fn natural() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            omega: 1.0,
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Oscillator length √(ħ/Mω).
    pub fn length_scale(&self) -> f64 {
        (self.hbar / (self.mass * self.omega)).sqrt()
    }

    /// √(ħ/2Mω), the prefactor of a⁺ + a in the position operator.
    pub fn x_scale(&self) -> f64 {
        (self.hbar / (2.0 * self.mass * self.omega)).sqrt()
    }

    /// √(Mħω/2), the prefactor of i(a⁺ − a) in the momentum operator.
    pub fn p_scale(&self) -> f64 {
        (self.mass * self.hbar * self.omega / 2.0).sqrt()
    }

    /// ε_n = ħω(n + 1/2).
    pub fn level_energy(&self, n: usize) -> f64 {
        self.hbar * self.omega * (n as f64 + 0.5)
    }

    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega
    }
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self::natural()
    }
}
