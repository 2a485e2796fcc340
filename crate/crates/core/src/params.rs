use num_complex::Complex64;

use crate::error::{Error, Result};

/// The order `L` and Sommerfeld parameter `eta`.
///
/// `L` may be complex for evaluation; radius computations need it real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombParams {
    pub l: Complex64,
    pub eta: f64,
}

impl CoulombParams {
    pub fn new(l: f64, eta: f64) -> Self {
        CoulombParams { l: Complex64::new(l, 0.0), eta }
    }

    pub fn complex(l: Complex64, eta: f64) -> Self {
        CoulombParams { l, eta }
    }

    pub fn is_real(&self) -> bool {
        self.l.im == 0.0
    }

    /// The real order, rejecting complex or `L <= -1`.
    pub fn real_order(&self) -> Result<f64> {
        if !self.is_real() {
            return Err(Error::GateViolation("requires real L"));
        }
        if !(self.l.re > -1.0) {
            return Err(Error::GateViolation("requires L > -1"));
        }
        Ok(self.l.re)
    }

    /// Gates shared by all radius computations: real `L > -1`, `eta <= 0`.
    pub fn radius_gate(&self) -> Result<f64> {
        let l = self.real_order()?;
        if !(self.eta <= 0.0) {
            return Err(Error::GateViolation("requires eta <= 0"));
        }
        Ok(l)
    }
}
