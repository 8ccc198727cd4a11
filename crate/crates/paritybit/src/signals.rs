//! The single-bit signal pair.
//!
//! A bit value is encoded in one of two qubit states at angle `±α` from the
//! computational-basis axis. `r = 0` gives the pure pair with overlap
//! `cos 2α`; `0 < r < sin α cos α` shrinks the off-diagonal coherence and
//! yields the general equal-determinant mixed pair.

use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::matvec::DensityMatrix;

/// Parameters of the two single-bit signal states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalPair {
    alpha: f64,
    r: f64,
}

impl SignalPair {
    /// Validates `0 <= alpha <= π/4` and `0 <= r < sin α cos α`
    /// (with `r = 0` forced at `alpha = 0`, where the states coincide).
    pub fn new(alpha: f64, r: f64) -> Result<Self> {
        if !alpha.is_finite() || !(0.0..=FRAC_PI_4).contains(&alpha) {
            return Err(Error::Parameter(format!(
                "alpha = {alpha} violates 0 <= alpha <= pi/4"
            )));
        }
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Parameter(format!("r = {r} violates r >= 0")));
        }
        if alpha == 0.0 {
            if r != 0.0 {
                return Err(Error::Parameter(format!(
                    "r = {r} violates r == 0 at alpha == 0"
                )));
            }
        } else {
            let sc = alpha.sin() * alpha.cos();
            if r >= sc {
                return Err(Error::Parameter(format!(
                    "r = {r} violates r < sin(alpha)cos(alpha) = {sc}"
                )));
            }
        }
        Ok(Self { alpha, r })
    }

    /// Pure pair shorthand (`r = 0`).
    pub fn pure_states(alpha: f64) -> Result<Self> {
        Self::new(alpha, 0.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn is_pure(&self) -> bool {
        self.r == 0.0
    }

    pub fn sin(&self) -> f64 {
        self.alpha.sin()
    }

    pub fn cos(&self) -> f64 {
        self.alpha.cos()
    }

    /// `sin 2α`.
    pub fn sin_2a(&self) -> f64 {
        (2.0 * self.alpha).sin()
    }

    /// `cos 2α`, the overlap of the two pure signal states.
    pub fn cos_2a(&self) -> f64 {
        (2.0 * self.alpha).cos()
    }

    /// The off-diagonal coherence `a₂ = sc − r`, the single quantity the
    /// optimal 2x2 measurement depends on.
    pub fn coherence(&self) -> f64 {
        self.sin() * self.cos() - self.r
    }

    /// The two single-bit density matrices
    /// `[[c², ±(sc−r)], [±(sc−r), s²]]`.
    pub fn single_bit_matrices(&self) -> (DensityMatrix, DensityMatrix) {
        let (s, c) = (self.sin(), self.cos());
        let off = self.coherence();
        let rho0 = DensityMatrix::new(2, vec![c * c, off, off, s * s])
            .expect("symmetric by construction");
        let rho1 = DensityMatrix::new(2, vec![c * c, -off, -off, s * s])
            .expect("symmetric by construction");
        (rho0, rho1)
    }

    /// Total matrix `diag(c², s²)` and difference matrix
    /// `antidiag(sc − r)`; the signal matrices are their sum and difference.
    pub fn total_and_difference(&self) -> (DensityMatrix, DensityMatrix) {
        let (s, c) = (self.sin(), self.cos());
        let off = self.coherence();
        let total = DensityMatrix::new(2, vec![c * c, 0.0, 0.0, s * s])
            .expect("symmetric by construction");
        let diff = DensityMatrix::new(2, vec![0.0, off, off, 0.0])
            .expect("symmetric by construction");
        (total, diff)
    }

    /// Error probability of the optimal single-particle measurement,
    /// `P_e = 1/2 − a₂` (equals `(1 − sin 2α)/2` for pure states).
    pub fn single_particle_error(&self) -> f64 {
        0.5 - self.coherence()
    }

    /// The angle `α′` of the pure pair with the same Bloch direction,
    /// `tan 2α′ = (sin 2α − 2r)/cos 2α`. Undefined at `α = π/4`, where the
    /// matrices commute and the caller takes the commuting-case path.
    pub fn equivalent_pure_angle(&self) -> Result<f64> {
        if self.alpha == FRAC_PI_4 {
            return Err(Error::Domain {
                value: self.alpha,
                lo: 0.0,
                hi: FRAC_PI_4,
            });
        }
        Ok(((self.sin_2a() - 2.0 * self.r) / self.cos_2a()).atan() / 2.0)
    }
}
