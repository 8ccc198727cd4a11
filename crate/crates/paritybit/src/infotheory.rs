//! Scalar information-theoretic kernels, all in bits (base-2 logs).

use crate::error::{Error, Result};

const DOMAIN_SLACK: f64 = 1e-12;

fn clamp_unit(x: f64) -> Result<f64> {
    if !(-DOMAIN_SLACK..=1.0 + DOMAIN_SLACK).contains(&x) {
        return Err(Error::Domain {
            value: x,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(x.clamp(0.0, 1.0))
}

/// Binary Shannon entropy `H(x) = −x log₂x − (1−x) log₂(1−x)`,
/// with `0 log 0 := 0`.
pub fn shannon_entropy(x: f64) -> Result<f64> {
    let x = clamp_unit(x)?;
    Ok(entropy_term(x) + entropy_term(1.0 - x))
}

fn entropy_term(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Capacity of the binary symmetric channel, `I₂(p) = 1 − H(p)`.
pub fn bsc_information(p: f64) -> Result<f64> {
    let p = clamp_unit(p)?;
    Ok(bsc_information_from_bias(0.5 - p))
}

/// `I₂(1/2 − η)` evaluated from the bias `η` directly.
///
/// `1 − H(1/2 − η)` cancels catastrophically below `η ≈ 1e-8`; this form,
/// `[(1+u)ln(1+u) + (1−u)ln(1−u)]/(2 ln 2)` with `u = 2η`, keeps full
/// relative accuracy down to the underflow threshold, which the small-angle
/// regimes need.
pub fn bsc_information_from_bias(eta: f64) -> f64 {
    let u = (2.0 * eta).abs().min(1.0);
    if u == 1.0 {
        return 1.0;
    }
    if u < 1e-4 {
        // series u²/2 + u⁴/12 + u⁶/30, truncation below 1e-16 relative
        let u2 = u * u;
        return u2 * (0.5 + u2 * (1.0 / 12.0 + u2 / 30.0)) / std::f64::consts::LN_2;
    }
    ((1.0 + u) * u.ln_1p() + (1.0 - u) * (-u).ln_1p()) / (2.0 * std::f64::consts::LN_2)
}

/// Binary erasure (unambiguous discrimination) information, `1 − p_?`.
pub fn erasure_information(p_inconclusive: f64) -> Result<f64> {
    Ok(1.0 - clamp_unit(p_inconclusive)?)
}

/// Conditional probability table of a two-input channel with equiprobable
/// inputs: `rows[p][y] = P(outcome y | parity p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelTable {
    rows: [Vec<f64>; 2],
}

impl ChannelTable {
    /// Validates row lengths, entry ranges (clamping within 1e-12 slack) and
    /// row sums (tolerance 1e-10).
    pub fn new(row0: Vec<f64>, row1: Vec<f64>) -> Result<Self> {
        if row0.len() != row1.len() || row0.is_empty() {
            return Err(Error::DimensionMismatch {
                left: row0.len(),
                right: row1.len(),
            });
        }
        let mut rows = [row0, row1];
        for row in &mut rows {
            for e in row.iter_mut() {
                *e = clamp_unit(*e)?;
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > 1e-10 {
                return Err(Error::Parameter(format!(
                    "conditional row sums to {sum}, expected 1"
                )));
            }
        }
        Ok(Self { rows })
    }

    /// BSC(p) as a 2-outcome table.
    pub fn bsc(p: f64) -> Result<Self> {
        let p = clamp_unit(p)?;
        Self::new(vec![1.0 - p, p], vec![p, 1.0 - p])
    }

    pub fn outcomes(&self) -> usize {
        self.rows[0].len()
    }

    pub fn row(&self, parity: usize) -> &[f64] {
        &self.rows[parity]
    }
}

/// Mutual information `I(X;Y)` of a `ChannelTable` with uniform binary
/// input, as `Σ_{x,y} P(x) P(y|x) log₂(P(y|x)/P(y))`.
pub fn channel_mutual_information(t: &ChannelTable) -> f64 {
    let mut info = 0.0;
    for y in 0..t.outcomes() {
        let p0 = t.rows[0][y];
        let p1 = t.rows[1][y];
        let py = 0.5 * (p0 + p1);
        for px in [p0, p1] {
            if px > 0.0 {
                info += 0.5 * px * (px.log2() - py.log2());
            }
        }
    }
    info.max(0.0)
}
