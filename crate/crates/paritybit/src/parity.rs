//! Parity-bit density matrices, two ways.
//!
//! The brute-force path builds the full `2^n`-dimensional matrices
//! `ρ_p = ρ^{⊗n} ± Δ^{⊗n}`, which are X-shaped in the product basis. The
//! closed-form path skips the Hilbert space entirely: after pairing each
//! basis vector with its bitwise complement the matrices fall apart into
//! `2^{n-1}` two-by-two blocks, and all blocks with the same weight class
//! `k = min(|x|, n−|x|)` are identical. An ensemble is the list of those
//! classes with multiplicities, carried in the log domain so that `n` in
//! the millions and angles near zero stay representable.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::logdomain::{log_sum_exp, scale_log};
use crate::matvec::{BasisPermutation, DensityMatrix};
use crate::signals::SignalPair;

/// Default cap on `n` for the dense brute-force constructions.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 12;

/// One class of identical 2x2 subchannels.
#[derive(Debug, Clone, Copy)]
pub struct BlockChannel {
    k: usize,
    log_multiplicity: f64,
    log_q: f64,
    log_weight: f64,
    bias: f64,
    conclusive: Option<f64>,
}

impl BlockChannel {
    /// Weight class `k`, `0 <= k <= n/2`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of identical blocks in the class: `C(n,k)`, halved at
    /// `k = n/2` for even `n`.
    pub fn multiplicity(&self) -> f64 {
        self.log_multiplicity.exp()
    }

    pub fn log_multiplicity(&self) -> f64 {
        self.log_multiplicity
    }

    /// Selection probability of a single block,
    /// `q = c^{2(n-k)} s^{2k} + c^{2k} s^{2(n-k)}`.
    pub fn q(&self) -> f64 {
        self.log_q.exp()
    }

    pub fn log_q(&self) -> f64 {
        self.log_q
    }

    /// `ln(multiplicity · q)`, accumulated jointly so the class weights sum
    /// to 1 more tightly than `log_multiplicity + log_q` would.
    pub fn log_weight(&self) -> f64 {
        self.log_weight
    }

    /// `multiplicity · q`, the class's total selection probability.
    pub fn weight(&self) -> f64 {
        self.log_weight.exp()
    }

    /// BSC error probability of the optimal in-block measurement,
    /// `p = 1/2 − (cs−r)^n / q`.
    pub fn p_err(&self) -> f64 {
        0.5 - self.bias
    }

    /// `1/2 − p_err` at full precision; `p_err` itself rounds the bias away
    /// once it drops below ~1e-17.
    pub fn bias(&self) -> f64 {
        self.bias
    }

    /// Inconclusive probability of the unambiguous in-block measurement;
    /// defined for pure signals only.
    pub fn p_inconclusive(&self) -> Option<f64> {
        self.conclusive.map(|c| 1.0 - c)
    }

    /// `1 − p_inconclusive` at full precision.
    pub fn conclusive(&self) -> Option<f64> {
        self.conclusive
    }
}

/// The closed-form description of the parity-bit channel: all block classes
/// for `k = 0 … ⌊n/2⌋`.
#[derive(Debug, Clone)]
pub struct ParityEnsemble {
    n: usize,
    signal: SignalPair,
    channels: Vec<BlockChannel>,
}

impl ParityEnsemble {
    /// Builds the ensemble directly from `(α, r)` and `n`. No upper cap:
    /// everything is log-domain.
    pub fn closed_form(signal: SignalPair, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("n must be at least 1".into()));
        }
        let (s, c) = (signal.sin(), signal.cos());
        let (ls, lc) = (s.ln(), c.ln());
        let l_off = if signal.coherence() <= 0.0 {
            f64::NEG_INFINITY
        } else {
            signal.coherence().ln()
        };
        let pure = signal.is_pure();

        let classes = n / 2 + 1;
        let mut channels = Vec::with_capacity(classes);

        // ln C(n,k), and jointly ln(C(n,k) c^{2(n-k)} s^{2k}), by compensated
        // recurrence over k; the joint form avoids the large cancellation
        // between the binomial and the power term.
        let mut log_mult = 0.0;
        let mut log_mult_comp = 0.0;
        let mut joint = scale_log(2.0 * n as f64, lc);
        let mut joint_comp = 0.0;
        let step = 2.0 * ls - 2.0 * lc;

        for k in 0..classes {
            let halved = 2 * k == n;
            let la = scale_log(2.0 * (n - k) as f64, lc) + scale_log(2.0 * k as f64, ls);
            let d = scale_log(2.0 * (n - 2 * k) as f64, ls - lc); // lb − la, <= 0
            let lq_rel = d.exp().ln_1p();
            let log_q = la + lq_rel;
            let mut log_weight = joint + lq_rel;
            let mut log_multiplicity = log_mult;
            if halved {
                log_weight -= LN_2;
                log_multiplicity -= LN_2;
            }

            let (bias, conclusive) = if log_q == f64::NEG_INFINITY {
                // q = 0 class (alpha = 0): contributes nothing by convention
                (0.0, pure.then_some(0.0))
            } else {
                let bias = (n as f64 * l_off - log_q).exp().min(0.5);
                let conclusive = pure.then(|| {
                    let t = d.exp();
                    2.0 * t / (1.0 + t)
                });
                (bias, conclusive)
            };

            channels.push(BlockChannel {
                k,
                log_multiplicity,
                log_q,
                log_weight,
                bias,
                conclusive,
            });

            if k + 1 < classes {
                let inc = ((n - k) as f64).ln() - ((k + 1) as f64).ln();
                kahan_add(&mut log_mult, &mut log_mult_comp, inc);
                kahan_add(&mut joint, &mut joint_comp, inc + step);
            }
        }

        Ok(Self {
            n,
            signal,
            channels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signal(&self) -> &SignalPair {
        &self.signal
    }

    pub fn channels(&self) -> &[BlockChannel] {
        &self.channels
    }

    /// `Σ multiplicity · q` over all classes; equals 1 up to rounding.
    pub fn total_weight(&self) -> f64 {
        let mut sum = 0.0;
        let mut comp = 0.0;
        for ch in &self.channels {
            kahan_add(&mut sum, &mut comp, ch.weight());
        }
        sum
    }
}

fn kahan_add(sum: &mut f64, comp: &mut f64, x: f64) {
    if !sum.is_finite() || !x.is_finite() {
        *sum += x;
        *comp = 0.0;
        return;
    }
    let y = x - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// `(log_q, bias)` of a single subchannel for any `0 <= k <= n`, without the
/// class grouping. The grouped ensemble uses `k <= n/2` only; this expanded
/// form exists so the `k ↔ n−k` symmetry can be checked directly.
pub fn subchannel_parameters(signal: &SignalPair, n: usize, k: usize) -> (f64, f64) {
    assert!(k <= n);
    let (ls, lc) = (signal.sin().ln(), signal.cos().ln());
    let la = scale_log(2.0 * (n - k) as f64, lc) + scale_log(2.0 * k as f64, ls);
    let lb = scale_log(2.0 * k as f64, lc) + scale_log(2.0 * (n - k) as f64, ls);
    let log_q = log_sum_exp(la, lb);
    let bias = if log_q == f64::NEG_INFINITY || signal.coherence() <= 0.0 {
        0.0
    } else {
        (n as f64 * signal.coherence().ln() - log_q).exp().min(0.5)
    };
    (log_q, bias)
}

/// Full `2^n`-dimensional parity matrices `ρ_p^{(n)} = ρ^{⊗n} ± Δ^{⊗n}`.
pub fn parity_matrices_bruteforce(
    signal: &SignalPair,
    n: usize,
) -> Result<(DensityMatrix, DensityMatrix)> {
    parity_matrices_bruteforce_capped(signal, n, DEFAULT_BRUTEFORCE_CAP)
}

pub fn parity_matrices_bruteforce_capped(
    signal: &SignalPair,
    n: usize,
    cap: usize,
) -> Result<(DensityMatrix, DensityMatrix)> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::SizeExceeded { dim: n, max: cap });
    }
    let (total1, diff1) = signal.total_and_difference();
    let mut total = total1.clone();
    let mut diff = diff1.clone();
    for _ in 1..n {
        total = total.tensor(&total1)?;
        diff = diff.tensor(&diff1)?;
    }
    let rho0 = total.add_scaled(&diff, 1.0)?;
    let rho1 = total.add_scaled(&diff, -1.0)?;
    Ok((rho0, rho1))
}

/// One 2x2 block pair read off the block-diagonalized parity matrices.
#[derive(Debug, Clone, Copy)]
pub struct ExtractedBlock {
    /// Index `m` of the basis pair `(m, 2^n − 1 − m)` the block lives on.
    pub pair_index: usize,
    /// Weight class `min(popcount(m), n − popcount(m))`.
    pub k: usize,
    /// Row-major 2x2 block of `ρ_0` / `ρ_1`.
    pub block0: [f64; 4],
    pub block1: [f64; 4],
}

impl ExtractedBlock {
    pub fn trace0(&self) -> f64 {
        self.block0[0] + self.block0[3]
    }

    pub fn trace1(&self) -> f64 {
        self.block1[0] + self.block1[3]
    }
}

const X_SHAPE_TOL: f64 = 1e-14;

/// Conjugates both matrices by the complement-pairing permutation, verifies
/// that the result is exactly block-diagonal (off-block entries within
/// 1e-14 of zero), and returns the `2^{n-1}` block pairs.
pub fn extract_blocks(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
) -> Result<Vec<ExtractedBlock>> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch {
            left: rho0.dim(),
            right: rho1.dim(),
        });
    }
    let dim = rho0.dim();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::Structure(format!(
            "dimension {dim} is not a power of two >= 2"
        )));
    }
    let n = dim.trailing_zeros() as usize;
    let perm = BasisPermutation::complement_pairing(n);
    let b0 = rho0.conjugate_by_permutation(&perm)?;
    let b1 = rho1.conjugate_by_permutation(&perm)?;
    for m in [&b0, &b1] {
        for i in 0..dim {
            for j in 0..dim {
                if i / 2 != j / 2 && m.get(i, j).abs() > X_SHAPE_TOL {
                    return Err(Error::Structure(format!(
                        "input is not X-shaped: off-diagonal entry at permuted ({i},{j})"
                    )));
                }
            }
        }
    }
    let blocks = (0..dim / 2)
        .map(|m| {
            let pops = m.count_ones() as usize;
            ExtractedBlock {
                pair_index: m,
                k: pops.min(n - pops),
                block0: [
                    b0.get(2 * m, 2 * m),
                    b0.get(2 * m, 2 * m + 1),
                    b0.get(2 * m + 1, 2 * m),
                    b0.get(2 * m + 1, 2 * m + 1),
                ],
                block1: [
                    b1.get(2 * m, 2 * m),
                    b1.get(2 * m, 2 * m + 1),
                    b1.get(2 * m + 1, 2 * m),
                    b1.get(2 * m + 1, 2 * m + 1),
                ],
            }
        })
        .collect();
    Ok(blocks)
}

/// The entangled basis `(|x⟩ ± |x̄⟩)/√2` over complement pairs — the
/// generalization of the Bell basis that realizes the per-block x-basis
/// measurement on the full space.
pub fn generalized_bell_basis(n: usize) -> Vec<Vec<f64>> {
    assert!(n >= 1);
    let dim = 1usize << n;
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let mut basis = Vec::with_capacity(dim);
    for m in 0..dim / 2 {
        for sign in [inv, -inv] {
            let mut v = vec![0.0; dim];
            v[m] = inv;
            v[dim - 1 - m] = sign;
            basis.push(v);
        }
    }
    basis
}
