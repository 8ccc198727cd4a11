//! Self-check suite: cross-validates the closed-form channel description
//! against the dense-matrix constructions and asserts the structural
//! properties (dominance, decay bound, symmetry, commuting case) on a
//! deterministic grid plus optional seeded random points.

use std::f64::consts::FRAC_PI_4;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    bruteforce_information_capped, optimal_information, single_particle_information,
    sum_over_strings_oracle_capped, upper_bound,
};
use crate::error::Result;
use crate::parity::{
    extract_blocks, parity_matrices_bruteforce_capped, subchannel_parameters, ParityEnsemble,
    DEFAULT_BRUTEFORCE_CAP,
};
use crate::signals::SignalPair;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub worst_deviation: f64,
    /// Empty on success; names the failing `(n, α, r)` point otherwise.
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest n for the dense-matrix checks.
    pub max_n: usize,
    /// Number of extra random `(α, r)` points per check.
    pub extra_points: usize,
    pub seed: u64,
    /// Brute-force cap; `max_n` must not exceed it.
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 8,
            extra_points: 4,
            seed: 7,
            cap: DEFAULT_BRUTEFORCE_CAP,
        }
    }
}

const BASE_ALPHAS: [f64; 5] = [0.0, 0.05, std::f64::consts::FRAC_PI_8, 0.5, FRAC_PI_4];

fn grid_points(opts: &VerifyOptions) -> Vec<SignalPair> {
    let mut pts = Vec::new();
    for alpha in BASE_ALPHAS {
        let sc = alpha.sin() * alpha.cos();
        for r in [0.0, 0.05, sc / 2.0] {
            if let Ok(sig) = SignalPair::new(alpha, r) {
                if !pts.iter().any(|p: &SignalPair| {
                    p.alpha() == sig.alpha() && p.r() == sig.r()
                }) {
                    pts.push(sig);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.extra_points {
        let alpha: f64 = rng.gen_range(0.01..FRAC_PI_4);
        let r = rng.gen_range(0.0..0.9 * alpha.sin() * alpha.cos());
        pts.push(SignalPair::new(alpha, r).expect("sampled point satisfies invariants"));
    }
    pts
}

/// Runs every check; the caller decides what to do with failures.
pub fn run(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let points = grid_points(opts);
    Ok(vec![
        check_oracle_equivalence(opts, &points)?,
        check_sum_over_strings(opts, &points)?,
        check_block_extraction(opts, &points)?,
        check_k_symmetry(&points),
        check_dominance(&points)?,
        check_bound()?,
        check_commuting_case()?,
    ])
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

fn finish(name: &'static str, worst: f64, tol: f64, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: detail.is_empty() && worst <= tol,
        worst_deviation: worst,
        detail,
    }
}

fn check_oracle_equivalence(opts: &VerifyOptions, points: &[SignalPair]) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for sig in points {
        for n in 1..=opts.max_n.min(opts.cap) {
            let cf = optimal_information(sig, n)?;
            let bf = bruteforce_information_capped(sig, n, opts.cap)?;
            let dev = (cf - bf).abs();
            worst = worst.max(dev);
            if dev > 1e-10 && detail.is_empty() {
                detail = format!(
                    "closed form vs Bell-basis oracle: n={n} alpha={} r={} dev={dev:.3e}",
                    sig.alpha(),
                    sig.r()
                );
            }
        }
    }
    Ok(finish("oracle equivalence", worst, 1e-10, detail))
}

fn check_sum_over_strings(opts: &VerifyOptions, points: &[SignalPair]) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for sig in points {
        for n in 1..=opts.max_n.min(opts.cap) {
            let (a0, a1) = sum_over_strings_oracle_capped(sig, n, opts.cap)?;
            let (b0, b1) = parity_matrices_bruteforce_capped(sig, n, opts.cap)?;
            let dev = a0.max_abs_diff(&b0).max(a1.max_abs_diff(&b1));
            worst = worst.max(dev);
            if dev > 1e-12 && detail.is_empty() {
                detail = format!(
                    "string sum vs tensor power: n={n} alpha={} r={} dev={dev:.3e}",
                    sig.alpha(),
                    sig.r()
                );
            }
        }
    }
    Ok(finish("sum-over-strings equivalence", worst, 1e-12, detail))
}

fn check_block_extraction(opts: &VerifyOptions, points: &[SignalPair]) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for sig in points {
        for n in 1..=opts.max_n.min(opts.cap) {
            let (rho0, rho1) = parity_matrices_bruteforce_capped(sig, n, opts.cap)?;
            let blocks = extract_blocks(&rho0, &rho1)?;
            let ens = ParityEnsemble::closed_form(*sig, n)?;
            for b in &blocks {
                let ch = &ens.channels()[b.k];
                let q = b.trace0();
                let mut dev = (q - ch.q()).abs();
                if q > 1e-300 {
                    // block off-diagonal over trace is the channel bias
                    dev = dev.max((b.block0[1] / q - ch.bias()).abs());
                }
                worst = worst.max(dev);
                if dev > 1e-12 && detail.is_empty() {
                    detail = format!(
                        "extracted block vs closed form: n={n} k={} alpha={} r={} dev={dev:.3e}",
                        b.k,
                        sig.alpha(),
                        sig.r()
                    );
                }
            }
        }
    }
    Ok(finish("block extraction match", worst, 1e-12, detail))
}

fn check_k_symmetry(points: &[SignalPair]) -> CheckResult {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for sig in points {
        for n in 1..=10 {
            for k in 0..=n {
                let (lq, bias) = subchannel_parameters(sig, n, k);
                let (lq_m, bias_m) = subchannel_parameters(sig, n, n - k);
                let dq = if lq == lq_m { 0.0 } else { (lq - lq_m).abs() };
                let dev = dq.max((bias - bias_m).abs());
                worst = worst.max(dev);
                if dev > 0.0 && detail.is_empty() {
                    detail = format!(
                        "k reflection: n={n} k={k} alpha={} r={} dev={dev:.3e}",
                        sig.alpha(),
                        sig.r()
                    );
                }
            }
        }
    }
    finish("k <-> n-k symmetry", worst, 0.0, detail)
}

fn check_dominance(points: &[SignalPair]) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for sig in points {
        for n in 1..=20 {
            let i_m = optimal_information(sig, n)?;
            let i_s = single_particle_information(sig, n)?;
            let dev = (i_s - i_m).max(0.0);
            worst = worst.max(dev);
            if dev > 1e-13 && detail.is_empty() {
                detail = format!(
                    "single-particle exceeds joint: n={n} alpha={} r={}",
                    sig.alpha(),
                    sig.r()
                );
            }
        }
    }
    Ok(finish("joint dominates single-particle", worst, 1e-13, detail))
}

fn check_bound() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for alpha in [0.01, 0.02, 0.05] {
        let sig = SignalPair::pure_states(alpha)?;
        for n in 2..=40 {
            let i_m = optimal_information(&sig, n)?;
            let dev = (i_m - upper_bound(alpha, n)).max(0.0);
            worst = worst.max(dev);
            if dev > 0.0 && detail.is_empty() {
                detail = format!("decay bound violated: n={n} alpha={alpha}");
            }
        }
    }
    Ok(finish("small-angle decay bound", worst, 0.0, detail))
}

fn check_commuting_case() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for r in [0.05, 0.1, 0.25] {
        let sig = SignalPair::new(FRAC_PI_4, r)?;
        for n in 1..=20 {
            let dev =
                (optimal_information(&sig, n)? - single_particle_information(&sig, n)?).abs();
            worst = worst.max(dev);
            if dev > 1e-12 && detail.is_empty() {
                detail = format!("commuting case mismatch: n={n} r={r}");
            }
        }
    }
    Ok(finish("commuting mixed case", worst, 1e-12, detail))
}
