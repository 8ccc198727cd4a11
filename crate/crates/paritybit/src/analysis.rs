//! The headline quantities: optimal joint information I_M, optimal
//! single-particle information I_S, unambiguous (deterministic) information
//! I_D, their small-angle asymptotics, and the independent oracles used to
//! cross-check the closed forms.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::infotheory::{bsc_information_from_bias, channel_mutual_information, ChannelTable};
use crate::logdomain::{log_binomial, scale_log};
use crate::matvec::DensityMatrix;
use crate::parity::{
    generalized_bell_basis, parity_matrices_bruteforce_capped, ParityEnsemble,
    DEFAULT_BRUTEFORCE_CAP,
};
use crate::signals::SignalPair;

/// Everything we can say about one `(n, α, r)` point. Optional fields are
/// absent where the quantity is undefined (mixed signals have no unambiguous
/// measurement) or degenerate (`ratio_check` needs `i_s > 0`).
#[derive(Debug, Clone, Copy)]
pub struct InfoReport {
    pub n: usize,
    pub alpha: f64,
    pub r: f64,
    pub i_m: f64,
    pub i_s: f64,
    pub i_d: Option<f64>,
    pub i_d_single: Option<f64>,
    pub i_m_asymptotic: Option<f64>,
    pub i_m_upper_bound: f64,
    /// `i_m / i_s²`; the two decay at related exponential rates.
    pub ratio_check: Option<f64>,
}

pub fn report(signal: &SignalPair, n: usize) -> Result<InfoReport> {
    let i_m = optimal_information(signal, n)?;
    let i_s = single_particle_information(signal, n)?;
    let (i_d, i_d_single, i_m_asymptotic) = if signal.is_pure() {
        (
            Some(deterministic_information(signal, n)?),
            Some(deterministic_single_particle_information(signal, n)?),
            Some(asymptotic_information(signal, n)?.i_m_leading),
        )
    } else {
        (None, None, None)
    };
    Ok(InfoReport {
        n,
        alpha: signal.alpha(),
        r: signal.r(),
        i_m,
        i_s,
        i_d,
        i_d_single,
        i_m_asymptotic,
        i_m_upper_bound: upper_bound(signal.alpha(), n),
        ratio_check: (i_s > 0.0).then(|| i_m / (i_s * i_s)),
    })
}

/// Optimal joint (collective) information about the parity,
/// `I_M = Σ_k multiplicity_k q_k I₂(p_k)`.
pub fn optimal_information(signal: &SignalPair, n: usize) -> Result<f64> {
    let ens = ParityEnsemble::closed_form(*signal, n)?;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for ch in ens.channels() {
        let term = ch.weight() * bsc_information_from_bias(ch.bias());
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum.min(1.0))
}

/// Optimal single-particle information: measure each qubit separately
/// (each a BSC with bias `sc − r`) and XOR; the parity error probability is
/// `1/2 − (2(sc−r))ⁿ/2`.
pub fn single_particle_information(signal: &SignalPair, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let two_a = 2.0 * signal.coherence();
    let bias = if two_a <= 0.0 {
        0.0
    } else {
        0.5 * scale_log(n as f64, two_a.ln()).exp()
    };
    Ok(bsc_information_from_bias(bias))
}

/// Information from the optimal unambiguous (conclusive-or-erased)
/// measurement, `I_D = Σ_k multiplicity_k q_k (1 − p?_k)`. Pure signals only:
/// unambiguous discrimination needs pure in-block states.
pub fn deterministic_information(signal: &SignalPair, n: usize) -> Result<f64> {
    if !signal.is_pure() {
        return Err(Error::Unsupported(
            "unambiguous parity measurement is defined for pure signals only (r = 0)".into(),
        ));
    }
    let ens = ParityEnsemble::closed_form(*signal, n)?;
    let mut sum = 0.0;
    for ch in ens.channels() {
        let conclusive = ch
            .conclusive()
            .expect("pure ensemble carries conclusive probabilities");
        sum += ch.weight() * conclusive;
    }
    Ok(sum.min(1.0))
}

/// Unambiguous information from per-qubit measurements: `(1 − cos 2α)ⁿ`.
pub fn deterministic_single_particle_information(signal: &SignalPair, n: usize) -> Result<f64> {
    if !signal.is_pure() {
        return Err(Error::Unsupported(
            "unambiguous parity measurement is defined for pure signals only (r = 0)".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let base = 1.0 - signal.cos_2a();
    if base <= 0.0 {
        return Ok(0.0);
    }
    Ok(scale_log(n as f64, base.ln()).exp().min(1.0))
}

/// Small-angle leading terms, log domain throughout.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticInfo {
    /// `C(n, n/2) αⁿ` (even n) or `C(n, (n−1)/2) (2/ln2) α^{n+1}` (odd n).
    pub i_m_leading: f64,
    /// `(2α)^{2n} / (2 ln 2)`.
    pub i_s_leading: f64,
    /// `(2α)ⁿ / √(πn/2)`.
    pub upper_bound: f64,
    /// Set when α ≥ 0.1, where the leading terms degrade; values are still
    /// returned.
    pub large_angle: bool,
}

pub fn asymptotic_information(signal: &SignalPair, n: usize) -> Result<AsymptoticInfo> {
    if !signal.is_pure() {
        return Err(Error::Unsupported(
            "small-angle asymptotics are stated for pure signals only".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let alpha = signal.alpha();
    let la = if alpha > 0.0 {
        alpha.ln()
    } else {
        f64::NEG_INFINITY
    };
    let n64 = n as u64;
    let i_m_leading = if n.is_multiple_of(2) {
        (log_binomial(n64, n64 / 2) + scale_log(n as f64, la)).exp()
    } else {
        (log_binomial(n64, (n64 - 1) / 2) + (2.0 / LN_2).ln() + scale_log((n + 1) as f64, la))
            .exp()
    };
    let i_s_leading = (scale_log(2.0 * n as f64, la + LN_2) - (2.0 * LN_2).ln()).exp();
    Ok(AsymptoticInfo {
        i_m_leading,
        i_s_leading,
        upper_bound: upper_bound(alpha, n),
        large_angle: alpha >= 0.1,
    })
}

/// `(2α)ⁿ / √(πn/2)`.
pub fn upper_bound(alpha: f64, n: usize) -> f64 {
    let la = if alpha > 0.0 {
        (2.0 * alpha).ln()
    } else {
        f64::NEG_INFINITY
    };
    (scale_log(n as f64, la) - 0.5 * (PI * n as f64 / 2.0).ln()).exp()
}

/// Independent route to `I_M`: build the dense parity matrices, measure both
/// in the generalized Bell basis, and feed the outcome statistics through
/// the generic channel formula. Must agree with [`optimal_information`]
/// within 1e-10.
pub fn bruteforce_information(signal: &SignalPair, n: usize) -> Result<f64> {
    bruteforce_information_capped(signal, n, DEFAULT_BRUTEFORCE_CAP)
}

pub fn bruteforce_information_capped(signal: &SignalPair, n: usize, cap: usize) -> Result<f64> {
    let (rho0, rho1) = parity_matrices_bruteforce_capped(signal, n, cap)?;
    let basis = generalized_bell_basis(n);
    let table = ChannelTable::new(
        rho0.projective_probabilities(&basis)?,
        rho1.projective_probabilities(&basis)?,
    )?;
    Ok(channel_mutual_information(&table))
}

/// Scans projective measurement angles on one normalized block pair and
/// returns `(best_angle, best_information)`. Evidence that the x-basis
/// (θ = π/4) is optimal: the grid maximum never beats `I₂(p_k)`.
pub fn block_measurement_scan(
    signal: &SignalPair,
    n: usize,
    k: usize,
    steps: usize,
) -> Result<(f64, f64)> {
    if n == 0 || k > n / 2 {
        return Err(Error::Parameter(format!(
            "k = {k} is not a block class for n = {n} (need k <= n/2)"
        )));
    }
    if steps < 8 {
        return Err(Error::Parameter("need at least 8 scan steps".into()));
    }
    let (s, c) = (signal.sin(), signal.cos());
    let big_a = c.powi(2 * (n - k) as i32) * s.powi(2 * k as i32);
    let big_b = c.powi(2 * k as i32) * s.powi(2 * (n - k) as i32);
    let q = big_a + big_b;
    if q <= 0.0 {
        return Err(Error::Parameter(format!(
            "block class k = {k} has zero selection probability at alpha = {}",
            signal.alpha()
        )));
    }
    let a = big_a / q;
    let b = big_b / q;
    let w = signal.coherence().powi(n as i32) / q;

    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..steps {
        let theta = PI * i as f64 / steps as f64;
        let (st, ct) = theta.sin_cos();
        let base = a * ct * ct + b * st * st;
        let swing = w * (2.0 * theta).sin();
        let p0 = (base + swing).clamp(0.0, 1.0);
        let p1 = (base - swing).clamp(0.0, 1.0);
        let table = ChannelTable::new(vec![p0, 1.0 - p0], vec![p1, 1.0 - p1])?;
        let info = channel_mutual_information(&table);
        if info > best.1 {
            best = (theta, info);
        }
    }
    Ok(best)
}

/// Max entrywise deviation between the string-sum and tensor-power
/// constructions of the parity matrices.
pub fn parity_matrices_bruteforce_sum_check(signal: &SignalPair, n: usize) -> Result<f64> {
    let (a0, a1) = sum_over_strings_oracle(signal, n)?;
    let (b0, b1) = parity_matrices_bruteforce_capped(signal, n, DEFAULT_BRUTEFORCE_CAP)?;
    Ok(a0.max_abs_diff(&b0).max(a1.max_abs_diff(&b1)))
}

/// Literal definition of the parity matrices: average `ρ_x` over all `2ⁿ`
/// strings of each parity. Must match the tensor-power construction within
/// 1e-12 entrywise.
pub fn sum_over_strings_oracle(
    signal: &SignalPair,
    n: usize,
) -> Result<(DensityMatrix, DensityMatrix)> {
    sum_over_strings_oracle_capped(signal, n, DEFAULT_BRUTEFORCE_CAP)
}

pub fn sum_over_strings_oracle_capped(
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
    let (e0, e1) = signal.single_bit_matrices();
    let bits: [[f64; 4]; 2] = [
        [e0.get(0, 0), e0.get(0, 1), e0.get(1, 0), e0.get(1, 1)],
        [e1.get(0, 0), e1.get(0, 1), e1.get(1, 0), e1.get(1, 1)],
    ];
    let dim = 1usize << n;
    let half = dim / 2;
    let mut even = vec![0.0; dim * dim];
    let mut odd = vec![0.0; dim * dim];
    let mut cur = vec![0.0; half * half];
    let mut next = vec![0.0; half * half];
    for x in 0..dim {
        // rho_x as an iterated Kronecker product over the bits of x; the
        // last factor is fused into the parity accumulation below
        if n == 1 {
            let target = if x == 0 { &mut even } else { &mut odd };
            for (acc, &v) in target.iter_mut().zip(&bits[x]) {
                *acc += v;
            }
            continue;
        }
        cur[..4].copy_from_slice(&bits[x & 1]);
        let mut d = 2usize;
        for bit in 1..n - 1 {
            let m = &bits[(x >> bit) & 1];
            for i in 0..d {
                let row = &cur[i * d..(i + 1) * d];
                let (top, bot) = next[2 * i * 2 * d..(2 * i + 2) * 2 * d].split_at_mut(2 * d);
                for ((t, b), &v) in top
                    .chunks_exact_mut(2)
                    .zip(bot.chunks_exact_mut(2))
                    .zip(row)
                {
                    t[0] = v * m[0];
                    t[1] = v * m[1];
                    b[0] = v * m[2];
                    b[1] = v * m[3];
                }
            }
            std::mem::swap(&mut cur, &mut next);
            d *= 2;
        }
        let m = &bits[(x >> (n - 1)) & 1];
        let target = if x.count_ones() % 2 == 0 {
            &mut even
        } else {
            &mut odd
        };
        for i in 0..d {
            let row = &cur[i * d..(i + 1) * d];
            let (top, bot) = target[2 * i * dim..(2 * i + 2) * dim].split_at_mut(dim);
            for ((t, b), &v) in top
                .chunks_exact_mut(2)
                .zip(bot.chunks_exact_mut(2))
                .zip(row)
            {
                t[0] += v * m[0];
                t[1] += v * m[1];
                b[0] += v * m[2];
                b[1] += v * m[3];
            }
        }
    }
    let norm = 0.5f64.powi(n as i32 - 1);
    let rho0 = DensityMatrix::from_fn(dim, |i, j| even[i * dim + j] * norm);
    let rho1 = DensityMatrix::from_fn(dim, |i, j| odd[i * dim + j] * norm);
    Ok((rho0, rho1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infotheory::bsc_information;
    use crate::parity::{extract_blocks, parity_matrices_bruteforce};
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    fn pure(alpha: f64) -> SignalPair {
        SignalPair::pure_states(alpha).unwrap()
    }

    #[test]
    fn orthogonal_states_give_full_information() {
        for n in 1..=12 {
            let i_m = optimal_information(&pure(FRAC_PI_4), n).unwrap();
            assert!((i_m - 1.0).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn two_bit_closed_form() {
        for alpha in [0.1, FRAC_PI_8, 0.6, FRAC_PI_4] {
            let sig = pure(alpha);
            let cc = sig.cos_2a();
            let ss = sig.sin_2a();
            let expect = 0.5 * (1.0 + cc * cc) * bsc_information(cc * cc / (1.0 + cc * cc)).unwrap()
                + ss * ss / 2.0;
            let got = optimal_information(&sig, 2).unwrap();
            assert!((got - expect).abs() < 1e-13, "alpha={alpha}");
        }
    }

    #[test]
    fn single_particle_base_case() {
        let sig = SignalPair::new(0.4, 0.07).unwrap();
        let i1 = single_particle_information(&sig, 1).unwrap();
        assert!((i1 - bsc_information(sig.single_particle_error()).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn single_particle_matches_odd_error_convolution() {
        // exact convolution: P(odd # errors among n BSC(r') bits)
        let sig = pure(0.15);
        let rp = sig.single_particle_error();
        let n = 4;
        let mut p_odd = 0.0;
        for k in (1..=n).step_by(2) {
            let mut binom = 1.0;
            for i in 0..k {
                binom *= (n - i) as f64 / (i + 1) as f64;
            }
            p_odd += binom * rp.powi(k as i32) * (1.0 - rp).powi((n - k) as i32);
        }
        let expect = bsc_information(p_odd).unwrap();
        let got = single_particle_information(&sig, n).unwrap();
        assert!((got - expect).abs() < 1e-13);
    }

    #[test]
    fn deterministic_two_bits_is_one_minus_overlap() {
        for alpha in [0.1, FRAC_PI_8, 0.6, FRAC_PI_4] {
            let sig = pure(alpha);
            let got = deterministic_information(&sig, 2).unwrap();
            assert!((got - (1.0 - sig.cos_2a())).abs() < 1e-14, "alpha={alpha}");
        }
    }

    #[test]
    fn deterministic_matches_block_level_oracle() {
        let sig = pure(0.25);
        let (rho0, rho1) = parity_matrices_bruteforce(&sig, 3).unwrap();
        let blocks = extract_blocks(&rho0, &rho1).unwrap();
        let mut expect = 0.0;
        for b in &blocks {
            // per-block conclusive probability 1 - (A-B)/(A+B) with the block
            // read as q/2 [[.., D],[D, ..]] pairs
            let a = b.block0[0];
            let bb = b.block0[3];
            let (hi, lo) = if a >= bb { (a, bb) } else { (bb, a) };
            expect += (a + bb) * (1.0 - (hi - lo) / (hi + lo));
        }
        let got = deterministic_information(&sig, 3).unwrap();
        assert!((got - expect).abs() < 1e-13);
    }

    #[test]
    fn deterministic_requires_pure_signals() {
        let sig = SignalPair::new(0.3, 0.05).unwrap();
        assert!(matches!(
            deterministic_information(&sig, 2),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            deterministic_single_particle_information(&sig, 2),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn deterministic_single_particle_examples() {
        assert!((deterministic_single_particle_information(&pure(FRAC_PI_4), 7).unwrap() - 1.0)
            .abs()
            < 1e-14);
        assert_eq!(
            deterministic_single_particle_information(&pure(0.0), 3).unwrap(),
            0.0
        );
        let got = deterministic_single_particle_information(&pure(FRAC_PI_8), 2).unwrap();
        let expect = (1.0 - FRAC_PI_4.cos()).powi(2);
        assert!((got - expect).abs() < 1e-15);
    }

    #[test]
    fn asymptotic_leading_terms() {
        let a = asymptotic_information(&pure(0.01), 2).unwrap();
        assert!((a.i_m_leading - 2e-4).abs() < 1e-18);
        assert!(!a.large_angle);
        let a3 = asymptotic_information(&pure(0.01), 3).unwrap();
        assert!((a3.i_m_leading - 3.0 * (2.0 / LN_2) * 1e-8).abs() < 1e-20);
        let a6 = asymptotic_information(&pure(0.01), 6).unwrap();
        let exact = optimal_information(&pure(0.01), 6).unwrap();
        let ratio = exact / a6.i_m_leading;
        assert!((0.9..=1.1).contains(&ratio), "ratio={ratio}");
        assert!(asymptotic_information(&pure(0.3), 4).unwrap().large_angle);
    }

    #[test]
    fn asymptotic_single_particle_leading_term() {
        let sig = pure(0.01);
        let a = asymptotic_information(&sig, 5).unwrap();
        let exact = single_particle_information(&sig, 5).unwrap();
        assert!((exact / a.i_s_leading - 1.0).abs() < 0.01);
    }

    #[test]
    fn bruteforce_base_cases() {
        for alpha in [0.1, FRAC_PI_8, 0.5] {
            let sig = pure(alpha);
            let got = bruteforce_information(&sig, 1).unwrap();
            let expect = bsc_information((1.0 - sig.sin_2a()) / 2.0).unwrap();
            assert!((got - expect).abs() < 1e-13);
        }
        for n in 1..=5 {
            assert!(bruteforce_information(&pure(0.0), n).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn bruteforce_matches_closed_form_n2() {
        let sig = pure(FRAC_PI_8);
        let bf = bruteforce_information(&sig, 2).unwrap();
        let cf = optimal_information(&sig, 2).unwrap();
        assert!((bf - cf).abs() < 1e-12);
    }

    #[test]
    fn bruteforce_matches_closed_form_n5_noisy() {
        let sig = SignalPair::new(0.2, 0.03).unwrap();
        let bf = bruteforce_information(&sig, 5).unwrap();
        let cf = optimal_information(&sig, 5).unwrap();
        assert!((bf - cf).abs() < 1e-10);
    }

    #[test]
    fn scan_finds_x_basis_optimal() {
        let sig = pure(FRAC_PI_8);
        let ens = ParityEnsemble::closed_form(sig, 2).unwrap();
        let (theta, best) = block_measurement_scan(&sig, 2, 0, 1024).unwrap();
        let expect = bsc_information_from_bias(ens.channels()[0].bias());
        assert!(best <= expect + 1e-9);
        assert!((best - expect).abs() < 1e-12);
        assert!((theta - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn scan_zero_error_block() {
        let sig = pure(0.4);
        let (theta, best) = block_measurement_scan(&sig, 2, 1, 64).unwrap();
        assert!((best - 1.0).abs() < 1e-12);
        assert!((theta - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn scan_rejects_bad_class() {
        let sig = pure(0.3);
        assert!(block_measurement_scan(&sig, 4, 3, 64).is_err());
        assert!(block_measurement_scan(&sig, 4, 1, 4).is_err());
    }

    #[test]
    fn string_sum_base_case_is_signal_pair() {
        let sig = SignalPair::new(0.35, 0.04).unwrap();
        let (rho0, rho1) = sum_over_strings_oracle(&sig, 1).unwrap();
        let (e0, e1) = sig.single_bit_matrices();
        assert!(rho0.max_abs_diff(&e0) < 1e-16);
        assert!(rho1.max_abs_diff(&e1) < 1e-16);
    }

    #[test]
    fn string_sum_two_bits_matches_explicit_matrix() {
        let sig = pure(FRAC_PI_8);
        let (s, c) = (sig.sin(), sig.cos());
        let cs2 = c * c * s * s;
        let (rho0, _) = sum_over_strings_oracle(&sig, 2).unwrap();
        assert!((rho0.get(0, 0) - c.powi(4)).abs() < 1e-15);
        assert!((rho0.get(0, 3) - cs2).abs() < 1e-15);
        assert!((rho0.get(1, 1) - cs2).abs() < 1e-15);
        assert!((rho0.get(3, 3) - s.powi(4)).abs() < 1e-15);
    }

    #[test]
    fn string_sum_matches_tensor_power_construction() {
        let sig = SignalPair::new(0.3, 0.02).unwrap();
        let (a0, a1) = sum_over_strings_oracle(&sig, 6).unwrap();
        let (b0, b1) = parity_matrices_bruteforce(&sig, 6).unwrap();
        assert!(a0.max_abs_diff(&b0) < 1e-12);
        assert!(a1.max_abs_diff(&b1) < 1e-12);
    }

    #[test]
    fn dominance_and_monotone_decay() {
        let sig = pure(0.3);
        let mut prev = f64::INFINITY;
        for n in 1..=10 {
            let i_m = optimal_information(&sig, n).unwrap();
            let i_s = single_particle_information(&sig, n).unwrap();
            assert!(i_s <= i_m + 1e-15, "n={n}");
            if n >= 2 {
                assert!(i_s < i_m, "strict dominance at n={n}");
            }
            assert!(i_m < prev, "monotone decay at n={n}");
            prev = i_m;
        }
    }

    #[test]
    fn exponential_decay_exponent_relation() {
        // ln I_S / ln I_M tends to 2: single-particle information decays at
        // twice the exponential rate of the joint measurement.
        for alpha in [0.01, 0.02, 0.05] {
            let sig = pure(alpha);
            for n in 4..=12 {
                let i_m = optimal_information(&sig, n).unwrap();
                let i_s = single_particle_information(&sig, n).unwrap();
                let expo = i_s.ln() / i_m.ln();
                assert!((1.3..=2.5).contains(&expo), "alpha={alpha} n={n} expo={expo}");
            }
        }
    }

    #[test]
    fn bound_holds_small_angle() {
        for alpha in [0.01, 0.03, 0.05] {
            let sig = pure(alpha);
            for n in 2..=40 {
                let i_m = optimal_information(&sig, n).unwrap();
                assert!(i_m <= upper_bound(alpha, n), "alpha={alpha} n={n}");
            }
        }
    }

    #[test]
    fn commuting_case_collective_gains_nothing() {
        for r in [0.05, 0.1, 0.25] {
            let sig = SignalPair::new(FRAC_PI_4, r).unwrap();
            for n in 1..=20 {
                let i_m = optimal_information(&sig, n).unwrap();
                let i_s = single_particle_information(&sig, n).unwrap();
                let expect = bsc_information_from_bias(0.5 * (1.0 - 2.0 * r).powi(n as i32));
                assert!((i_m - i_s).abs() < 1e-12, "r={r} n={n}");
                assert!((i_m - expect).abs() < 1e-12, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn report_field_presence() {
        let rep = report(&pure(0.2), 3).unwrap();
        assert!(rep.i_d.is_some() && rep.i_m_asymptotic.is_some());
        assert!(rep.ratio_check.is_some());
        let noisy = report(&SignalPair::new(0.2, 0.05).unwrap(), 3).unwrap();
        assert!(noisy.i_d.is_none() && noisy.i_m_asymptotic.is_none());
        let degenerate = report(&pure(0.0), 2).unwrap();
        assert_eq!(degenerate.i_m, 0.0);
        assert!(degenerate.ratio_check.is_none());
    }
}
