//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture` or on failure).

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, LN_2};
use std::time::Instant;

use rayon::prelude::*;

use paritybit::analysis::{
    asymptotic_information, block_measurement_scan, bruteforce_information,
    deterministic_information, optimal_information, parity_matrices_bruteforce_sum_check,
    single_particle_information, upper_bound,
};
use paritybit::infotheory::bsc_information_from_bias;
use paritybit::parity::ParityEnsemble;
use paritybit::signals::SignalPair;

fn pure(alpha: f64) -> SignalPair {
    SignalPair::pure_states(alpha).unwrap()
}

struct Criterion {
    number: usize,
    name: &'static str,
    budget_secs: f64,
    started: Instant,
}

impl Criterion {
    fn start(number: usize, name: &'static str, budget_secs: f64) -> Self {
        Self {
            number,
            name,
            budget_secs,
            started: Instant::now(),
        }
    }

    fn finish(self, failure: Option<String>) {
        let elapsed = self.started.elapsed().as_secs_f64();
        match &failure {
            None => println!(
                "acceptance criterion {} ({}): PASS ({elapsed:.2}s)",
                self.number, self.name
            ),
            Some(why) => println!(
                "acceptance criterion {} ({}): FAIL ({elapsed:.2}s) — {why}",
                self.number, self.name
            ),
        }
        assert!(
            elapsed < self.budget_secs,
            "criterion {} exceeded its {}s runtime budget ({elapsed:.2}s)",
            self.number,
            self.budget_secs
        );
        if let Some(why) = failure {
            panic!("criterion {} failed: {why}", self.number);
        }
    }
}

#[test]
fn criterion_1_orthogonal_case() {
    let c = Criterion::start(1, "orthogonal states give one full bit", 1.0);
    let mut failure = None;
    for n in 1..=12 {
        let i_m = optimal_information(&pure(FRAC_PI_4), n).unwrap();
        if (i_m - 1.0).abs() > 1e-12 {
            failure = Some(format!("n={n}: i_m={i_m:.17e}"));
            break;
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_2_two_bit_closed_forms() {
    let c = Criterion::start(2, "n=2 closed forms", 1.0);
    let mut failure = None;
    for alpha in [0.1, FRAC_PI_8, 0.6, FRAC_PI_4] {
        let sig = pure(alpha);
        let cc = sig.cos_2a();
        let ss = sig.sin_2a();
        // I2 via the bias form: argument C^2/(1+C^2) has bias 1/2 - it
        let p = cc * cc / (1.0 + cc * cc);
        let expect_im = 0.5 * (1.0 + cc * cc) * bsc_information_from_bias(0.5 - p) + ss * ss / 2.0;
        let i_m = optimal_information(&sig, 2).unwrap();
        let i_d = deterministic_information(&sig, 2).unwrap();
        if (i_m - expect_im).abs() > 1e-12 {
            failure = Some(format!("alpha={alpha}: i_m off by {:.3e}", (i_m - expect_im).abs()));
            break;
        }
        if (i_d - (1.0 - cc)).abs() > 1e-12 {
            failure = Some(format!("alpha={alpha}: i_d off by {:.3e}", (i_d - (1.0 - cc)).abs()));
            break;
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_3_oracle_equivalence() {
    let c = Criterion::start(3, "closed form matches dense-matrix oracles", 60.0);
    let mut points = Vec::new();
    for alpha in [0.0, 0.05, FRAC_PI_8, 0.5, FRAC_PI_4] {
        let sc = alpha.sin() * alpha.cos();
        for r in [0.0, 0.05, sc / 2.0] {
            if let Ok(sig) = SignalPair::new(alpha, r) {
                if !points
                    .iter()
                    .any(|p: &SignalPair| p.alpha() == sig.alpha() && p.r() == sig.r())
                {
                    points.push(sig);
                }
            }
        }
    }
    let failure = points
        .par_iter()
        .map(|sig| {
            for n in 1..=10 {
                let cf = optimal_information(sig, n).unwrap();
                let bf = bruteforce_information(sig, n).unwrap();
                if (cf - bf).abs() > 1e-10 {
                    return Some(format!(
                        "n={n} alpha={} r={}: closed-form vs Bell-basis dev {:.3e}",
                        sig.alpha(),
                        sig.r(),
                        (cf - bf).abs()
                    ));
                }
                let dev = parity_matrices_bruteforce_sum_check(sig, n).unwrap();
                if dev > 1e-12 {
                    return Some(format!(
                        "n={n} alpha={} r={}: string-sum vs tensor-power dev {dev:.3e}",
                        sig.alpha(),
                        sig.r()
                    ));
                }
            }
            None
        })
        .find_map_any(|f| f);
    c.finish(failure);
}

#[test]
fn criterion_4_exponential_decay() {
    let c = Criterion::start(4, "small-angle exponential decay", 1.0);
    let alpha = 0.05;
    let sig = pure(alpha);
    let i_m: Vec<f64> = (1..=42)
        .map(|n| optimal_information(&sig, n).unwrap())
        .collect();
    let mut failure = None;
    for n in 1..=40 {
        if i_m[n - 1] > upper_bound(alpha, n) {
            failure = Some(format!("bound violated at n={n}"));
            break;
        }
    }
    if failure.is_none() {
        // Consecutive ratios alternate between the even->odd and odd->even
        // steps, so the converged per-step decay rate is the geometric mean
        // over one even/odd period.
        for n in 10..=40 {
            let rate = (i_m[n + 1] / i_m[n - 1]).sqrt();
            if !(alpha..=4.0 * alpha).contains(&rate) {
                failure = Some(format!("per-step decay rate {rate:.4} at n={n} outside [{alpha}, {}]", 4.0 * alpha));
                break;
            }
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_5_joint_vs_individual_gap() {
    let c = Criterion::start(5, "joint vs single-particle square law", 1.0);
    let sig = pure(0.02);
    let mut failure = None;
    for n in 2..=8 {
        let i_m = optimal_information(&sig, n).unwrap();
        let i_s = single_particle_information(&sig, n).unwrap();
        if i_s > i_m {
            failure = Some(format!("n={n}: i_s exceeds i_m"));
            break;
        }
        let ratio = i_m / (i_s * i_s);
        if !(0.2..=5.0).contains(&ratio) {
            failure = Some(format!("n={n}: i_m/i_s^2 = {ratio:.6e} outside [0.2, 5]"));
            break;
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_6_commuting_mixed_case() {
    let c = Criterion::start(6, "orthogonal mixed signals: no collective gain", 1.0);
    let mut failure = None;
    'outer: for r in [0.05, 0.1, 0.25] {
        let sig = SignalPair::new(FRAC_PI_4, r).unwrap();
        for n in 1..=20 {
            let i_m = optimal_information(&sig, n).unwrap();
            let i_s = single_particle_information(&sig, n).unwrap();
            let expect = bsc_information_from_bias(0.5 * (1.0 - 2.0 * r).powi(n as i32));
            let dev = (i_m - i_s).abs().max((i_m - expect).abs());
            if dev > 1e-12 {
                failure = Some(format!("r={r} n={n}: dev {dev:.3e}"));
                break 'outer;
            }
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_7_block_measurement_optimality() {
    let c = Criterion::start(7, "x-basis is the best projective block measurement", 30.0);
    let mut failure = None;
    'outer: for sig in [pure(0.05), pure(FRAC_PI_8), pure(0.5), SignalPair::new(0.5, 0.1).unwrap()]
    {
        for n in 1..=6usize {
            let ens = ParityEnsemble::closed_form(sig, n).unwrap();
            for ch in ens.channels() {
                let reference = bsc_information_from_bias(ch.bias());
                let (_, best) = block_measurement_scan(&sig, n, ch.k(), 1024).unwrap();
                if best > reference + 1e-9 {
                    failure = Some(format!(
                        "n={n} k={} alpha={}: scan beats closed form by {:.3e}",
                        ch.k(),
                        sig.alpha(),
                        best - reference
                    ));
                    break 'outer;
                }
                // 1024 is a multiple of 4, so theta = pi/4 is on the grid
                if (best - reference).abs() > 1e-12 {
                    failure = Some(format!(
                        "n={n} k={} alpha={}: grid misses I2(p_k) by {:.3e}",
                        ch.k(),
                        sig.alpha(),
                        (best - reference).abs()
                    ));
                    break 'outer;
                }
            }
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_8_asymptotic_agreement() {
    let c = Criterion::start(8, "small-angle leading terms", 1.0);
    let sig = pure(0.01);
    let mut failure = None;
    for n in [3usize, 4, 5, 6, 7, 8] {
        let exact = optimal_information(&sig, n).unwrap();
        let leading = asymptotic_information(&sig, n).unwrap().i_m_leading;
        let rel = (exact - leading).abs() / leading;
        if rel > 0.10 {
            failure = Some(format!("n={n}: relative error {rel:.4}"));
            break;
        }
    }
    c.finish(failure);
}

#[test]
fn criterion_9_deterministic_asymptotics() {
    let c = Criterion::start(9, "unambiguous-measurement asymptotics", 1.0);
    let sig = pure(0.01);
    let mut failure = None;
    for n in [4usize, 6] {
        let i_d = deterministic_information(&sig, n).unwrap();
        let i_m = optimal_information(&sig, n).unwrap();
        let rel = (i_d - i_m).abs() / i_m;
        if rel > 0.10 {
            failure = Some(format!("even n={n}: |i_d - i_m|/i_m = {rel:.4}"));
            break;
        }
    }
    if failure.is_none() {
        for n in [3usize, 5] {
            let i_d = deterministic_information(&sig, n).unwrap();
            let i_m = optimal_information(&sig, n).unwrap();
            let rel = (i_d / i_m - LN_2).abs() / LN_2;
            if rel > 0.10 {
                failure = Some(format!("odd n={n}: i_d/i_m vs ln2 off by {rel:.4}"));
                break;
            }
        }
    }
    c.finish(failure);
}
