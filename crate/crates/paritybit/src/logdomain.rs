//! Log-domain scalar helpers.
//!
//! Selection probabilities and error biases of the parity subchannels scale
//! like powers of `sin α`, which underflow double precision long before the
//! interesting regimes are reached. Everything that can be a power is
//! therefore carried as a natural logarithm.

/// Numerically stable `ln(e^a + e^b)`.
pub fn log_sum_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    if a > b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// `ln C(n, k)` by compensated summation of `ln((n-k+i)/i)`.
pub fn log_binomial(n: u64, k: u64) -> f64 {
    assert!(k <= n, "binomial with k > n");
    let k = k.min(n - k);
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 1..=k {
        let term = ((n - k + i) as f64).ln() - (i as f64).ln();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// `coef * ln_x` with the convention that a zero coefficient kills a
/// `-inf` logarithm (so `x^0 = 1` even for `x = 0`).
pub fn scale_log(coef: f64, ln_x: f64) -> f64 {
    if coef == 0.0 {
        0.0
    } else {
        coef * ln_x
    }
}

/// `x^n` evaluated as `exp(n ln x)`, with `0^n = 0` for `n >= 1`.
pub fn pow_via_log(x: f64, n: u32) -> f64 {
    debug_assert!(x >= 0.0);
    if n == 0 {
        return 1.0;
    }
    if x == 0.0 {
        return 0.0;
    }
    (n as f64 * x.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_sum_exp_matches_direct() {
        let a: f64 = 0.3;
        let b: f64 = 0.4;
        let direct = (a.exp() + b.exp()).ln();
        assert_eq!(log_sum_exp(a, b), log_sum_exp(b, a));
        assert!((log_sum_exp(a, b) - direct).abs() < 1e-15);
    }

    #[test]
    fn log_sum_exp_handles_neg_infinity() {
        assert_eq!(log_sum_exp(f64::NEG_INFINITY, f64::NEG_INFINITY), f64::NEG_INFINITY);
        assert_eq!(log_sum_exp(f64::NEG_INFINITY, 0.0), 0.0);
        assert_eq!(log_sum_exp(0.0, f64::NEG_INFINITY), 0.0);
    }

    #[test]
    fn log_sum_exp_extreme_magnitudes() {
        // e^0 + e^-800 is e^0 to double precision
        assert_eq!(log_sum_exp(0.0, -800.0), 0.0);
        assert!((log_sum_exp(-1000.0, -1000.0) - (-1000.0 + std::f64::consts::LN_2)).abs() < 1e-12);
    }

    #[test]
    fn log_binomial_small_values_exact() {
        for (n, k, expect) in [(0u64, 0u64, 1.0f64), (5, 2, 10.0), (10, 5, 252.0), (40, 20, 137_846_528_820.0)] {
            assert!((log_binomial(n, k).exp() - expect).abs() / expect < 1e-12);
        }
    }

    #[test]
    fn log_binomial_symmetry() {
        assert_eq!(log_binomial(101, 3), log_binomial(101, 98));
    }

    #[test]
    fn pow_via_log_conventions() {
        assert_eq!(pow_via_log(0.0, 5), 0.0);
        assert_eq!(pow_via_log(0.0, 0), 1.0);
        assert_eq!(pow_via_log(1.0, 1000), 1.0);
        assert!((pow_via_log(0.5, 10) - 0.0009765625).abs() < 1e-18);
    }
}
