//! Numerically stable special functions used throughout the crate.
//!
//! Log-CDF evaluation deep in distribution tails is the backbone of the
//! Anderson-Darling discrepancy; everything here is written so that
//! intermediate quantities never overflow or underflow before the final log.

use statrs::function::beta::{beta_reg, ln_beta};
use statrs::function::erf::erfc;
use statrs::function::gamma::{gamma_lr, gamma_ur, ln_gamma};

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const LN_2: f64 = std::f64::consts::LN_2;

/// log(sum(exp(v))), max-shifted. Entries of -inf are ignored; an all
/// -inf input returns -inf; NaN propagates.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "log_sum_exp of an empty slice");
    let mut m = f64::NEG_INFINITY;
    for &v in values {
        if v.is_nan() {
            return f64::NAN;
        }
        if v > m {
            m = v;
        }
    }
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let mut s = 0.0;
    for &v in values {
        if v > f64::NEG_INFINITY {
            s += (v - m).exp();
        }
    }
    m + s.ln()
}

/// log(1 - exp(-x)) for x >= 0, by the standard branch split at ln 2.
pub fn log1mexp(x: f64) -> f64 {
    if x < 0.0 {
        return f64::NAN;
    }
    if x == 0.0 {
        return f64::NEG_INFINITY;
    }
    if x <= LN_2 {
        (-(-x).exp_m1()).ln()
    } else {
        (-(-x).exp()).ln_1p()
    }
}

/// log(exp(a) - exp(b)) for a >= b.
pub fn log_diff_exp(a: f64, b: f64) -> f64 {
    debug_assert!(a >= b || a.is_nan() || b.is_nan());
    if a == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    a + log1mexp(a - b)
}

/// Standard normal log-CDF, accurate for arbitrarily deep lower tails.
pub fn log_ndtr(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= -1.0 {
        if x > 6.0 {
            // 1 - Phi(-x) with Phi(-x) tiny.
            return (-0.5 * erfc(x / SQRT_2)).ln_1p();
        }
        return (0.5 * erfc(-x / SQRT_2)).ln();
    }
    // Lower tail: Phi(x) = 0.5 erfc(z) = 0.5 exp(-z^2) erfcx(z), z = -x/sqrt(2).
    let z = -x / SQRT_2;
    -z * z + (0.5 * erfcx(z)).ln()
}

/// Scaled complementary error function exp(z^2) erfc(z) for z >= 0.
fn erfcx(z: f64) -> f64 {
    if z < 6.0 {
        // erfc(z) >= erfc(6) ~ 2e-17: no underflow, direct product is exact enough.
        (z * z).exp() * erfc(z)
    } else {
        // Asymptotic series 1/(z sqrt(pi)) * sum (-1)^k (2k-1)!! / (2 z^2)^k.
        let inv2z2 = 1.0 / (2.0 * z * z);
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..16 {
            let next = term * (2.0 * k as f64 - 1.0) * inv2z2;
            if next.abs() >= term.abs() {
                break; // series started diverging
            }
            term = -next * term.signum() * term.signum(); // keep sign bookkeeping simple
            term = if k % 2 == 1 { -next } else { next };
            sum += term;
            if next.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        sum / (z * std::f64::consts::PI.sqrt())
    }
}

/// log of the regularized lower incomplete gamma P(a, x), with a series
/// fallback when the direct value underflows.
pub fn ln_gamma_lr(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    let p = gamma_lr(a, x);
    if p > 1e-280 {
        return p.ln();
    }
    // P(a,x) = x^a e^{-x} / Gamma(a+1) * sum_{k>=0} x^k / ((a+1)...(a+k))
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..400 {
        term *= x / (a + k as f64);
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    a * x.ln() - x - ln_gamma(a + 1.0) + sum.ln()
}

/// log of the regularized upper incomplete gamma Q(a, x), with an asymptotic
/// fallback for the deep upper tail.
pub fn ln_gamma_ur(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let q = gamma_ur(a, x);
    if q > 1e-280 {
        return q.ln();
    }
    // Q(a,x) ~ x^{a-1} e^{-x} / Gamma(a) * sum_k (a-1)(a-2)...(a-k) / x^k,
    // valid for x >> a, which the underflow regime implies.
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        let next = term * (a - k as f64) / x;
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    (a - 1.0) * x.ln() - x - ln_gamma(a) + sum.ln()
}

/// log of the regularized incomplete beta I_x(a, b), with a hypergeometric
/// series fallback when the direct value underflows.
pub fn ln_beta_reg(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    if x >= 1.0 {
        return 0.0;
    }
    let p = beta_reg(a, b, x);
    if p > 1e-280 {
        return p.ln();
    }
    // I_x(a,b) = x^a / (a B(a,b)) * 2F1(a, 1-b; a+1; x)
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..500 {
        let nf = n as f64;
        term *= (a + nf) * (1.0 - b + nf) / ((a + 1.0 + nf) * (1.0 + nf)) * x;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    a * x.ln() - a.ln() - ln_beta(a, b) + sum.ln()
}

/// Error-free difference: returns (s, e) with s = fl(a - b) and a - b = s + e.
#[inline]
pub fn two_diff(a: f64, b: f64) -> (f64, f64) {
    let s = a - b;
    let bb = s - a;
    let e = (a - (s - bb)) - (b + bb);
    (s, e)
}

/// exp(x) with a first-order correction term: exp(x) ~ hi + lo.
#[inline]
pub fn exp_dd(x: f64) -> (f64, f64) {
    let hi = x.exp();
    if hi == 0.0 || hi.is_infinite() {
        return (hi, 0.0);
    }
    let r = x - hi.ln();
    (hi, hi * r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn log_sum_exp_basics() {
        assert!((log_sum_exp(&[0.0, 0.0]) - 2f64.ln()).abs() < 1e-15);
        assert!((log_sum_exp(&[1000.0, 1000.0]) - (1000.0 + 2f64.ln())).abs() < 1e-12);
        assert_eq!(log_sum_exp(&[-3.5]), -3.5);
        assert_eq!(
            log_sum_exp(&[f64::NEG_INFINITY, f64::NEG_INFINITY]),
            f64::NEG_INFINITY
        );
        // -inf entries are ignored
        assert!((log_sum_exp(&[0.0, f64::NEG_INFINITY]) - 0.0).abs() < 1e-15);
    }

    #[test]
    fn log1mexp_branches_agree_at_split() {
        let eps = 1e-9;
        let below = log1mexp(LN_2 - eps);
        let above = log1mexp(LN_2 + eps);
        assert!((below - above).abs() < 1e-8);
        assert_eq!(log1mexp(0.0), f64::NEG_INFINITY);
        assert!((log1mexp(f64::INFINITY) - 0.0).abs() == 0.0);
    }

    #[test]
    fn log_diff_exp_matches_direct() {
        let a: f64 = 0.3;
        let b: f64 = -1.2;
        let expected = (a.exp() - b.exp()).ln();
        assert!((log_diff_exp(a, b) - expected).abs() < 1e-14);
        assert_eq!(log_diff_exp(-5.0, f64::NEG_INFINITY), -5.0);
        assert_eq!(log_diff_exp(-5.0, -5.0), f64::NEG_INFINITY);
    }

    #[test]
    fn log_ndtr_against_reference_points() {
        // Reference values from high-precision computation of Phi.
        assert!((log_ndtr(0.0) - 0.5f64.ln()).abs() < 1e-15);
        assert!((log_ndtr(1.0) - (0.841344746068543f64).ln()).abs() < 1e-12);
        // Deep tail: ln Phi(-30) = -450 - ln(sqrt(2 pi) * 30) + ln(1 - 1/900 + ...)
        let x = -30.0;
        let mills = 1.0 - 1.0 / 900.0 + 3.0 / 810000.0 - 15.0 / 729000000.0;
        let expected = -450.0 - (30.0 * (2.0 * std::f64::consts::PI).sqrt()).ln() + mills.ln();
        assert!(
            (log_ndtr(x) - expected).abs() < 1e-10,
            "got {}, want {}",
            log_ndtr(x),
            expected
        );
    }

    #[test]
    fn log_ndtr_symmetry_mid_range() {
        // Phi(x) + Phi(-x) = 1 in the range where both are representable.
        for &x in &[0.1, 0.5, 1.0, 2.0, 4.0] {
            let p = log_ndtr(x).exp() + log_ndtr(-x).exp();
            assert!((p - 1.0).abs() < 1e-13, "x={x}: {p}");
        }
    }

    #[test]
    fn incomplete_gamma_log_tail() {
        // P(2, 1e-160) ~ x^2/Gamma(3) = x^2/2 -> ln = 2 ln x - ln 2
        let l = ln_gamma_lr(2.0, 1e-160);
        let expected = 2.0 * (1e-160f64).ln() - 2f64.ln();
        assert!((l - expected).abs() < 1e-6);
        // Mid-range agrees with direct value.
        let mid = ln_gamma_lr(3.0, 2.0);
        assert!((mid - gamma_lr(3.0, 2.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn incomplete_gamma_upper_log_tail() {
        // Q(1, x) = e^{-x} exactly.
        let l = ln_gamma_ur(1.0, 800.0);
        assert!((l - (-800.0)).abs() < 1e-9, "{l}");
        let mid = ln_gamma_ur(2.5, 3.0);
        assert!((mid - gamma_ur(2.5, 3.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn incomplete_beta_log_tail() {
        // I_x(a,b) ~ x^a/(a B(a,b)) for tiny x.
        let (a, b, x) = (2.0, 3.0, 1e-150);
        let l = ln_beta_reg(a, b, x);
        let expected = a * x.ln() - a.ln() - ln_beta(a, b);
        assert!((l - expected).abs() < 1e-6);
        let mid = ln_beta_reg(2.0, 3.0, 0.4);
        assert!((mid - beta_reg(2.0, 3.0, 0.4).ln()).abs() < 1e-12);
    }

    #[test]
    fn two_diff_is_error_free() {
        let a = 1.0 + 1e-16;
        let b = 1.0;
        let (s, e) = two_diff(a, b);
        // s + e reconstructs the exact difference of the two floats
        assert_eq!(s + e, a - b + (e - (s - (a - b))));
        let exact = (a as f64) - (b as f64);
        assert!(((s + e) - exact).abs() <= f64::EPSILON * exact.abs().max(1.0));
    }

    proptest! {
        #[test]
        fn lse_shift_identity(v in proptest::collection::vec(-50.0f64..50.0, 1..20), k in -100.0f64..100.0) {
            let shifted: Vec<f64> = v.iter().map(|x| x + k).collect();
            let lhs = log_sum_exp(&shifted);
            let rhs = log_sum_exp(&v) + k;
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn log1mexp_matches_naive_mid_range(x in 0.01f64..30.0) {
            let naive = (1.0 - (-x).exp()).ln();
            prop_assert!((log1mexp(x) - naive).abs() < 1e-10);
        }
    }
}
