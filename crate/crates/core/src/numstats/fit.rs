//! Curve fits over a loss-trace segment and the two tests that compare them.
//!
//! Both fits treat the abscissa as the iteration index 0..n-1 within the
//! segment; any learning-rate/time parameterization is absorbed into the
//! fitted rate.

use super::special::{f_upper_tail, t_lower_tail};
use super::{Dof, ExponentialFit, LinearFit, NumStatsError, TestResult};

/// Rate-search domain for the exponential fit.
const RATE_LO: f64 = 1e-8;
const RATE_HI: f64 = 10.0;
const RATE_GRID: usize = 64;
/// Golden-section termination: bracket width in log-rate space, which is
/// the relative width of the rate bracket.
const RATE_REL_WIDTH: f64 = 1e-6;

/// Closed-form OLS of y against t = 0..n-1.
pub fn fit_linear(y: &[f64]) -> Result<LinearFit, NumStatsError> {
    let n = y.len();
    if n < 3 {
        return Err(NumStatsError::TooFewPoints { needed: 3, got: n });
    }
    let nf = n as f64;
    let x_mean = (nf - 1.0) / 2.0;
    // Sum of squared centered indices: n(n^2-1)/12.
    let sxx = nf * (nf * nf - 1.0) / 12.0;
    let y_mean = y.iter().sum::<f64>() / nf;
    let sxy: f64 = y
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as f64 - x_mean) * (v - y_mean))
        .sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let sse: f64 = y
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let r = v - (slope * i as f64 + intercept);
            r * r
        })
        .sum();
    let slope_stderr = (sse / (nf - 2.0) / sxx).sqrt();
    Ok(LinearFit {
        slope,
        intercept,
        sse,
        slope_stderr,
        n,
    })
}

/// Partially solved exponential model at a fixed rate: the amplitude and
/// offset that minimize the residual, plus that residual.
struct ProjectedFit {
    amplitude: f64,
    offset: f64,
    sse: f64,
}

/// For a fixed rate b, solve amplitude/offset by linear least squares
/// against the basis (exp(-b t), 1) and return the residual sum of squares.
fn project_rate(y: &[f64], rate: f64) -> ProjectedFit {
    let n = y.len() as f64;
    let phis: Vec<f64> = (0..y.len()).map(|i| (-rate * i as f64).exp()).collect();
    let phi_mean = phis.iter().sum::<f64>() / n;
    let y_mean = y.iter().sum::<f64>() / n;
    // Centered regression keeps the near-collinear small-rate regime stable.
    let mut s_pp = 0.0;
    let mut s_py = 0.0;
    for (phi, &v) in phis.iter().zip(y) {
        let dp = phi - phi_mean;
        s_pp += dp * dp;
        s_py += dp * (v - y_mean);
    }
    let (amplitude, offset) = if s_pp < 1e-300 {
        (0.0, y_mean)
    } else {
        let a = s_py / s_pp;
        (a, y_mean - a * phi_mean)
    };
    let sse = phis
        .iter()
        .zip(y)
        .map(|(phi, &v)| {
            let r = v - (amplitude * phi + offset);
            r * r
        })
        .sum();
    ProjectedFit {
        amplitude,
        offset,
        sse,
    }
}

/// Least-squares fit of `A exp(-B t) + C` by variable projection: for each
/// candidate rate the amplitude/offset are solved linearly, and the rate is
/// located by a log-spaced grid scan refined with golden-section search.
///
/// The returned fit is the best point ever evaluated, so its sse never
/// exceeds the sse at any grid candidate. A rate pinned at the search
/// boundary is reported via `degenerate` (the fit is still returned).
pub fn fit_exponential(y: &[f64]) -> Result<ExponentialFit, NumStatsError> {
    let n = y.len();
    if n < 4 {
        return Err(NumStatsError::TooFewPoints { needed: 4, got: n });
    }
    let ln_lo = RATE_LO.ln();
    let ln_hi = RATE_HI.ln();
    let step = (ln_hi - ln_lo) / (RATE_GRID - 1) as f64;

    let mut best_idx = 0usize;
    let mut best = (RATE_LO, project_rate(y, RATE_LO));
    for j in 1..RATE_GRID {
        let rate = (ln_lo + j as f64 * step).exp();
        let fit = project_rate(y, rate);
        if fit.sse < best.1.sse {
            best_idx = j;
            best = (rate, fit);
        }
    }
    let degenerate = best_idx == 0 || best_idx == RATE_GRID - 1;

    // Golden-section refinement in log-rate space around the best grid cell.
    let mut lo = ln_lo + best_idx.saturating_sub(1) as f64 * step;
    let mut hi = (ln_lo + (best_idx + 1) as f64 * step).min(ln_hi);
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = project_rate(y, x1.exp());
    let mut f2 = project_rate(y, x2.exp());
    while hi - lo > RATE_REL_WIDTH {
        if f1.sse <= f2.sse {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = project_rate(y, x1.exp());
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = project_rate(y, x2.exp());
        }
        let (x, f) = if f1.sse <= f2.sse {
            (x1, &f1)
        } else {
            (x2, &f2)
        };
        if f.sse < best.1.sse {
            best = (x.exp(), project_rate(y, x.exp()));
        }
    }

    let (rate, fit) = best;
    Ok(ExponentialFit {
        amplitude: fit.amplitude,
        rate,
        offset: fit.offset,
        sse: fit.sse,
        degenerate,
    })
}

/// Extra-sum-of-squares F-test comparing the 2-parameter line against the
/// 3-parameter exponential on the same n points; dof (1, n-3).
///
/// Small p favors the exponential. A negative statistic (exponential fits
/// worse) is clamped to zero, giving p = 1.
pub fn f_test_nested(sse_lin: f64, sse_exp: f64, n: usize) -> Result<TestResult, NumStatsError> {
    if n < 5 {
        return Err(NumStatsError::TooFewPoints { needed: 5, got: n });
    }
    if sse_lin < 0.0 || sse_exp < 0.0 {
        return Err(NumStatsError::Domain(format!(
            "residual sums must be non-negative, got ({sse_lin}, {sse_exp})"
        )));
    }
    let d2 = (n - 3) as f64;
    let dof = Dof::Pair(1.0, d2);
    if sse_exp == 0.0 {
        // Perfect exponential: decisive unless the line is perfect too.
        return Ok(if sse_lin > 0.0 {
            TestResult {
                statistic: f64::INFINITY,
                p_value: 0.0,
                dof,
            }
        } else {
            TestResult {
                statistic: 0.0,
                p_value: 1.0,
                dof,
            }
        });
    }
    let statistic = ((sse_lin - sse_exp) / (sse_exp / d2)).max(0.0);
    let p_value = f_upper_tail(statistic, 1.0, d2)?;
    Ok(TestResult {
        statistic,
        p_value,
        dof,
    })
}

/// One-tailed t-test of the OLS slope against zero; dof n-2.
///
/// p = P(T <= slope/stderr): small p means the slope is significantly
/// below zero.
pub fn t_test_slope_negative(fit: &LinearFit) -> Result<TestResult, NumStatsError> {
    if fit.n < 3 {
        return Err(NumStatsError::TooFewPoints {
            needed: 3,
            got: fit.n,
        });
    }
    let nu = (fit.n - 2) as f64;
    let dof = Dof::Single(nu);
    if fit.slope_stderr == 0.0 {
        return Ok(if fit.slope < 0.0 {
            TestResult {
                statistic: f64::NEG_INFINITY,
                p_value: 0.0,
                dof,
            }
        } else {
            TestResult {
                statistic: f64::INFINITY,
                p_value: 1.0,
                dof,
            }
        });
    }
    let statistic = fit.slope / fit.slope_stderr;
    let p_value = t_lower_tail(statistic, nu)?;
    Ok(TestResult {
        statistic,
        p_value,
        dof,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn gen_exp(a: f64, b: f64, c: f64, n: usize) -> Vec<f64> {
        (0..n).map(|t| a * (-b * t as f64).exp() + c).collect()
    }

    #[test]
    fn linear_exact_line() {
        let y: Vec<f64> = (0..10).map(|t| 2.0 * t as f64 + 1.0).collect();
        let fit = fit_linear(&y).unwrap();
        assert_abs_diff_eq!(fit.slope, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.intercept, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.sse, 0.0, epsilon = 1e-20);
    }

    #[test]
    fn linear_constant_series() {
        let y = vec![5.0; 10];
        let fit = fit_linear(&y).unwrap();
        assert_abs_diff_eq!(fit.slope, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.intercept, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.sse, 0.0, epsilon = 1e-20);
    }

    #[test]
    fn linear_rejects_short_input() {
        assert!(matches!(
            fit_linear(&[1.0, 2.0]),
            Err(NumStatsError::TooFewPoints { needed: 3, got: 2 })
        ));
    }

    #[test]
    fn linear_sse_beats_exponential_on_exp_data() {
        let y = gen_exp(3.0, 0.5, 1.0, 20);
        let lin = fit_linear(&y).unwrap();
        let exp = fit_exponential(&y).unwrap();
        assert!(lin.sse > exp.sse);
        assert!(lin.sse > 0.0);
    }

    #[test]
    fn exponential_recovers_generating_parameters() {
        let y = gen_exp(3.0, 0.5, 1.0, 20);
        let fit = fit_exponential(&y).unwrap();
        assert_abs_diff_eq!(fit.amplitude, 3.0, epsilon = 1e-6);
        assert_abs_diff_eq!(fit.rate, 0.5, epsilon = 1e-6);
        assert_abs_diff_eq!(fit.offset, 1.0, epsilon = 1e-6);
        assert!(!fit.degenerate);
    }

    #[test]
    fn exponential_constant_series() {
        let y = vec![4.0; 10];
        let fit = fit_exponential(&y).unwrap();
        assert_abs_diff_eq!(fit.amplitude, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(fit.offset, 4.0, epsilon = 1e-9);
        assert_abs_diff_eq!(fit.sse, 0.0, epsilon = 1e-18);
        assert!(fit.degenerate);
    }

    #[test]
    fn exponential_rejects_short_input() {
        assert!(fit_exponential(&[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn exponential_on_pure_linear_decay() {
        // A slow-decay exponential can imitate a line; the rate search pins
        // at its lower boundary and the F-test must find no evidence for the
        // exponential.
        let y: Vec<f64> = (0..50).map(|t| -0.1 * t as f64 + 5.0).collect();
        let lin = fit_linear(&y).unwrap();
        let exp = fit_exponential(&y).unwrap();
        assert!(exp.degenerate);
        // Both residuals are numerically tiny; the exponential cannot beat
        // the exact line by enough for significance.
        assert!(exp.sse < 1e-8);
        let test = f_test_nested(lin.sse, exp.sse, y.len()).unwrap();
        assert!(test.p_value > 0.05);
    }

    #[test]
    fn f_test_equal_residuals() {
        let t = f_test_nested(1.0, 1.0, 20).unwrap();
        assert_eq!(t.statistic, 0.0);
        assert_eq!(t.p_value, 1.0);
    }

    #[test]
    fn f_test_critical_point() {
        // n = 103 gives dof (1, 100); statistic 3.936 sits at the 5% point.
        let sse_exp = 1.0;
        let sse_lin = 1.0 + 3.936 / 100.0;
        let t = f_test_nested(sse_lin, sse_exp, 103).unwrap();
        assert_abs_diff_eq!(t.statistic, 3.936, epsilon = 1e-12);
        assert_abs_diff_eq!(t.p_value, 0.0500, epsilon = 5e-4);
    }

    #[test]
    fn f_test_strong_evidence() {
        // sse_lin = 2 sse_exp with n = 53: F = 50 on dof (1, 50).
        let t = f_test_nested(2.0, 1.0, 53).unwrap();
        assert_abs_diff_eq!(t.statistic, 50.0, epsilon = 1e-12);
        assert!(t.p_value < 1e-8);
    }

    #[test]
    fn f_test_zero_exp_residual() {
        let t = f_test_nested(1.0, 0.0, 10).unwrap();
        assert_eq!(t.p_value, 0.0);
        let t = f_test_nested(0.0, 0.0, 10).unwrap();
        assert_eq!(t.p_value, 1.0);
    }

    #[test]
    fn f_test_rejects_short_window() {
        assert!(f_test_nested(1.0, 0.5, 4).is_err());
    }

    #[test]
    fn t_test_zero_slope_is_half() {
        let fit = LinearFit {
            slope: 0.0,
            intercept: 1.0,
            sse: 1.0,
            slope_stderr: 0.1,
            n: 52,
        };
        let t = t_test_slope_negative(&fit).unwrap();
        assert_abs_diff_eq!(t.p_value, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn t_test_critical_point() {
        // t = -1.676 with 50 dof sits at the 5% lower tail.
        let fit = LinearFit {
            slope: -1.676,
            intercept: 0.0,
            sse: 1.0,
            slope_stderr: 1.0,
            n: 52,
        };
        let t = t_test_slope_negative(&fit).unwrap();
        assert_abs_diff_eq!(t.p_value, 0.0500, epsilon = 5e-4);
    }

    #[test]
    fn t_test_positive_slope_upper_half() {
        let fit = LinearFit {
            slope: 0.3,
            intercept: 0.0,
            sse: 1.0,
            slope_stderr: 0.2,
            n: 20,
        };
        assert!(t_test_slope_negative(&fit).unwrap().p_value > 0.5);
    }

    #[test]
    fn t_test_zero_stderr_edges() {
        let mut fit = LinearFit {
            slope: -1.0,
            intercept: 0.0,
            sse: 0.0,
            slope_stderr: 0.0,
            n: 10,
        };
        assert_eq!(t_test_slope_negative(&fit).unwrap().p_value, 0.0);
        fit.slope = 0.5;
        assert_eq!(t_test_slope_negative(&fit).unwrap().p_value, 1.0);
        fit.slope = 0.0;
        assert_eq!(t_test_slope_negative(&fit).unwrap().p_value, 1.0);
    }

    #[test]
    fn f_test_monotone_in_linear_residual() {
        let mut last = 1.0;
        for i in 1..50 {
            let sse_lin = 1.0 + 0.05 * i as f64;
            let p = f_test_nested(sse_lin, 1.0, 40).unwrap().p_value;
            assert!(p < last);
            last = p;
        }
    }
}
