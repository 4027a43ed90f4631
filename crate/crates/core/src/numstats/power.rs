//! Dominant-eigenvalue extraction by power iteration.
//!
//! The operator is supplied matrix-free so large covariances (e.g. the
//! 784-dim image covariance) never need explicit materialization.

use super::NumStatsError;

/// Dominant eigenvalue of a symmetric positive semi-definite operator.
///
/// `apply(v, out)` must write the operator applied to `v` into `out`; both
/// slices have length `dim`. The start vector is the normalized all-ones
/// vector, so the result is deterministic. Convergence is declared when the
/// Rayleigh quotient changes by less than `tol` relatively between
/// iterations.
pub fn max_eigenvalue<F>(
    mut apply: F,
    dim: usize,
    tol: f64,
    max_iters: usize,
) -> Result<f64, NumStatsError>
where
    F: FnMut(&[f64], &mut [f64]),
{
    if dim == 0 {
        return Err(NumStatsError::Domain("operator dimension must be >= 1".into()));
    }
    if !(tol > 0.0) {
        return Err(NumStatsError::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut v = vec![1.0 / (dim as f64).sqrt(); dim];
    let mut w = vec![0.0; dim];
    let mut lambda_prev = f64::NAN;
    for iter in 0..max_iters {
        apply(&v, &mut w);
        // v is unit-norm, so v . w is the Rayleigh quotient.
        let lambda: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            // Operator annihilates the current vector; for a PSD operator
            // restricted to this start this means the dominant eigenvalue
            // reachable from it is zero.
            return Ok(0.0);
        }
        if iter > 0 && (lambda - lambda_prev).abs() <= tol * lambda.abs().max(f64::MIN_POSITIVE) {
            return Ok(lambda);
        }
        lambda_prev = lambda;
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
    }
    Err(NumStatsError::NonConvergence {
        iters: max_iters,
        last_estimate: lambda_prev,
    })
}

/// Convenience adapter: power iteration over an explicit dense symmetric
/// matrix stored row-major.
pub(crate) fn apply_dense(matrix: &[f64], dim: usize) -> impl FnMut(&[f64], &mut [f64]) + '_ {
    move |v: &[f64], out: &mut [f64]| {
        for (i, o) in out.iter_mut().enumerate() {
            let row = &matrix[i * dim..(i + 1) * dim];
            *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
    }
}
