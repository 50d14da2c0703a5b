//! Matrix exponential by scaling and squaring around a Taylor core.

use crate::matrix::ComplexMatrix;

/// Scaled input norm the Taylor series is applied at.
const SCALED_NORM: f64 = 0.5;

/// Taylor order; the truncation error at norm 0.5 is below 0.5^19/19! ≈ 1.6e-23.
const TAYLOR_ORDER: usize = 18;

/// `exp(X)` for a square complex matrix.
pub fn expm(x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.dim();
    // ‖X‖_∞ (max row sum) bounds the spectral radius and every subordinate norm we care about.
    let norm = (0..n)
        .map(|i| (0..n).map(|j| x[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0u32;
    if norm > SCALED_NORM {
        squarings = (norm / SCALED_NORM).log2().ceil() as u32;
    }
    let scaled = x.scale_real(0.5f64.powi(squarings as i32));

    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=TAYLOR_ORDER {
        term = (&term * &scaled).scale_real(1.0 / k as f64);
        result = &result + &term;
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}
