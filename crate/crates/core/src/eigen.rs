//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `H[p][q]` with a
//! diagonal unitary and then applies a real Givens rotation that zeroes it.
//! Sweeps visit pivots in row-major order `(0,1), (0,2), …, (n-2,n-1)`, so
//! the result is bit-for-bit reproducible.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Sweeps allowed before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Convergence threshold on the off-diagonal Frobenius norm, relative to ‖H‖_F.
pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-14;

/// Eigenvalues (nonincreasing) with column eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
    /// `max_k max_i |(H v_k - λ_k v_k)_i|`.
    pub residual: f64,
}

impl EigenSystem {
    /// Column `k` as an owned vector.
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }
}

/// Diagonalizes a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] if `max |H - H†| > tol`.
pub fn hermitian_eigensystem(h: &ComplexMatrix, tol: f64) -> Result<EigenSystem> {
    let deviation = h.hermiticity_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation, tol });
    }
    let n = h.dim();
    // Work on the exactly Hermitian part.
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        if i == j {
            Complex64::new(h[(i, i)].re, 0.0)
        } else {
            (h[(i, j)] + h[(j, i)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();
    let threshold = OFF_DIAGONAL_THRESHOLD * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold || scale == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, k| v[(i, order[k])]);

    let mut residual = 0.0f64;
    for (k, &lambda) in values.iter().enumerate() {
        let col: Vec<Complex64> = (0..n).map(|i| vectors[(i, k)]).collect();
        let hv = h.mul_vec(&col);
        for (hvi, ci) in hv.iter().zip(&col) {
            residual = residual.max((hvi - ci * lambda).norm());
        }
    }

    Ok(EigenSystem {
        values,
        vectors,
        residual,
    })
}

/// Eigenvalues only, sorted nonincreasing.
pub fn hermitian_eigenvalues(h: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    hermitian_eigensystem(h, tol).map(|es| es.values)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let n = a.dim();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    // Real Jacobi angle for [[app, r], [r, aqq]].
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = diag(1, e^{-iφ}) · [[c, s], [-s, c]] on the (p, q) plane.
    let phase = apq / r;
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = phase.conj() * (-s);
    let jqq = phase.conj() * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}
