//! Validated density matrices and the unitary-equivalence test.

use crate::eigen::hermitian_eigensystem;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Default validation tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Hermitian, unit-trace, positive-semidefinite matrix.
///
/// The spectrum is computed once during validation and cached.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    tol: f64,
    spectrum: Vec<f64>,
}

impl DensityMatrix {
    /// Validates `matrix` against the three density-matrix invariants.
    ///
    /// Positivity is accepted down to `-tol·n` for the smallest eigenvalue.
    pub fn new(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation, tol });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol || trace.im.abs() > tol {
            return Err(Error::NotUnitTrace { trace: trace.re });
        }
        let n = matrix.dim();
        let spectrum = hermitian_eigensystem(&matrix, tol)?.values;
        let bound = -tol * n as f64;
        let min_eigenvalue = spectrum[n - 1];
        if min_eigenvalue < bound {
            return Err(Error::NotPositive {
                min_eigenvalue,
                bound,
            });
        }
        Ok(Self {
            matrix,
            tol,
            spectrum,
        })
    }

    pub fn with_default_tol(matrix: ComplexMatrix) -> Result<Self> {
        Self::new(matrix, DEFAULT_TOL)
    }

    /// Diagonal state `diag(values)`.
    pub fn diagonal(values: &[f64], tol: f64) -> Result<Self> {
        Self::new(ComplexMatrix::from_diagonal(values), tol)
    }

    /// The completely random ensemble `I/n`.
    pub fn maximally_mixed(n: usize) -> Self {
        let value = 1.0 / n as f64;
        Self {
            matrix: ComplexMatrix::identity(n).scale_real(value),
            tol: DEFAULT_TOL,
            spectrum: vec![value; n],
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Eigenvalues sorted nonincreasing.
    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    /// `Tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        self.matrix.trace_product(&self.matrix).re
    }
}

/// `[Tr ρ, Tr ρ², …, Tr ρⁿ]` by repeated multiplication.
pub fn trace_invariants(rho: &DensityMatrix) -> Vec<f64> {
    let n = rho.dim();
    let mut power = rho.matrix().clone();
    let mut out = Vec::with_capacity(n);
    out.push(power.trace().re);
    for _ in 1..n {
        power = &power * rho.matrix();
        out.push(power.trace().re);
    }
    out
}

/// Unitary equivalence decided from the trace invariants `Tr(ρʳ)`, r = 1..n.
pub fn unitarily_equivalent(rho1: &DensityMatrix, rho2: &DensityMatrix, tol: f64) -> Result<bool> {
    rho1.matrix().check_same_dim(rho2.matrix())?;
    let t1 = trace_invariants(rho1);
    let t2 = trace_invariants(rho2);
    Ok(t1.iter().zip(&t2).all(|(a, b)| (a - b).abs() <= tol))
}

/// Unitary equivalence decided by comparing sorted spectra.
pub fn same_spectrum(rho1: &DensityMatrix, rho2: &DensityMatrix, tol: f64) -> Result<bool> {
    rho1.matrix().check_same_dim(rho2.matrix())?;
    Ok(rho1
        .spectrum()
        .iter()
        .zip(rho2.spectrum())
        .all(|(a, b)| (a - b).abs() <= tol))
}

/// Point `(1-t)ρ₁ + tρ₂` on the segment between two states.
pub fn convex_path(rho1: &DensityMatrix, rho2: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    rho1.matrix().check_same_dim(rho2.matrix())?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterOutOfRange {
            name: "t",
            value: t,
            domain: "[0, 1]",
        });
    }
    let m = &rho1.matrix().scale_real(1.0 - t) + &rho2.matrix().scale_real(t);
    DensityMatrix::new(m, rho1.tol().max(rho2.tol()))
}
