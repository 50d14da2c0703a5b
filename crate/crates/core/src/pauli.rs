//! Orthonormal generalized Pauli (Gell-Mann type) basis and the coherence
//! vector embedding of density matrices into `R^{n²-1}`.
//!
//! Basis ordering is fixed: all x-type elements `(r, s)` with `r < s` in
//! lexicographic order, then the y-type elements in the same order, then the
//! diagonal z-type elements `r = 1..n-1`. Indices in [`BasisLabel`] are
//! 1-based to match the usual ket notation `|1⟩ … |n⟩`.
//!
//! With `σ̃_k = √2 σ_k` the unnormalized generators (`Tr(σ̃_j σ̃_k) = 2δ_jk`),
//! the Bloch components are `Tr(ρ σ̃_k) = √2 · s_k`.

use std::f64::consts::SQRT_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

pub const MIN_BASIS_DIM: usize = 2;
pub const MAX_BASIS_DIM: usize = 16;

/// Ratio between Bloch and coherence components.
pub const BLOCH_FACTOR: f64 = SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisLabel {
    X { r: usize, s: usize },
    Y { r: usize, s: usize },
    Z { r: usize },
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::X { r, s } => write!(f, "x{r}{s}"),
            BasisLabel::Y { r, s } => write!(f, "y{r}{s}"),
            BasisLabel::Z { r } => write!(f, "z{r}"),
        }
    }
}

/// `n² - 1` traceless Hermitian matrices with `Tr(σ_j σ_k) = δ_jk`, plus `σ₀ = I/√n`.
#[derive(Debug, Clone)]
pub struct PauliBasis {
    dim: usize,
    labels: Vec<BasisLabel>,
    elements: Vec<ComplexMatrix>,
    identity_element: ComplexMatrix,
}

impl PauliBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn identity_element(&self) -> &ComplexMatrix {
        &self.identity_element
    }

    /// Coherence components `s_k = Tr(ρ σ_k)`; the implied `s₀ = 1/√n` is not stored.
    pub fn coherence_vector(&self, rho: &DensityMatrix) -> Result<CoherenceVector> {
        if rho.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: rho.dim(),
                right: self.dim,
            });
        }
        let components = self
            .elements
            .iter()
            .map(|sigma| rho.matrix().trace_product(sigma).re)
            .collect();
        Ok(CoherenceVector {
            dim: self.dim,
            components,
            convention: Convention::Coherence,
        })
    }

    /// `I/n + Σ s_k σ_k`. Hermitian with unit trace, but not necessarily positive.
    pub fn reconstruct(&self, s: &CoherenceVector) -> Result<ComplexMatrix> {
        if s.dim != self.dim {
            return Err(Error::DimensionMismatch {
                left: s.dim,
                right: self.dim,
            });
        }
        let coherence = s.to_convention(Convention::Coherence);
        let n = self.dim;
        let mut m = ComplexMatrix::identity(n).scale_real(1.0 / n as f64);
        for (label, &value) in self.labels.iter().zip(&coherence.components) {
            add_scaled_generator(&mut m, *label, value);
        }
        Ok(m)
    }

    /// Whether `s` is the image of a state, together with the smallest
    /// eigenvalue of the reconstructed matrix.
    pub fn is_physical(&self, s: &CoherenceVector, tol: f64) -> Result<(bool, f64)> {
        let m = self.reconstruct(s)?;
        let values = hermitian_eigenvalues(&m, f64::INFINITY)?;
        let min = values[values.len() - 1];
        Ok((min >= -tol * self.dim as f64, min))
    }
}

/// Adds `value · σ_label` to `m` in place without materializing the generator.
fn add_scaled_generator(m: &mut ComplexMatrix, label: BasisLabel, value: f64) {
    let h = value / SQRT_2;
    match label {
        BasisLabel::X { r, s } => {
            m[(r - 1, s - 1)] += Complex64::new(h, 0.0);
            m[(s - 1, r - 1)] += Complex64::new(h, 0.0);
        }
        BasisLabel::Y { r, s } => {
            m[(r - 1, s - 1)] += Complex64::new(0.0, -h);
            m[(s - 1, r - 1)] += Complex64::new(0.0, h);
        }
        BasisLabel::Z { r } => {
            let c = value / ((r + r * r) as f64).sqrt();
            for k in 0..r {
                m[(k, k)] += Complex64::new(c, 0.0);
            }
            m[(r, r)] -= Complex64::new(c * r as f64, 0.0);
        }
    }
}

fn labels_for(n: usize) -> Vec<BasisLabel> {
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|r| ((r + 1)..=n).map(move |s| (r, s)))
        .collect();
    let mut labels = Vec::with_capacity(n * n - 1);
    labels.extend(pairs.iter().map(|&(r, s)| BasisLabel::X { r, s }));
    labels.extend(pairs.iter().map(|&(r, s)| BasisLabel::Y { r, s }));
    labels.extend((1..n).map(|r| BasisLabel::Z { r }));
    labels
}

/// Normalized generalized Pauli basis for `2 ≤ n ≤ 16`.
pub fn generate_basis(n: usize) -> Result<PauliBasis> {
    if !(MIN_BASIS_DIM..=MAX_BASIS_DIM).contains(&n) {
        return Err(Error::DimensionOutOfRange {
            dim: n,
            min: MIN_BASIS_DIM,
            max: MAX_BASIS_DIM,
        });
    }
    let labels = labels_for(n);
    let elements = labels
        .iter()
        .map(|&label| {
            let mut m = ComplexMatrix::zeros(n);
            add_scaled_generator(&mut m, label, 1.0);
            m
        })
        .collect();
    Ok(PauliBasis {
        dim: n,
        labels,
        elements,
        identity_element: ComplexMatrix::identity(n).scale_real(1.0 / (n as f64).sqrt()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Coherence,
    Bloch,
}

/// Real vector of length `n² - 1` in a stated convention.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceVector {
    dim: usize,
    components: Vec<f64>,
    convention: Convention,
}

impl CoherenceVector {
    pub fn new(dim: usize, components: Vec<f64>, convention: Convention) -> Result<Self> {
        if !(MIN_BASIS_DIM..=MAX_BASIS_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange {
                dim,
                min: MIN_BASIS_DIM,
                max: MAX_BASIS_DIM,
            });
        }
        if components.len() != dim * dim - 1 {
            return Err(Error::LengthMismatch {
                left: components.len(),
                right: dim * dim - 1,
            });
        }
        Ok(Self {
            dim,
            components,
            convention,
        })
    }

    pub fn zeros(dim: usize, convention: Convention) -> Self {
        Self {
            dim,
            components: vec![0.0; dim * dim - 1],
            convention,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn to_convention(&self, target: Convention) -> Self {
        let factor = match (self.convention, target) {
            (Convention::Coherence, Convention::Bloch) => BLOCH_FACTOR,
            (Convention::Bloch, Convention::Coherence) => 1.0 / BLOCH_FACTOR,
            _ => 1.0,
        };
        Self {
            dim: self.dim,
            components: self.components.iter().map(|x| x * factor).collect(),
            convention: target,
        }
    }
}

pub fn to_coherence_vector(rho: &DensityMatrix) -> Result<CoherenceVector> {
    generate_basis(rho.dim())?.coherence_vector(rho)
}

pub fn from_coherence_vector(s: &CoherenceVector) -> Result<ComplexMatrix> {
    generate_basis(s.dim())?.reconstruct(s)
}

pub fn is_physical_vector(s: &CoherenceVector, tol: f64) -> Result<(bool, f64)> {
    generate_basis(s.dim())?.is_physical(s, tol)
}

pub fn convert_convention(s: &CoherenceVector, target: Convention) -> CoherenceVector {
    s.to_convention(target)
}
