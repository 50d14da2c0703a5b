//! Seeded random sampling of matrices, states and sphere directions.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::ComplexMatrix;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent substream `stream` of the generator seeded with `seed`.
pub fn substream_rng(seed: u64, stream: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(gaussian(rng), gaussian(rng))
}

/// Matrix of i.i.d. standard complex Gaussian entries.
pub fn random_complex_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| complex_gaussian(rng))
}

/// `(G + G†)/2` for a complex Gaussian `G`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_complex_matrix(n, rng);
    (&g + &g.adjoint()).scale_real(0.5)
}

/// Unitary obtained by Gram–Schmidt orthonormalization of the columns of a
/// complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_complex_matrix(n, rng);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut col: Vec<Complex64> = (0..n).map(|i| g[(i, j)]).collect();
        // Two passes of modified Gram–Schmidt keep orthogonality at machine precision.
        for _ in 0..2 {
            for prev in &cols {
                let overlap: Complex64 = prev.iter().zip(&col).map(|(p, c)| p.conj() * c).sum();
                for (c, p) in col.iter_mut().zip(prev) {
                    *c -= overlap * p;
                }
            }
        }
        let norm = col.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for c in &mut col {
            *c /= norm;
        }
        cols.push(col);
    }
    ComplexMatrix::from_fn(n, |i, j| cols[j][i])
}

/// Random full-rank density matrix `G G† / Tr(G G†)`.
pub fn random_density_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_complex_matrix(n, rng);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    w.scale_real(1.0 / tr)
}

/// Random point of the probability simplex (normalized exponentials).
pub fn random_probability_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let raw: Vec<f64> = (0..n)
        .map(|_| -rng.random::<f64>().max(1e-300).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// `U diag(spectrum) U†`.
pub fn conjugate_diagonal(spectrum: &[f64], u: &ComplexMatrix) -> ComplexMatrix {
    let d = ComplexMatrix::from_diagonal(spectrum);
    &(u * &d) * &u.adjoint()
}

/// Uniform direction on the unit sphere `S^{dim-1}` (normalized Gaussian vector).
pub fn uniform_sphere<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| gaussian(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Uniform point of the closed ball of the given radius in `R^dim`.
pub fn uniform_ball<R: Rng + ?Sized>(dim: usize, radius: f64, rng: &mut R) -> Vec<f64> {
    let dir = uniform_sphere(dim, rng);
    let r = radius * rng.random::<f64>().powf(1.0 / dim as f64);
    dir.into_iter().map(|x| x * r).collect()
}
