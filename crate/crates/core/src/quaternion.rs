//! Quaternions and the identification `H^n ≅ C^{2n}`.
//!
//! A quaternion `q = q₀ + q₁e₁ + q₂e₂ + q₃e₃` is split as
//! `q = (q₀ + q₁e₁) + e₂(q₂ - q₃e₁)`, i.e. `q = z + e₂·w` with complex
//! `z = q₀ + i q₁` and `w = q₂ - i q₃` (identifying `i` with `e₁`). A vector
//! `(q₁, …, qₙ)` maps to `(z₁, …, zₙ, w₁, …, wₙ)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const E1: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const E2: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const E3: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Basis element `1, e₁, e₂, e₃` for `index = 0..=3`.
    pub fn basis(index: usize) -> Self {
        match index {
            0 => Self::ONE,
            1 => Self::E1,
            2 => Self::E2,
            3 => Self::E3,
            _ => panic!("quaternion basis index {index} out of range"),
        }
    }

    /// Embeds `re + im·e₁`.
    pub fn from_complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn max_abs_diff(self, other: Self) -> f64 {
        (self.w - other.w)
            .abs()
            .max((self.x - other.x).abs())
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

impl std::fmt::Display for Quaternion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {:+}e1 {:+}e2 {:+}e3", self.w, self.x, self.y, self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;

    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl Add for Quaternion {
    type Output = Self;

    fn add(self, q: Self) -> Self {
        Self::new(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;

    fn sub(self, q: Self) -> Self {
        Self::new(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

pub fn quat_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    p * q
}

/// `(q₁, …, qₙ) ↦ (z₁, …, zₙ, w₁, …, wₙ)` with `qᵢ = zᵢ + e₂·wᵢ`.
pub fn quat_to_complex(qvec: &[Quaternion]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(2 * qvec.len());
    out.extend(qvec.iter().map(|q| Complex64::new(q.w, q.x)));
    out.extend(qvec.iter().map(|q| Complex64::new(q.y, -q.z)));
    out
}

/// Inverse of [`quat_to_complex`].
pub fn complex_to_quat(zvec: &[Complex64]) -> Result<Vec<Quaternion>> {
    if !zvec.len().is_multiple_of(2) {
        return Err(Error::OddDimension { dim: zvec.len() });
    }
    let n = zvec.len() / 2;
    Ok((0..n)
        .map(|i| {
            let (z, w) = (zvec[i], zvec[n + i]);
            Quaternion::new(z.re, z.im, w.re, -w.im)
        })
        .collect())
}

/// Symplectic inner product `Σ q̄ᵢ q'ᵢ`.
pub fn quat_inner(q: &[Quaternion], q2: &[Quaternion]) -> Result<Quaternion> {
    if q.len() != q2.len() {
        return Err(Error::LengthMismatch {
            left: q.len(),
            right: q2.len(),
        });
    }
    Ok(q.iter()
        .zip(q2)
        .fold(Quaternion::default(), |acc, (a, b)| acc + a.conj() * *b))
}
