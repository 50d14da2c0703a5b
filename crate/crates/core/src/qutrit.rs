//! The qutrit family `ρ = diag(a, b, c)` at fixed purity `c₂ = Tr ρ²`.
//!
//! For given `(a, c₂)` the remaining eigenvalues are
//!
//! ```text
//! b = (1 - a + K)/2,  c = (1 - a - K)/2,  K = √(-1 + 2a - 3a² + 2c₂)
//! ```
//!
//! so that `a + b + c = 1` and `a² + b² + c² = c₂`. Three curves in the
//! `(a, c₂)` plane bound the region of distinct physical orbits:
//!
//! * `3a² - 2a + 1 = 2c₂` (solid): `K = 0`, below it the matrix is not Hermitian;
//! * `2a² - 2a + 1 = c₂` (dashed): `c = 0`, above it positivity fails;
//! * `6a² - 4a + 1 = c₂` (dash-dot): `a = b`, the canonical-ordering limit.

use rayon::prelude::*;

use crate::density::DEFAULT_TOL;
use crate::error::{Error, Result};
use crate::orbits::spectral_entropy;
use crate::pauli::{generate_basis, CoherenceVector, Convention};
use crate::random::{substream_rng, uniform_sphere};

/// `K²` values in `[-K_SQUARED_SNAP, K_SQUARED_SNAP]` are treated as exactly zero.
pub const K_SQUARED_SNAP: f64 = 1e-12;

/// Width of the band around each boundary curve that is reported as "on" the curve.
pub const BOUNDARY_TOL: f64 = 1e-10;

/// Purity values this far outside `[1/3, 1]` are clamped onto the domain.
pub const C2_DOMAIN_SLACK: f64 = 1e-6;

/// Samples drawn per deterministic substream in [`sphere_physical_fraction`].
pub const SAMPLES_PER_STREAM: usize = 1024;

pub const DEFAULT_A_STEPS: usize = 600;

const THIRD: f64 = 1.0 / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RegionClass {
    NonHermitian,
    NonPositive,
    /// A physical state whose `(a, c₂)` is not the canonical representative.
    PhysicalDuplicate,
    UniqueOrbit,
    /// On `3a² - 2a + 1 = 2c₂`: pseudo-pure `diag(a, (1-a)/2, (1-a)/2)`.
    BoundaryPseudoPureSolid,
    /// On `6a² - 4a + 1 = c₂` with `a ≥ 1/3`: pseudo-pure `diag(a, a, 1-2a)`.
    BoundaryPseudoPureDashDot,
}

impl RegionClass {
    pub fn is_physical(self) -> bool {
        !matches!(self, RegionClass::NonHermitian | RegionClass::NonPositive)
    }

    /// Canonical representative of a distinct orbit (including both boundary curves).
    pub fn is_unique_orbit(self) -> bool {
        matches!(
            self,
            RegionClass::UniqueOrbit
                | RegionClass::BoundaryPseudoPureSolid
                | RegionClass::BoundaryPseudoPureDashDot
        )
    }
}

impl std::fmt::Display for RegionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Hermiticity boundary `3a² - 2a + 1` (compare with `2c₂`).
pub fn hermitian_curve(a: f64) -> f64 {
    3.0 * a * a - 2.0 * a + 1.0
}

/// Positivity boundary `2a² - 2a + 1` (compare with `c₂`).
pub fn positivity_curve(a: f64) -> f64 {
    2.0 * a * a - 2.0 * a + 1.0
}

/// Ordering boundary `6a² - 4a + 1` (compare with `c₂`).
pub fn ordering_curve(a: f64) -> f64 {
    6.0 * a * a - 4.0 * a + 1.0
}

fn k_squared(a: f64, c2: f64) -> f64 {
    let k2 = -1.0 + 2.0 * a - 3.0 * a * a + 2.0 * c2;
    if k2.abs() <= K_SQUARED_SNAP {
        0.0
    } else {
        k2
    }
}

fn check_a(a: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&a) {
        Ok(a)
    } else {
        Err(Error::ParameterOutOfRange {
            name: "a",
            value: a,
            domain: "[0, 1]",
        })
    }
}

fn check_c2(c2: f64) -> Result<f64> {
    if (THIRD..=1.0).contains(&c2) {
        Ok(c2)
    } else if (THIRD - C2_DOMAIN_SLACK..THIRD).contains(&c2) {
        Ok(THIRD)
    } else if c2 > 1.0 && c2 <= 1.0 + C2_DOMAIN_SLACK {
        Ok(1.0)
    } else {
        Err(Error::ParameterOutOfRange {
            name: "c2",
            value: c2,
            domain: "[1/3, 1]",
        })
    }
}

/// A point of the `(a, c₂)` plane with its derived eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritRegionPoint {
    pub a: f64,
    pub c2: f64,
    /// `-1 + 2a - 3a² + 2c₂`, snapped to zero near the solid curve.
    pub k_squared: f64,
    /// `None` when the parameters give a non-Hermitian matrix.
    pub k: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub classification: RegionClass,
}

impl QutritRegionPoint {
    /// `(a, b, c)` for Hermitian points.
    pub fn eigenvalues(&self) -> Option<[f64; 3]> {
        Some([self.a, self.b?, self.c?])
    }
}

pub fn qutrit_from_params(a: f64, c2: f64) -> Result<QutritRegionPoint> {
    let a = check_a(a)?;
    let c2 = check_c2(c2)?;
    let k2 = k_squared(a, c2);
    let classification = classify(a, c2, k2);
    let (k, b, c) = if k2 < 0.0 {
        (None, None, None)
    } else {
        let k = k2.sqrt();
        (
            Some(k),
            Some(0.5 * (1.0 - a + k)),
            Some(0.5 * (1.0 - a - k)),
        )
    };
    Ok(QutritRegionPoint {
        a,
        c2,
        k_squared: k2,
        k,
        b,
        c,
        classification,
    })
}

pub fn feasibility(a: f64, c2: f64) -> Result<RegionClass> {
    let a = check_a(a)?;
    let c2 = check_c2(c2)?;
    Ok(classify(a, c2, k_squared(a, c2)))
}

fn classify(a: f64, c2: f64, k2: f64) -> RegionClass {
    if k2 < 0.0 {
        return RegionClass::NonHermitian;
    }
    if c2 - positivity_curve(a) > K_SQUARED_SNAP {
        return RegionClass::NonPositive;
    }
    if (a - THIRD).abs() <= BOUNDARY_TOL && (c2 - THIRD).abs() <= BOUNDARY_TOL {
        // The completely random ensemble sits on every curve at once.
        return RegionClass::UniqueOrbit;
    }
    if k2 <= BOUNDARY_TOL {
        return RegionClass::BoundaryPseudoPureSolid;
    }
    let ordering_gap = ordering_curve(a) - c2;
    if a >= THIRD {
        if ordering_gap.abs() <= BOUNDARY_TOL {
            return RegionClass::BoundaryPseudoPureDashDot;
        }
        if ordering_gap >= 0.0 {
            return RegionClass::UniqueOrbit;
        }
    }
    RegionClass::PhysicalDuplicate
}

/// Range of the largest eigenvalue `a` over distinct physical orbits at fixed `c₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibleInterval {
    pub c2: f64,
    pub a_lo: f64,
    pub a_hi: f64,
    pub empty: bool,
    /// `√(6c₂ - 2)`
    pub k1: f64,
    /// `√(2c₂ - 1)`, only defined for `c₂ > 1/2`.
    pub k2: Option<f64>,
}

impl FeasibleInterval {
    pub fn contains(&self, a: f64, slack: f64) -> bool {
        !self.empty && a >= self.a_lo - slack && a <= self.a_hi + slack
    }
}

/// Closed-form interval of `a` satisfying all three inequalities and `a ≥ 1/3`.
///
/// For `c₂ ≤ 1/2` the lower end is the ordering root `(1 + K₁/2)/3`; above
/// `1/2` positivity takes over with `(1 + K₂)/2`. The upper end is always the
/// hermiticity root `(1 + K₁)/3`.
pub fn feasible_interval(c2: f64) -> Result<FeasibleInterval> {
    let c2 = check_c2(c2)?;
    let k1 = (6.0 * c2 - 2.0).max(0.0).sqrt();
    let (lo, k2) = if c2 <= 0.5 {
        ((1.0 + 0.5 * k1) / 3.0, None)
    } else {
        let k2 = (2.0 * c2 - 1.0).sqrt();
        (0.5 * (1.0 + k2), Some(k2))
    };
    let hi = (1.0 + k1) / 3.0;
    let a_lo = lo.clamp(THIRD, 1.0);
    let a_hi = hi.clamp(THIRD, 1.0);
    Ok(FeasibleInterval {
        c2,
        a_lo,
        a_hi,
        empty: a_lo > a_hi,
        k1,
        k2,
    })
}

/// Range of `a ≥ 1/3` giving physical states (Hermitian and positive),
/// whether or not `a` is the largest eigenvalue.
pub fn physical_range(c2: f64) -> Result<(f64, f64)> {
    let c2 = check_c2(c2)?;
    let k1 = (6.0 * c2 - 2.0).max(0.0).sqrt();
    let lo = if c2 <= 0.5 {
        THIRD
    } else {
        0.5 * (1.0 + (2.0 * c2 - 1.0).sqrt())
    };
    Ok((lo, ((1.0 + k1) / 3.0).clamp(THIRD, 1.0)))
}

/// `steps + 1` evenly spaced points on `[lo, hi]`, or just `lo` when the
/// interval is degenerate.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 0 || (hi - lo).abs() <= 1e-15 {
        return vec![lo];
    }
    (0..=steps)
        .map(|i| {
            if i == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / steps as f64
            }
        })
        .collect()
}

/// `c₂ ∈ {0.35, 0.40, …, 1.00}`.
pub fn default_c2_grid() -> Vec<f64> {
    (7..=20).map(|k| k as f64 * 0.05).collect()
}

/// `a ∈ [1/3, 1]` in `DEFAULT_A_STEPS` steps.
pub fn default_a_grid() -> Vec<f64> {
    linspace(THIRD, 1.0, DEFAULT_A_STEPS)
}

/// One row of the region dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionRecord {
    pub a: f64,
    pub c2: f64,
    pub class: RegionClass,
    /// `3a² - 2a + 1`
    pub curve1: f64,
    /// `2a² - 2a + 1`
    pub curve2: f64,
    /// `6a² - 4a + 1`
    pub curve3: f64,
}

/// Classification of every `(a, c₂)` pair, `c₂`-major.
pub fn region_grid(c2_values: &[f64], a_values: &[f64]) -> Result<Vec<RegionRecord>> {
    let mut out = Vec::with_capacity(c2_values.len() * a_values.len());
    for &c2 in c2_values {
        for &a in a_values {
            let point = qutrit_from_params(a, c2)?;
            out.push(RegionRecord {
                a: point.a,
                c2: point.c2,
                class: point.classification,
                curve1: hermitian_curve(point.a),
                curve2: positivity_curve(point.a),
                curve3: ordering_curve(point.a),
            });
        }
    }
    Ok(out)
}

/// A sampled curve at fixed `c₂`; `skipped` lists the `a` values that were
/// outside the curve's domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub c2: f64,
    pub points: Vec<(f64, f64)>,
    pub skipped: Vec<f64>,
}

/// `(a, a + b)` with `a + b = (1 + a + K)/2`.
pub fn fig2_curve(c2: f64, a_values: &[f64]) -> Result<Curve> {
    let c2 = check_c2(c2)?;
    let mut curve = Curve {
        c2,
        points: Vec::with_capacity(a_values.len()),
        skipped: Vec::new(),
    };
    for &a in a_values {
        let point = qutrit_from_params(a, c2)?;
        match point.k {
            Some(k) => curve.points.push((point.a, 0.5 * (1.0 + point.a + k))),
            None => curve.skipped.push(a),
        }
    }
    Ok(curve)
}

/// `(a, S)` with `S` the von Neumann entropy of `diag(a, b, c)` in nats.
/// Points that are not states are skipped.
pub fn fig3_curve(c2: f64, a_values: &[f64]) -> Result<Curve> {
    let c2 = check_c2(c2)?;
    let mut curve = Curve {
        c2,
        points: Vec::with_capacity(a_values.len()),
        skipped: Vec::new(),
    };
    for &a in a_values {
        let point = qutrit_from_params(a, c2)?;
        match (point.classification.is_physical(), point.eigenvalues()) {
            (true, Some(values)) => curve.points.push((point.a, spectral_entropy(&values))),
            _ => curve.skipped.push(a),
        }
    }
    Ok(curve)
}

/// Fraction of uniformly random points on the coherence sphere of purity
/// `c₂` (radius `√(c₂ - 1/n)`) that reconstruct to positive matrices.
///
/// Samples are split into substreams of [`SAMPLES_PER_STREAM`] derived from
/// `(seed, stream index)`, so the estimate does not depend on the thread count.
pub fn sphere_physical_fraction(n: usize, c2: f64, samples: usize, seed: u64) -> Result<f64> {
    let basis = generate_basis(n)?;
    let inv_n = 1.0 / n as f64;
    if !(c2 > inv_n && c2 <= 1.0) {
        return Err(Error::ParameterOutOfRange {
            name: "c2",
            value: c2,
            domain: "(1/n, 1]",
        });
    }
    if samples == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "samples",
            value: 0.0,
            domain: ">= 1",
        });
    }
    let radius = (c2 - inv_n).sqrt();
    let dim = n * n - 1;
    let streams = samples.div_ceil(SAMPLES_PER_STREAM);

    let physical: Result<usize> = (0..streams)
        .into_par_iter()
        .map(|stream| {
            let mut rng = substream_rng(seed, stream as u64);
            let count = SAMPLES_PER_STREAM.min(samples - stream * SAMPLES_PER_STREAM);
            let mut hits = 0;
            for _ in 0..count {
                let components = uniform_sphere(dim, &mut rng)
                    .into_iter()
                    .map(|x| x * radius)
                    .collect();
                let s = CoherenceVector::new(n, components, Convention::Coherence)?;
                if basis.is_physical(&s, DEFAULT_TOL)?.0 {
                    hits += 1;
                }
            }
            Ok(hits)
        })
        .sum();
    Ok(physical? as f64 / samples as f64)
}
