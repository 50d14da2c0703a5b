//! Unitary orbits of states: spectral signatures, flag manifolds, orbit
//! dimensions, majorization and von Neumann entropy.
//!
//! The orbit of ρ under conjugation by `U(n)` depends only on the distinct
//! eigenvalues and their multiplicities `(n₁, …, n_r)`. It is the flag
//! manifold `U(n)/[U(n₁)×…×U(n_r)]` of real dimension `n² - Σ nᵢ²`.

use std::fmt;

use serde::Serialize;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};

/// Default single-linkage tolerance for grouping eigenvalues.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StateClass {
    CompletelyRandom,
    Pure,
    PseudoPure,
    Generic,
    OtherDegenerate,
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Clustered spectrum of a state.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSignature {
    pub dim: usize,
    /// Distinct eigenvalues, strictly decreasing.
    pub distinct_values: Vec<f64>,
    /// Multiplicity of each distinct value, in the same order.
    pub multiplicities: Vec<usize>,
    pub cluster_tol: f64,
    pub state_class: StateClass,
}

impl OrbitSignature {
    /// Number of distinct eigenvalues.
    pub fn rank_count(&self) -> usize {
        self.distinct_values.len()
    }
}

pub fn orbit_signature(rho: &DensityMatrix, cluster_tol: f64) -> Result<OrbitSignature> {
    signature_from_spectrum(rho.spectrum(), cluster_tol)
}

/// Signature of a spectrum given in any order.
pub fn signature_from_spectrum(spectrum: &[f64], cluster_tol: f64) -> Result<OrbitSignature> {
    let mut sorted = spectrum.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let n = sorted.len();

    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for &value in &sorted {
        match clusters.last_mut() {
            Some(cluster) if cluster.last().unwrap() - value <= cluster_tol => cluster.push(value),
            _ => clusters.push(vec![value]),
        }
    }
    let distinct_values: Vec<f64> = clusters
        .iter()
        .map(|c| c.iter().sum::<f64>() / c.len() as f64)
        .collect();
    let multiplicities: Vec<usize> = clusters.iter().map(Vec::len).collect();

    for pair in distinct_values.windows(2) {
        if pair[0] - pair[1] <= 2.0 * cluster_tol {
            return Err(Error::AmbiguousClustering {
                first: pair[0],
                second: pair[1],
                cluster_tol,
            });
        }
    }

    let state_class = classify(n, &distinct_values, &multiplicities, cluster_tol);
    Ok(OrbitSignature {
        dim: n,
        distinct_values,
        multiplicities,
        cluster_tol,
        state_class,
    })
}

fn classify(n: usize, values: &[f64], mult: &[usize], cluster_tol: f64) -> StateClass {
    let slack = cluster_tol * n as f64;
    match values.len() {
        1 => StateClass::CompletelyRandom,
        // Multiplicities {1, n-1} in either order.
        2 if mult.contains(&1) && mult.contains(&(n - 1)) => {
            if mult[0] == 1 && (values[0] - 1.0).abs() <= slack && values[1].abs() <= slack {
                StateClass::Pure
            } else {
                StateClass::PseudoPure
            }
        }
        r if r == n => StateClass::Generic,
        _ => StateClass::OtherDegenerate,
    }
}

/// `n² - Σ nᵢ²` for a multiplicity pattern.
pub fn flag_dimension(multiplicities: &[usize]) -> usize {
    let n: usize = multiplicities.iter().sum();
    n * n - multiplicities.iter().map(|m| m * m).sum::<usize>()
}

pub fn orbit_dimension(sig: &OrbitSignature) -> usize {
    flag_dimension(&sig.multiplicities)
}

/// `U(n)/[U(n1)x…xU(nr)]`, or `point` for a single block.
pub fn flag_manifold_label(multiplicities: &[usize]) -> String {
    if multiplicities.len() <= 1 {
        return "point".to_string();
    }
    let n: usize = multiplicities.iter().sum();
    let factors: Vec<String> = multiplicities.iter().map(|m| format!("U({m})")).collect();
    format!("U({n})/[{}]", factors.join("x"))
}

/// Flag-manifold label, annotated with `CP^(n-1)` for (pseudo-)pure orbits.
pub fn flag_manifold_name(sig: &OrbitSignature) -> String {
    let label = flag_manifold_label(&sig.multiplicities);
    match sig.state_class {
        StateClass::Pure | StateClass::PseudoPure => format!("{label} = CP^{}", sig.dim - 1),
        _ => label,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Majorization {
    /// First argument is majorized by the second (it is more mixed).
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Majorization order between the spectra of two states.
pub fn majorize_compare(
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    tol: f64,
) -> Result<Majorization> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch {
            left: rho1.dim(),
            right: rho2.dim(),
        });
    }
    Ok(majorize_spectra(rho1.spectrum(), rho2.spectrum(), tol))
}

/// Majorization between two probability vectors of equal length (any order).
///
/// Panics if the lengths differ.
pub fn majorize_spectra(p: &[f64], q: &[f64], tol: f64) -> Majorization {
    assert_eq!(p.len(), q.len(), "spectra must have equal length");
    let sorted = |v: &[f64]| {
        let mut s = v.to_vec();
        s.sort_by(|a, b| b.total_cmp(a));
        s
    };
    let (p, q) = (sorted(p), sorted(q));
    if p.iter().zip(&q).all(|(a, b)| (a - b).abs() <= tol) {
        return Majorization::Equal;
    }
    let (mut sp, mut sq) = (0.0, 0.0);
    let (mut all_le, mut all_ge) = (true, true);
    for k in 0..p.len().saturating_sub(1) {
        sp += p[k];
        sq += q[k];
        all_le &= sp <= sq + tol;
        all_ge &= sp >= sq - tol;
    }
    match (all_le, all_ge) {
        (true, _) => Majorization::Less,
        (false, true) => Majorization::Greater,
        (false, false) => Majorization::Incomparable,
    }
}

/// `-Σ λ ln λ` in nats.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    spectral_entropy(rho.spectrum())
}

/// Shannon entropy (nats) of a spectrum; nonpositive entries contribute zero.
pub fn spectral_entropy(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum::<f64>()
        .max(0.0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTableRow {
    /// Multiplicity pattern with parts ascending.
    pub partition: Vec<usize>,
    pub manifold: String,
    pub dimension: usize,
}

impl OrbitTableRow {
    /// `n1+n2+…`
    pub fn partition_string(&self) -> String {
        self.partition
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Integer partitions of `n` with nondecreasing parts, in lexicographic order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(
        remaining: usize,
        min_part: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in min_part..=remaining {
            if remaining - part != 0 && remaining - part < part {
                continue;
            }
            current.push(part);
            extend(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out
}

/// One row per orbit type of an `n`-level system, sorted by dimension.
pub fn enumerate_orbit_table(n: usize) -> Result<Vec<OrbitTableRow>> {
    if !(2..=8).contains(&n) {
        return Err(Error::DimensionOutOfRange {
            dim: n,
            min: 2,
            max: 8,
        });
    }
    let mut rows: Vec<OrbitTableRow> = integer_partitions(n)
        .into_iter()
        .map(|partition| OrbitTableRow {
            manifold: flag_manifold_label(&partition),
            dimension: flag_dimension(&partition),
            partition,
        })
        .collect();
    rows.sort_by(|a, b| {
        a.dimension
            .cmp(&b.dimension)
            .then_with(|| a.partition.cmp(&b.partition))
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::DEFAULT_TOL;

    fn diag(v: &[f64]) -> DensityMatrix {
        DensityMatrix::diagonal(v, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn qutrit_signatures() {
        let sig = orbit_signature(&DensityMatrix::maximally_mixed(3), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.multiplicities, vec![3]);
        assert_eq!(sig.state_class, StateClass::CompletelyRandom);
        assert_eq!(flag_manifold_name(&sig), "point");
        assert_eq!(orbit_dimension(&sig), 0);

        let sig = orbit_signature(&diag(&[0.6, 0.2, 0.2]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.multiplicities, vec![1, 2]);
        assert!((sig.distinct_values[0] - 0.6).abs() < 1e-15);
        assert!((sig.distinct_values[1] - 0.2).abs() < 1e-15);
        assert_eq!(sig.state_class, StateClass::PseudoPure);
        assert_eq!(flag_manifold_name(&sig), "U(3)/[U(1)xU(2)] = CP^2");
        assert_eq!(orbit_dimension(&sig), 4);

        let sig = orbit_signature(&diag(&[0.5, 0.3, 0.2]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.multiplicities, vec![1, 1, 1]);
        assert_eq!(sig.state_class, StateClass::Generic);
        assert_eq!(orbit_dimension(&sig), 6);

        let sig = orbit_signature(&diag(&[1.0, 0.0, 0.0]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.state_class, StateClass::Pure);

        // Single small eigenvalue: still two levels with multiplicities {1, n-1}.
        let sig = orbit_signature(&diag(&[0.4, 0.4, 0.2]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.multiplicities, vec![2, 1]);
        assert_eq!(sig.state_class, StateClass::PseudoPure);
        assert_eq!(flag_manifold_name(&sig), "U(3)/[U(2)xU(1)] = CP^2");

        let sig = orbit_signature(&diag(&[0.5, 0.5, 0.0]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.state_class, StateClass::PseudoPure);

        let sig = orbit_signature(&diag(&[0.3, 0.3, 0.2, 0.2]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(sig.state_class, StateClass::OtherDegenerate);
    }

    #[test]
    fn dimensions_from_multiplicities() {
        assert_eq!(flag_dimension(&[1, 2]), 4);
        assert_eq!(flag_dimension(&[2, 2]), 8);
        assert_eq!(flag_dimension(&[1, 1]), 2);
        assert_eq!(
            flag_manifold_label(&[1, 1, 1, 1]),
            "U(4)/[U(1)xU(1)xU(1)xU(1)]"
        );
    }

    #[test]
    fn ambiguous_clustering_detected() {
        // Gap 1.5e-8 splits the values, but the two means are within 2·tol.
        let spectrum = [0.5, 0.5 - 1.5e-8];
        let err = signature_from_spectrum(&spectrum, DEFAULT_CLUSTER_TOL);
        assert!(
            matches!(err, Err(Error::AmbiguousClustering { .. })),
            "{err:?}"
        );
    }

    #[test]
    fn majorization_fixtures() {
        let tol = 1e-12;
        assert_eq!(
            majorize_spectra(&[5.0 / 8.0, 2.0 / 8.0, 1.0 / 8.0], &[0.5, 0.5, 0.0], tol),
            Majorization::Incomparable
        );
        let p = [0.2, 0.2, 0.6];
        let q = [0.4, 0.4, 0.2];
        // Sorted: (0.6, 0.2, 0.2) dominates (0.4, 0.4, 0.2) at k = 1 and ties at k = 2.
        assert_eq!(majorize_spectra(&p, &q, tol), Majorization::Greater);
        assert_eq!(majorize_spectra(&q, &p, tol), Majorization::Less);
        assert_eq!(majorize_spectra(&p, &p, tol), Majorization::Equal);
    }

    #[test]
    fn entropy_fixtures() {
        assert_eq!(von_neumann_entropy(&diag(&[1.0, 0.0, 0.0])), 0.0);
        let s = von_neumann_entropy(&DensityMatrix::maximally_mixed(3));
        assert!((s - 3f64.ln()).abs() < 1e-14);
        let expected = -(0.5f64 * 0.5f64.ln() + 0.3 * 0.3f64.ln() + 0.2 * 0.2f64.ln());
        assert!((von_neumann_entropy(&diag(&[0.5, 0.3, 0.2])) - expected).abs() < 1e-14);
    }

    #[test]
    fn orbit_tables() {
        let dims = |n| -> Vec<usize> {
            enumerate_orbit_table(n)
                .unwrap()
                .iter()
                .map(|r| r.dimension)
                .collect()
        };
        assert_eq!(dims(2), vec![0, 2]);
        assert_eq!(dims(3), vec![0, 4, 6]);
        assert_eq!(dims(4), vec![0, 6, 8, 10, 12]);
        let rows = enumerate_orbit_table(4).unwrap();
        assert_eq!(rows[3].partition_string(), "1+1+2");
        assert_eq!(rows[3].manifold, "U(4)/[U(1)xU(1)xU(2)]");
        for n in 2..=8 {
            let rows = enumerate_orbit_table(n).unwrap();
            assert!(rows.iter().all(|r| r.dimension % 2 == 0));
            assert!(rows.windows(2).all(|w| w[0].dimension <= w[1].dimension));
        }
        assert_eq!(integer_partitions(8).len(), 22);
        assert!(enumerate_orbit_table(9).is_err());
    }
}
