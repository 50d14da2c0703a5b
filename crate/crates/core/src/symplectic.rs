//! The compact symplectic group `Sp(n) = {S ∈ U(2n) : SᵀJS = J}` and bounds on
//! the dimension of its orbits through diagonal states.
//!
//! Symplectic orbits refine unitary orbits: `diag(a,b,a,b)` and `diag(a,a,b,b)`
//! share a spectrum but lie on different `Sp(n)` orbits, so every routine here
//! takes the diagonal in its given order.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::expm::expm;
use crate::matrix::ComplexMatrix;
use crate::orbits::{flag_dimension, signature_from_spectrum, StateClass, DEFAULT_CLUSTER_TOL};
use crate::random::{random_complex_matrix, seeded_rng};

/// Tolerance for normalization of orbit-bound inputs.
pub const NORMALIZATION_TOL: f64 = 1e-9;

/// `[[0, Iₙ], [-Iₙ, 0]]`
pub fn standard_j(n: usize) -> ComplexMatrix {
    let mut j = ComplexMatrix::zeros(2 * n);
    for i in 0..n {
        j[(i, n + i)] = Complex64::new(1.0, 0.0);
        j[(n + i, i)] = Complex64::new(-1.0, 0.0);
    }
    j
}

fn half_dim(s: &ComplexMatrix) -> Result<usize> {
    let dim = s.dim();
    if !dim.is_multiple_of(2) {
        return Err(Error::OddDimension { dim });
    }
    Ok(dim / 2)
}

/// `max |SᵀJS - J|`.
pub fn symplectic_defect(s: &ComplexMatrix) -> Result<f64> {
    let n = half_dim(s)?;
    let j = standard_j(n);
    Ok((&(&s.transpose() * &j) * s).max_abs_diff(&j))
}

/// `SᵀJS = J` and `S†S = I`, both within `tol`.
pub fn is_symplectic(s: &ComplexMatrix, tol: f64) -> Result<bool> {
    Ok(symplectic_defect(s)? <= tol && s.unitarity_deviation() <= tol)
}

/// `S = [[A, B], [-B*, A*]]` within `tol` (`*` is entrywise conjugation).
pub fn has_sp_block_form(s: &ComplexMatrix, tol: f64) -> Result<bool> {
    let n = half_dim(s)?;
    let a = s.block(0, 0, n);
    let b = s.block(0, n, n);
    let c = s.block(n, 0, n);
    let d = s.block(n, n, n);
    let minus_b_conj = b.conj().scale_real(-1.0);
    Ok(c.max_abs_diff(&minus_b_conj) <= tol && d.max_abs_diff(&a.conj()) <= tol)
}

/// Projects `X` onto `sp(n) = {X : X† = -X, XᵀJ + JX = 0}`.
///
/// First takes the anti-Hermitian part, then averages with `J Xᵀ J`, an
/// involution that preserves anti-Hermiticity and whose fixed points are the
/// solutions of `XᵀJ + JX = 0`.
pub fn project_to_sp_algebra(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = half_dim(x)?;
    let j = standard_j(n);
    let anti = (x - &x.adjoint()).scale_real(0.5);
    let mirrored = &(&j * &anti.transpose()) * &j;
    Ok((&anti + &mirrored).scale_real(0.5))
}

/// `exp(X)` for a random `X ∈ sp(n)`, deterministic per seed.
pub fn random_symplectic(n: usize, seed: u64) -> ComplexMatrix {
    random_symplectic_with(n, &mut seeded_rng(seed))
}

pub fn random_symplectic_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    assert!(n >= 1, "Sp(n) needs n >= 1");
    let g = random_complex_matrix(2 * n, rng);
    let x = project_to_sp_algebra(&g).expect("2n is even");
    expm(&x)
}

/// Canonical skew form `S(z, z') = Σᵢ (zᵢ z'_{n+i} - z_{n+i} z'ᵢ) = zᵀ J z'`.
pub fn skew_form(z: &[Complex64], z2: &[Complex64]) -> Result<Complex64> {
    if z.len() != z2.len() {
        return Err(Error::LengthMismatch {
            left: z.len(),
            right: z2.len(),
        });
    }
    if !z.len().is_multiple_of(2) {
        return Err(Error::OddDimension { dim: z.len() });
    }
    let n = z.len() / 2;
    Ok((0..n).map(|i| z[i] * z2[n + i] - z[n + i] * z2[i]).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SpRule {
    /// Pseudo-pure or completely random: `Sp(n)` is transitive on the unitary orbit.
    Transitive,
    /// Isotropy contains the maximal torus: `≤ 2n²`.
    GenericTorus,
    /// `diag(σ, σ)`, σ not scalar: isotropy also contains `{zJ}`, `≤ 2n² - 1`.
    EqualHalves,
    /// `diag(a·Iₙ, b·Iₙ)`, `a ≠ b`: isotropy is `U(n)`, dimension exactly `n² + n`.
    ScalarHalves,
    /// `diag(D, α·I_{2ℓ})`: isotropy contains `Sp(ℓ)`, `≤ n(2n+1) - ℓ(2ℓ+1)`.
    TrailingScalarBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpRuleBound {
    pub rule: SpRule,
    pub bound: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpOrbitReport {
    pub half_dim: usize,
    /// The diagonal as given (not sorted).
    pub diagonal: Vec<f64>,
    pub rules: Vec<SpRuleBound>,
    /// Smallest applicable bound, never above `unitary_dim` since every
    /// symplectic orbit lies inside its unitary orbit.
    pub min_bound: usize,
    pub unitary_dim: usize,
}

impl SpOrbitReport {
    /// Whether `min_bound` is attained by a rule that gives the exact dimension.
    pub fn min_is_exact(&self) -> bool {
        self.rules
            .iter()
            .any(|r| r.exact && r.bound == self.min_bound)
    }

    pub fn rule(&self, rule: SpRule) -> Option<&SpRuleBound> {
        self.rules.iter().find(|r| r.rule == rule)
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= DEFAULT_CLUSTER_TOL
}

fn is_scalar(values: &[f64]) -> bool {
    values.iter().all(|&v| close(v, values[0]))
}

/// Applies every orbit-dimension rule that fits `diagonal` (length `2n`).
pub fn sp_orbit_bounds(diagonal: &[f64]) -> Result<SpOrbitReport> {
    let len = diagonal.len();
    if len == 0 || !len.is_multiple_of(2) {
        return Err(Error::OddDimension { dim: len });
    }
    let sum: f64 = diagonal.iter().sum();
    let in_range = diagonal
        .iter()
        .all(|&v| (-NORMALIZATION_TOL..=1.0 + NORMALIZATION_TOL).contains(&v));
    if !in_range || (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized { sum });
    }
    let n = len / 2;
    let signature = signature_from_spectrum(diagonal, DEFAULT_CLUSTER_TOL)?;
    let unitary_dim = flag_dimension(&signature.multiplicities);
    let group_dim = n * (2 * n + 1);

    let mut rules = Vec::new();
    if matches!(
        signature.state_class,
        StateClass::CompletelyRandom | StateClass::Pure | StateClass::PseudoPure
    ) {
        rules.push(SpRuleBound {
            rule: SpRule::Transitive,
            bound: unitary_dim,
            exact: true,
        });
    }
    rules.push(SpRuleBound {
        rule: SpRule::GenericTorus,
        bound: 2 * n * n,
        exact: false,
    });

    let (first, second) = diagonal.split_at(n);
    if first.iter().zip(second).all(|(&x, &y)| close(x, y)) && !is_scalar(first) {
        rules.push(SpRuleBound {
            rule: SpRule::EqualHalves,
            bound: 2 * n * n - 1,
            exact: false,
        });
    }
    if is_scalar(first) && is_scalar(second) && !close(first[0], second[0]) {
        rules.push(SpRuleBound {
            rule: SpRule::ScalarHalves,
            bound: n * n + n,
            exact: true,
        });
    }

    let last = diagonal[len - 1];
    let run = diagonal
        .iter()
        .rev()
        .take_while(|&&v| close(v, last))
        .count();
    let ell = run / 2;
    if ell >= 1 && ell < n {
        rules.push(SpRuleBound {
            rule: SpRule::TrailingScalarBlock,
            bound: group_dim - ell * (2 * ell + 1),
            exact: false,
        });
    }

    let min_rule = rules.iter().map(|r| r.bound).min().unwrap_or(unitary_dim);
    Ok(SpOrbitReport {
        half_dim: n,
        diagonal: diagonal.to_vec(),
        rules,
        min_bound: min_rule.min(unitary_dim),
        unitary_dim,
    })
}

/// One row of the unitary-vs-symplectic orbit dimension comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2Row {
    /// Matrix size `2n`.
    pub size: usize,
    /// Letter pattern such as `aabb`; different letters are different values.
    pub pattern: &'static str,
    pub unitary_dim: usize,
    /// The bound as printed in the published comparison table.
    pub paper_bound: usize,
    pub computed_bound: usize,
    pub exact: bool,
}

/// Published rows: `(pattern, printed U(2n) dimension, printed Sp(n) bound)`.
pub const TABLE2_PATTERNS: [(&str, usize, usize); 16] = [
    ("aaaa", 0, 0),
    ("abbb", 6, 6),
    ("aabb", 8, 6),
    ("abcc", 10, 8),
    ("abcd", 12, 8),
    ("aaaaaa", 0, 0),
    ("abbbbb", 10, 10),
    ("aabbbb", 16, 11),
    ("abcccc", 18, 11),
    ("abbccc", 22, 18),
    ("abcddd", 24, 18),
    ("aabbcc", 24, 18),
    ("aaabbb", 18, 12),
    ("abccdd", 26, 18),
    ("abcdee", 28, 18),
    ("abcdef", 30, 18),
];

/// Concrete normalized diagonal for a letter pattern: letter `k` gets weight `k + 1`.
pub fn pattern_diagonal(pattern: &str) -> Vec<f64> {
    let weights: Vec<f64> = pattern.bytes().map(|b| f64::from(b - b'a' + 1)).collect();
    let total: f64 = weights.iter().sum();
    weights.into_iter().map(|w| w / total).collect()
}

pub fn table2() -> Vec<Table2Row> {
    TABLE2_PATTERNS
        .iter()
        .map(|&(pattern, _, paper_bound)| {
            let report = sp_orbit_bounds(&pattern_diagonal(pattern))
                .expect("table patterns are normalized and even-sized");
            Table2Row {
                size: pattern.len(),
                pattern,
                unitary_dim: report.unitary_dim,
                paper_bound,
                computed_bound: report.min_bound,
                exact: report.min_is_exact(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_structure() {
        let j = standard_j(1);
        assert_eq!(j[(0, 1)].re, 1.0);
        assert_eq!(j[(1, 0)].re, -1.0);
        for n in 1..4 {
            let j = standard_j(n);
            let minus_i = ComplexMatrix::identity(2 * n).scale_real(-1.0);
            assert_eq!(&j * &j, minus_i);
            assert_eq!(j.transpose(), j.scale_real(-1.0));
            assert!(is_symplectic(&j, 1e-12).unwrap());
        }
    }

    #[test]
    fn membership() {
        assert!(is_symplectic(&ComplexMatrix::identity(4), 1e-12).unwrap());
        assert!(has_sp_block_form(&ComplexMatrix::identity(4), 1e-12).unwrap());
        let squeeze = ComplexMatrix::from_diagonal(&[2.0, 0.5, 1.0, 1.0]);
        assert!(!is_symplectic(&squeeze, 1e-8).unwrap());
        assert!(matches!(
            is_symplectic(&ComplexMatrix::identity(3), 1e-8),
            Err(Error::OddDimension { dim: 3 })
        ));
        assert!(has_sp_block_form(&ComplexMatrix::identity(3), 1e-8).is_err());
    }

    #[test]
    fn random_symplectic_properties() {
        let s = random_symplectic(2, 17);
        assert_eq!(s, random_symplectic(2, 17));
        assert!(s.unitarity_deviation() <= 1e-8);
        assert!(symplectic_defect(&s).unwrap() <= 1e-8);
        assert!(has_sp_block_form(&s, 1e-8).unwrap());
        assert!(s.max_abs_diff(&ComplexMatrix::identity(4)) > 0.1);
    }

    #[test]
    fn generic_unitary_lacks_block_form() {
        let u = crate::random::random_unitary(4, &mut seeded_rng(5));
        assert!(!has_sp_block_form(&u, 1e-8).unwrap());
        assert!(!is_symplectic(&u, 1e-8).unwrap());
    }

    #[test]
    fn skew_form_fixtures() {
        let c = |re| Complex64::new(re, 0.0);
        assert_eq!(
            skew_form(&[c(1.0), c(0.0)], &[c(0.0), c(1.0)]).unwrap(),
            c(1.0)
        );
        let z = [Complex64::new(0.3, 1.0), Complex64::new(-2.0, 0.5)];
        assert_eq!(skew_form(&z, &z).unwrap(), c(0.0));
        assert!(skew_form(&z, &z[..1]).is_err());
        assert!(skew_form(&z[..1], &z[..1]).is_err());
    }

    #[test]
    fn bound_rules() {
        let (a, b) = (0.4, 0.2);
        let r = sp_orbit_bounds(&[a, b, b, b]).unwrap();
        assert_eq!(r.min_bound, 6);
        assert_eq!(r.unitary_dim, 6);
        assert!(r.rule(SpRule::Transitive).unwrap().exact);

        let (a, b) = (0.3, 0.2);
        let r = sp_orbit_bounds(&[a, a, b, b]).unwrap();
        assert_eq!(r.rule(SpRule::ScalarHalves).unwrap().bound, 6);
        assert_eq!(r.min_bound, 6);
        assert_eq!(r.unitary_dim, 8);

        let r = sp_orbit_bounds(&[0.4, 0.3, 0.2, 0.1]).unwrap();
        assert_eq!(r.min_bound, 8);
        assert_eq!(r.unitary_dim, 12);

        let r = sp_orbit_bounds(&pattern_diagonal("abcccc")).unwrap();
        assert_eq!(r.rule(SpRule::TrailingScalarBlock).unwrap().bound, 11);

        let r = sp_orbit_bounds(&[0.3, 0.2, 0.3, 0.2]).unwrap();
        assert_eq!(r.rule(SpRule::EqualHalves).unwrap().bound, 7);
        assert_eq!(r.min_bound, 7);

        // Unordered spectrum matters: same spectrum, different rules.
        let r0 = sp_orbit_bounds(&[0.3, 0.2, 0.3, 0.2]).unwrap();
        let r1 = sp_orbit_bounds(&[0.3, 0.3, 0.2, 0.2]).unwrap();
        assert_eq!(r0.unitary_dim, r1.unitary_dim);
        assert_ne!(r0.min_bound, r1.min_bound);
    }

    #[test]
    fn bound_input_errors() {
        assert!(matches!(
            sp_orbit_bounds(&[0.5, 0.5, 0.5]),
            Err(Error::OddDimension { .. })
        ));
        assert!(matches!(
            sp_orbit_bounds(&[0.5, 0.6]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            sp_orbit_bounds(&[1.5, -0.5]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn min_bound_capped_by_unitary_dimension() {
        // aaaabb: only the trailing pair is detected (ℓ = 1 → 18), but the
        // unitary orbit itself has dimension 36 - 16 - 4 = 16.
        let r = sp_orbit_bounds(&pattern_diagonal("aaaabb")).unwrap();
        assert_eq!(r.unitary_dim, 16);
        assert_eq!(r.min_bound, 16);
    }

    #[test]
    fn table_rows() {
        let rows = table2();
        assert_eq!(rows.len(), 16);
        let row = rows.iter().find(|r| r.pattern == "aaabbb").unwrap();
        assert_eq!(
            (row.unitary_dim, row.paper_bound, row.computed_bound),
            (18, 12, 12)
        );
        assert!(row.exact);
        let row = rows.iter().find(|r| r.pattern == "abcdef").unwrap();
        assert_eq!((row.unitary_dim, row.computed_bound), (30, 18));
        let row = rows.iter().find(|r| r.pattern == "aaaa").unwrap();
        assert_eq!((row.unitary_dim, row.computed_bound), (0, 0));
    }
}
