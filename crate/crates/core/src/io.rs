//! JSON and CSV encodings used by the command-line tool.
//!
//! Every number written out is first rounded to 12 significant digits, then
//! printed in its shortest round-trip form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::orbits::OrbitTableRow;
use crate::pauli::{CoherenceVector, Convention};
use crate::qutrit::{Curve, RegionRecord};
use crate::symplectic::Table2Row;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds `x` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

/// Text form of `sig12(x)`; `-0` prints as `0`.
pub fn fmt_num(x: f64) -> String {
    let r = sig12(x);
    if r == 0.0 {
        "0".to_string()
    } else {
        r.to_string()
    }
}

fn round_rows(rows: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    rows.into_iter()
        .map(|row| row.into_iter().map(|x| sig12(x) + 0.0).collect())
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            dim: m.dim(),
            re: round_rows(m.real_rows()),
            im: Some(round_rows(m.imag_rows())),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.dim != self.re.len() {
            return Err(Error::Parse(format!(
                "dim is {} but re has {} rows",
                self.dim,
                self.re.len()
            )));
        }
        ComplexMatrix::from_parts(&self.re, self.im.as_deref())
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VectorFile {
    pub dim: usize,
    pub convention: Convention,
    pub components: Vec<f64>,
}

impl VectorFile {
    pub fn from_vector(s: &CoherenceVector) -> Self {
        Self {
            dim: s.dim(),
            convention: s.convention(),
            components: s.components().iter().map(|&x| sig12(x) + 0.0).collect(),
        }
    }

    pub fn to_vector(&self) -> Result<CoherenceVector> {
        CoherenceVector::new(self.dim, self.components.clone(), self.convention)
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    serde_json::from_str::<MatrixFile>(text)
        .map_err(parse_error)?
        .to_matrix()
}

pub fn parse_vector(text: &str) -> Result<CoherenceVector> {
    serde_json::from_str::<VectorFile>(text)
        .map_err(parse_error)?
        .to_vector()
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_matrix(m)).expect("plain data serializes")
}

pub fn vector_to_json(s: &CoherenceVector) -> String {
    serde_json::to_string_pretty(&VectorFile::from_vector(s)).expect("plain data serializes")
}

fn csv(header: &str, lines: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn orbit_table_csv(rows: &[OrbitTableRow]) -> String {
    csv(
        "partition,manifold,dimension",
        rows.iter()
            .map(|r| format!("{},{},{}", r.partition_string(), r.manifold, r.dimension)),
    )
}

pub fn table2_csv(rows: &[Table2Row]) -> String {
    csv(
        "pattern,unitary_dim,paper_bound,computed_bound,exact",
        rows.iter().map(|r| {
            format!(
                "{},{},{},{},{}",
                r.pattern, r.unitary_dim, r.paper_bound, r.computed_bound, r.exact
            )
        }),
    )
}

pub fn region_csv(records: &[RegionRecord]) -> String {
    csv(
        "a,c2,class,curve1,curve2,curve3",
        records.iter().map(|r| {
            format!(
                "{},{},{},{},{},{}",
                fmt_num(r.a),
                fmt_num(r.c2),
                r.class,
                fmt_num(r.curve1),
                fmt_num(r.curve2),
                fmt_num(r.curve3)
            )
        }),
    )
}

fn curves_csv(header: &str, curves: &[Curve]) -> String {
    csv(
        header,
        curves.iter().flat_map(|curve| {
            curve
                .points
                .iter()
                .map(move |&(a, y)| format!("{},{},{}", fmt_num(curve.c2), fmt_num(a), fmt_num(y)))
        }),
    )
}

pub fn fig2_csv(curves: &[Curve]) -> String {
    curves_csv("c2,a,a_plus_b", curves)
}

pub fn fig3_csv(curves: &[Curve]) -> String {
    curves_csv("c2,a,entropy", curves)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionRecord {
    pub n: usize,
    pub c2: f64,
    pub samples: usize,
    pub fraction: f64,
    pub seed: u64,
}

pub fn fractions_csv(records: &[FractionRecord]) -> String {
    csv(
        "n,c2,samples,fraction,seed",
        records.iter().map(|r| {
            format!(
                "{},{},{},{},{}",
                r.n,
                fmt_num(r.c2),
                r.samples,
                fmt_num(r.fraction),
                r.seed
            )
        }),
    )
}
