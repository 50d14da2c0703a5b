//! Command-line front end: `classify`, `bloch`, `tables` and `qutrit`.
//!
//! Exit codes: 0 on success, 2 for unreadable or malformed input and bad
//! flags, 3 when the input parses but is not a valid state.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::density::{DensityMatrix, DEFAULT_TOL};
use crate::eigen::hermitian_eigenvalues;
use crate::error::Error;
use crate::io::{self, FractionRecord, MatrixFile, VectorFile};
use crate::orbits::{
    enumerate_orbit_table, flag_manifold_name, orbit_dimension, orbit_signature,
    von_neumann_entropy, DEFAULT_CLUSTER_TOL,
};
use crate::pauli::{generate_basis, is_physical_vector, Convention, MAX_BASIS_DIM};
use crate::qutrit::{
    default_a_grid, default_c2_grid, fig2_curve, fig3_curve, linspace, physical_range, region_grid,
    sphere_physical_fraction, DEFAULT_A_STEPS,
};
use crate::symplectic::table2;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

pub const TOL_ENV: &str = "ORBIT_ATLAS_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "qstrata",
    version,
    about = "Orbit geometry of finite-dimensional quantum states"
)]
pub struct Cli {
    /// Validation tolerance for density matrices.
    #[arg(long, global = true, env = TOL_ENV, default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Single-linkage tolerance for grouping eigenvalues.
    #[arg(long, global = true, default_value_t = DEFAULT_CLUSTER_TOL)]
    pub cluster_tol: f64,

    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the orbit type of a density matrix given as JSON.
    Classify {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Convert between a matrix and its coherence vector.
    Bloch(BlochArgs),
    /// Orbit tables: `2`..`8` for unitary orbit types, `sp` for symplectic bounds.
    Tables { which: String },
    /// Qutrit region datasets.
    #[command(subcommand)]
    Qutrit(QutritCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Matrix JSON in, vector JSON out.
    Vector,
    /// Vector JSON in, matrix JSON out.
    Matrix,
}

#[derive(Debug, Args)]
pub struct BlochArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub to: Target,
    /// Convention of the emitted vector.
    #[arg(long, value_enum, default_value = "coherence")]
    pub convention: VectorConvention,
    /// Also report whether the vector is a physical state and the minimum eigenvalue.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VectorConvention {
    Coherence,
    Bloch,
}

impl From<VectorConvention> for Convention {
    fn from(c: VectorConvention) -> Self {
        match c {
            VectorConvention::Coherence => Convention::Coherence,
            VectorConvention::Bloch => Convention::Bloch,
        }
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Purity values (comma separated); defaults to 0.35, 0.40, ..., 1.00.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub c2: Vec<f64>,
    /// Number of steps in `a`.
    #[arg(long, default_value_t = DEFAULT_A_STEPS)]
    pub a_steps: usize,
}

#[derive(Debug, Subcommand)]
pub enum QutritCommand {
    /// Classify every point of an `(a, c2)` grid.
    Region(GridArgs),
    /// `a + b` against `a` over the physical range.
    Fig2(GridArgs),
    /// Entropy against `a` over the physical range.
    Fig3(GridArgs),
    /// Physical fraction of random points on the coherence sphere.
    Fraction {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Purity values (comma separated); defaults to 0.5, 0.6, ..., 1.0.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        c2: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotHermitian { .. }
            | Error::NotUnitTrace { .. }
            | Error::NotPositive { .. }
            | Error::NoConvergence { .. }
            | Error::AmbiguousClustering { .. }
            | Error::NotNormalized { .. } => EXIT_INVALID,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub dim: usize,
    pub spectrum: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub state_class: String,
    pub manifold: String,
    pub orbit_dimension: usize,
    pub entropy: f64,
    pub coherence_radius: f64,
    pub purity: f64,
}

#[derive(Serialize)]
struct Checked<T: Serialize> {
    #[serde(flatten)]
    value: T,
    physical: bool,
    min_eigenvalue: f64,
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn check_tolerance(name: &str, value: f64) -> Result<(), CliError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(CliError::input(format!(
            "--{name} must be a positive number, got {value}"
        )))
    }
}

pub fn classify(rho: &DensityMatrix, cluster_tol: f64) -> Result<ClassifyReport, Error> {
    let sig = orbit_signature(rho, cluster_tol)?;
    let n = rho.dim();
    let purity = rho.purity();
    let coherence_radius = if n <= MAX_BASIS_DIM {
        generate_basis(n)?.coherence_vector(rho)?.norm()
    } else {
        (purity - 1.0 / n as f64).max(0.0).sqrt()
    };
    Ok(ClassifyReport {
        dim: n,
        spectrum: rho.spectrum().iter().map(|&x| io::sig12(x) + 0.0).collect(),
        multiplicities: sig.multiplicities.clone(),
        state_class: sig.state_class.to_string(),
        manifold: flag_manifold_name(&sig),
        orbit_dimension: orbit_dimension(&sig),
        entropy: io::sig12(von_neumann_entropy(rho)) + 0.0,
        coherence_radius: io::sig12(coherence_radius) + 0.0,
        purity: io::sig12(purity),
    })
}

fn cmd_bloch(args: &BlochArgs, tol: f64) -> Result<String, CliError> {
    let text = read_input(&args.input)?;
    match args.to {
        Target::Vector => {
            let m = io::parse_matrix(&text)?;
            let rho = DensityMatrix::new(m, tol)?;
            let s = generate_basis(rho.dim())?
                .coherence_vector(&rho)?
                .to_convention(args.convention.into());
            let file = VectorFile::from_vector(&s);
            if args.check {
                let (physical, min_eigenvalue) = is_physical_vector(&s, tol)?;
                Ok(to_json(&Checked {
                    value: file,
                    physical,
                    min_eigenvalue: io::sig12(min_eigenvalue),
                }))
            } else {
                Ok(to_json(&file))
            }
        }
        Target::Matrix => {
            let s = io::parse_vector(&text)?;
            let m = generate_basis(s.dim())?.reconstruct(&s)?;
            let file = MatrixFile::from_matrix(&m);
            if args.check {
                let min_eigenvalue = hermitian_eigenvalues(&m, tol)?
                    .last()
                    .copied()
                    .unwrap_or(0.0);
                Ok(to_json(&Checked {
                    value: file,
                    physical: min_eigenvalue >= -tol * s.dim() as f64,
                    min_eigenvalue: io::sig12(min_eigenvalue),
                }))
            } else {
                Ok(to_json(&file))
            }
        }
    }
}

fn cmd_tables(which: &str) -> Result<String, CliError> {
    if which == "sp" {
        return Ok(io::table2_csv(&table2()));
    }
    let n: usize = which.parse().map_err(|_| {
        CliError::input(format!(
            "expected an integer in [2, 8] or `sp`, got `{which}`"
        ))
    })?;
    Ok(io::orbit_table_csv(&enumerate_orbit_table(n)?))
}

fn c2_values(given: &[f64], default: Vec<f64>) -> Vec<f64> {
    if given.is_empty() {
        default
    } else {
        given.to_vec()
    }
}

fn a_values_on_physical_range(c2: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    let (lo, hi) = physical_range(c2)?;
    Ok(linspace(lo, hi, steps))
}

fn cmd_qutrit(command: &QutritCommand) -> Result<String, CliError> {
    match command {
        QutritCommand::Region(grid) => {
            let a_values = if grid.a_steps == DEFAULT_A_STEPS {
                default_a_grid()
            } else {
                linspace(1.0 / 3.0, 1.0, grid.a_steps)
            };
            let records = region_grid(&c2_values(&grid.c2, default_c2_grid()), &a_values)?;
            Ok(io::region_csv(&records))
        }
        QutritCommand::Fig2(grid) | QutritCommand::Fig3(grid) => {
            let is_fig2 = matches!(command, QutritCommand::Fig2(_));
            let mut curves = Vec::new();
            for c2 in c2_values(&grid.c2, default_c2_grid()) {
                let a_values = a_values_on_physical_range(c2, grid.a_steps)?;
                curves.push(if is_fig2 {
                    fig2_curve(c2, &a_values)?
                } else {
                    fig3_curve(c2, &a_values)?
                });
            }
            Ok(if is_fig2 {
                io::fig2_csv(&curves)
            } else {
                io::fig3_csv(&curves)
            })
        }
        QutritCommand::Fraction {
            n,
            c2,
            samples,
            seed,
        } => {
            let default: Vec<f64> = (5..=10).map(|k| k as f64 / 10.0).collect();
            let mut records = Vec::new();
            for c2 in c2_values(c2, default) {
                records.push(FractionRecord {
                    n: *n,
                    c2,
                    samples: *samples,
                    fraction: sphere_physical_fraction(*n, c2, *samples, *seed)?,
                    seed: *seed,
                });
            }
            Ok(io::fractions_csv(&records))
        }
    }
}

/// Executes a parsed command and returns the text to emit.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    check_tolerance("tol", cli.tol)?;
    check_tolerance("cluster-tol", cli.cluster_tol)?;
    match &cli.command {
        Command::Classify { input } => {
            let m = io::parse_matrix(&read_input(input)?)?;
            let rho = DensityMatrix::new(m, cli.tol)?;
            Ok(to_json(&classify(&rho, cli.cluster_tol)?))
        }
        Command::Bloch(args) => cmd_bloch(args, cli.tol),
        Command::Tables { which } => cmd_tables(which),
        Command::Qutrit(command) => cmd_qutrit(command),
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = execute(&cli).and_then(|text| match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::input(format!("cannot write output: {e}"))),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

pub fn run() -> i32 {
    run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["qstrata"];
        full.extend_from_slice(args);
        let code = run_with(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn tables_output() {
        let (code, out, _) = run_args(&["tables", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
        let (code, out, _) = run_args(&["tables", "sp"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("pattern,unitary_dim,paper_bound,computed_bound,exact\n"));
        assert_eq!(out.lines().count(), 17);
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(run_args(&["tables", "9"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["tables", "x"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["tables", "3", "--bogus"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["qutrit", "fig2", "--c2", "1.5"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["--tol", "-1", "tables", "3"]).0, EXIT_INPUT);
        assert_eq!(
            run_args(&["classify", "--input", "/nonexistent/file.json"]).0,
            EXIT_INPUT
        );
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
    }

    #[test]
    fn fig3_center_is_single_record() {
        let (code, out, _) = run_args(&["qutrit", "fig3", "--c2", "0.3333333"]);
        assert_eq!(code, 0, "{out}");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        let entropy: f64 = lines[1].split(',').nth(2).unwrap().parse().unwrap();
        assert!((entropy - 3f64.ln()).abs() < 1e-11);
    }
}
