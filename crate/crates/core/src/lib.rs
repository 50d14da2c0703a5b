//! Geometry of finite-dimensional quantum states.
//!
//! Density matrices are classified by their unitary orbits (flag manifolds),
//! embedded in `ℝ^{n²-1}` through a generalized Pauli basis, and compared by
//! majorization. For qutrits the full `(a, c₂)` feasibility region is mapped,
//! and for even dimensions the orbits of the compact symplectic group are
//! bounded from above.

pub mod cli;
pub mod density;
pub mod eigen;
pub mod error;
pub mod expm;
pub mod io;
pub mod matrix;
pub mod orbits;
pub mod pauli;
pub mod quaternion;
pub mod qutrit;
pub mod random;
pub mod symplectic;

pub use density::{DensityMatrix, DEFAULT_TOL};
pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64;
pub use orbits::{Majorization, OrbitSignature, StateClass};
pub use pauli::{CoherenceVector, Convention, PauliBasis};
pub use quaternion::Quaternion;
pub use qutrit::RegionClass;
