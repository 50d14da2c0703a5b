//! Classify a few states by their unitary orbit.
//!
//! cargo run --example classify_state

use qstrata::orbits::{flag_manifold_name, orbit_dimension, orbit_signature, von_neumann_entropy};
use qstrata::random::{conjugate_diagonal, random_unitary, seeded_rng};
use qstrata::{DensityMatrix, DEFAULT_TOL};

fn main() -> qstrata::Result<()> {
    let spectra: [&[f64]; 5] = [
        &[1.0 / 3.0; 3],
        &[1.0, 0.0, 0.0],
        &[0.6, 0.2, 0.2],
        &[0.5, 0.3, 0.2],
        &[0.3, 0.3, 0.2, 0.2],
    ];
    let mut rng = seeded_rng(1);
    for spectrum in spectra {
        // Hide the spectrum behind a random change of basis.
        let u = random_unitary(spectrum.len(), &mut rng);
        let rho = DensityMatrix::new(conjugate_diagonal(spectrum, &u), DEFAULT_TOL)?;
        let sig = orbit_signature(&rho, 1e-8)?;
        println!(
            "{:?}: {} | {} | dim {} | S = {:.4}",
            spectrum,
            sig.state_class,
            flag_manifold_name(&sig),
            orbit_dimension(&sig),
            von_neumann_entropy(&rho)
        );
    }
    Ok(())
}
