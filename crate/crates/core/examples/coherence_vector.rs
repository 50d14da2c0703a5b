//! Generalized Pauli basis and the coherence-vector embedding.
//!
//! cargo run --example coherence_vector

use qstrata::pauli::{generate_basis, Convention};
use qstrata::random::{random_density_matrix, seeded_rng};
use qstrata::{CoherenceVector, DensityMatrix, DEFAULT_TOL};

fn main() -> qstrata::Result<()> {
    let basis = generate_basis(3)?;
    let labels: Vec<String> = basis.labels().iter().map(ToString::to_string).collect();
    println!("qutrit basis: {}", labels.join(" "));

    let rho = DensityMatrix::new(random_density_matrix(3, &mut seeded_rng(3)), DEFAULT_TOL)?;
    let s = basis.coherence_vector(&rho)?;
    println!(
        "s = {:?}",
        s.components()
            .iter()
            .map(|x| (x * 1e4).round() / 1e4)
            .collect::<Vec<_>>()
    );
    println!(
        "|s|^2 = {:.12}, Tr rho^2 - 1/3 = {:.12}",
        s.norm().powi(2),
        rho.purity() - 1.0 / 3.0
    );

    let back = basis.reconstruct(&s)?;
    println!("round trip error {:.1e}", back.max_abs_diff(rho.matrix()));

    // Points on the sphere of radius sqrt(2/3) are pure-state candidates, but most are not states.
    let mut z = vec![0.0; 8];
    z[7] = (2.0f64 / 3.0).sqrt();
    let (ok, min) = basis.is_physical(
        &CoherenceVector::new(3, z.clone(), Convention::Coherence)?,
        DEFAULT_TOL,
    )?;
    println!("z-axis point: physical={ok} min eigenvalue={min:.4}");
    z[7] = -z[7];
    let (ok, min) = basis.is_physical(
        &CoherenceVector::new(3, z, Convention::Coherence)?,
        DEFAULT_TOL,
    )?;
    println!("opposite point: physical={ok} min eigenvalue={min:.4}");
    Ok(())
}
