//! Random elements of Sp(n) and symplectic orbit dimension bounds.
//!
//! cargo run --example symplectic_orbits

use qstrata::symplectic::{
    has_sp_block_form, random_symplectic, sp_orbit_bounds, symplectic_defect, table2,
};

fn main() -> qstrata::Result<()> {
    let s = random_symplectic(2, 42);
    println!(
        "random Sp(2): unitarity {:.1e}, S^T J S - J {:.1e}, block form {}",
        s.unitarity_deviation(),
        symplectic_defect(&s)?,
        has_sp_block_form(&s, 1e-10)?
    );

    // Same spectrum, different arrangement, different symplectic orbits.
    for diag in [[0.3, 0.2, 0.3, 0.2], [0.3, 0.3, 0.2, 0.2]] {
        let r = sp_orbit_bounds(&diag)?;
        println!(
            "{diag:?}: U(4) orbit dim {}, Sp(2) orbit dim <= {}",
            r.unitary_dim, r.min_bound
        );
        for rule in &r.rules {
            println!(
                "    {:?}: {}{}",
                rule.rule,
                rule.bound,
                if rule.exact { " (exact)" } else { "" }
            );
        }
    }

    println!("\npattern  U(2n)  Sp(n)");
    for row in table2() {
        println!(
            "{:8} {:5}  {:5}",
            row.pattern, row.unitary_dim, row.computed_bound
        );
    }
    Ok(())
}
