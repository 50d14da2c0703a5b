//! How often a random point on a coherence sphere is a state.
//!
//! cargo run --release --example sphere_sampling

use qstrata::qutrit::sphere_physical_fraction;

fn main() -> qstrata::Result<()> {
    for n in [2, 3, 4] {
        for c2 in [0.45, 0.6, 0.8, 1.0] {
            if c2 <= 1.0 / n as f64 {
                continue;
            }
            let f = sphere_physical_fraction(n, c2, 4000, 11)?;
            println!("n={n} c2={c2:.2}: {:.3}", f);
        }
    }
    Ok(())
}
