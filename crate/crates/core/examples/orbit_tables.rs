//! Orbit types of n-level systems: partitions, flag manifolds, dimensions.
//!
//! cargo run --example orbit_tables [n]

use qstrata::io::orbit_table_csv;
use qstrata::orbits::enumerate_orbit_table;

fn main() -> qstrata::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    print!("{}", orbit_table_csv(&enumerate_orbit_table(n)?));
    Ok(())
}
