//! The qutrit (a, c2) region: classification, feasible intervals and curves.
//!
//! cargo run --example qutrit_region

use qstrata::qutrit::{
    feasibility, feasible_interval, fig2_curve, fig3_curve, linspace, physical_range,
};

fn main() -> qstrata::Result<()> {
    for (a, c2) in [
        (1.0 / 3.0, 1.0 / 3.0),
        (0.5, 0.4),
        (0.9, 0.6),
        (0.2, 0.9),
        (0.25, 0.5),
    ] {
        println!("a={a:.4} c2={c2:.2}: {}", feasibility(a, c2)?);
    }
    for c2 in [0.4, 0.5, 0.6, 0.8, 1.0] {
        let iv = feasible_interval(c2)?;
        println!(
            "c2={c2:.2}: distinct orbits for a in [{:.6}, {:.6}]",
            iv.a_lo, iv.a_hi
        );
    }

    let c2 = 0.6;
    let (lo, hi) = physical_range(c2)?;
    let a = linspace(lo, hi, 5);
    let sums = fig2_curve(c2, &a)?;
    let entropy = fig3_curve(c2, &a)?;
    for ((a, s), (_, h)) in sums.points.iter().zip(&entropy.points) {
        println!("c2=0.6 a={a:.4} a+b={s:.4} S={h:.4}");
    }
    Ok(())
}
