//! Quaternion vectors as complex vectors of twice the length.
//!
//! cargo run --example quaternions

use qstrata::quaternion::{complex_to_quat, quat_inner, quat_to_complex};
use qstrata::symplectic::skew_form;
use qstrata::Quaternion;

fn main() -> qstrata::Result<()> {
    let names = ["1", "e1", "e2", "e3"];
    for (i, name) in names.iter().enumerate() {
        let row: Vec<String> = (0..4)
            .map(|j| {
                format!(
                    "{:>16}",
                    (Quaternion::basis(i) * Quaternion::basis(j)).to_string()
                )
            })
            .collect();
        println!("{name:>2} * _ = {}", row.join("  "));
    }

    let q = [
        Quaternion::new(1.0, 2.0, 0.5, -1.0),
        Quaternion::new(0.0, -1.0, 3.0, 0.25),
    ];
    let p = [
        Quaternion::new(0.5, 0.0, -2.0, 1.0),
        Quaternion::new(2.0, 1.0, 1.0, 0.0),
    ];
    let (z, w) = (quat_to_complex(&q), quat_to_complex(&p));
    assert_eq!(complex_to_quat(&z)?, q.to_vec());

    let inner = quat_inner(&q, &p)?;
    let hermitian: qstrata::Complex64 = z.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
    let skew = skew_form(&z, &w)?;
    println!("<q, p> = {inner}");
    println!("complex part {hermitian}, skew part {skew}");
    Ok(())
}
