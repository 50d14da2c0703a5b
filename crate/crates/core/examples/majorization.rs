//! Majorization of spectra and the entropy ordering it implies.
//!
//! cargo run --example majorization

use qstrata::orbits::{majorize_spectra, spectral_entropy};

fn main() {
    let pairs: [(&[f64], &[f64]); 3] = [
        (&[0.2, 0.2, 0.6], &[0.4, 0.4, 0.2]),
        (&[0.625, 0.25, 0.125], &[0.5, 0.5, 0.0]),
        (&[0.5, 0.3, 0.2], &[0.7, 0.2, 0.1]),
    ];
    for (p, q) in pairs {
        println!(
            "{p:?} vs {q:?}: {:?} (S = {:.4} vs {:.4})",
            majorize_spectra(p, q, 1e-12),
            spectral_entropy(p),
            spectral_entropy(q)
        );
    }
}
