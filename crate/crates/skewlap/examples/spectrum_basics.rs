//! Eigenvalues of the net skew Laplacian: conjugate pairs, zero
//! multiplicities, exact spectral moments, and the exact characteristic
//! polynomial.
//!
//! ```bash
//! cargo run --example spectrum_basics
//! ```

use skewlap::eigen::{characteristic_polynomial, eigenvalues, spectral_moment};
use skewlap::families::directed_path;
use skewlap::matrices::skew_laplacian_new;
use skewlap::Digraph;

fn main() {
    let p4 = directed_path(4).unwrap();
    let sl = skew_laplacian_new(&p4);

    let spectrum = eigenvalues(&sl).unwrap();
    println!("net skew Laplacian spectrum of the directed path on 4 vertices:");
    for v in spectrum.values() {
        println!("  {v}");
    }
    println!("zero multiplicity: {}", spectrum.zero_multiplicity());
    println!("certified residual: {:e}", spectrum.residual());

    // moments come from traces, with no eigendecomposition involved
    println!("tr(SL~)   = {}", spectral_moment(&sl, 1));
    println!("tr(SL~^2) = {}", spectral_moment(&sl, 2));

    // exact integer characteristic polynomial, descending powers
    println!("char poly = {:?}", characteristic_polynomial(&sl).unwrap());

    // a defective case: the single arc gives a nilpotent 2x2 block whose
    // double zero is still reported exactly
    let arc = Digraph::new(2, [(0, 1)]).unwrap();
    let s = eigenvalues(&skew_laplacian_new(&arc)).unwrap();
    println!("single arc spectrum: {:?}", s.values());
}
