//! Compute every energy functional for the two reference digraphs: the
//! directed path and the directed cycle on four vertices.
//!
//! ```bash
//! cargo run --example energy_report
//! ```

use skewlap::energy::energy_report;
use skewlap::families::{directed_cycle, directed_path};

fn main() {
    let p4 = directed_path(4).unwrap();
    let c4 = directed_cycle(4).unwrap();

    println!("directed path on 4 vertices:");
    println!("{}", energy_report(&p4).unwrap().to_table());

    println!("directed cycle on 4 vertices:");
    println!("{}", energy_report(&c4).unwrap().to_table());

    // the path attains sle = 2 sqrt(2); the cycle is balanced, so its sle
    // coincides with its skew energy
    let report = energy_report(&c4).unwrap();
    assert!((report.sle - report.skew_energy).abs() < 1e-9);
    println!("cycle: sle == skew energy == {}", report.sle);
}
