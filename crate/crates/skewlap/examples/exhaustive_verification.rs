//! Run the verification sweep: every oriented graph on up to 4 vertices,
//! plus a randomized batch at order 8, checking every bound, moment
//! identity, and equality classification.
//!
//! ```bash
//! cargo run --release --example exhaustive_verification
//! ```

use skewlap::oracle::{sweep_bounds, RandomSweep, SweepConfig};

fn main() {
    let summary = sweep_bounds(&SweepConfig {
        exhaustive_max: Some(4),
        random: Some(RandomSweep {
            count: 2000,
            n: 8,
            arc_probability: 0.5,
            seed: 42,
        }),
        tol: 1e-7,
    })
    .unwrap();

    println!("digraphs checked:   {}", summary.digraphs_checked);
    println!("violations:         {}", summary.violations.len());
    println!("lower-bound tight:  {}", summary.lower_tight);
    println!("upper-bound tight:  {}", summary.upper_tight);
    println!("min nonzero slack:  {:?}", summary.min_nonzero_slack);
    println!("max residual:       {:e}", summary.max_residual);
    println!(
        "min nonzero |mu|:   {:?}",
        summary.min_nonzero_eigenvalue_modulus
    );
    for v in &summary.violations {
        println!("violation: {} on\n{}{}", v.check, v.digraph, v.detail);
    }
    assert!(summary.violations.is_empty());
    println!("sweep clean");
}
