//! Evaluate the energy bounds on digraphs that attain them: the directed
//! path and the oriented complete bipartite family hit the lower bound, the
//! triangle family hits the upper bound.
//!
//! ```bash
//! cargo run --example bounds_and_tightness
//! ```

use skewlap::bounds::{full_report, DEFAULT_TIGHTNESS_TOL};
use skewlap::families::{
    directed_path, oriented_complete_bipartite_g1, triangles_plus_isolated_g2,
};

fn main() {
    let cases = [
        ("directed path on 4 vertices", directed_path(4).unwrap()),
        (
            "oriented complete bipartite, blocks of 2",
            oriented_complete_bipartite_g1(2).unwrap(),
        ),
        (
            "two oriented triangles plus an isolated vertex",
            triangles_plus_isolated_g2(2, 1).unwrap(),
        ),
    ];
    for (name, g) in cases {
        let report = full_report(&g, DEFAULT_TIGHTNESS_TOL).unwrap();
        println!("{name}:");
        println!("{}", report.to_table());
    }
}
