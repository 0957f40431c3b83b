//! Build every matrix the library knows from one digraph and print them as
//! aligned integer grids.
//!
//! ```bash
//! cargo run --example matrices_tour
//! ```

use skewlap::families::directed_cycle;
use skewlap::matrices::{
    adjacency_in, adjacency_out, degree_matrices, laplacian_out, laplacian_underlying,
    skew_adjacency, skew_laplacian_new, skew_laplacian_old, underlying_adjacency,
};

fn main() {
    let g = directed_cycle(4).unwrap();
    let d = degree_matrices(&g);

    for (name, matrix) in [
        ("A+ (out-adjacency)", adjacency_out(&g)),
        ("A- (in-adjacency)", adjacency_in(&g)),
        ("S (skew-adjacency)", skew_adjacency(&g)),
        ("A(G_U) (underlying adjacency)", underlying_adjacency(&g)),
        ("D (total degrees)", d.total.clone()),
        ("D~ (net degrees)", d.net.clone()),
        ("L (underlying Laplacian)", laplacian_underlying(&g)),
        ("SL (total-degree skew Laplacian)", skew_laplacian_old(&g)),
        ("L+ (out-degree Laplacian)", laplacian_out(&g)),
        ("SL~ (net skew Laplacian)", skew_laplacian_new(&g)),
    ] {
        println!("{name}:");
        println!("{}", matrix.to_table());
    }

    // the cycle is balanced: the net degree diagonal vanishes and SL~ = -S
    let sl = skew_laplacian_new(&g);
    let s = skew_adjacency(&g);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(sl.get(i, j), -s.get(i, j));
        }
    }
    println!("balanced digraph: SL~ equals -S entrywise");
}
