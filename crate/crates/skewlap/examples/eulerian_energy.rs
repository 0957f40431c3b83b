//! On a balanced digraph the net degree diagonal vanishes, so the skew
//! Laplacian energy collapses to the skew energy. Check it on a batch of
//! random balanced digraphs.
//!
//! ```bash
//! cargo run --example eulerian_energy
//! ```

use skewlap::energy::{skew_energy, sle};
use skewlap::families::random_balanced;

fn main() {
    let mut worst: f64 = 0.0;
    for seed in 0..50 {
        let n = 5 + (seed as usize % 6);
        let g = random_balanced(n, 2, seed).unwrap();
        assert!(g.is_balanced());
        let a = sle(&g).unwrap();
        let b = skew_energy(&g).unwrap();
        worst = worst.max((a - b).abs());
        if seed < 5 {
            println!(
                "n = {n:2}, m = {:2}: sle = {a:.12}, skew energy = {b:.12}",
                g.arc_count()
            );
        }
    }
    println!("50 balanced digraphs: worst |sle - skew energy| = {worst:e}");
}
