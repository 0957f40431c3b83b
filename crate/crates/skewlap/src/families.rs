//! Generators for the named digraph families and for seeded random corpora.
//!
//! Random generation uses ChaCha8 keyed with a 64-bit seed, so every corpus
//! is reproducible bit for bit across platforms and runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::digraph::Digraph;

/// Family generation failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    /// A size or probability parameter is outside the family's domain.
    #[error("invalid parameter for family {family}: {reason}")]
    InvalidSize {
        family: &'static str,
        reason: String,
    },
    /// Random construction could not satisfy its constraints.
    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },
}

impl FamilyError {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyError::InvalidSize { .. } => "InvalidSize",
            FamilyError::GenerationFailed { .. } => "GenerationFailed",
        }
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidSize {
        family,
        reason: reason.into(),
    }
}

/// A named family with its parameters; the parsed form of `gen` requests.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    CompleteBipartite {
        block: usize,
    },
    TrianglesPlusIsolated {
        alpha: usize,
        beta: usize,
    },
    RandomOriented {
        n: usize,
        arc_probability: f64,
        seed: u64,
    },
    RandomTournament {
        n: usize,
        seed: u64,
    },
    RandomBalanced {
        n: usize,
        cycle_count: usize,
        seed: u64,
    },
}

impl FamilySpec {
    /// Builds the digraph this spec describes.
    pub fn generate(&self) -> Result<Digraph, FamilyError> {
        match *self {
            FamilySpec::Path { n } => directed_path(n),
            FamilySpec::Cycle { n } => directed_cycle(n),
            FamilySpec::CompleteBipartite { block } => oriented_complete_bipartite_g1(block),
            FamilySpec::TrianglesPlusIsolated { alpha, beta } => {
                triangles_plus_isolated_g2(alpha, beta)
            }
            FamilySpec::RandomOriented {
                n,
                arc_probability,
                seed,
            } => random_oriented(n, arc_probability, seed),
            FamilySpec::RandomTournament { n, seed } => random_tournament(n, seed),
            FamilySpec::RandomBalanced {
                n,
                cycle_count,
                seed,
            } => random_balanced(n, cycle_count, seed),
        }
    }
}

/// Directed path: arcs `(i, i+1)` for `i = 0..n-2`.
pub fn directed_path(n: usize) -> Result<Digraph, FamilyError> {
    if n < 1 {
        return Err(invalid("path", "need n >= 1"));
    }
    Ok(Digraph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).expect("path arcs are valid"))
}

/// Directed cycle: arcs `(i, (i+1) mod n)`; `n >= 3` so no loop or digon
/// arises.
pub fn directed_cycle(n: usize) -> Result<Digraph, FamilyError> {
    if n < 3 {
        return Err(invalid("cycle", "need n >= 3"));
    }
    Ok(Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle arcs are valid"))
}

/// Balanced orientation of the complete bipartite graph on `4 * block`
/// vertices. The four blocks `X1, X2, Y1, Y2` occupy the index ranges
/// `[0, b)`, `[b, 2b)`, `[2b, 3b)`, `[3b, 4b)`; arcs run `X1 -> Y1`,
/// `X2 -> Y2`, `Y1 -> X2`, and `Y2 -> X1`, complete between blocks. Every
/// vertex ends up balanced and `m = 4 * block^2`; this family attains the
/// lower energy bound with value `4 * block`.
pub fn oriented_complete_bipartite_g1(block: usize) -> Result<Digraph, FamilyError> {
    if block < 1 {
        return Err(invalid("g1", "need block size >= 1"));
    }
    let b = block;
    let x1 = 0..b;
    let x2 = b..2 * b;
    let y1 = 2 * b..3 * b;
    let y2 = 3 * b..4 * b;
    let mut arcs = Vec::with_capacity(4 * b * b);
    for u in x1.clone() {
        for v in y1.clone() {
            arcs.push((u, v));
        }
    }
    for u in x2.clone() {
        for v in y2.clone() {
            arcs.push((u, v));
        }
    }
    for u in y1 {
        for v in x2.clone() {
            arcs.push((u, v));
        }
    }
    for u in y2 {
        for v in x1.clone() {
            arcs.push((u, v));
        }
    }
    Ok(Digraph::new(4 * b, arcs).expect("bipartite arcs are valid"))
}

/// `alpha` disjoint oriented triangles followed by `beta` isolated vertices.
/// Each triangle is oriented cyclically; this family attains the upper
/// energy bound with value `2 sqrt(3) * alpha`.
pub fn triangles_plus_isolated_g2(alpha: usize, beta: usize) -> Result<Digraph, FamilyError> {
    if alpha + beta < 1 {
        return Err(invalid("g2", "need alpha + beta >= 1"));
    }
    let mut arcs = Vec::with_capacity(3 * alpha);
    for t in 0..alpha {
        let base = 3 * t;
        arcs.push((base, base + 1));
        arcs.push((base + 1, base + 2));
        arcs.push((base + 2, base));
    }
    Ok(Digraph::new(3 * alpha + beta, arcs).expect("triangle arcs are valid"))
}

/// Random oriented graph: each unordered pair independently carries no arc
/// with probability `1 - arc_probability`, otherwise an arc in a uniformly
/// random direction. Deterministic per seed (ChaCha8).
pub fn random_oriented(n: usize, arc_probability: f64, seed: u64) -> Result<Digraph, FamilyError> {
    if !(0.0..=1.0).contains(&arc_probability) {
        return Err(invalid("rand", "arc probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(arc_probability) {
                if rng.gen_bool(0.5) {
                    arcs.push((i, j));
                } else {
                    arcs.push((j, i));
                }
            }
        }
    }
    Ok(Digraph::new(n, arcs).expect("pairwise construction cannot collide"))
}

/// Random tournament: an orientation of the complete graph.
pub fn random_tournament(n: usize, seed: u64) -> Result<Digraph, FamilyError> {
    random_oriented(n, 1.0, seed)
}

/// Balanced digraph built as a union of `cycle_count` random directed
/// cycles with pairwise fresh arcs. A cycle proposal that would duplicate
/// an arc or close a digon is re-drawn; construction fails after the retry
/// cap. Every output satisfies `is_balanced`.
pub fn random_balanced(n: usize, cycle_count: usize, seed: u64) -> Result<Digraph, FamilyError> {
    const RETRY_CAP: usize = 2000;
    if n < 3 {
        return Err(invalid("balanced", "need n >= 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for _ in 0..cycle_count {
        let mut placed = false;
        for _attempt in 0..RETRY_CAP {
            let len = rng.gen_range(3..=n);
            let mut vertices: Vec<usize> = (0..n).collect();
            // partial Fisher-Yates: the first `len` entries become the cycle
            for i in 0..len {
                let j = rng.gen_range(i..n);
                vertices.swap(i, j);
            }
            let cycle = &vertices[..len];
            let candidate: Vec<(usize, usize)> =
                (0..len).map(|i| (cycle[i], cycle[(i + 1) % len])).collect();
            // cycles have length >= 3 over distinct vertices, so only
            // collisions against already placed arcs can occur
            let fresh = candidate
                .iter()
                .all(|&(u, v)| !arcs.contains(&(u, v)) && !arcs.contains(&(v, u)));
            if fresh {
                arcs.extend_from_slice(&candidate);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(FamilyError::GenerationFailed {
                attempts: RETRY_CAP,
                reason: format!("could not place a fresh directed cycle on {n} vertices"),
            });
        }
    }
    Ok(Digraph::new(n, arcs).expect("freshness check rules out collisions"))
}
