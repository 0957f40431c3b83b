//! Immutable model of a simple oriented digraph.
//!
//! A [`Digraph`] has no loops, no duplicate arcs, and no digons (pairs of
//! opposite arcs). Ruling out digons at construction keeps the skew-adjacency
//! entries well-defined: every adjacent pair contributes exactly one `+1/-1`
//! pair to `S`.

use std::collections::HashSet;

use thiserror::Error;

/// Degrees indexed by vertex; produced by the degree queries on [`Digraph`].
pub type DegreeVector = Vec<usize>;

/// Arc set validation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    /// An arc of the form `(u, u)`.
    #[error("arc ({0}, {0}) is a loop")]
    LoopArc(usize),
    /// Both `(u, v)` and `(v, u)` were given.
    #[error("arcs ({u}, {v}) and ({v}, {u}) form a digon")]
    DigonArc { u: usize, v: usize },
    /// The same arc was given twice.
    #[error("arc ({u}, {v}) appears more than once")]
    DuplicateArc { u: usize, v: usize },
    /// An endpoint is not a vertex of the graph.
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
}

impl DigraphError {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            DigraphError::LoopArc(_) => "LoopArc",
            DigraphError::DigonArc { .. } => "DigonArc",
            DigraphError::DuplicateArc { .. } => "DuplicateArc",
            DigraphError::VertexOutOfRange { .. } => "VertexOutOfRange",
        }
    }
}

/// A simple oriented digraph on vertices `0..n`.
///
/// Immutable after construction; arcs are stored sorted so that iteration
/// order (and everything serialized from it) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    /// Validates and builds a digraph from an arc list.
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in arcs {
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            if u >= n || v >= n {
                return Err(DigraphError::VertexOutOfRange { u, v, n });
            }
            if seen.contains(&(v, u)) {
                return Err(DigraphError::DigonArc { u, v });
            }
            if !seen.insert((u, v)) {
                return Err(DigraphError::DuplicateArc { u, v });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Digraph { n, arcs: list })
    }

    /// Number of vertices `n`.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of arcs `m`.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in sorted order, 0-indexed.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// True iff the arc `(u, v)` is present.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Out-degrees `d+`.
    pub fn out_degrees(&self) -> DegreeVector {
        let mut d = vec![0usize; self.n];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    /// In-degrees `d-`.
    pub fn in_degrees(&self) -> DegreeVector {
        let mut d = vec![0usize; self.n];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    /// Total degrees `d = d+ + d-` (degrees of the underlying graph).
    pub fn total_degrees(&self) -> DegreeVector {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.arcs {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Per-vertex imbalance `d+ - d-`, the diagonal of the net degree matrix.
    pub fn degree_imbalances(&self) -> Vec<i64> {
        let mut d = vec![0i64; self.n];
        for &(u, v) in &self.arcs {
            d[u] += 1;
            d[v] -= 1;
        }
        d
    }

    /// Weak components: connected components of the underlying undirected graph.
    pub fn weak_components(&self) -> Components {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut block_of = vec![usize::MAX; self.n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if block_of[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![start];
            block_of[start] = id;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if block_of[w] == usize::MAX {
                        block_of[w] = id;
                        block.push(w);
                        queue.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Components { blocks }
    }

    /// True iff `d+ = d-` at every vertex.
    pub fn is_balanced(&self) -> bool {
        self.degree_imbalances().iter().all(|&x| x == 0)
    }

    /// True iff the digraph has a closed Euler trail: balanced, and all arcs
    /// lie in a single weak component. An edgeless digraph is Eulerian
    /// (the empty trail), so isolated vertices never disqualify.
    pub fn is_eulerian(&self) -> bool {
        if !self.is_balanced() {
            return false;
        }
        let degrees = self.total_degrees();
        let components = self.weak_components();
        let with_arcs = components
            .blocks()
            .iter()
            .filter(|block| block.iter().any(|&v| degrees[v] > 0))
            .count();
        with_arcs <= 1
    }

    /// True iff some vertex has total degree 0.
    pub fn has_isolated_vertices(&self) -> bool {
        self.total_degrees().contains(&0)
    }
}

/// Partition of the vertex set into weak components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    blocks: Vec<Vec<usize>>,
}

impl Components {
    /// The number of components `p`.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// The component blocks, each sorted, ordered by smallest member.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Digraph {
        Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Digraph {
        Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn constructor_accepts_path_and_isolated_vertex() {
        assert_eq!(p4().arc_count(), 3);
        let g = Digraph::new(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn constructor_rejects_digon() {
        let err = Digraph::new(2, [(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, DigraphError::DigonArc { u: 1, v: 0 });
        assert_eq!(err.name(), "DigonArc");
    }

    #[test]
    fn constructor_rejects_loop_duplicate_and_range() {
        assert_eq!(
            Digraph::new(3, [(1, 1)]).unwrap_err(),
            DigraphError::LoopArc(1)
        );
        assert_eq!(
            Digraph::new(3, [(0, 1), (0, 1)]).unwrap_err(),
            DigraphError::DuplicateArc { u: 0, v: 1 }
        );
        assert_eq!(
            Digraph::new(3, [(0, 3)]).unwrap_err(),
            DigraphError::VertexOutOfRange { u: 0, v: 3, n: 3 }
        );
    }

    #[test]
    fn degrees_of_path_and_cycle() {
        let g = p4();
        assert_eq!(g.out_degrees(), vec![1, 1, 1, 0]);
        assert_eq!(g.in_degrees(), vec![0, 1, 1, 1]);
        assert_eq!(g.total_degrees(), vec![1, 2, 2, 1]);
        let c = c4();
        assert_eq!(c.out_degrees(), vec![1, 1, 1, 1]);
        assert_eq!(c.in_degrees(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn degrees_of_edgeless_graph() {
        let g = Digraph::new(5, []).unwrap();
        assert_eq!(g.out_degrees(), vec![0; 5]);
        assert_eq!(g.in_degrees(), vec![0; 5]);
    }

    #[test]
    fn weak_components_counts() {
        // two oriented triangles plus one isolated vertex: p = 3
        let g = Digraph::new(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.weak_components().count(), 3);
        assert_eq!(p4().weak_components().count(), 1);
        let edgeless = Digraph::new(5, []).unwrap();
        assert_eq!(edgeless.weak_components().count(), 5);
    }

    #[test]
    fn balance_and_eulerian() {
        assert!(c4().is_balanced());
        assert!(c4().is_eulerian());
        assert!(!p4().is_balanced());
        assert!(!p4().is_eulerian());
        let edgeless = Digraph::new(3, []).unwrap();
        assert!(edgeless.is_balanced());

        // balanced but disconnected: two disjoint directed triangles
        let two_triangles =
            Digraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(two_triangles.is_balanced());
        assert!(!two_triangles.is_eulerian());
    }

    #[test]
    fn isolated_vertices() {
        let g = Digraph::new(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(g.has_isolated_vertices());
        assert!(!c4().has_isolated_vertices());
        assert!(Digraph::new(1, []).unwrap().has_isolated_vertices());
    }

    #[test]
    fn degree_sums_match_arc_count() {
        let g = Digraph::new(6, [(0, 2), (2, 4), (4, 0), (1, 3), (5, 1)]).unwrap();
        let m = g.arc_count();
        assert_eq!(g.out_degrees().iter().sum::<usize>(), m);
        assert_eq!(g.in_degrees().iter().sum::<usize>(), m);
        assert_eq!(g.degree_imbalances().iter().sum::<i64>(), 0);
    }
}
