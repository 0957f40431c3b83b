//! Matrix builders for a digraph: adjacency variants, degree diagonals,
//! and the Laplacian family.
//!
//! Every builder emits exact integer entries stored as `f64`, so identities
//! like zero row sums and zero traces hold with `==`, not a tolerance.

use crate::digraph::Digraph;

/// Dense real square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    /// All-zero matrix of the given order.
    pub fn zeros(order: usize) -> Self {
        DenseMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Builds a matrix from row-major entries; panics if the length is not `order^2`.
    pub fn from_rows(order: usize, entries: Vec<f64>) -> Self {
        assert_eq!(entries.len(), order * order, "entry count must be order^2");
        DenseMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.entries[i * self.order..(i + 1) * self.order]
            .iter()
            .sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// True iff every entry is an exact integer.
    pub fn is_integer_valued(&self) -> bool {
        self.entries
            .iter()
            .all(|x| x.fract() == 0.0 && x.is_finite())
    }

    /// Entries as `i64`, or `None` if any entry is not an exact integer.
    pub fn to_integer_entries(&self) -> Option<Vec<i64>> {
        if !self.is_integer_valued() {
            return None;
        }
        Some(self.entries.iter().map(|&x| x as i64).collect())
    }

    /// Aligned grid, one row per line. Integer-valued matrices print without
    /// decimal points.
    pub fn to_table(&self) -> String {
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|&x| {
                if x.fract() == 0.0 && x.is_finite() {
                    format!("{}", x as i64)
                } else {
                    format!("{x:.6}")
                }
            })
            .collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.order {
            let row: Vec<String> = cells[i * self.order..(i + 1) * self.order]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// JSON object `{"order": n, "rows": [[...]]}`. Integer-valued matrices
    /// serialize with integer literals.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = (0..self.order)
            .map(|i| {
                let cells: Vec<String> = (0..self.order)
                    .map(|j| {
                        let x = self.get(i, j);
                        if x.fract() == 0.0 && x.is_finite() {
                            format!("{}", x as i64)
                        } else {
                            crate::fmt::sig12(x)
                        }
                    })
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("{{\"order\":{},\"rows\":[{}]}}", self.order, rows.join(","))
    }
}

/// Out-adjacency `A+`: entry `(i, j)` is 1 iff `(i, j)` is an arc.
pub fn adjacency_out(g: &Digraph) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(g.vertex_count());
    for &(u, v) in g.arcs() {
        a.set(u, v, 1.0);
    }
    a
}

/// In-adjacency `A- = (A+)^T`.
pub fn adjacency_in(g: &Digraph) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(g.vertex_count());
    for &(u, v) in g.arcs() {
        a.set(v, u, 1.0);
    }
    a
}

/// Skew-adjacency `S = A+ - A-`: `+1` on arcs, `-1` on reversed arcs.
pub fn skew_adjacency(g: &Digraph) -> DenseMatrix {
    let mut s = DenseMatrix::zeros(g.vertex_count());
    for &(u, v) in g.arcs() {
        s.set(u, v, 1.0);
        s.set(v, u, -1.0);
    }
    s
}

/// Adjacency of the underlying undirected graph, `A(G_U) = A+ + A-`.
pub fn underlying_adjacency(g: &Digraph) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(g.vertex_count());
    for &(u, v) in g.arcs() {
        a.set(u, v, 1.0);
        a.set(v, u, 1.0);
    }
    a
}

/// The four degree diagonals of a digraph.
#[derive(Debug, Clone)]
pub struct DegreeMatrices {
    /// `D+ = diag(d+)`.
    pub out_degree: DenseMatrix,
    /// `D- = diag(d-)`.
    pub in_degree: DenseMatrix,
    /// `D = D+ + D-`, the degree matrix of the underlying graph.
    pub total: DenseMatrix,
    /// `D~ = D+ - D-`, the net degree diagonal.
    pub net: DenseMatrix,
}

/// Builds `(D+, D-, D, D~)` in one pass.
pub fn degree_matrices(g: &Digraph) -> DegreeMatrices {
    let n = g.vertex_count();
    let out = g.out_degrees();
    let inn = g.in_degrees();
    let mut matrices = DegreeMatrices {
        out_degree: DenseMatrix::zeros(n),
        in_degree: DenseMatrix::zeros(n),
        total: DenseMatrix::zeros(n),
        net: DenseMatrix::zeros(n),
    };
    for i in 0..n {
        let (o, p) = (out[i] as f64, inn[i] as f64);
        matrices.out_degree.set(i, i, o);
        matrices.in_degree.set(i, i, p);
        matrices.total.set(i, i, o + p);
        matrices.net.set(i, i, o - p);
    }
    matrices
}

/// Laplacian of the underlying graph, `L(G_U) = D - A(G_U)`.
pub fn laplacian_underlying(g: &Digraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut l = DenseMatrix::zeros(n);
    for (i, &d) in g.total_degrees().iter().enumerate() {
        l.set(i, i, d as f64);
    }
    for &(u, v) in g.arcs() {
        l.set(u, v, -1.0);
        l.set(v, u, -1.0);
    }
    l
}

/// The older skew Laplacian `SL = D - S`, built from the total degree diagonal.
pub fn skew_laplacian_old(g: &Digraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut sl = DenseMatrix::zeros(n);
    for (i, &d) in g.total_degrees().iter().enumerate() {
        sl.set(i, i, d as f64);
    }
    for &(u, v) in g.arcs() {
        sl.set(u, v, -1.0);
        sl.set(v, u, 1.0);
    }
    sl
}

/// Out-degree Laplacian `L+ = D+ - A+`.
pub fn laplacian_out(g: &Digraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut l = DenseMatrix::zeros(n);
    for (i, &d) in g.out_degrees().iter().enumerate() {
        l.set(i, i, d as f64);
    }
    for &(u, v) in g.arcs() {
        l.set(u, v, -1.0);
    }
    l
}

/// The net skew Laplacian `SL~ = D~ - S`, whose spectrum defines the skew
/// Laplacian energy. Every row sums to zero and the trace is zero.
pub fn skew_laplacian_new(g: &Digraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut sl = DenseMatrix::zeros(n);
    for (i, &d) in g.degree_imbalances().iter().enumerate() {
        sl.set(i, i, d as f64);
    }
    for &(u, v) in g.arcs() {
        sl.set(u, v, -1.0);
        sl.set(v, u, 1.0);
    }
    sl
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

    #[rustfmt::skip]
    #[test]
    fn skew_laplacian_new_of_p4_matches_known_entries() {
        let sl = skew_laplacian_new(&p4());
        let expected = [
            1.0, -1.0,  0.0,  0.0,
            1.0,  0.0, -1.0,  0.0,
            0.0,  1.0,  0.0, -1.0,
            0.0,  0.0,  1.0, -1.0,
        ];
        assert_eq!(sl.entries(), &expected);
    }

    #[rustfmt::skip]
    #[test]
    fn skew_laplacian_new_of_c4_matches_known_entries() {
        let sl = skew_laplacian_new(&c4());
        let expected = [
             0.0, -1.0,  0.0,  1.0,
             1.0,  0.0, -1.0,  0.0,
             0.0,  1.0,  0.0, -1.0,
            -1.0,  0.0,  1.0,  0.0,
        ];
        assert_eq!(sl.entries(), &expected);
    }

    #[test]
    fn skew_laplacian_new_of_edgeless_graph_is_zero() {
        let g = Digraph::new(3, []).unwrap();
        assert_eq!(skew_laplacian_new(&g), DenseMatrix::zeros(3));
    }

    #[test]
    fn block_structure_of_oriented_complete_bipartite() {
        // one vertex per block: X1={0}, X2={1}, Y1={2}, Y2={3}
        let g = Digraph::new(4, [(0, 2), (1, 3), (2, 1), (3, 0)]).unwrap();
        let sl = skew_laplacian_new(&g);
        #[rustfmt::skip]
        let expected = [
             0.0,  0.0, -1.0,  1.0,
             0.0,  0.0,  1.0, -1.0,
             1.0, -1.0,  0.0,  0.0,
            -1.0,  1.0,  0.0,  0.0,
        ];
        assert_eq!(sl.entries(), &expected);
        // balanced, so the net degree diagonal vanishes and SL~ = -S
        let s = skew_adjacency(&g);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(sl.get(i, j), -s.get(i, j));
            }
        }
    }

    #[test]
    fn row_sums_and_trace_are_exactly_zero() {
        let g = Digraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (4, 3)]).unwrap();
        let sl = skew_laplacian_new(&g);
        for i in 0..5 {
            assert_eq!(sl.row_sum(i), 0.0);
        }
        assert_eq!(sl.trace(), 0.0);
    }

    #[test]
    fn skew_adjacency_is_skew_symmetric() {
        let g = Digraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (4, 3)]).unwrap();
        let s = skew_adjacency(&g);
        let t = s.transpose();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(t.get(i, j), -s.get(i, j));
            }
        }
    }

    #[test]
    fn in_adjacency_is_transpose_of_out() {
        let g = Digraph::new(4, [(0, 1), (2, 1), (3, 2)]).unwrap();
        assert_eq!(adjacency_in(&g), adjacency_out(&g).transpose());
    }

    #[test]
    fn decomposition_identities_hold_entrywise() {
        let g = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 1), (4, 5)]).unwrap();
        let n = g.vertex_count();
        let d = degree_matrices(&g);
        let (ap, am) = (adjacency_out(&g), adjacency_in(&g));
        let sl = skew_laplacian_new(&g);
        let l = laplacian_underlying(&g);
        for i in 0..n {
            for j in 0..n {
                let out_part = d.out_degree.get(i, j) - ap.get(i, j);
                let in_part = d.in_degree.get(i, j) - am.get(i, j);
                assert_eq!(sl.get(i, j), out_part - in_part);
                assert_eq!(l.get(i, j), out_part + in_part);
            }
        }
    }

    #[test]
    fn pretty_table_aligns_entries() {
        let sl = skew_laplacian_new(&p4());
        let table = sl.to_table();
        assert_eq!(table.lines().count(), 4);
        assert!(table.starts_with(" 1 -1  0  0"));
    }

    #[test]
    fn json_uses_integer_literals() {
        let g = Digraph::new(2, [(0, 1)]).unwrap();
        let json = skew_laplacian_new(&g).to_json();
        assert_eq!(json, "{\"order\":2,\"rows\":[[1,-1],[1,-1]]}");
    }
}
