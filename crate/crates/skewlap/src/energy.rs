//! Energy functionals of a digraph and the degree invariants driving their
//! bounds.
//!
//! Eight energies are computed side by side so they can be compared on the
//! same digraph: adjacency energy of the underlying graph, skew energy, the
//! two classical Laplacian energies, their skew counterparts, the
//! out-degree Laplacian energy, and the net skew Laplacian energy `sle`.
//! The second-moment energies (`le_k`, `sle_k`, `le_m`) have closed forms in
//! the degree sequence; each is cross-checked against the matching
//! `tr(M^2)` in debug builds.

use std::fmt as stdfmt;

use crate::digraph::Digraph;
use crate::eigen::{self, EigenError, Spectrum};
use crate::fmt::sig12;
use crate::matrices;

/// Exact multiple of one half: the carrier for the invariants `M` and `M1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    /// Builds the value `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// The doubled value, always exact.
    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn as_f64(&self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn abs(&self) -> HalfInt {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl stdfmt::Display for HalfInt {
    fn fmt(&self, f: &mut stdfmt::Formatter<'_>) -> stdfmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}.5", self.twice.div_euclid(2))
        }
    }
}

/// The degree invariants `M = -m + (1/2) sum (d+_i - d-_i)^2` and
/// `M1 = M + 2m`, exact.
pub fn m_invariants(g: &Digraph) -> (HalfInt, HalfInt) {
    let m = g.arc_count() as i64;
    let imbalance_sq: i64 = g.degree_imbalances().iter().map(|&d| d * d).sum();
    let two_m = -2 * m + imbalance_sq;
    (
        HalfInt::from_twice(two_m),
        HalfInt::from_twice(two_m + 4 * m),
    )
}

/// The skew Laplacian energy: sum of eigenvalue moduli of `SL~ = D~ - S`.
pub fn sle(g: &Digraph) -> Result<f64, EigenError> {
    Ok(spectrum_or_empty(&matrices::skew_laplacian_new(g))?.map_or(0.0, |s| s.moduli_sum()))
}

/// The skew energy: sum of eigenvalue moduli of the skew-adjacency `S`.
pub fn skew_energy(g: &Digraph) -> Result<f64, EigenError> {
    Ok(spectrum_or_empty(&matrices::skew_adjacency(g))?.map_or(0.0, |s| s.moduli_sum()))
}

/// Adjacency energy of the underlying undirected graph.
pub fn adjacency_energy(g: &Digraph) -> Result<f64, EigenError> {
    Ok(spectrum_or_empty(&matrices::underlying_adjacency(g))?.map_or(0.0, |s| s.moduli_sum()))
}

/// Laplacian energy of the underlying graph: `sum |mu_i - 2m/n|` over the
/// spectrum of `L(G_U)`.
pub fn laplacian_energy_g(g: &Digraph) -> Result<f64, EigenError> {
    shifted_energy(g, &matrices::laplacian_underlying(g))
}

/// Skew Laplacian energy in the shifted form: `sum |mu_i - 2m/n|` over the
/// (generally complex) spectrum of `SL = D - S`, with complex moduli.
pub fn skew_laplacian_energy_g(g: &Digraph) -> Result<f64, EigenError> {
    shifted_energy(g, &matrices::skew_laplacian_old(g))
}

fn shifted_energy(g: &Digraph, m: &matrices::DenseMatrix) -> Result<f64, EigenError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0.0);
    }
    let shift = 2.0 * g.arc_count() as f64 / n as f64;
    let s = eigen::eigenvalues(m)?;
    Ok(s.values().iter().map(|v| (v - shift).norm()).sum())
}

/// Second-moment Laplacian energy of the underlying graph, by its closed
/// form `sum d_i (d_i + 1)`.
pub fn laplacian_energy_k(g: &Digraph) -> i64 {
    let value: i64 = g
        .total_degrees()
        .iter()
        .map(|&d| (d * (d + 1)) as i64)
        .sum();
    debug_assert_eq!(
        value as f64,
        eigen::spectral_moment(&matrices::laplacian_underlying(g), 2),
        "closed form must equal tr(L^2)"
    );
    value
}

/// Second-moment skew Laplacian energy, by its closed form
/// `sum d_i (d_i - 1)`.
pub fn skew_laplacian_energy_k(g: &Digraph) -> i64 {
    let value: i64 = g
        .total_degrees()
        .iter()
        .map(|&d| (d as i64) * (d as i64 - 1))
        .sum();
    debug_assert_eq!(
        value as f64,
        eigen::spectral_moment(&matrices::skew_laplacian_old(g), 2),
        "closed form must equal tr(SL^2)"
    );
    value
}

/// Out-degree Laplacian energy, by its closed form `sum (d+_i)^2`.
pub fn out_laplacian_energy(g: &Digraph) -> i64 {
    let value: i64 = g.out_degrees().iter().map(|&d| (d * d) as i64).sum();
    debug_assert_eq!(
        value as f64,
        eigen::spectral_moment(&matrices::laplacian_out(g), 2),
        "closed form must equal tr((L+)^2)"
    );
    value
}

fn spectrum_or_empty(m: &matrices::DenseMatrix) -> Result<Option<Spectrum>, EigenError> {
    if m.order() == 0 {
        return Ok(None);
    }
    eigen::eigenvalues(m).map(Some)
}

/// All energy functionals plus the invariants for one digraph.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub adjacency_energy: f64,
    pub skew_energy: f64,
    pub le_g: f64,
    pub le_k: i64,
    pub sle_k: i64,
    pub sle_g: f64,
    pub le_m: i64,
    pub sle: f64,
    pub m_invariant: HalfInt,
    pub m1_invariant: HalfInt,
}

impl EnergyReport {
    /// Header of the CSV serialization.
    pub const CSV_HEADER: &'static str = "n,m,p,E,Es,LEg,LEk,SLEk,SLEg,LEm,SLE,M,M1";

    /// One CSV row matching [`Self::CSV_HEADER`]; floats carry 12
    /// significant digits.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.p,
            sig12(self.adjacency_energy),
            sig12(self.skew_energy),
            sig12(self.le_g),
            self.le_k,
            self.sle_k,
            sig12(self.sle_g),
            self.le_m,
            sig12(self.sle),
            self.m_invariant,
            self.m1_invariant,
        )
    }

    /// Flat JSON object; floats carry 12 significant digits.
    pub fn to_json(&self) -> String {
        format!(
            concat!(
                "{{\"n\":{},\"m\":{},\"p\":{},",
                "\"adjacency_energy\":{},\"skew_energy\":{},",
                "\"laplacian_energy_g\":{},\"laplacian_energy_k\":{},",
                "\"skew_laplacian_energy_k\":{},\"skew_laplacian_energy_g\":{},",
                "\"out_laplacian_energy\":{},\"sle\":{},",
                "\"m_invariant\":{},\"m1_invariant\":{}}}"
            ),
            self.n,
            self.m,
            self.p,
            sig12(self.adjacency_energy),
            sig12(self.skew_energy),
            sig12(self.le_g),
            self.le_k,
            self.sle_k,
            sig12(self.sle_g),
            self.le_m,
            sig12(self.sle),
            self.m_invariant,
            self.m1_invariant,
        )
    }

    /// Aligned key/value table for terminals.
    pub fn to_table(&self) -> String {
        let rows = [
            ("n", self.n.to_string()),
            ("m", self.m.to_string()),
            ("p", self.p.to_string()),
            ("E", sig12(self.adjacency_energy)),
            ("Es", sig12(self.skew_energy)),
            ("LEg", sig12(self.le_g)),
            ("LEk", self.le_k.to_string()),
            ("SLEk", self.sle_k.to_string()),
            ("SLEg", sig12(self.sle_g)),
            ("LEm", self.le_m.to_string()),
            ("SLE", sig12(self.sle)),
            ("M", self.m_invariant.to_string()),
            ("M1", self.m1_invariant.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(1);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

/// Computes every energy functional and invariant for one digraph.
pub fn energy_report(g: &Digraph) -> Result<EnergyReport, EigenError> {
    let (m_inv, m1_inv) = m_invariants(g);
    Ok(EnergyReport {
        n: g.vertex_count(),
        m: g.arc_count(),
        p: g.weak_components().count(),
        adjacency_energy: adjacency_energy(g)?,
        skew_energy: skew_energy(g)?,
        le_g: laplacian_energy_g(g)?,
        le_k: laplacian_energy_k(g),
        sle_k: skew_laplacian_energy_k(g),
        sle_g: skew_laplacian_energy_g(g)?,
        le_m: out_laplacian_energy(g),
        sle: sle(g)?,
        m_invariant: m_inv,
        m1_invariant: m1_inv,
    })
}
