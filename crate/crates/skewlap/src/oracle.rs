//! Verification harness: exhaustive enumeration of small oriented graphs,
//! randomized corpora, and a sweep that checks every bound and identity on
//! every digraph it sees.
//!
//! The sweep is the crate's own referee. Each digraph passes through
//! solver-independent moment identities, the zero-multiplicity floor, all
//! energy bounds, and the equality-case classifiers; any failure is
//! recorded as a violation carrying the offending digraph in edge-list
//! form. A correct build reports zero violations.

use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{self, EqualityClass};
use crate::digraph::Digraph;
use crate::eigen::{self, EigenError};
use crate::energy;
use crate::families;
use crate::fmt::sig12;
use crate::io;
use crate::matrices;

/// Largest order the exhaustive enumeration accepts (3^10 digraphs at 5).
pub const ENUMERATION_MAX_ORDER: usize = 5;

/// Absolute tolerance for first-moment identities.
const MOMENT_SUM_TOL: f64 = 1e-9;
/// Absolute tolerance for second-moment identities.
const MOMENT_SQUARE_TOL: f64 = 1e-8;
/// Absolute tolerance for the balanced-digraph energy identity.
const BALANCED_ENERGY_TOL: f64 = 1e-8;

/// Oracle failures.
#[derive(Debug, Clone, Error)]
pub enum OracleError {
    /// Enumeration requested beyond the cap.
    #[error("order {order} exceeds the enumeration cap of {max}")]
    OrderTooLarge { order: usize, max: usize },
    /// A sweep found a counterexample; carries the offending digraph.
    #[error("check {check} failed on digraph\n{digraph}{detail}")]
    ViolationFound {
        check: String,
        digraph: String,
        detail: String,
    },
}

impl OracleError {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::OrderTooLarge { .. } => "OrderTooLarge",
            OracleError::ViolationFound { .. } => "ViolationFound",
        }
    }
}

/// Iterator over every oriented graph on `n` labeled vertices, exactly once,
/// in a fixed order: each unordered pair is a base-3 digit
/// (absent, forward, backward).
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: u64,
    total: u64,
}

impl EnumerationCursor {
    fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let total = 3u64.pow(pairs.len() as u32);
        EnumerationCursor {
            n,
            pairs,
            index: 0,
            total,
        }
    }

    /// Total number of digraphs this cursor will emit.
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

impl Iterator for EnumerationCursor {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.index >= self.total {
            return None;
        }
        let mut code = self.index;
        self.index += 1;
        let mut arcs = Vec::new();
        for &(i, j) in &self.pairs {
            match code % 3 {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
            code /= 3;
        }
        Some(Digraph::new(self.n, arcs).expect("pairwise codes are valid"))
    }
}

/// Streams every oriented graph on `n` labeled vertices (`n <= 5`).
pub fn enumerate_oriented(n: usize) -> Result<EnumerationCursor, OracleError> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(OracleError::OrderTooLarge {
            order: n,
            max: ENUMERATION_MAX_ORDER,
        });
    }
    Ok(EnumerationCursor::new(n))
}

/// Solver-independent moment identities for the net skew Laplacian: the
/// eigenvalue sum vanishes, the sum of squares equals `2M`, and the sum of
/// mixed products equals `-2M`, all against exact degree formulas.
pub fn moment_oracle_check(g: &Digraph) -> Result<bool, EigenError> {
    if g.vertex_count() == 0 {
        return Ok(true);
    }
    let s = eigen::eigenvalues(&matrices::skew_laplacian_new(g))?;
    let (m_inv, _) = energy::m_invariants(g);
    let two_m = m_inv.twice() as f64;
    let sum = s.sum();
    let squares = s.power_sum(2);
    let mixed = sum * sum - squares;
    Ok(sum.norm() <= MOMENT_SUM_TOL
        && (squares - two_m).norm() <= MOMENT_SQUARE_TOL
        && (mixed + two_m).norm() <= MOMENT_SQUARE_TOL)
}

/// Zero appears in the net skew Laplacian spectrum with multiplicity at
/// least the number of weak components.
pub fn zero_multiplicity_check(g: &Digraph) -> Result<bool, EigenError> {
    if g.vertex_count() == 0 {
        return Ok(true);
    }
    let s = eigen::eigenvalues(&matrices::skew_laplacian_new(g))?;
    Ok(s.zero_multiplicity() >= g.weak_components().count())
}

/// One recorded counterexample.
#[derive(Debug, Clone)]
pub struct Violation {
    /// Name of the failed check.
    pub check: String,
    /// Offending digraph in edge-list form.
    pub digraph: String,
    /// Human-readable numbers behind the failure.
    pub detail: String,
}

/// Aggregated outcome of a sweep.
#[derive(Debug, Clone, Default)]
pub struct SweepSummary {
    pub digraphs_checked: usize,
    pub violations: Vec<Violation>,
    pub lower_tight: usize,
    pub upper_tight: usize,
    /// Smallest slack among entries that were not flagged tight; separates
    /// the tightness tolerance from true near-misses.
    pub min_nonzero_slack: Option<f64>,
    /// Largest certified solver residual seen.
    pub max_residual: f64,
    /// Smallest eigenvalue modulus above the zero threshold seen.
    pub min_nonzero_eigenvalue_modulus: Option<f64>,
}

impl SweepSummary {
    fn absorb(&mut self, other: SweepSummary) {
        self.digraphs_checked += other.digraphs_checked;
        self.violations.extend(other.violations);
        self.lower_tight += other.lower_tight;
        self.upper_tight += other.upper_tight;
        self.min_nonzero_slack = min_option(self.min_nonzero_slack, other.min_nonzero_slack);
        self.max_residual = self.max_residual.max(other.max_residual);
        self.min_nonzero_eigenvalue_modulus = min_option(
            self.min_nonzero_eigenvalue_modulus,
            other.min_nonzero_eigenvalue_modulus,
        );
    }

    /// Fails with the first violation, if any.
    pub fn into_result(self) -> Result<SweepSummary, OracleError> {
        if let Some(v) = self.violations.first() {
            return Err(OracleError::ViolationFound {
                check: v.check.clone(),
                digraph: v.digraph.clone(),
                detail: v.detail.clone(),
            });
        }
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        let violations: Vec<String> = self
            .violations
            .iter()
            .map(|v| {
                format!(
                    "{{\"check\":\"{}\",\"digraph\":\"{}\",\"detail\":\"{}\"}}",
                    v.check,
                    v.digraph.replace('\n', "\\n"),
                    v.detail.replace('"', "'")
                )
            })
            .collect();
        format!(
            concat!(
                "{{\"digraphs_checked\":{},\"violations\":[{}],",
                "\"lower_tight\":{},\"upper_tight\":{},",
                "\"min_nonzero_slack\":{},\"max_residual\":{},",
                "\"min_nonzero_eigenvalue_modulus\":{}}}"
            ),
            self.digraphs_checked,
            violations.join(","),
            self.lower_tight,
            self.upper_tight,
            self.min_nonzero_slack.map_or("null".to_string(), sig12),
            sig12(self.max_residual),
            self.min_nonzero_eigenvalue_modulus
                .map_or("null".to_string(), sig12),
        )
    }
}

fn min_option(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Random leg of a sweep: `count` digraphs on `n` vertices with the given
/// arc probability; digraph `i` uses seed `seed + i`.
#[derive(Debug, Clone)]
pub struct RandomSweep {
    pub count: usize,
    pub n: usize,
    pub arc_probability: f64,
    pub seed: u64,
}

/// Sweep request: exhaustive over all orders up to `exhaustive_max`, plus an
/// optional random leg, with the additive soundness tolerance `tol`.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub exhaustive_max: Option<usize>,
    pub random: Option<RandomSweep>,
    pub tol: f64,
}

/// Runs every check on every requested digraph, in parallel, with a
/// deterministic merge. Violations signal an implementation bug, never an
/// accepted input.
pub fn sweep_bounds(config: &SweepConfig) -> Result<SweepSummary, OracleError> {
    let mut digraphs: Vec<Digraph> = Vec::new();
    if let Some(max) = config.exhaustive_max {
        for n in 1..=max {
            digraphs.extend(enumerate_oriented(n)?);
        }
    }
    if let Some(random) = &config.random {
        for i in 0..random.count {
            let seed = random.seed.wrapping_add(i as u64);
            let g = families::random_oriented(random.n, random.arc_probability, seed)
                .expect("probability validated by caller");
            digraphs.push(g);
        }
    }
    let tol = config.tol;
    let mut summary = SweepSummary::default();
    let partials: Vec<SweepSummary> = digraphs.par_iter().map(|g| check_digraph(g, tol)).collect();
    for partial in partials {
        summary.absorb(partial);
    }
    Ok(summary)
}

/// Sequential variant of [`sweep_bounds`] for single-threaded timing runs.
pub fn sweep_bounds_sequential(config: &SweepConfig) -> Result<SweepSummary, OracleError> {
    let mut digraphs: Vec<Digraph> = Vec::new();
    if let Some(max) = config.exhaustive_max {
        for n in 1..=max {
            digraphs.extend(enumerate_oriented(n)?);
        }
    }
    if let Some(random) = &config.random {
        for i in 0..random.count {
            let seed = random.seed.wrapping_add(i as u64);
            let g = families::random_oriented(random.n, random.arc_probability, seed)
                .expect("probability validated by caller");
            digraphs.push(g);
        }
    }
    let mut summary = SweepSummary::default();
    for g in &digraphs {
        summary.absorb(check_digraph(g, config.tol));
    }
    Ok(summary)
}

/// Every per-digraph check, aggregated into a one-digraph summary.
pub fn check_digraph(g: &Digraph, tol: f64) -> SweepSummary {
    let mut summary = SweepSummary {
        digraphs_checked: 1,
        ..SweepSummary::default()
    };
    let edge_list = io::format_edge_list(g);
    let fail = |summary: &mut SweepSummary, check: &str, detail: String| {
        summary.violations.push(Violation {
            check: check.to_string(),
            digraph: edge_list.clone(),
            detail,
        });
    };

    let n = g.vertex_count();
    if n == 0 {
        return summary;
    }

    let sl = matrices::skew_laplacian_new(g);
    if sl.trace() != 0.0 {
        fail(
            &mut summary,
            "trace_zero",
            format!("trace = {}", sl.trace()),
        );
    }
    for i in 0..n {
        if sl.row_sum(i) != 0.0 {
            fail(
                &mut summary,
                "row_sums_zero",
                format!("row {i} sums to {}", sl.row_sum(i)),
            );
        }
    }

    let spectrum = match eigen::eigenvalues(&sl) {
        Ok(s) => s,
        Err(e) => {
            fail(&mut summary, "eigensolver", e.to_string());
            return summary;
        }
    };
    summary.max_residual = spectrum.residual();
    summary.min_nonzero_eigenvalue_modulus = spectrum.min_nonzero_modulus();

    // moment identities against exact degree formulas
    let (m_inv, m1_inv) = energy::m_invariants(g);
    let two_m = m_inv.twice() as f64;
    let sum = spectrum.sum();
    if sum.norm() > MOMENT_SUM_TOL {
        fail(
            &mut summary,
            "moment_sum",
            format!("|sum mu| = {:e}", sum.norm()),
        );
    }
    let squares = spectrum.power_sum(2);
    if (squares - two_m).norm() > MOMENT_SQUARE_TOL {
        fail(
            &mut summary,
            "moment_square",
            format!("sum mu^2 = {squares}, expected {two_m}"),
        );
    }
    let mixed = sum * sum - squares;
    if (mixed + two_m).norm() > MOMENT_SQUARE_TOL {
        fail(
            &mut summary,
            "moment_mixed",
            format!("sum_(i!=j) mu_i mu_j = {mixed}, expected {}", -two_m),
        );
    }

    // zero multiplicity floor
    let p = g.weak_components().count();
    if spectrum.zero_multiplicity() < p {
        fail(
            &mut summary,
            "zero_multiplicity",
            format!(
                "multiplicity {} < components {p}",
                spectrum.zero_multiplicity()
            ),
        );
    }

    // the central pair and its consequences
    let sle = spectrum.moduli_sum();
    let lower = 2.0 * m_inv.abs().as_f64().sqrt();
    let upper = (m1_inv.twice() as f64 * (n - p) as f64).sqrt();
    let upper_order = (m1_inv.twice() as f64 * n as f64).sqrt();
    if sle < lower - tol {
        fail(
            &mut summary,
            "sle_lower",
            format!("sle {sle} < bound {lower}"),
        );
    }
    if sle > upper + tol {
        fail(
            &mut summary,
            "sle_upper_components",
            format!("sle {sle} > bound {upper}"),
        );
    }
    if sle > upper_order + tol {
        fail(
            &mut summary,
            "sle_upper_order",
            format!("sle {sle} > bound {upper_order}"),
        );
    }
    if !g.has_isolated_vertices() && sle > 2.0 * m1_inv.as_f64() + tol {
        fail(
            &mut summary,
            "sle_upper_no_isolated",
            format!("sle {sle} > bound {}", 2.0 * m1_inv.as_f64()),
        );
    }
    if upper > upper_order + 1e-12 {
        fail(
            &mut summary,
            "bound_monotonicity",
            format!("component bound {upper} exceeds order bound {upper_order}"),
        );
    }

    // tightness bookkeeping and equality classification
    let tight = |energy: f64, bound: f64| (energy - bound).abs() <= tol * bound.abs().max(1.0);
    let lower_tight = tight(sle, lower);
    let upper_tight = tight(sle, upper);
    let mut slacks = vec![
        (lower_tight, (sle - lower).abs()),
        (upper_tight, (sle - upper).abs()),
    ];
    slacks.push((tight(sle, upper_order), (sle - upper_order).abs()));
    if !g.has_isolated_vertices() {
        let b = 2.0 * m1_inv.as_f64();
        slacks.push((tight(sle, b), (sle - b).abs()));
    }
    for (is_tight, slack) in slacks {
        if !is_tight {
            summary.min_nonzero_slack = min_option(summary.min_nonzero_slack, Some(slack));
        }
    }

    if lower_tight {
        summary.lower_tight += 1;
        if !bounds::classify_lower_equality(&spectrum, tol) {
            fail(
                &mut summary,
                "lower_equality_classification",
                "lower bound tight but the common-ray condition fails".to_string(),
            );
        }
    }
    if upper_tight {
        summary.upper_tight += 1;
        let class = bounds::classify_upper_equality(g, &spectrum, tol);
        if class == EqualityClass::TightButUnclassified {
            fail(
                &mut summary,
                "upper_equality_classification",
                "upper bound tight but the spectrum pattern is anomalous".to_string(),
            );
        }
        if !bounds::has_odd_balanced_components(g) {
            fail(
                &mut summary,
                "upper_tight_component_structure",
                "a weak component is unbalanced or of even order".to_string(),
            );
        }
    }

    // balanced digraphs: the two energies coincide
    if g.is_balanced() {
        match energy::skew_energy(g) {
            Ok(es) => {
                if (sle - es).abs() > BALANCED_ENERGY_TOL {
                    fail(
                        &mut summary,
                        "balanced_energy_identity",
                        format!("sle {sle} vs skew energy {es}"),
                    );
                }
                match eigen::eigenvalues(&matrices::skew_adjacency(g)) {
                    Ok(s) => summary.max_residual = summary.max_residual.max(s.residual()),
                    Err(e) => fail(&mut summary, "eigensolver", e.to_string()),
                }
            }
            Err(e) => fail(&mut summary, "eigensolver", e.to_string()),
        }
    }

    // closed forms equal their trace-of-square counterparts exactly
    let le_k = energy::laplacian_energy_k(g) as f64;
    if le_k != eigen::spectral_moment(&matrices::laplacian_underlying(g), 2) {
        fail(
            &mut summary,
            "le_k_closed_form",
            format!("closed form {le_k}"),
        );
    }
    let sle_k = energy::skew_laplacian_energy_k(g) as f64;
    if sle_k != eigen::spectral_moment(&matrices::skew_laplacian_old(g), 2) {
        fail(
            &mut summary,
            "sle_k_closed_form",
            format!("closed form {sle_k}"),
        );
    }
    let le_m = energy::out_laplacian_energy(g) as f64;
    if le_m != eigen::spectral_moment(&matrices::laplacian_out(g), 2) {
        fail(
            &mut summary,
            "le_m_closed_form",
            format!("closed form {le_m}"),
        );
    }

    summary
}
