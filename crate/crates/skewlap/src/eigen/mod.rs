//! Complex spectra of real square matrices.
//!
//! The solver pipeline is balance, Householder reduction to Hessenberg form,
//! and Francis double-shift QR. Two solver-independent exactness aids back
//! it up for the integer matrices this crate builds:
//!
//! * spectral moments `tr(M^k)` are computed without any eigendecomposition
//!   and serve as the cross-check oracle for the iteration, and
//! * the exact characteristic polynomial pins the algebraic multiplicity of
//!   the eigenvalue 0, so defective zero clusters (where plain QR can only
//!   deliver about `sqrt(eps)` accuracy) are reported as exact zeros.
//!
//! Reported residuals are certified backward errors: for each eigenvalue a
//! unit vector `v` with `||Mv - mu v|| <= residual` is exhibited via inverse
//! iteration.

mod charpoly;
mod qr;

use std::collections::HashMap;

use num_complex::Complex64;
use thiserror::Error;

use crate::matrices::DenseMatrix;

pub use charpoly::{characteristic_polynomial, eval_poly, CharPolyError, CHAR_POLY_MAX_ORDER};

/// Relative factor for the default zero-classification threshold.
pub const ZERO_TOL_FACTOR: f64 = 1e-8;

/// Eigenvalue computation failures.
#[derive(Debug, Clone, Error)]
pub enum EigenError {
    /// Order-0 matrices have no spectrum.
    #[error("matrix of order 0 has no spectrum")]
    EmptyMatrix,
    /// The QR iteration cap was reached.
    #[error("QR iteration hit the cap after {iterations} sweeps with {} of the eigenvalues found", converged.len())]
    NonConvergence {
        /// Eigenvalues deflated before the cap.
        converged: Vec<Complex64>,
        /// Sweeps performed.
        iterations: usize,
    },
}

impl EigenError {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            EigenError::EmptyMatrix => "EmptyMatrix",
            EigenError::NonConvergence { .. } => "NonConvergence",
        }
    }
}

/// The multiset of eigenvalues of a real square matrix.
///
/// Values are sorted by descending modulus, then by real part, then by
/// imaginary part, so equal inputs produce identical output.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<Complex64>,
    residual: f64,
    zero_tol: f64,
}

impl Spectrum {
    /// Wraps an externally produced eigenvalue multiset (sorted on entry).
    /// The residual is reported as 0; intended for synthetic spectra in
    /// classification and tests.
    pub fn from_values(mut values: Vec<Complex64>, zero_tol: f64) -> Self {
        sort_eigenvalues(&mut values);
        Spectrum {
            values,
            residual: 0.0,
            zero_tol,
        }
    }

    /// Same spectrum with a different zero-classification threshold;
    /// values and residual are untouched.
    pub fn with_zero_tol(mut self, zero_tol: f64) -> Self {
        self.zero_tol = zero_tol;
        self
    }

    /// Eigenvalues with multiplicity, in the documented sort order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Matrix order; equals the number of reported eigenvalues.
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Maximum certified backward error over all reported eigenvalues.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Threshold used to classify an eigenvalue as zero.
    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }

    /// Number of eigenvalues with modulus at most [`Self::zero_tol`].
    pub fn zero_multiplicity(&self) -> usize {
        self.values
            .iter()
            .filter(|v| v.norm() <= self.zero_tol)
            .count()
    }

    /// Sum of all eigenvalues (equals the trace of the source matrix).
    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }

    /// Sum of `k`-th powers of all eigenvalues.
    pub fn power_sum(&self, k: u32) -> Complex64 {
        self.values.iter().map(|v| v.powu(k)).sum()
    }

    /// Sum of the moduli of all eigenvalues: the energy functional of the
    /// source matrix.
    pub fn moduli_sum(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).sum()
    }

    /// Smallest modulus strictly above the zero threshold, if any.
    pub fn min_nonzero_modulus(&self) -> Option<f64> {
        self.values
            .iter()
            .map(|v| v.norm())
            .filter(|&r| r > self.zero_tol)
            .min_by(|a, b| a.total_cmp(b))
    }
}

fn sort_eigenvalues(values: &mut [Complex64]) {
    values.sort_by(|a, b| {
        b.norm()
            .total_cmp(&a.norm())
            .then(a.re.total_cmp(&b.re))
            .then(a.im.total_cmp(&b.im))
    });
}

/// All eigenvalues of a real square matrix, with certified residuals.
pub fn eigenvalues(m: &DenseMatrix) -> Result<Spectrum, EigenError> {
    let n = m.order();
    if n == 0 {
        return Err(EigenError::EmptyMatrix);
    }
    let scale = m.frobenius_norm().max(1.0);
    let mut work = m.entries().to_vec();
    qr::balance(&mut work, n);
    qr::hessenberg(&mut work, n);
    let mut values =
        qr::francis(&mut work, n, 100 * n).map_err(|u| EigenError::NonConvergence {
            converged: u.converged,
            iterations: u.iterations,
        })?;
    snap_exact_zeros(m, &mut values, scale);
    sort_eigenvalues(&mut values);
    let residual = max_backward_error(m, &values);
    Ok(Spectrum {
        values,
        residual,
        zero_tol: ZERO_TOL_FACTOR * scale,
    })
}

/// Replaces the QR approximations of true zero eigenvalues by exact zeros.
///
/// For an integer matrix the number of vanishing trailing coefficients of
/// the exact characteristic polynomial equals the algebraic multiplicity of
/// 0, and a Cauchy bound on the zero-deflated polynomial gives a proven
/// floor under every nonzero eigenvalue modulus. When the `k` smallest
/// computed moduli sit below half that floor and the rest above it, those
/// `k` values are the solver's image of the zero cluster and get pinned.
/// Without this, a Jordan block of order `b` at 0 limits any dense solver
/// to roughly `eps^(1/b)` accuracy.
fn snap_exact_zeros(m: &DenseMatrix, values: &mut [Complex64], scale: f64) {
    let n = values.len();
    // largest plausible zero-cluster noise: a full-order Jordan block
    // perturbs by about eps^(1/n)
    let noise_cap = 4.0 * f64::EPSILON.powf(1.0 / n as f64) * scale;
    let floor = 1e-12 * scale;
    let suspicious = values.iter().any(|v| {
        let r = v.norm();
        r > floor && r <= noise_cap
    });
    if !suspicious {
        return;
    }
    let Some(zs) = charpoly::zero_structure(m) else {
        return;
    };
    let k = zs.multiplicity;
    if k == 0 {
        return;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].norm().total_cmp(&values[b].norm()));
    let threshold = 0.5 * zs.nonzero_root_floor;
    if values[order[k - 1]].norm() >= threshold {
        return;
    }
    if k < n && values[order[k]].norm() < threshold {
        return;
    }
    for &i in &order[..k] {
        values[i] = Complex64::new(0.0, 0.0);
    }
}

/// Exact spectral moment `tr(M^k)`, computed without eigendecomposition.
/// For integer matrices (and moments within `f64`'s exact integer range)
/// the result is exact; this is the solver-independent oracle.
pub fn spectral_moment(m: &DenseMatrix, k: u32) -> f64 {
    assert!(k >= 1, "moment index must be at least 1");
    let mut acc = m.clone();
    for _ in 1..k {
        acc = acc.matmul(m);
    }
    acc.trace()
}

/// Directly measured residual `||(M - mu I) v||` for a unit vector `v`.
fn measured_residual(m: &DenseMatrix, mu: Complex64, v: &[Complex64]) -> f64 {
    let mut total = 0.0f64;
    for (i, vi) in v.iter().enumerate() {
        let mut acc = -mu * vi;
        for (j, vj) in v.iter().enumerate() {
            acc += m.get(i, j) * vj;
        }
        total += acc.norm_sqr();
    }
    total.sqrt()
}

/// Certified backward error for one eigenvalue: the smallest directly
/// measured `||(M - mu I) v||` over a handful of candidate unit vectors.
/// Candidates come from inverse iteration and, when the factorization of
/// `M - mu I` runs into a negligible pivot, from the near-null vector that
/// the pivot certifies. Every candidate is re-measured against the original
/// matrix, so the bound holds regardless of how well the solves behaved.
fn backward_error(m: &DenseMatrix, mu: Complex64) -> f64 {
    let n = m.order();
    let mut a = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = Complex64::new(m.get(i, j), 0.0);
        }
        a[i * n + i] -= mu;
    }
    let lu = ComplexLu::factor(a, n);
    let mut best = f64::INFINITY;

    // near-null candidate from the weakest pivot
    if let Some(col) = lu.weakest_pivot() {
        if let Some(mut w) = lu.null_candidate(col) {
            normalize(&mut w);
            best = best.min(measured_residual(m, mu, &w));
        }
    }

    if lu.complete() {
        let mut b: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new(1.0 + i as f64 / n as f64, 0.0))
            .collect();
        normalize(&mut b);
        for _ in 0..2 {
            let mut x = lu.solve_direction(&b);
            let norm = vec_norm(&x);
            if !norm.is_finite() || norm == 0.0 {
                break;
            }
            for value in &mut x {
                *value /= norm;
            }
            best = best.min(measured_residual(m, mu, &x));
            b = x;
        }
    }
    debug_assert!(best.is_finite(), "at least one candidate must be measured");
    best
}

fn max_backward_error(m: &DenseMatrix, values: &[Complex64]) -> f64 {
    // conjugate eigenvalues of a real matrix share their backward error
    let mut cache: HashMap<(u64, u64), f64> = HashMap::new();
    let mut worst = 0.0f64;
    for v in values {
        let key = (v.re.to_bits(), v.im.abs().to_bits());
        let r = *cache
            .entry(key)
            .or_insert_with(|| backward_error(m, Complex64::new(v.re, v.im.abs())));
        worst = worst.max(r);
    }
    worst
}

fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(x: &mut [Complex64]) {
    let norm = vec_norm(x);
    if norm > 0.0 {
        for z in x {
            *z /= norm;
        }
    }
}

/// LU factorization with partial pivoting over complex entries. Elimination
/// stops at the first exactly-zero pivot, leaving a partial factorization
/// whose final column still certifies a near-null vector.
struct ComplexLu {
    n: usize,
    lu: Vec<Complex64>,
    perm: Vec<usize>,
    /// Columns successfully eliminated; `n` for a complete factorization.
    rank_limit: usize,
}

impl ComplexLu {
    /// Smallest pivot magnitude worth dividing by: below the square root of
    /// the smallest normal number, `norm_sqr` underflows and complex
    /// division degenerates to NaN, so such columns end the factorization
    /// as if they were zero.
    const PIVOT_FLOOR: f64 = 1.5e-154;

    fn factor(mut a: Vec<Complex64>, n: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rank_limit = n;
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r, &s| a[r * n + col].norm().total_cmp(&a[s * n + col].norm()))
                .expect("column range is nonempty");
            if a[pivot_row * n + col].norm() <= Self::PIVOT_FLOOR {
                rank_limit = col;
                break;
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                perm.swap(col, pivot_row);
            }
            let pivot = a[col * n + col];
            for row in col + 1..n {
                let factor = a[row * n + col] / pivot;
                a[row * n + col] = factor;
                for j in col + 1..n {
                    let sub = factor * a[col * n + j];
                    a[row * n + j] -= sub;
                }
            }
        }
        ComplexLu {
            n,
            lu: a,
            perm,
            rank_limit,
        }
    }

    fn complete(&self) -> bool {
        self.rank_limit == self.n
    }

    /// Column whose pivot is weakest: the break column of an incomplete
    /// factorization (pivot 0), otherwise the smallest diagonal pivot.
    fn weakest_pivot(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        if !self.complete() {
            return Some(self.rank_limit);
        }
        (0..self.n).min_by(|&i, &j| {
            self.lu[i * self.n + i]
                .norm()
                .total_cmp(&self.lu[j * self.n + j].norm())
        })
    }

    /// Vector `w` with `w[col] = 1` that annihilates the leading `col` rows
    /// of `U`; when the pivot at `col` is negligible, `(PA) w` is small, so
    /// `w` approximates a null vector of the original matrix. Only the
    /// direction of `w` is meaningful: the substitution rescales freely to
    /// dodge overflow through tiny pivots.
    fn null_candidate(&self, col: usize) -> Option<Vec<Complex64>> {
        let n = self.n;
        let mut w = vec![Complex64::new(0.0, 0.0); n];
        w[col] = Complex64::new(1.0, 0.0);
        for i in (0..col).rev() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, wj) in w.iter().enumerate().take(col + 1).skip(i + 1) {
                acc += self.lu[i * n + j] * wj;
            }
            let pivot = self.lu[i * n + i];
            if pivot.norm() == 0.0 {
                return None;
            }
            if let Some(f) = shrink_before_division(&acc, &pivot) {
                for z in w.iter_mut() {
                    *z *= f;
                }
                acc *= f;
            }
            w[i] = -acc / pivot;
        }
        if w.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return None;
        }
        Some(w)
    }

    /// Solves `(PA) x = c b` for an unspecified positive `c`: the overall
    /// scale is sacrificed to keep the substitution finite when pivots sit
    /// near the underflow threshold. Callers normalize the result.
    fn solve_direction(&self, b: &[Complex64]) -> Vec<Complex64> {
        debug_assert!(self.complete(), "solve requires a complete factorization");
        let n = self.n;
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let sub = self.lu[i * n + j] * x[j];
                x[i] -= sub;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let sub = self.lu[i * n + j] * x[j];
                x[i] -= sub;
            }
            let pivot = self.lu[i * n + i];
            if let Some(f) = shrink_before_division(&x[i], &pivot) {
                for z in x.iter_mut() {
                    *z *= f;
                }
            }
            x[i] /= pivot;
        }
        x
    }
}

/// Shrink factor to apply to the whole vector before `value / pivot` so the
/// quotient stays below 1e120. Uniformly scaling a linear system's
/// right-hand side scales its solution identically, so directions survive.
fn shrink_before_division(value: &Complex64, pivot: &Complex64) -> Option<f64> {
    const HUGE: f64 = 1e120;
    let limit = pivot.norm() * HUGE;
    let magnitude = value.norm();
    if magnitude > limit {
        Some(limit / magnitude)
    } else {
        None
    }
}
