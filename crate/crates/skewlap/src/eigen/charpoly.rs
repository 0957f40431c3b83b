//! Exact integer characteristic polynomials via the Faddeev-LeVerrier
//! recurrence. Determinant-free: only matrix products and traces, with all
//! divisions provably exact over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::matrices::DenseMatrix;

/// Largest order accepted by [`characteristic_polynomial`].
pub const CHAR_POLY_MAX_ORDER: usize = 16;

/// Largest order the internal exact zero-multiplicity probe will attempt.
const ZERO_PROBE_MAX_ORDER: usize = 24;

/// Failures of the exact characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharPolyError {
    /// Order exceeds the exact-arithmetic cap.
    #[error("order {order} exceeds the exact arithmetic cap of {max}")]
    OrderTooLarge { order: usize, max: usize },
    /// The matrix has entries that are not exact integers.
    #[error("matrix has non-integer entries")]
    NonIntegerEntries,
    /// A coefficient does not fit in `i128`.
    #[error("characteristic polynomial coefficient exceeds i128 range")]
    CoefficientOverflow,
}

impl CharPolyError {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            CharPolyError::OrderTooLarge { .. } => "OrderTooLarge",
            CharPolyError::NonIntegerEntries => "NonIntegerEntries",
            CharPolyError::CoefficientOverflow => "CoefficientOverflow",
        }
    }
}

fn big_trace(m: &[BigInt], n: usize) -> BigInt {
    (0..n).map(|i| m[i * n + i].clone()).sum()
}

fn big_matmul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let term = aik * &b[k * n + j];
                out[i * n + j] += term;
            }
        }
    }
    out
}

/// Faddeev-LeVerrier in checked `i128`; `None` on any overflow, in which
/// case the caller falls back to big integers.
fn char_poly_i128(entries: &[i64], n: usize) -> Option<Vec<i128>> {
    let a: Vec<i128> = entries.iter().map(|&x| x as i128).collect();
    let trace = |m: &[i128]| -> Option<i128> {
        (0..n).try_fold(0i128, |acc, i| acc.checked_add(m[i * n + i]))
    };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[0] = 1;
    if n == 0 {
        return Some(coeffs);
    }
    let mut work = a.clone();
    coeffs[1] = trace(&work)?.checked_neg()?;
    for k in 2..=n {
        let c = coeffs[k - 1];
        for i in 0..n {
            work[i * n + i] = work[i * n + i].checked_add(c)?;
        }
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = a[i * n + l];
                if ail == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = ail.checked_mul(work[l * n + j])?;
                    next[i * n + j] = next[i * n + j].checked_add(term)?;
                }
            }
        }
        work = next;
        let tr = trace(&work)?;
        debug_assert_eq!(tr % (k as i128), 0, "Faddeev-LeVerrier division is exact");
        coeffs[k] = (tr / (k as i128)).checked_neg()?;
    }
    Some(coeffs)
}

/// Monic characteristic polynomial of an integer matrix, coefficients in
/// descending powers of `x`: `[1, c_{n-1}, ..., c_0]`.
fn char_poly_bigint(entries: &[i64], n: usize) -> Vec<BigInt> {
    let a: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::from(1);
    if n == 0 {
        return coeffs;
    }
    let mut work = a.clone();
    coeffs[1] = -big_trace(&work, n);
    for k in 2..=n {
        // M_k = A (M_{k-1} + c_{n-k+1} I); c_{n-k} = -tr(M_k) / k
        let c = coeffs[k - 1].clone();
        for i in 0..n {
            work[i * n + i] += &c;
        }
        work = big_matmul(&a, &work, n);
        let tr = big_trace(&work, n);
        let divisor = BigInt::from(k);
        debug_assert!(
            (&tr % &divisor).is_zero(),
            "Faddeev-LeVerrier division is exact"
        );
        coeffs[k] = -tr / divisor;
    }
    coeffs
}

/// Exact characteristic polynomial of an integer-valued matrix of order at
/// most [`CHAR_POLY_MAX_ORDER`]. Coefficients are in descending powers, so a
/// `2x2` rotation block yields `[1, 0, 1]` for `x^2 + 1`.
pub fn characteristic_polynomial(m: &DenseMatrix) -> Result<Vec<i128>, CharPolyError> {
    let n = m.order();
    if n > CHAR_POLY_MAX_ORDER {
        return Err(CharPolyError::OrderTooLarge {
            order: n,
            max: CHAR_POLY_MAX_ORDER,
        });
    }
    let ints = m
        .to_integer_entries()
        .ok_or(CharPolyError::NonIntegerEntries)?;
    if let Some(coeffs) = char_poly_i128(&ints, n) {
        return Ok(coeffs);
    }
    char_poly_bigint(&ints, n)
        .into_iter()
        .map(|c| i128::try_from(c).map_err(|_| CharPolyError::CoefficientOverflow))
        .collect()
}

/// Exact zero-eigenvalue structure of an integer matrix.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ZeroStructure {
    /// Algebraic multiplicity of the eigenvalue 0: the number of vanishing
    /// trailing coefficients of the exact characteristic polynomial.
    pub multiplicity: usize,
    /// Proven lower bound on the modulus of every nonzero eigenvalue
    /// (Cauchy bound on the zero-deflated polynomial); infinite when all
    /// eigenvalues are zero.
    pub nonzero_root_floor: f64,
}

/// Exact zero structure, or `None` when the matrix is outside the exact
/// range (non-integer entries or order above the probe cap).
pub(crate) fn zero_structure(m: &DenseMatrix) -> Option<ZeroStructure> {
    let n = m.order();
    if n == 0 || n > ZERO_PROBE_MAX_ORDER {
        return None;
    }
    let ints = m.to_integer_entries()?;
    if ints.iter().any(|x| x.abs() > 1 << 20) {
        return None;
    }
    let magnitudes: Vec<f64> = match char_poly_i128(&ints, n) {
        Some(coeffs) => coeffs.iter().map(|c| (*c as f64).abs()).collect(),
        None => char_poly_bigint(&ints, n)
            .iter()
            .map(big_to_f64_abs)
            .collect(),
    };
    let multiplicity = magnitudes
        .iter()
        .rev()
        .take_while(|c| **c == 0.0)
        .count()
        .min(n);
    if multiplicity == n {
        return Some(ZeroStructure {
            multiplicity,
            nonzero_root_floor: f64::INFINITY,
        });
    }
    // every root z of the deflated polynomial c_n z^{n-k} + ... + c_k
    // satisfies |z| >= |c_k| / (|c_k| + max_{j > k} |c_j|)
    let low = magnitudes[n - multiplicity];
    let rest = magnitudes[..n - multiplicity]
        .iter()
        .copied()
        .fold(0.0, f64::max);
    Some(ZeroStructure {
        multiplicity,
        nonzero_root_floor: low / (low + rest),
    })
}

fn big_to_f64_abs(value: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    value.abs().to_f64().unwrap_or(f64::MAX)
}

/// Evaluates an integer polynomial (descending coefficients) at a complex
/// point by Horner's rule.
pub fn eval_poly(coeffs: &[i128], x: num_complex::Complex64) -> num_complex::Complex64 {
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    for &c in coeffs {
        acc = acc * x + num_complex::Complex64::new(c as f64, 0.0);
    }
    acc
}
