//! Dense nonsymmetric eigenvalue engine: balance, Householder reduction to
//! upper Hessenberg form, and Francis double-shift QR iteration.
//!
//! The QR stage follows the classic EISPACK `hqr` scheme (eigenvalues only,
//! no Schur vectors) with deterministic exceptional shifts, so repeated runs
//! produce identical output bit for bit.

use num_complex::Complex64;

const EPS: f64 = f64::EPSILON;

/// Row-major view used by the reduction and iteration stages.
struct Mat<'a> {
    n: usize,
    a: &'a mut [f64],
}

impl Mat<'_> {
    #[inline]
    fn g(&self, i: isize, j: isize) -> f64 {
        self.a[i as usize * self.n + j as usize]
    }

    #[inline]
    fn s(&mut self, i: isize, j: isize, v: f64) {
        self.a[i as usize * self.n + j as usize] = v;
    }
}

/// Diagonal similarity scaling (radix 2) equilibrating row and column norms.
/// Leaves the spectrum unchanged.
pub(crate) fn balance(a: &mut [f64], n: usize) {
    const RADIX: f64 = 2.0;
    const SQRDX: f64 = RADIX * RADIX;
    let mut settled = false;
    while !settled {
        settled = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += a[j * n + i].abs();
                    row += a[i * n + j].abs();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let start = col + row;
            let mut f = 1.0;
            let mut c = col;
            let mut g = row / RADIX;
            while c < g {
                f *= RADIX;
                c *= SQRDX;
            }
            g = row * RADIX;
            while c > g {
                f /= RADIX;
                c /= SQRDX;
            }
            if (c + row) / f < 0.95 * start {
                settled = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    a[i * n + j] *= inv;
                }
                for j in 0..n {
                    a[j * n + i] *= f;
                }
            }
        }
    }
}

/// Householder reduction to upper Hessenberg form (no transform accumulation).
/// Entries below the subdiagonal are zeroed afterwards.
pub(crate) fn hessenberg(a: &mut [f64], n: usize) {
    if n < 3 {
        return;
    }
    let high = n - 1;
    let mut ort = vec![0.0; n];
    for m in 1..high {
        let scale: f64 = (m..=high).map(|i| a[i * n + (m - 1)].abs()).sum();
        if scale == 0.0 {
            continue;
        }
        let mut h = 0.0;
        for i in (m..=high).rev() {
            ort[i] = a[i * n + (m - 1)] / scale;
            h += ort[i] * ort[i];
        }
        let mut g = h.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        h -= ort[m] * g;
        ort[m] -= g;

        // apply the Householder similarity from both sides
        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * a[i * n + j];
            }
            f /= h;
            for i in m..=high {
                a[i * n + j] -= f * ort[i];
            }
        }
        for i in 0..=high {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * a[i * n + j];
            }
            f /= h;
            for j in m..=high {
                a[i * n + j] -= f * ort[j];
            }
        }
        a[m * n + (m - 1)] = scale * g;
    }
    for i in 2..n {
        for j in 0..=(i - 2) {
            a[i * n + j] = 0.0;
        }
    }
}

/// Outcome of a QR run that hit the iteration cap.
#[derive(Debug)]
pub(crate) struct Unconverged {
    /// Eigenvalues deflated before the cap was reached.
    pub converged: Vec<Complex64>,
    /// Total sweeps performed.
    pub iterations: usize,
}

fn sign_of(magnitude: f64, sign_source: f64) -> f64 {
    if sign_source >= 0.0 {
        magnitude.abs()
    } else {
        -magnitude.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix. Returns all
/// eigenvalues, or the partial set if `max_sweeps` is exhausted.
pub(crate) fn francis(
    h: &mut [f64],
    n: usize,
    max_sweeps: usize,
) -> Result<Vec<Complex64>, Unconverged> {
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    let mut m = Mat { n, a: h };
    let ni = n as isize;

    let mut anorm = 0.0;
    for i in 0..ni {
        for j in (i - 1).max(0)..ni {
            anorm += m.g(i, j).abs();
        }
    }

    let mut hi = ni - 1;
    let mut shift = 0.0;
    let mut sweeps = 0usize;
    'deflate: while hi >= 0 {
        let mut its = 0usize;
        loop {
            // look for a negligible subdiagonal element; when the local
            // diagonal scale is itself below round-off of the whole matrix
            // (an underflow cascade from a low-rank reduction), judge
            // against the global norm instead, which is the perturbation
            // the iteration makes anyway
            let mut l = hi;
            while l >= 1 {
                let mut s = m.g(l - 1, l - 1).abs() + m.g(l, l).abs();
                if s <= EPS * anorm {
                    s = anorm;
                }
                if m.g(l, l - 1).abs() <= EPS * s {
                    m.s(l, l - 1, 0.0);
                    break;
                }
                l -= 1;
            }
            let mut x = m.g(hi, hi);
            if l == hi {
                // one real root
                wr[hi as usize] = x + shift;
                wi[hi as usize] = 0.0;
                hi -= 1;
                continue 'deflate;
            }
            let mut y = m.g(hi - 1, hi - 1);
            let mut w = m.g(hi, hi - 1) * m.g(hi - 1, hi);
            if l == hi - 1 {
                // a 2x2 block: roots from the quadratic formula
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = q.abs().sqrt();
                x += shift;
                if q >= 0.0 {
                    z = p + sign_of(z, p);
                    wr[(hi - 1) as usize] = x + z;
                    wr[hi as usize] = if z != 0.0 { x - w / z } else { x + z };
                    wi[(hi - 1) as usize] = 0.0;
                    wi[hi as usize] = 0.0;
                } else {
                    wr[(hi - 1) as usize] = x + p;
                    wr[hi as usize] = x + p;
                    wi[hi as usize] = z;
                    wi[(hi - 1) as usize] = -z;
                }
                hi -= 2;
                continue 'deflate;
            }

            if sweeps >= max_sweeps {
                let converged = (hi as usize + 1..n)
                    .map(|i| Complex64::new(wr[i], wi[i]))
                    .collect();
                return Err(Unconverged {
                    converged,
                    iterations: sweeps,
                });
            }
            if its >= 10 && its.is_multiple_of(10) {
                // exceptional shift to break symmetry-induced stalls
                shift += x;
                for i in 0..=hi {
                    let d = m.g(i, i);
                    m.s(i, i, d - x);
                }
                let s = m.g(hi, hi - 1).abs() + m.g(hi - 1, hi - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            sweeps += 1;

            // form the implicit double shift; find two consecutive small
            // subdiagonal entries to start the bulge as low as possible
            let mut p = 0.0;
            let mut q = 0.0;
            let mut r = 0.0;
            let mut lo = hi - 2;
            while lo >= l {
                let z = m.g(lo, lo);
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / m.g(lo + 1, lo) + m.g(lo, lo + 1);
                q = m.g(lo + 1, lo + 1) - z - rr - ss;
                r = m.g(lo + 2, lo + 1);
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if lo == l {
                    break;
                }
                let u = m.g(lo, lo - 1).abs() * (q.abs() + r.abs());
                let v = p.abs() * (m.g(lo - 1, lo - 1).abs() + z.abs() + m.g(lo + 1, lo + 1).abs());
                if u <= EPS * v {
                    break;
                }
                lo -= 1;
            }
            for i in lo + 2..=hi {
                m.s(i, i - 2, 0.0);
                if i != lo + 2 {
                    m.s(i, i - 3, 0.0);
                }
            }

            // chase the bulge down the active block
            let mut k = lo;
            while k < hi {
                if k != lo {
                    p = m.g(k, k - 1);
                    q = m.g(k + 1, k - 1);
                    r = if k != hi - 1 { m.g(k + 2, k - 1) } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = sign_of((p * p + q * q + r * r).sqrt(), p);
                if s != 0.0 {
                    if k == lo {
                        if l != lo {
                            let v = m.g(k, k - 1);
                            m.s(k, k - 1, -v);
                        }
                    } else {
                        m.s(k, k - 1, -s * x);
                    }
                    p += s;
                    x = p / s;
                    let yy = q / s;
                    let zz = r / s;
                    q /= p;
                    r /= p;
                    for j in k..=hi {
                        let mut pp = m.g(k, j) + q * m.g(k + 1, j);
                        if k != hi - 1 {
                            pp += r * m.g(k + 2, j);
                            let v = m.g(k + 2, j);
                            m.s(k + 2, j, v - pp * zz);
                        }
                        let v = m.g(k + 1, j);
                        m.s(k + 1, j, v - pp * yy);
                        let v = m.g(k, j);
                        m.s(k, j, v - pp * x);
                    }
                    let top = if hi < k + 3 { hi } else { k + 3 };
                    for i in l..=top {
                        let mut pp = x * m.g(i, k) + yy * m.g(i, k + 1);
                        if k != hi - 1 {
                            pp += zz * m.g(i, k + 2);
                            let v = m.g(i, k + 2);
                            m.s(i, k + 2, v - pp * r);
                        }
                        let v = m.g(i, k + 1);
                        m.s(i, k + 1, v - pp * q);
                        let v = m.g(i, k);
                        m.s(i, k, v - pp);
                    }
                }
                k += 1;
            }
        }
    }

    Ok((0..n).map(|i| Complex64::new(wr[i], wi[i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(entries: &[f64], n: usize) -> Vec<Complex64> {
        let mut a = entries.to_vec();
        balance(&mut a, n);
        hessenberg(&mut a, n);
        let mut v = francis(&mut a, n, 100 * n).expect("convergence");
        v.sort_by(|a, b| {
            b.norm()
                .total_cmp(&a.norm())
                .then(a.re.total_cmp(&b.re))
                .then(a.im.total_cmp(&b.im))
        });
        v
    }

    #[test]
    fn diagonal_matrix_returns_its_diagonal() {
        let v = eig(&[3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0], 3);
        let re: Vec<f64> = v.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![3.0, 2.0, -1.0]);
        assert!(v.iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn rotation_block_gives_pure_imaginary_pair() {
        let v = eig(&[0.0, 1.0, -1.0, 0.0], 2);
        assert!((v[0].im - 1.0).abs() < 1e-12 || (v[0].im + 1.0).abs() < 1e-12);
        assert!((v[0].norm() - 1.0).abs() < 1e-12);
        assert!((v[1].norm() - 1.0).abs() < 1e-12);
        assert_eq!(v[0].re, 0.0);
    }

    #[test]
    fn nilpotent_two_by_two_gives_exact_zeros() {
        let v = eig(&[1.0, -1.0, 1.0, -1.0], 2);
        assert_eq!(v[0], Complex64::new(0.0, 0.0));
        assert_eq!(v[1], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn companion_matrix_of_cubic_has_known_roots() {
        // companion of x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
        let a = [6.0, -11.0, 6.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0];
        let v = eig(&a, 3);
        let mut re: Vec<f64> = v.iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.total_cmp(b));
        for (got, want) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn moments_match_traces_on_a_fixed_dense_matrix() {
        let n = 6;
        // small integer matrix with no special structure
        let a: Vec<f64> = [
            2, -1, 0, 3, 1, 0, //
            1, 0, -2, 0, 0, 1, //
            0, 4, 1, -1, 2, 0, //
            -3, 0, 1, 0, 1, 1, //
            0, 2, 0, -1, -2, 0, //
            1, 0, 0, 2, 0, 1,
        ]
        .iter()
        .map(|&x| x as f64)
        .collect();
        let v = eig(&a, n);
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let sum: Complex64 = v.iter().sum();
        assert!((sum.re - trace).abs() < 1e-9, "{} vs {trace}", sum.re);
        assert!(sum.im.abs() < 1e-9);
        let mut sq_trace = 0.0;
        for i in 0..n {
            for k in 0..n {
                sq_trace += a[i * n + k] * a[k * n + i];
            }
        }
        let sq_sum: Complex64 = v.iter().map(|z| z * z).sum();
        assert!((sq_sum.re - sq_trace).abs() < 1e-8);
        assert!(sq_sum.im.abs() < 1e-8);
    }
}
