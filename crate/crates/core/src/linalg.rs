//! Jacobi decompositions: cyclic eigendecomposition for symmetric matrices
//! and one-sided SVD for rectangular ones. Both are deterministic (fixed
//! sweep order, fixed thresholds) and accurate to near machine precision on
//! the modest matrix sizes this crate works with.

use alloc::vec::Vec;

use crate::math;
use crate::matrix::Matrix;

const MAX_SWEEPS: usize = 64;
const EPS: f64 = 1e-14;

/// Eigendecomposition of a symmetric matrix. Returns eigenvalues in
/// nonincreasing order and the matching eigenvectors as matrix columns.
pub fn symmetric_eigen(a: &Matrix) -> (Vec<f64>, Matrix) {
    let d = a.rows();
    debug_assert_eq!(d, a.cols());
    let mut m = a.clone();
    let mut v = identity(d);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..d {
            for q in (p + 1)..d {
                off += m.get(p, q) * m.get(p, q);
            }
        }
        let scale: f64 = (0..d).map(|i| m.get(i, i) * m.get(i, i)).sum::<f64>() + off;
        if off <= EPS * EPS * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + math::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + math::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = t * c;
                // Rotate rows/columns p and q of the working matrix.
                for i in 0..d {
                    let mip = m.get(i, p);
                    let miq = m.get(i, q);
                    m.set(i, p, c * mip - s * miq);
                    m.set(i, q, s * mip + c * miq);
                }
                for i in 0..d {
                    let mpi = m.get(p, i);
                    let mqi = m.get(q, i);
                    m.set(p, i, c * mpi - s * mqi);
                    m.set(q, i, s * mpi + c * mqi);
                }
                for i in 0..d {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, c * vip - s * viq);
                    v.set(i, q, s * vip + c * viq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| m.get(j, j).partial_cmp(&m.get(i, i)).unwrap().then(i.cmp(&j)));
    let eigenvalues = order.iter().map(|&i| m.get(i, i)).collect();
    let mut vectors = Matrix::zeros(d, d);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..d {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    (eigenvalues, vectors)
}

/// Thin right-sided SVD via one-sided Jacobi column orthogonalization.
/// Returns singular values in nonincreasing order and the right singular
/// vectors as matrix columns (`d x d`).
pub fn svd_right(a: &Matrix) -> (Vec<f64>, Matrix) {
    let n = a.rows();
    let d = a.cols();
    let mut u = a.clone();
    let mut v = identity(d);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..d {
            for q in (p + 1)..d {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for i in 0..n {
                    let up = u.get(i, p);
                    let uq = u.get(i, q);
                    alpha += up * up;
                    beta += uq * uq;
                    gamma += up * uq;
                }
                if gamma.abs() <= EPS * math::sqrt(alpha * beta) || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + math::sqrt(1.0 + zeta * zeta))
                } else {
                    -1.0 / (-zeta + math::sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = c * t;
                for i in 0..n {
                    let up = u.get(i, p);
                    let uq = u.get(i, q);
                    u.set(i, p, c * up - s * uq);
                    u.set(i, q, s * up + c * uq);
                }
                for i in 0..d {
                    let vp = v.get(i, p);
                    let vq = v.get(i, q);
                    v.set(i, p, c * vp - s * vq);
                    v.set(i, q, s * vp + c * vq);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut norms: Vec<f64> = (0..d)
        .map(|j| math::sqrt((0..n).map(|i| u.get(i, j) * u.get(i, j)).sum::<f64>()))
        .collect();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap().then(i.cmp(&j)));
    norms = order.iter().map(|&j| norms[j]).collect();
    let mut vectors = Matrix::zeros(d, d);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..d {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    (norms, vectors)
}

fn identity(d: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        m.set(i, i, 1.0);
    }
    m
}
