//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use crate::matrix::RealMatrix;

/// Upper bound on sweeps; quadratic convergence makes this unreachable in practice.
const MAX_SWEEPS: usize = 100;

/// Eigenvalues (descending) and, when requested, matching unit eigenvectors
/// stored as the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Option<RealMatrix>,
    pub sweeps: usize,
}

/// Runs cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `1e-14 * n * max(1, max|a_ij|)`.
pub fn jacobi(a: &RealMatrix, with_vectors: bool) -> Eigen {
    let n = a.order();
    let mut m = a.clone();
    let mut v = with_vectors.then(|| RealMatrix::identity(n));
    let threshold = 1e-14 * n as f64 * a.max_abs().max(1.0);
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off_diagonal_norm(&m) >= threshold {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut m, p, q, c, s);
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].total_cmp(&m[(i, i)]));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = v.map(|v| RealMatrix::from_fn(n, |r, c| v[(r, order[c])]));
    Eigen {
        values,
        vectors,
        sweeps,
    }
}

/// Applies `J^T M J` for the rotation in the (p, q) plane that zeroes `m[p][q]`.
fn rotate(m: &mut RealMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = m.order();
    let (app, aqq, apq) = (m[(p, p)], m[(q, q)], m[(p, q)]);
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let (akp, akq) = (m[(k, p)], m[(k, q)]);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        m[(k, p)] = new_kp;
        m[(p, k)] = new_kp;
        m[(k, q)] = new_kq;
        m[(q, k)] = new_kq;
    }
    m[(p, p)] = app - (s / c) * apq;
    m[(q, q)] = aqq + (s / c) * apq;
    m[(p, q)] = 0.0;
    m[(q, p)] = 0.0;
}

pub fn off_diagonal_norm(m: &RealMatrix) -> f64 {
    let n = m.order();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[(i, j)] * m[(i, j)];
            }
        }
    }
    sum.sqrt()
}

/// Descending eigenvalues of a symmetric matrix.
pub fn symmetric_eigenvalues(a: &RealMatrix) -> Vec<f64> {
    jacobi(a, false).values
}
