//! Small dense symmetric linear algebra: cyclic Jacobi eigendecomposition
//! and a least-squares solver built on it. Enough for desk-scale spectra
//! and moment-matrix projections; not a general-purpose LAPACK stand-in.

use crate::error::{Error, Result};

/// Eigendecomposition of a symmetric matrix.
pub struct SymEigen {
    /// Eigenvalues, ascending.
    pub values: Vec<f64>,
    /// `vectors[k]` is the eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi sweeps on a symmetric matrix given as full rows.
///
/// Runs until the off-diagonal Frobenius norm falls below `tol` (relative
/// to the matrix scale), or fails after `max_sweeps`.
pub fn jacobi_eigen(matrix: &[Vec<f64>], tol: f64, max_sweeps: usize) -> Result<SymEigen> {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    for (i, row) in a.iter().enumerate() {
        debug_assert_eq!(row.len(), n, "matrix must be square");
        for j in 0..i {
            debug_assert!((a[i][j] - a[j][i]).abs() < 1e-9, "matrix must be symmetric");
        }
    }
    let mut v = identity(n);
    if n <= 1 {
        return Ok(collect(a, v));
    }

    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0);
    let stop = tol * scale;

    for _ in 0..max_sweeps {
        if off_norm(&a) <= stop {
            return Ok(collect(a, v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= stop / (n as f64 * n as f64) {
                    continue;
                }
                let (c, s) = rotation(a[p][p], a[q][q], apq);
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
    }
    if off_norm(&a) <= stop {
        return Ok(collect(a, v));
    }
    Err(Error::NumericNonConvergence("jacobi".into()))
}

fn rotation(app: f64, aqq: f64, apq: f64) -> (f64, f64) {
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        1.0 / (theta - (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c)
}

fn rotate(a: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let n = a.len();
    for k in 0..n {
        let akp = a[k][p];
        let akq = a[k][q];
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[p][k];
        let aqk = a[q][k];
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    for k in 0..n {
        let vkp = v[k][p];
        let vkq = v[k][q];
        v[k][p] = c * vkp - s * vkq;
        v[k][q] = s * vkp + c * vkq;
    }
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i][j] * a[i][j];
        }
    }
    (2.0 * sum).sqrt()
}

fn identity(n: usize) -> Vec<Vec<f64>> {
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    v
}

fn collect(a: Vec<Vec<f64>>, v: Vec<Vec<f64>>) -> SymEigen {
    let n = a.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let values = order.iter().map(|&k| a[k][k]).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|r| v[r][k]).collect())
        .collect();
    SymEigen { values, vectors }
}

/// Projects a symmetric matrix onto the PSD cone by clamping negative
/// eigenvalues to zero. Returns the projection and the most negative
/// eigenvalue found (0.0 if already PSD).
pub fn psd_project(matrix: &[Vec<f64>], tol: f64) -> Result<(Vec<Vec<f64>>, f64)> {
    let n = matrix.len();
    let eig = jacobi_eigen(matrix, tol, 100)?;
    let min_eig = eig.values.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut out = vec![vec![0.0; n]; n];
    for (k, &lam) in eig.values.iter().enumerate() {
        if lam <= 0.0 {
            continue;
        }
        let vk = &eig.vectors[k];
        for i in 0..n {
            for j in 0..n {
                out[i][j] += lam * vk[i] * vk[j];
            }
        }
    }
    Ok((out, min_eig.min(0.0)))
}

/// Minimum-norm solution of `A x = b` via the eigendecomposition of
/// `A Aᵀ` (rows may be linearly dependent). Used for projections onto
/// affine subspaces: `x_proj = x - Aᵀ (A Aᵀ)⁺ (A x - b)`.
pub struct AffineProjector {
    rows: Vec<Vec<f64>>,
    gram_inv: Vec<Vec<f64>>,
}

impl AffineProjector {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let m = rows.len();
        let mut gram = vec![vec![0.0; m]; m];
        for i in 0..m {
            for j in i..m {
                let dot = dot(&rows[i], &rows[j]);
                gram[i][j] = dot;
                gram[j][i] = dot;
            }
        }
        let eig = jacobi_eigen(&gram, 1e-12, 100)?;
        let max_eig = eig.values.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
        let cutoff = max_eig * 1e-10;
        let mut gram_inv = vec![vec![0.0; m]; m];
        for (k, &lam) in eig.values.iter().enumerate() {
            if lam.abs() <= cutoff {
                continue;
            }
            let vk = &eig.vectors[k];
            for i in 0..m {
                for j in 0..m {
                    gram_inv[i][j] += vk[i] * vk[j] / lam;
                }
            }
        }
        Ok(AffineProjector { rows, gram_inv })
    }

    /// Projects `x` onto `{x : A x = b}` in place.
    pub fn project(&self, x: &mut [f64], b: &[f64]) {
        let m = self.rows.len();
        let mut resid = vec![0.0; m];
        for i in 0..m {
            resid[i] = dot(&self.rows[i], x) - b[i];
        }
        let mut mult = vec![0.0; m];
        for i in 0..m {
            mult[i] = dot(&self.gram_inv[i], &resid);
        }
        for i in 0..m {
            let mi = mult[i];
            if mi == 0.0 {
                continue;
            }
            for (xk, rk) in x.iter_mut().zip(self.rows[i].iter()) {
                *xk -= mi * rk;
            }
        }
    }

    pub fn residual_inf(&self, x: &[f64], b: &[f64]) -> f64 {
        self.rows
            .iter()
            .zip(b.iter())
            .map(|(row, bi)| (dot(row, x) - bi).abs())
            .fold(0.0, f64::max)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}
