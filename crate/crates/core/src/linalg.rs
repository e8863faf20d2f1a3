//! Dense symmetric positive definite kernels used throughout the toolkit.
//!
//! Everything here works on plain `ndarray` types. Solves go through a
//! Cholesky factor; no code path forms an explicit inverse unless the
//! inverse itself is the quantity needed (posterior covariances in EM).

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};

use crate::error::{Error, Result};

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
pub fn cholesky(a: &ArrayView2<f64>) -> Result<Array2<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimMismatch(format!(
            "cholesky expects a square matrix, got {}x{}",
            n,
            a.ncols()
        )));
    }
    let mut l = Array2::<f64>::zeros((n, n));
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[[i, j]];
            for k in 0..j {
                sum -= l[[i, k]] * l[[j, k]];
            }
            if i == j {
                if sum <= 0.0 || !sum.is_finite() {
                    return Err(Error::NotPositiveDefinite(format!(
                        "pivot {sum:e} at row {i}"
                    )));
                }
                l[[i, i]] = sum.sqrt();
            } else {
                l[[i, j]] = sum / l[[j, j]];
            }
        }
    }
    Ok(l)
}

/// Solves `L z = b` by forward substitution.
pub fn forward_solve(l: &ArrayView2<f64>, b: &ArrayView1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut z = Array1::<f64>::zeros(n);
    for i in 0..n {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[[i, k]] * z[k];
        }
        z[i] = sum / l[[i, i]];
    }
    z
}

/// Solves `L' x = z` by back substitution.
pub fn backward_solve(l: &ArrayView2<f64>, z: &ArrayView1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut x = Array1::<f64>::zeros(n);
    for i in (0..n).rev() {
        let mut sum = z[i];
        for k in i + 1..n {
            sum -= l[[k, i]] * x[k];
        }
        x[i] = sum / l[[i, i]];
    }
    x
}

/// Solves `A x = b` given the Cholesky factor `L` of `A`.
pub fn chol_solve(l: &ArrayView2<f64>, b: &ArrayView1<f64>) -> Array1<f64> {
    let z = forward_solve(l, b);
    backward_solve(l, &z.view())
}

/// Solves `A X = B` column by column given the Cholesky factor of `A`.
pub fn chol_solve_mat(l: &ArrayView2<f64>, b: &ArrayView2<f64>) -> Array2<f64> {
    let mut x = Array2::<f64>::zeros(b.dim());
    for (j, col) in b.columns().into_iter().enumerate() {
        let sol = chol_solve(l, &col);
        x.column_mut(j).assign(&sol);
    }
    x
}

/// Inverse of a symmetric positive definite matrix from its Cholesky factor.
///
/// The result is symmetrized so downstream code can rely on exact symmetry.
pub fn chol_inverse(l: &ArrayView2<f64>) -> Array2<f64> {
    let n = l.nrows();
    let mut inv = chol_solve_mat(l, &Array2::<f64>::eye(n).view());
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (inv[[i, j]] + inv[[j, i]]);
            inv[[i, j]] = v;
            inv[[j, i]] = v;
        }
    }
    inv
}

/// `log det A` from the Cholesky factor of `A`.
pub fn chol_logdet(l: &ArrayView2<f64>) -> f64 {
    2.0 * l.diag().iter().map(|v| v.ln()).sum::<f64>()
}

/// Quadratic form `x' A^{-1} x` from the Cholesky factor of `A`.
///
/// Computed as `||L^{-1} x||^2`, which is bit-stable under negation of `x`.
pub fn chol_quad_form(l: &ArrayView2<f64>, x: &ArrayView1<f64>) -> f64 {
    let z = forward_solve(l, x);
    z.iter().map(|v| v * v).sum()
}

/// True if `a` is symmetric to within `tol` entry-wise.
pub fn is_symmetric(a: &ArrayView2<f64>, tol: f64) -> bool {
    let n = a.nrows();
    if a.ncols() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..i {
            if (a[[i, j]] - a[[j, i]]).abs() > tol {
                return false;
            }
        }
    }
    true
}
