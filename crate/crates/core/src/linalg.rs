//! Dense linear algebra used by the solvers: Cholesky with cached factors,
//! preconditioned conjugate gradients, LU and restarted GMRES.

use crate::error::{Error, Result};
use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

/// Matrix-free linear operator.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply(&self, x: &DVector<f64>) -> DVector<f64>;
}

impl LinearOperator for DMatrix<f64> {
    fn dim(&self) -> usize {
        self.nrows()
    }

    fn apply(&self, x: &DVector<f64>) -> DVector<f64> {
        self * x
    }
}

/// Choice of solution method in [`linear_solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    Direct,
    Iterative { tol: f64, restart: usize, max_restarts: usize },
}

/// Solve `A x = b`. Dense matrices are factorised by LU for the direct
/// method; the iterative method is restarted GMRES.
pub fn linear_solve(a: &DMatrix<f64>, b: &DVector<f64>, method: Method) -> Result<DVector<f64>> {
    if a.nrows() != a.ncols() || a.nrows() != b.len() {
        return Err(Error::InvalidInput(format!(
            "system of size {}x{} with rhs {}",
            a.nrows(),
            a.ncols(),
            b.len()
        )));
    }
    match method {
        Method::Direct => lu_solve(a, b),
        Method::Iterative {
            tol,
            restart,
            max_restarts,
        } => gmres(a, b, None, tol, restart, max_restarts),
    }
}

pub fn lu_solve(a: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
    let lu = a.clone().lu();
    let x = lu
        .solve(b)
        .ok_or_else(|| Error::Singular("LU factorisation hit a zero pivot".into()))?;
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::Singular("LU solution is not finite".into()));
    }
    Ok(x)
}

/// Restarted GMRES with modified Gram-Schmidt.
pub fn gmres<A: LinearOperator>(
    a: &A,
    b: &DVector<f64>,
    x0: Option<&DVector<f64>>,
    tol: f64,
    restart: usize,
    max_restarts: usize,
) -> Result<DVector<f64>> {
    let n = a.dim();
    let bnorm = b.norm();
    let mut x = x0.cloned().unwrap_or_else(|| DVector::zeros(n));
    if bnorm == 0.0 {
        return Ok(DVector::zeros(n));
    }
    let m = restart.max(1).min(n.max(1));
    let mut history = Vec::new();
    for _ in 0..max_restarts.max(1) {
        let r = b - a.apply(&x);
        let beta = r.norm();
        history.push(beta / bnorm);
        if beta / bnorm <= tol {
            return Ok(x);
        }
        let mut v: Vec<DVector<f64>> = vec![r / beta];
        let mut h = DMatrix::<f64>::zeros(m + 1, m);
        let mut cs = vec![0.0; m];
        let mut sn = vec![0.0; m];
        let mut g = DVector::<f64>::zeros(m + 1);
        g[0] = beta;
        let mut k_used = 0;
        for k in 0..m {
            let mut w = a.apply(&v[k]);
            for (j, vj) in v.iter().enumerate() {
                h[(j, k)] = w.dot(vj);
                w.axpy(-h[(j, k)], vj, 1.0);
            }
            h[(k + 1, k)] = w.norm();
            for j in 0..k {
                let t = cs[j] * h[(j, k)] + sn[j] * h[(j + 1, k)];
                h[(j + 1, k)] = -sn[j] * h[(j, k)] + cs[j] * h[(j + 1, k)];
                h[(j, k)] = t;
            }
            let denom = h[(k, k)].hypot(h[(k + 1, k)]);
            if denom == 0.0 {
                k_used = k;
                break;
            }
            cs[k] = h[(k, k)] / denom;
            sn[k] = h[(k + 1, k)] / denom;
            h[(k, k)] = denom;
            h[(k + 1, k)] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] *= cs[k];
            k_used = k + 1;
            if g[k + 1].abs() / bnorm <= tol * 0.5 || k + 1 == m {
                break;
            }
            let wn = w.norm();
            if wn == 0.0 {
                break;
            }
            v.push(w / wn);
        }
        // back substitution
        let mut y = DVector::<f64>::zeros(k_used);
        for i in (0..k_used).rev() {
            let mut s = g[i];
            for j in i + 1..k_used {
                s -= h[(i, j)] * y[j];
            }
            y[i] = s / h[(i, i)];
        }
        for (j, yj) in y.iter().enumerate() {
            x.axpy(*yj, &v[j], 1.0);
        }
    }
    let r = (b - a.apply(&x)).norm() / bnorm;
    history.push(r);
    if r <= tol {
        Ok(x)
    } else {
        Err(Error::Stagnation { history })
    }
}

/// Cholesky factorisation of a symmetric positive definite matrix.
pub fn cholesky(a: DMatrix<f64>) -> Result<Cholesky<f64, Dyn>> {
    Cholesky::new(a).ok_or_else(|| Error::Singular("matrix is not positive definite".into()))
}

/// Preconditioned conjugate gradients. Returns `None` when the relative
/// residual does not reach `tol` within `max_iter` steps.
pub fn pcg<A, P>(
    a: &A,
    precond: P,
    b: &DVector<f64>,
    x0: &DVector<f64>,
    tol: f64,
    max_iter: usize,
) -> Option<DVector<f64>>
where
    A: LinearOperator,
    P: Fn(&DVector<f64>) -> DVector<f64>,
{
    let bnorm = b.norm();
    if bnorm == 0.0 {
        return Some(DVector::zeros(b.len()));
    }
    let mut x = x0.clone();
    let mut r = b - a.apply(&x);
    if r.norm() <= tol * bnorm {
        return Some(x);
    }
    let mut z = precond(&r);
    let mut p = z.clone();
    let mut rz = r.dot(&z);
    for _ in 0..max_iter {
        let ap = a.apply(&p);
        let pap = p.dot(&ap);
        if !(pap > 0.0) {
            return None;
        }
        let alpha = rz / pap;
        x.axpy(alpha, &p, 1.0);
        r.axpy(-alpha, &ap, 1.0);
        if r.norm() <= tol * bnorm {
            return Some(x);
        }
        z = precond(&r);
        let rz_new = r.dot(&z);
        p = &z + (rz_new / rz) * p;
        rz = rz_new;
    }
    None
}

/// Largest absolute entry of `A - Aᵀ`.
pub fn asymmetry(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..i {
            worst = worst.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    worst
}

/// Replace `A` by `(A + Aᵀ)/2` in place.
pub fn symmetrize(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
}
