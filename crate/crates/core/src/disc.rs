//! Discretization parameters and the basis tables shared by every sphere.

use crate::error::{Error, Result};
use crate::quad::{lebedev, lgl, LebedevRule, LglRule};
use crate::specfun::{degrees, n_harmonics, sph_harm_grad_all};
use nalgebra::DMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct Discretization {
    pub lmax: usize,
    /// Number of radial basis functions per harmonic.
    pub n_radial: usize,
    pub leb: LebedevRule,
    pub lgl: LglRule,
    /// Degree of each flat harmonic index.
    pub degrees: Vec<usize>,
    /// `Y_p(s_n)`, one row per Lebedev node.
    pub y: DMatrix<f64>,
    /// Components of the surface gradients `∇_S Y_p(s_n)`.
    pub grad: [DMatrix<f64>; 3],
    /// `ω_n Y_p(s_n)`, the projection onto harmonics.
    pub wy: DMatrix<f64>,
    /// Discrete Gram matrices `Σ ω Y Yᵀ` and `Σ ω ∇_S Y·∇_S Yᵀ`.
    pub gram: DMatrix<f64>,
    pub gram_grad: DMatrix<f64>,
}

impl Discretization {
    pub fn new(lmax: usize, n_radial: usize, n_leb: usize, n_lgl: usize) -> Result<Self> {
        if n_radial == 0 {
            return Err(Error::InvalidInput("n_radial must be >= 1".into()));
        }
        let leb = lebedev(n_leb)?;
        let lgl = lgl(n_lgl)?;
        let nb = n_harmonics(lmax);
        let nl = leb.len();
        let mut y = DMatrix::zeros(nl, nb);
        let mut grad = [DMatrix::zeros(nl, nb), DMatrix::zeros(nl, nb), DMatrix::zeros(nl, nb)];
        for (n, s) in leb.points.iter().enumerate() {
            let (v, g) = sph_harm_grad_all(lmax, *s);
            for p in 0..nb {
                y[(n, p)] = v[p];
                for c in 0..3 {
                    grad[c][(n, p)] = g[p][c];
                }
            }
        }
        let wy = DMatrix::from_fn(nl, nb, |n, p| leb.weights[n] * y[(n, p)]);
        let gram = y.tr_mul(&wy);
        let mut gram_grad = DMatrix::zeros(nb, nb);
        for g in &grad {
            let wg = DMatrix::from_fn(nl, nb, |n, p| leb.weights[n] * g[(n, p)]);
            gram_grad += g.tr_mul(&wg);
        }
        Ok(Self {
            lmax,
            n_radial,
            degrees: degrees(lmax),
            leb,
            lgl,
            y,
            grad,
            wy,
            gram,
            gram_grad,
        })
    }

    pub fn n_harmonics(&self) -> usize {
        n_harmonics(self.lmax)
    }

    /// Galerkin unknowns per sphere.
    pub fn n_local(&self) -> usize {
        self.n_radial * self.n_harmonics()
    }

    pub fn n_leb(&self) -> usize {
        self.leb.len()
    }

    /// Flat Galerkin index of radial function `i` (1-based) and harmonic `p`.
    pub fn galerkin_index(&self, i: usize, p: usize) -> usize {
        self.n_radial * p + (i - 1)
    }

    /// Harmonic coefficients of Lebedev samples.
    pub fn project(&self, samples: &[f64]) -> Vec<f64> {
        let nb = self.n_harmonics();
        let mut out = vec![0.0; nb];
        for (n, v) in samples.iter().enumerate() {
            if *v != 0.0 {
                for p in 0..nb {
                    out[p] += self.wy[(n, p)] * v;
                }
            }
        }
        out
    }
}
