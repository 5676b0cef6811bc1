//! Single-domain solvers on the unit ball: the screened (HSP) spectral
//! solution and the Galerkin solver for the generalized screened Poisson
//! (GSP) problem on the annulus `δ ≤ r ≤ 1` with a harmonic inner extension.
//!
//! Galerkin unknowns of one sphere are ordered `k = N·p + (i-1)` with `p` the
//! flat harmonic index and `i` the radial basis index. The Dirichlet trace is
//! carried by separate harmonic lift coefficients `u_p`, interpolated into the
//! ball as `r^l Y_p`.

use crate::disc::Discretization;
use crate::error::{Error, Result};
use crate::linalg::{asymmetry, cholesky, pcg, symmetrize, LinearOperator};
use crate::quad::AnnulusRule;
use crate::specfun::{radial_basis_all, sph_harm_all, Screened};
use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

pub use crate::specfun::sinh_ratio;

/// Nonlinear (NPB) or linearized (LPB) ion term. `Frozen` runs the NPB
/// fixed point with the factor `sinh(ψ)/ψ` held at 1, a diagnostic that must
/// reproduce LPB.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Npb,
    Lpb,
    Frozen,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Npb => "npb",
            Model::Lpb => "lpb",
            Model::Frozen => "frozen",
        }
    }
}

/// Coefficient data sampled at one quadrature node of the unit ball.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NodeSample {
    pub eps: f64,
    pub lam: f64,
    pub psi0: f64,
    /// Gradient of `ψ0` with respect to unit-ball coordinates.
    pub grad_psi0: [f64; 3],
}

/// Solution of the screened equation in the unit ball with boundary
/// coefficients `coeffs` and scaled screening constant `κR`.
#[derive(Debug, Clone, PartialEq)]
pub struct HspSolution {
    pub coeffs: Vec<f64>,
    pub kappa_scaled: f64,
}

impl HspSolution {
    pub fn eval(&self, lmax: usize, r: f64, s: [f64; 3]) -> f64 {
        let ratios = Screened::new(self.kappa_scaled).interior_ratios(lmax, r, 1.0);
        let y = sph_harm_all(lmax, s);
        let mut p = 0;
        let mut total = 0.0;
        for (l, ratio) in ratios.iter().enumerate() {
            for _ in 0..2 * l + 1 {
                total += self.coeffs[p] * ratio * y[p];
                p += 1;
            }
        }
        total
    }
}

/// Spectral HSP solution from boundary coefficients.
pub fn hsp_solve(phi_e: &[f64], kappa_scaled: f64) -> Result<HspSolution> {
    if !(kappa_scaled >= 0.0) {
        return Err(Error::Domain(format!("scaled screening {kappa_scaled} < 0")));
    }
    Ok(HspSolution {
        coeffs: phi_e.to_vec(),
        kappa_scaled,
    })
}

/// Harmonic coefficients of boundary samples at the Lebedev nodes.
pub fn harmonic_lift(disc: &Discretization, samples: &[f64]) -> Vec<f64> {
    disc.project(samples)
}

/// Inner-sphere trace `γ_p = Σ_i X_(i,p) ϱ_i(δ)`.
pub fn inner_trace(disc: &Discretization, delta: f64, coeffs: &[f64]) -> Vec<f64> {
    let (rho, _) = radial_basis_all(disc.n_radial, delta, delta);
    let n = disc.n_radial;
    (0..disc.n_harmonics())
        .map(|p| (0..n).map(|i| coeffs[n * p + i] * rho[i]).sum())
        .collect()
}

/// Dirichlet-to-Neumann map of the inner harmonic extension: `γ_p l/δ`.
pub fn dtn_term(disc: &Discretization, delta: f64, coeffs: &[f64]) -> Vec<f64> {
    inner_trace(disc, delta, coeffs)
        .into_iter()
        .zip(&disc.degrees)
        .map(|(g, l)| g * *l as f64 / delta)
        .collect()
}

/// Row mapping `[Galerkin coeffs; lift coeffs]` to the reaction potential at
/// the unit-ball point `r s`.
pub fn basis_row(disc: &Discretization, delta: f64, r: f64, s: [f64; 3]) -> Vec<f64> {
    let n = disc.n_radial;
    let nb = disc.n_harmonics();
    let y = sph_harm_all(disc.lmax, s);
    let mut row = vec![0.0; n * nb + nb];
    let rpow: Vec<f64> = (0..=disc.lmax).map(|l| r.powi(l as i32)).collect();
    if r >= delta {
        let (rho, _) = radial_basis_all(n, delta, r);
        for p in 0..nb {
            for i in 0..n {
                row[n * p + i] = rho[i] * y[p];
            }
        }
    } else {
        let (rho, _) = radial_basis_all(n, delta, delta);
        let t = r / delta;
        for p in 0..nb {
            let ext = t.powi(disc.degrees[p] as i32) * y[p];
            for i in 0..n {
                row[n * p + i] = rho[i] * ext;
            }
        }
    }
    for p in 0..nb {
        row[n * nb + p] = rpow[disc.degrees[p]] * y[p];
    }
    row
}

/// Reaction potential `w + û1` at the unit-ball point `r s`.
pub fn eval_local(
    disc: &Discretization,
    delta: f64,
    coeffs: &[f64],
    lift: &[f64],
    r: f64,
    s: [f64; 3],
) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("radius {r} outside [0,1]")));
    }
    let row = basis_row(disc, delta, r, s);
    Ok(row.iter().zip(coeffs.iter().chain(lift)).map(|(a, b)| a * b).sum())
}

/// Fixed-point controls of [`LocalProblem::gsp_solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointOptions {
    pub damping: f64,
    pub tol: f64,
    pub max_iter: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointOutcome {
    pub coeffs: Vec<f64>,
    pub iterations: usize,
    /// Relative update after every iteration.
    pub updates: Vec<f64>,
    pub converged: bool,
}

/// Cholesky factor reused as preconditioner across linear solves.
#[derive(Debug, Clone, Default)]
pub struct FactorCache {
    factor: Option<Cholesky<f64, Dyn>>,
    /// Number of explicit factorizations performed.
    pub factorizations: usize,
}

impl FactorCache {
    pub fn clear(&mut self) {
        self.factor = None;
    }
}

/// GSP problem on one sphere, pulled back to the unit ball.
#[derive(Debug, Clone)]
pub struct LocalProblem {
    pub delta: f64,
    /// `R² κ² ε_s`.
    pub screening: f64,
    pub model: Model,
    pub rule: AnnulusRule,
    rho: Vec<Vec<f64>>,
    drho: Vec<Vec<f64>>,
    samples: Vec<NodeSample>,
    ion_shells: Vec<usize>,
    stiffness: DMatrix<f64>,
    lift_matrix: DMatrix<f64>,
    psi0_rhs: DVector<f64>,
    /// Largest `|K - Kᵀ|` removed by symmetrization.
    pub asymmetry: f64,
}

fn weighted_gram(a: &DMatrix<f64>, b: &DMatrix<f64>, w: &[f64]) -> DMatrix<f64> {
    let mut bw = b.clone();
    for (n, wn) in w.iter().enumerate() {
        bw.row_mut(n).scale_mut(*wn);
    }
    a.tr_mul(&bw)
}

/// Weighted Gram pair of one shell; a constant coefficient reuses the
/// precomputed unweighted matrices.
fn shell_grams(
    disc: &Discretization,
    mut coef: impl Iterator<Item = f64>,
    weights: &[f64],
) -> (DMatrix<f64>, DMatrix<f64>) {
    let first = coef.next().unwrap_or(0.0);
    if coef.all(|c| c == first) {
        return (&disc.gram * first, &disc.gram_grad * first);
    }
    let g = weighted_gram(&disc.y, &disc.y, weights);
    let mut h = weighted_gram(&disc.grad[0], &disc.grad[0], weights);
    h += weighted_gram(&disc.grad[1], &disc.grad[1], weights);
    h += weighted_gram(&disc.grad[2], &disc.grad[2], weights);
    (g, h)
}

impl LocalProblem {
    /// Sample the coefficient fields at every annulus node and assemble the
    /// parts of the system that do not depend on the iterate.
    pub fn new<F>(
        disc: &Discretization,
        delta: f64,
        screening: f64,
        model: Model,
        sample: F,
    ) -> Result<Self>
    where
        F: Fn([f64; 3]) -> Result<NodeSample>,
    {
        let rule = AnnulusRule::new(delta, &disc.lgl)?;
        let n = disc.n_radial;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let mut rho = Vec::with_capacity(rule.radii.len());
        let mut drho = Vec::with_capacity(rule.radii.len());
        let mut samples = Vec::with_capacity(rule.radii.len() * nl);
        let mut ion_shells = Vec::new();
        for (m, &r) in rule.radii.iter().enumerate() {
            let (v, d) = radial_basis_all(n, delta, r);
            rho.push(v);
            drho.push(d);
            let mut any_ion = false;
            for s in &disc.leb.points {
                let ns = sample([r * s[0], r * s[1], r * s[2]])?;
                any_ion |= ns.lam != 0.0;
                samples.push(ns);
            }
            if any_ion {
                ion_shells.push(m);
            }
        }
        let mut prob = Self {
            delta,
            screening,
            model,
            rule,
            rho,
            drho,
            samples,
            ion_shells,
            stiffness: DMatrix::zeros(n * nb, n * nb),
            lift_matrix: DMatrix::zeros(n * nb, nb),
            psi0_rhs: DVector::zeros(n * nb),
            asymmetry: 0.0,
        };
        prob.assemble_static(disc);
        Ok(prob)
    }

    fn assemble_static(&mut self, disc: &Discretization) {
        let n = disc.n_radial;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let w = &disc.leb.weights;
        let mut k = DMatrix::<f64>::zeros(n * nb, n * nb);
        let mut lift = DMatrix::<f64>::zeros(n * nb, nb);
        let mut f0 = DVector::<f64>::zeros(n * nb);
        for (m, &r) in self.rule.radii.iter().enumerate() {
            let wr = self.rule.radial_weights[m];
            let shell = &self.samples[m * nl..(m + 1) * nl];
            let we: Vec<f64> = shell.iter().zip(w).map(|(s, w)| w * s.eps).collect();
            let (g, h) = shell_grams(disc, shell.iter().map(|s| s.eps), &we);
            let (rho, drho) = (&self.rho[m], &self.drho[m]);
            let inv_r2 = 1.0 / (r * r);
            for q in 0..nb {
                for p in 0..nb {
                    let (gv, hv) = (g[(p, q)], h[(p, q)]);
                    if gv == 0.0 && hv == 0.0 {
                        continue;
                    }
                    for j in 0..n {
                        let col = n * q + j;
                        for i in 0..n {
                            k[(n * p + i, col)] +=
                                wr * (drho[i] * drho[j] * gv + rho[i] * rho[j] * inv_r2 * hv);
                        }
                    }
                }
            }
            // (ε - 1)-weighted terms for the lift and for ψ0.
            let we1: Vec<f64> = shell.iter().zip(w).map(|(s, w)| w * (s.eps - 1.0)).collect();
            if we1.iter().all(|v| *v == 0.0) {
                continue;
            }
            let (g1, h1) = shell_grams(disc, shell.iter().map(|s| s.eps - 1.0), &we1);
            for q in 0..nb {
                let lq = disc.degrees[q];
                if lq == 0 {
                    continue;
                }
                let rl1 = r.powi(lq as i32 - 1);
                for p in 0..nb {
                    for i in 0..n {
                        lift[(n * p + i, q)] -= wr
                            * rl1
                            * (drho[i] * lq as f64 * g1[(p, q)] + rho[i] / r * h1[(p, q)]);
                    }
                }
            }
            let mut a = vec![0.0; nb];
            let mut b = vec![0.0; nb];
            for (nn, s) in disc.leb.points.iter().enumerate() {
                let c = we1[nn];
                if c == 0.0 {
                    continue;
                }
                let gp = shell[nn].grad_psi0;
                let gr = gp[0] * s[0] + gp[1] * s[1] + gp[2] * s[2];
                for p in 0..nb {
                    a[p] += c * gr * disc.y[(nn, p)];
                    b[p] += c
                        * (gp[0] * disc.grad[0][(nn, p)]
                            + gp[1] * disc.grad[1][(nn, p)]
                            + gp[2] * disc.grad[2][(nn, p)]);
                }
            }
            for p in 0..nb {
                for i in 0..n {
                    f0[n * p + i] -= wr * (drho[i] * a[p] + rho[i] / r * b[p]);
                }
            }
        }
        let (rho_d, _) = radial_basis_all(n, self.delta, self.delta);
        for p in 0..nb {
            let l = disc.degrees[p] as f64;
            if l == 0.0 {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    k[(n * p + i, n * p + j)] += l * self.delta * rho_d[i] * rho_d[j];
                }
            }
        }
        self.asymmetry = asymmetry(&k);
        symmetrize(&mut k);
        self.stiffness = k;
        self.lift_matrix = lift;
        self.psi0_rhs = f0;
    }

    pub fn n_shells(&self) -> usize {
        self.rule.radii.len()
    }

    /// Node samples, shell-major.
    pub fn samples(&self) -> &[NodeSample] {
        &self.samples
    }

    /// Constant part of the system matrix (stiffness plus inner DtN block).
    pub fn stiffness(&self) -> &DMatrix<f64> {
        &self.stiffness
    }

    /// `w + û1` at every annulus node, shell-major.
    pub fn reaction_at_nodes(&self, disc: &Discretization, coeffs: &[f64], lift: &[f64]) -> Vec<f64> {
        let shells: Vec<usize> = (0..self.n_shells()).collect();
        self.reaction_on_shells(disc, coeffs, lift, &shells)
    }

    fn reaction_on_shells(
        &self,
        disc: &Discretization,
        coeffs: &[f64],
        lift: &[f64],
        shells: &[usize],
    ) -> Vec<f64> {
        let n = disc.n_radial;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let mut out = vec![0.0; self.n_shells() * nl];
        let radial = DMatrix::from_fn(nb, shells.len(), |p, k| {
            let m = shells[k];
            let w: f64 = (0..n).map(|i| coeffs[n * p + i] * self.rho[m][i]).sum();
            w + lift[p] * self.rule.radii[m].powi(disc.degrees[p] as i32)
        });
        let vals = &disc.y * radial;
        for (k, &m) in shells.iter().enumerate() {
            out[m * nl..(m + 1) * nl].copy_from_slice(vals.column(k).as_slice());
        }
        out
    }

    /// Ion coefficient `R²κ²ε_s λ F(ψ)` at each node of the ion shells, with
    /// `ψ = w + û1 + ψ0` evaluated from the iterate.
    pub fn ion_coefficients(&self, disc: &Discretization, coeffs: &[f64], lift: &[f64]) -> Result<Vec<f64>> {
        self.ion_coefficients_with(disc, coeffs, lift, self.model)
    }

    fn ion_coefficients_with(&self, disc: &Discretization, coeffs: &[f64], lift: &[f64], model: Model) -> Result<Vec<f64>> {
        let nl = disc.n_leb();
        let mut c = vec![0.0; self.n_shells() * nl];
        if self.screening == 0.0 {
            return Ok(c);
        }
        let psi_r = match model {
            Model::Npb => self.reaction_on_shells(disc, coeffs, lift, &self.ion_shells),
            Model::Lpb | Model::Frozen => Vec::new(),
        };
        for &m in &self.ion_shells {
            for nn in 0..nl {
                let idx = m * nl + nn;
                let s = &self.samples[idx];
                if s.lam == 0.0 {
                    continue;
                }
                let f = match model {
                    Model::Lpb | Model::Frozen => 1.0,
                    Model::Npb => sinh_ratio(psi_r[idx] + s.psi0).map_err(|e| match e {
                        Error::Overflow(msg) | Error::Divergence(msg) => Error::Divergence(msg),
                        other => other,
                    })?,
                };
                c[idx] = self.screening * s.lam * f;
            }
        }
        Ok(c)
    }

    fn mass_matrix(&self, disc: &Discretization, c: &[f64]) -> DMatrix<f64> {
        let n = disc.n_radial;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let mut mass = DMatrix::<f64>::zeros(n * nb, n * nb);
        for &m in &self.ion_shells {
            let wc: Vec<f64> = (0..nl).map(|nn| disc.leb.weights[nn] * c[m * nl + nn]).collect();
            let g = weighted_gram(&disc.y, &disc.y, &wc);
            let wr = self.rule.radial_weights[m];
            let rho = &self.rho[m];
            for q in 0..nb {
                for p in 0..nb {
                    let gv = wr * g[(p, q)];
                    if gv == 0.0 {
                        continue;
                    }
                    for j in 0..n {
                        for i in 0..n {
                            mass[(n * p + i, n * q + j)] += rho[i] * rho[j] * gv;
                        }
                    }
                }
            }
        }
        mass
    }

    /// Right-hand side for given lift and ion coefficients.
    pub fn rhs(&self, disc: &Discretization, lift: &[f64], c: &[f64]) -> DVector<f64> {
        let n = disc.n_radial;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let mut f = &self.psi0_rhs + &self.lift_matrix * DVector::from_column_slice(lift);
        let shells = &self.ion_shells;
        let radial = DMatrix::from_fn(nb, shells.len(), |p, k| {
            lift[p] * self.rule.radii[shells[k]].powi(disc.degrees[p] as i32)
        });
        let mut vals = &disc.y * radial;
        for (k, &m) in shells.iter().enumerate() {
            let mut col = vals.column_mut(k);
            for nn in 0..nl {
                let idx = m * nl + nn;
                col[nn] = disc.leb.weights[nn] * c[idx] * (col[nn] + self.samples[idx].psi0);
            }
        }
        let proj = disc.y.tr_mul(&vals);
        for (k, &m) in shells.iter().enumerate() {
            let wr = self.rule.radial_weights[m];
            for p in 0..nb {
                for i in 0..n {
                    f[n * p + i] -= wr * self.rho[m][i] * proj[(p, k)];
                }
            }
        }
        f
    }

    /// Explicit system `(Ā, F̄)` linearized at the iterate `w_prev`.
    pub fn assemble(
        &self,
        disc: &Discretization,
        lift: &[f64],
        w_prev: &[f64],
    ) -> Result<(DMatrix<f64>, DVector<f64>)> {
        let c = self.ion_coefficients(disc, w_prev, lift)?;
        let mut a = &self.stiffness + self.mass_matrix(disc, &c);
        symmetrize(&mut a);
        Ok((a, self.rhs(disc, lift, &c)))
    }

    fn solve_linear(
        &self,
        disc: &Discretization,
        c: &[f64],
        rhs: &DVector<f64>,
        x0: &DVector<f64>,
        cache: &mut FactorCache,
    ) -> Result<DVector<f64>> {
        if let Some(factor) = &cache.factor {
            let op = SystemOperator { prob: self, disc, c };
            if let Some(x) = pcg(&op, |r| factor.solve(r), rhs, x0, 1e-13, 60) {
                return Ok(x);
            }
        }
        let mut a = &self.stiffness + self.mass_matrix(disc, c);
        symmetrize(&mut a);
        let factor = cholesky(a)?;
        let x = factor.solve(rhs);
        cache.factor = Some(factor);
        cache.factorizations += 1;
        Ok(x)
    }

    /// Damped fixed-point iteration for the Galerkin coefficients given the
    /// lift coefficients of the Dirichlet data. Fails if `max_iter` is hit.
    pub fn gsp_solve(
        &self,
        disc: &Discretization,
        lift: &[f64],
        init: &[f64],
        opts: FixedPointOptions,
        cache: &mut FactorCache,
    ) -> Result<FixedPointOutcome> {
        let out = self.gsp_iterate(disc, lift, init, opts, cache)?;
        if !out.converged {
            return Err(Error::NonConvergence {
                iterations: out.iterations,
                residual: *out.updates.last().unwrap_or(&f64::NAN),
            });
        }
        Ok(out)
    }

    /// As [`gsp_solve`](Self::gsp_solve) but returns the last iterate when
    /// the iteration cap is reached.
    pub fn gsp_iterate(
        &self,
        disc: &Discretization,
        lift: &[f64],
        init: &[f64],
        opts: FixedPointOptions,
        cache: &mut FactorCache,
    ) -> Result<FixedPointOutcome> {
        if !(opts.damping > 0.0 && opts.damping <= 1.0) {
            return Err(Error::InvalidInput(format!("damping {} outside (0,1]", opts.damping)));
        }
        if !(opts.tol > 0.0) || opts.max_iter == 0 {
            return Err(Error::InvalidInput("fixed-point tol and max_iter must be positive".into()));
        }
        let mut x = DVector::from_column_slice(init);
        let mut updates = Vec::new();
        // From a zero iterate ψ is the vacuum potential, whose sinh can be
        // astronomically large; start from the linearized solution instead.
        let mut linear_start = self.model == Model::Npb && init.iter().all(|v| *v == 0.0);
        for nu in 1..=opts.max_iter {
            let c = if linear_start {
                linear_start = false;
                self.ion_coefficients_with(disc, x.as_slice(), lift, Model::Lpb)?
            } else {
                self.ion_coefficients(disc, x.as_slice(), lift)?
            };
            let rhs = self.rhs(disc, lift, &c);
            let aux = self.solve_linear(disc, &c, &rhs, &x, cache)?;
            if aux.iter().any(|v| !v.is_finite()) {
                return Err(Error::Divergence("local solution is not finite".into()));
            }
            if self.model == Model::Lpb || self.screening == 0.0 {
                return Ok(FixedPointOutcome {
                    coeffs: aux.as_slice().to_vec(),
                    iterations: nu,
                    updates: vec![0.0],
                    converged: true,
                });
            }
            let step = (&aux - &x) * opts.damping;
            let next = &x + &step;
            let norm = next.norm();
            let upd = if norm == 0.0 { 0.0 } else { step.norm() / norm };
            updates.push(upd);
            x = next;
            if upd <= opts.tol {
                return Ok(FixedPointOutcome {
                    coeffs: x.as_slice().to_vec(),
                    iterations: nu,
                    updates,
                    converged: true,
                });
            }
        }
        Ok(FixedPointOutcome {
            coeffs: x.as_slice().to_vec(),
            iterations: opts.max_iter,
            updates,
            converged: false,
        })
    }

    /// Radial derivative at `r = 1` of `w + û1` (unit-ball units), per harmonic.
    pub fn outer_normal_derivative(&self, disc: &Discretization, coeffs: &[f64], lift: &[f64]) -> Vec<f64> {
        let n = disc.n_radial;
        let (_, d1) = radial_basis_all(n, self.delta, 1.0);
        (0..disc.n_harmonics())
            .map(|p| {
                let w: f64 = (0..n).map(|i| coeffs[n * p + i] * d1[i]).sum();
                w + disc.degrees[p] as f64 * lift[p]
            })
            .collect()
    }
}

struct SystemOperator<'a> {
    prob: &'a LocalProblem,
    disc: &'a Discretization,
    c: &'a [f64],
}

impl LinearOperator for SystemOperator<'_> {
    fn dim(&self) -> usize {
        self.prob.stiffness.nrows()
    }

    fn apply(&self, x: &DVector<f64>) -> DVector<f64> {
        let disc = self.disc;
        let prob = self.prob;
        let n = disc.n_radial;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let shells = &prob.ion_shells;
        let mut out = &prob.stiffness * x;
        // all ion shells at once: fields (nb × S) → nodes (nl × S) → back
        let fields = DMatrix::from_fn(nb, shells.len(), |p, k| {
            let rho = &prob.rho[shells[k]];
            (0..n).map(|i| x[n * p + i] * rho[i]).sum()
        });
        let mut vals = &disc.y * fields;
        for (k, &m) in shells.iter().enumerate() {
            let mut col = vals.column_mut(k);
            for nn in 0..nl {
                col[nn] *= disc.leb.weights[nn] * self.c[m * nl + nn];
            }
        }
        let back = disc.y.tr_mul(&vals);
        for (k, &m) in shells.iter().enumerate() {
            let wr = prob.rule.radial_weights[m];
            for p in 0..nb {
                let b = wr * back[(p, k)];
                for i in 0..n {
                    out[n * p + i] += prob.rho[m][i] * b;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn laplace(disc: &Discretization, delta: f64) -> LocalProblem {
        LocalProblem::new(disc, delta, 0.0, Model::Lpb, |_| {
            Ok(NodeSample { eps: 1.0, ..Default::default() })
        })
        .unwrap()
    }

    #[test]
    fn hsp_examples() {
        let mut phi = vec![0.0; 4];
        phi[0] = 1.0;
        let sol = hsp_solve(&phi, 1.0).unwrap();
        let centre = sol.eval(1, 0.0, [0.0, 0.0, 1.0]);
        assert_relative_eq!(centre, 0.5 / PI.sqrt() / 1f64.sinh(), epsilon = 1e-14);
        let s = [0.6, 0.0, 0.8];
        let mut phi = vec![0.3, -0.2, 0.5, 0.1];
        let sol = hsp_solve(&phi, 2.0).unwrap();
        let y = sph_harm_all(1, s);
        let direct: f64 = phi.iter().zip(&y).map(|(a, b)| a * b).sum();
        assert_relative_eq!(sol.eval(1, 1.0, s), direct, epsilon = 1e-14);
        phi.iter_mut().for_each(|v| *v = 0.0);
        assert_eq!(hsp_solve(&phi, 2.0).unwrap().eval(1, 0.5, s), 0.0);
    }

    #[test]
    fn lift_examples() {
        let disc = Discretization::new(3, 2, 26, 4).unwrap();
        let lift = harmonic_lift(&disc, &vec![2.0; disc.n_leb()]);
        assert_relative_eq!(lift[0], 2.0 * 2.0 * PI.sqrt(), epsilon = 1e-13);
        assert!(lift[1..].iter().all(|v| v.abs() < 1e-13));
        let v = eval_local(&disc, 0.3, &vec![0.0; disc.n_local()], &lift, 0.4, [0.0, 1.0, 0.0]).unwrap();
        assert_relative_eq!(v, 2.0, epsilon = 1e-13);
        let samples: Vec<f64> = (0..disc.n_leb()).map(|n| disc.y[(n, 7)]).collect();
        let lift = harmonic_lift(&disc, &samples);
        for (p, c) in lift.iter().enumerate() {
            assert!((c - if p == 7 { 1.0 } else { 0.0 }).abs() < 1e-13);
        }
    }

    #[test]
    fn dtn_examples() {
        let disc = Discretization::new(1, 1, 14, 3).unwrap();
        let delta = 0.5;
        // single radial function with ϱ_1(δ) = 1-δ; pick coefficients so γ_10 = 1
        let mut x = vec![0.0; disc.n_local()];
        x[2] = 1.0 / (1.0 - delta);
        let t = dtn_term(&disc, delta, &x);
        assert_relative_eq!(t[2], 2.0, epsilon = 1e-14);
        assert_eq!(t[0], 0.0);
    }

    #[test]
    fn laplace_stiffness_is_spd() {
        let disc = Discretization::new(2, 6, 26, 10).unwrap();
        let prob = laplace(&disc, 0.4);
        assert!(prob.asymmetry < 1e-12);
        let eig = prob.stiffness().clone().symmetric_eigen();
        assert!(eig.eigenvalues.min() > 0.0);
    }

    #[test]
    fn harmonic_data_gives_zero_correction() {
        let disc = Discretization::new(3, 4, 50, 8).unwrap();
        let prob = laplace(&disc, 0.3);
        let lift: Vec<f64> = (0..16).map(|p| 0.1 * p as f64).collect();
        let opts = FixedPointOptions { damping: 0.5, tol: 1e-8, max_iter: 10 };
        let out = prob
            .gsp_solve(&disc, &lift, &vec![0.0; disc.n_local()], opts, &mut FactorCache::default())
            .unwrap();
        assert_eq!(out.iterations, 1);
        assert!(out.coeffs.iter().all(|v| v.abs() < 1e-14));
    }

    #[test]
    fn basis_row_is_continuous_at_inner_sphere() {
        let disc = Discretization::new(3, 5, 26, 6).unwrap();
        let delta = 0.35;
        let s = [0.0, 0.6, 0.8];
        let a = basis_row(&disc, delta, delta, s);
        let b = basis_row(&disc, delta, delta * (1.0 - 1e-15), s);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
