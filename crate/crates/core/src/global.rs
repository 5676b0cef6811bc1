//! Multi-sphere coupling and the outer iteration.
//!
//! Every outer step solves the reaction-potential subproblems by a Jacobi
//! Schwarz sweep over spheres (with an inner fixed point for the nonlinear
//! term), then the extended potential from the HSP system `B X_e = Ḡ_X`, and
//! finally rebuilds the coupling value `g` on the exposed sphere patches from
//! the single-layer representation of the flux jump.

use crate::ball::{basis_row, FactorCache, FixedPointOptions, LocalProblem, Model, NodeSample};
use crate::cavity::{dist, CavityModel};
use crate::disc::Discretization;
use crate::energy::{grad_psi0, increment, psi0, solvation_energy, EnergyBreakdown};
use crate::error::{Error, Result};
use crate::linalg::{gmres, LinearOperator};
use crate::par::{map_indexed, map_mut, Execution};
use crate::specfun::{radial_basis_all, sph_harm_all, Screened};
use nalgebra::{DMatrix, DVector, Dyn, LU};

/// Largest HSP system solved by LU; larger ones use restarted GMRES.
pub const DIRECT_LIMIT: usize = 20_000;

/// Controls of the outer, Schwarz and fixed-point loops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub tol: f64,
    pub max_outer: usize,
    /// Outer iterations always performed, whatever the increment.
    pub min_outer: usize,
    pub max_dd: usize,
    pub max_fp: usize,
    pub damping: f64,
    pub execution: Execution,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            max_outer: 30,
            min_outer: 1,
            max_dd: 15,
            max_fp: 50,
            damping: 0.5,
            execution: Execution::default(),
        }
    }
}

/// Concatenated unknowns of all spheres.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalUnknowns {
    /// Galerkin coefficients of the reaction potential, `M·N·(ℓmax+1)²`.
    pub xr: Vec<f64>,
    /// Harmonic lift coefficients of the reaction potential's trace, `M·(ℓmax+1)²`.
    pub lift: Vec<f64>,
    /// Boundary coefficients of the extended potential, `M·(ℓmax+1)²`.
    pub xe: Vec<f64>,
}

impl GlobalUnknowns {
    pub fn zeros(m: usize, disc: &Discretization) -> Self {
        Self {
            xr: vec![0.0; m * disc.n_local()],
            lift: vec![0.0; m * disc.n_harmonics()],
            xe: vec![0.0; m * disc.n_harmonics()],
        }
    }

    pub fn galerkin(&self, disc: &Discretization, j: usize) -> &[f64] {
        let n = disc.n_local();
        &self.xr[j * n..(j + 1) * n]
    }

    pub fn lift(&self, disc: &Discretization, j: usize) -> &[f64] {
        let n = disc.n_harmonics();
        &self.lift[j * n..(j + 1) * n]
    }

    pub fn extended(&self, disc: &Discretization, j: usize) -> &[f64] {
        let n = disc.n_harmonics();
        &self.xe[j * n..(j + 1) * n]
    }

    /// Reaction-potential state of sphere `j`: Galerkin then lift coefficients.
    pub fn reaction_block(&self, disc: &Discretization, j: usize) -> Vec<f64> {
        let mut v = self.galerkin(disc, j).to_vec();
        v.extend_from_slice(self.lift(disc, j));
        v
    }

    pub fn has_non_finite(&self) -> bool {
        self.xr.iter().chain(&self.lift).chain(&self.xe).any(|v| !v.is_finite())
    }
}

/// Final state of an outer solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Converged,
    MaxIter,
    Oscillating,
    Diverged,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Converged => "converged",
            Status::MaxIter => "max_iter",
            Status::Oscillating => "oscillating",
            Status::Diverged => "diverged",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub k: usize,
    pub energy: EnergyBreakdown,
    pub increment: f64,
    pub dd_loops: usize,
    pub fp_loops: usize,
    /// Largest fixed-point iteration count of any single local solve.
    pub fp_max_local: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveTrace {
    pub records: Vec<IterationRecord>,
    pub status: Status,
    pub message: Option<String>,
}

impl SolveTrace {
    pub fn energy(&self) -> Option<EnergyBreakdown> {
        self.records.last().map(|r| r.energy)
    }
}

/// Per-sphere geometric data on the Lebedev images of the sphere.
#[derive(Debug, Clone)]
struct SphereData {
    chi_e: Vec<f64>,
    psi0: Vec<f64>,
    dn_psi0: Vec<f64>,
    /// `E_ji`: projected reaction-potential trace of neighbor `i` on `Γ_j`.
    trace: Vec<(usize, DMatrix<f64>)>,
    /// Off-diagonal HSP blocks, without the minus sign.
    hsp: Vec<(usize, DMatrix<f64>)>,
}

/// Coupling data of the reaction and extended potentials through the
/// single-layer representation of `g`.
#[derive(Debug, Clone)]
pub struct CouplingOperators {
    pub b: DMatrix<f64>,
    /// Gram matrices `Σ_n ω_n χ_j^e Y_p Y_q`, one per sphere.
    pub p_chi: Vec<DMatrix<f64>>,
    /// Single-layer eigenvalues per sphere and degree.
    pub c_ik: Vec<Vec<f64>>,
    /// `g` samples (sphere-major Lebedev images) from flux-jump coefficients.
    pub single_layer: DMatrix<f64>,
    /// Normal derivative of `ψ0` projected on the exposed patches.
    pub c0: DVector<f64>,
}

/// Dense affine map `Ḡ_X = F̄0 − C̄1 [X_r; lift] − C̄2 X_e`, the projected
/// coupling data of the next outer iteration (`Ḡ0` shifts it to reaction
/// potential data). Memory grows as
/// `M²`, so it is built only on request.
#[derive(Debug, Clone)]
pub struct ExplicitCoupling {
    /// Flux-jump coefficients of sphere `j` to `g` at image `(i, n)`,
    /// `M(ℓmax+1)² × M·N_leb`.
    pub q: DMatrix<f64>,
    /// Acts on the sphere-major reaction state `[X_r,j; lift_j]`.
    pub c1_bar: DMatrix<f64>,
    pub c2_bar: DMatrix<f64>,
    pub f0_bar: DVector<f64>,
    pub g0_bar: DVector<f64>,
}

/// Replica of a `M(ℓmax+1)²` vector over the `N` radial indices.
pub fn replicate(v: &[f64], disc: &Discretization) -> Vec<f64> {
    let n = disc.n_radial;
    let mut out = Vec::with_capacity(v.len() * n);
    for value in v {
        for _ in 0..n {
            out.push(*value);
        }
    }
    out
}

enum HspSolver {
    Lu(LU<f64, Dyn, Dyn>),
    Iterative,
}

/// Fully assembled multi-sphere problem.
pub struct System {
    cavity: CavityModel,
    disc: Discretization,
    model: Model,
    locals: Vec<LocalProblem>,
    spheres: Vec<SphereData>,
    coupling: CouplingOperators,
    hsp: HspSolver,
}

/// Node data of sphere `j`'s local problem at unit-ball point `y`.
fn local_sample(cav: &CavityModel, j: usize, y: [f64; 3]) -> Result<NodeSample> {
    let rj = cav.radii[j];
    let c = cav.atoms[j].center;
    let x = [c[0] + rj * y[0], c[1] + rj * y[1], c[2] + rj * y[2]];
    let f = cav.f_sas(x);
    let eps = cav.permittivity_from_f(f);
    let lam = cav.ion_exclusion_from_f(f);
    if eps == 1.0 && lam == 0.0 {
        return Ok(NodeSample { eps, lam, psi0: 0.0, grad_psi0: [0.0; 3] });
    }
    let beta = cav.params.beta;
    let g = grad_psi0(&cav.atoms, beta, x)?;
    Ok(NodeSample {
        eps,
        lam,
        psi0: psi0(&cav.atoms, beta, x)?,
        grad_psi0: [rj * g[0], rj * g[1], rj * g[2]],
    })
}

fn local_coords(cav: &CavityModel, i: usize, x: [f64; 3]) -> (f64, [f64; 3]) {
    let c = cav.atoms[i].center;
    let d = [x[0] - c[0], x[1] - c[1], x[2] - c[2]];
    let r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    if r == 0.0 {
        (0.0, [0.0, 0.0, 1.0])
    } else {
        (r, [d[0] / r, d[1] / r, d[2] / r])
    }
}

fn build_sphere(cav: &CavityModel, disc: &Discretization, j: usize) -> Result<SphereData> {
    let nl = disc.n_leb();
    let nb = disc.n_harmonics();
    let kappa = Screened::new(cav.params.kappa);
    let beta = cav.params.beta;
    let rj = cav.radii[j];
    let c = cav.atoms[j].center;
    let mut chi_e = vec![0.0; nl];
    let mut psi0_v = vec![0.0; nl];
    let mut dn = vec![0.0; nl];
    // (neighbor, node, weight)
    let mut shared: Vec<Vec<(usize, f64)>> = vec![Vec::new(); cav.len()];
    for (n, s) in disc.leb.points.iter().enumerate() {
        let x = [c[0] + rj * s[0], c[1] + rj * s[1], c[2] + rj * s[2]];
        let part = cav.partition_unchecked(j, x);
        chi_e[n] = part.chi_e;
        if part.chi_e > 0.0 {
            psi0_v[n] = psi0(&cav.atoms, beta, x)?;
            let g = grad_psi0(&cav.atoms, beta, x)?;
            dn[n] = g[0] * s[0] + g[1] * s[1] + g[2] * s[2];
        }
        for (i, w) in part.weights {
            shared[i].push((n, w));
        }
    }
    let mut trace = Vec::new();
    let mut hsp = Vec::new();
    for (i, nodes) in shared.iter().enumerate() {
        if nodes.is_empty() {
            continue;
        }
        let ri = cav.radii[i];
        let width = disc.n_local() + nb;
        let mut wmat = DMatrix::<f64>::zeros(nodes.len(), nb);
        let mut rows = DMatrix::<f64>::zeros(nodes.len(), width);
        let mut hrows = DMatrix::<f64>::zeros(nodes.len(), nb);
        for (a, &(n, w)) in nodes.iter().enumerate() {
            let s = disc.leb.points[n];
            let x = [c[0] + rj * s[0], c[1] + rj * s[1], c[2] + rj * s[2]];
            let (r, si) = local_coords(cav, i, x);
            let rho = r / ri;
            for p in 0..nb {
                wmat[(a, p)] = disc.leb.weights[n] * w * disc.y[(n, p)];
            }
            let row = basis_row(disc, cav.deltas[i], rho.min(1.0), si);
            for (b, v) in row.into_iter().enumerate() {
                rows[(a, b)] = v;
            }
            let ratios = kappa.interior_ratios(disc.lmax, r.min(ri), ri);
            let y = sph_harm_all(disc.lmax, si);
            for p in 0..nb {
                hrows[(a, p)] = ratios[disc.degrees[p]] * y[p];
            }
        }
        trace.push((i, wmat.tr_mul(&rows)));
        hsp.push((i, wmat.tr_mul(&hrows)));
    }
    Ok(SphereData {
        chi_e,
        psi0: psi0_v,
        dn_psi0: dn,
        trace,
        hsp,
    })
}

impl System {
    pub fn new(cavity: CavityModel, disc: Discretization, model: Model, exec: Execution) -> Result<Self> {
        let m = cavity.len();
        let kappa = cavity.params.kappa;
        let eps_s = cavity.params.eps_s;
        let locals = map_indexed(exec, m, |j| {
            let rj = cavity.radii[j];
            LocalProblem::new(&disc, cavity.deltas[j], rj * rj * kappa * kappa * eps_s, model, |y| {
                local_sample(&cavity, j, y)
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let spheres = map_indexed(exec, m, |j| build_sphere(&cavity, &disc, j))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let coupling = assemble_coupling_from(&cavity, &disc, &spheres, exec);
        let hsp = if coupling.b.nrows() <= DIRECT_LIMIT {
            HspSolver::Lu(coupling.b.clone().lu())
        } else {
            HspSolver::Iterative
        };
        Ok(Self {
            cavity,
            disc,
            model,
            locals,
            spheres,
            coupling,
            hsp,
        })
    }

    pub fn cavity(&self) -> &CavityModel {
        &self.cavity
    }

    pub fn disc(&self) -> &Discretization {
        &self.disc
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn local(&self, j: usize) -> &LocalProblem {
        &self.locals[j]
    }

    pub fn coupling(&self) -> &CouplingOperators {
        &self.coupling
    }

    /// Exposed-patch indicator `χ_j^e` at the Lebedev images of sphere `j`.
    pub fn chi_e(&self, j: usize) -> &[f64] {
        &self.spheres[j].chi_e
    }

    /// Screened-Coulomb initial coupling value `g⁰` on all Lebedev images.
    pub fn initial_g(&self) -> Vec<f64> {
        let cav = &self.cavity;
        let p = cav.params;
        let nl = self.disc.n_leb();
        let mut g = vec![0.0; cav.len() * nl];
        for j in 0..cav.len() {
            let c = cav.atoms[j].center;
            for (n, s) in self.disc.leb.points.iter().enumerate() {
                if self.spheres[j].chi_e[n] == 0.0 {
                    continue;
                }
                let x = [c[0] + cav.radii[j] * s[0], c[1] + cav.radii[j] * s[1], c[2] + cav.radii[j] * s[2]];
                g[j * nl + n] = cav
                    .atoms
                    .iter()
                    .map(|at| {
                        let d = dist(x, at.center);
                        at.charge * (-p.kappa * d).exp() / (p.beta * p.eps_s * d)
                    })
                    .sum();
            }
        }
        g
    }

    /// `Ḡ_X`: projection of `χ^e g` onto harmonics per sphere.
    pub fn project_exposed(&self, g: &[f64]) -> DVector<f64> {
        let disc = &self.disc;
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let mut out = DVector::<f64>::zeros(self.cavity.len() * nb);
        for (j, sp) in self.spheres.iter().enumerate() {
            let masked: Vec<f64> = (0..nl).map(|n| sp.chi_e[n] * g[j * nl + n]).collect();
            out.rows_mut(j * nb, nb).copy_from_slice(&disc.project(&masked));
        }
        out
    }

    /// Dirichlet data of the reaction potential on the exposed patches:
    /// projection of `χ^e (g - ψ0)`.
    fn exposed_reaction_data(&self, g: &[f64]) -> Vec<f64> {
        let nl = self.disc.n_leb();
        let shifted: Vec<f64> = (0..g.len())
            .map(|k| g[k] - self.spheres[k / nl].psi0[k % nl])
            .collect();
        self.project_exposed(&shifted).as_slice().to_vec()
    }

    /// Solve the HSP system for the given coupling samples.
    pub fn solve_extended(&self, g: &[f64], warm: &[f64], tol: f64) -> Result<Vec<f64>> {
        let rhs = self.project_exposed(g);
        let x = match &self.hsp {
            HspSolver::Lu(lu) => lu
                .solve(&rhs)
                .ok_or_else(|| Error::Singular("HSP matrix is singular".into()))?,
            HspSolver::Iterative => gmres(
                &self.coupling.b,
                &rhs,
                Some(&DVector::from_column_slice(warm)),
                tol,
                50,
                200,
            )?,
        };
        Ok(x.as_slice().to_vec())
    }

    /// Coupling samples `g` rebuilt from the current reaction and extended
    /// potentials.
    pub fn coupling_value(&self, state: &GlobalUnknowns) -> Vec<f64> {
        let sigma = self.flux_jump(state);
        (&self.coupling.single_layer * sigma).as_slice().to_vec()
    }

    /// Projected flux-jump coefficients `[χ^e σ]_j`.
    fn flux_jump(&self, state: &GlobalUnknowns) -> DVector<f64> {
        let disc = &self.disc;
        let nb = disc.n_harmonics();
        let m = self.cavity.len();
        let mut d = DVector::<f64>::zeros(m * nb);
        let kappa = Screened::new(self.cavity.params.kappa);
        for j in 0..m {
            let rj = self.cavity.radii[j];
            let dr = self.locals[j].outer_normal_derivative(disc, state.galerkin(disc, j), state.lift(disc, j));
            let xe = state.extended(disc, j);
            for p in 0..nb {
                d[j * nb + p] = xe[p] * kappa.interior_dlog(disc.degrees[p], rj) - dr[p] / rj;
            }
        }
        let mut out = DVector::<f64>::zeros(m * nb);
        for j in 0..m {
            let block = &self.coupling.p_chi[j] * d.rows(j * nb, nb);
            out.rows_mut(j * nb, nb).copy_from(&block);
        }
        out - &self.coupling.c0
    }

    /// Jacobi Schwarz sweeps for the reaction potential with boundary data
    /// from `g`. Returns (sweeps, total fixed-point iterations, max local
    /// iterations).
    fn reaction_sweeps(
        &self,
        g: &[f64],
        state: &mut GlobalUnknowns,
        caches: &mut [FactorCache],
        opts: &SolverOptions,
    ) -> Result<(usize, usize, usize)> {
        let disc = &self.disc;
        let m = self.cavity.len();
        let nb = disc.n_harmonics();
        let nloc = disc.n_local();
        let exposed = self.exposed_reaction_data(g);
        let coupled = self.spheres.iter().any(|s| !s.trace.is_empty());
        let fp = FixedPointOptions {
            damping: opts.damping,
            tol: 100.0 * opts.tol,
            max_iter: opts.max_fp,
        };
        let mut fp_total = 0;
        let mut fp_max = 0;
        let mut sweeps = 0;
        for _ in 0..opts.max_dd.max(1) {
            sweeps += 1;
            let blocks: Vec<Vec<f64>> = (0..m).map(|i| state.reaction_block(disc, i)).collect();
            let mut work: Vec<(&mut FactorCache, Vec<f64>)> = caches
                .iter_mut()
                .zip(0..m)
                .map(|(c, j)| (c, state.galerkin(disc, j).to_vec()))
                .collect();
            let results = map_mut(opts.execution, &mut work, |j, (cache, init)| -> Result<(Vec<f64>, Vec<f64>, usize)> {
                let mut u = exposed[j * nb..(j + 1) * nb].to_vec();
                for (i, e) in &self.spheres[j].trace {
                    let v = e * DVector::from_column_slice(&blocks[*i]);
                    for p in 0..nb {
                        u[p] += v[p];
                    }
                }
                let out = self.locals[j].gsp_iterate(disc, &u, init, fp, cache)?;
                Ok((out.coeffs, u, out.iterations))
            });
            let mut diff = 0.0;
            let mut norm = 0.0;
            let mut sweep_fp = 0;
            for (j, res) in results.into_iter().enumerate() {
                let (c, u, it) = res?;
                sweep_fp = sweep_fp.max(it);
                for (k, v) in c.iter().enumerate() {
                    let old = &mut state.xr[j * nloc + k];
                    diff += (v - *old).powi(2);
                    norm += v * v;
                    *old = *v;
                }
                for (p, v) in u.iter().enumerate() {
                    let old = &mut state.lift[j * nb + p];
                    diff += (v - *old).powi(2);
                    norm += v * v;
                    *old = *v;
                }
            }
            fp_total += sweep_fp;
            fp_max = fp_max.max(sweep_fp);
            if state.has_non_finite() {
                return Err(Error::Divergence("reaction potential is not finite".into()));
            }
            let rel = if norm == 0.0 { 0.0 } else { (diff / norm).sqrt() };
            if !coupled || rel <= 10.0 * opts.tol {
                break;
            }
        }
        Ok((sweeps, fp_total, fp_max))
    }

    /// Outer iteration from a zero initial state.
    pub fn solve(&self, opts: &SolverOptions) -> (GlobalUnknowns, SolveTrace) {
        let state = GlobalUnknowns::zeros(self.cavity.len(), &self.disc);
        self.solve_from(state, self.initial_g(), opts)
    }

    /// Outer iteration from a given state and coupling samples.
    pub fn solve_from(
        &self,
        mut state: GlobalUnknowns,
        mut g: Vec<f64>,
        opts: &SolverOptions,
    ) -> (GlobalUnknowns, SolveTrace) {
        let mut caches = vec![FactorCache::default(); self.cavity.len()];
        let mut records: Vec<IterationRecord> = Vec::new();
        let mut prev_energy = 0.0;
        let mut rising = 0usize;
        let finish = |records: Vec<IterationRecord>, status, message: Option<String>| SolveTrace {
            records,
            status,
            message,
        };
        for k in 1..=opts.max_outer {
            let (dd, fp, fp_max) = match self.reaction_sweeps(&g, &mut state, &mut caches, opts) {
                Ok(v) => v,
                Err(e) => {
                    let status = match e {
                        Error::NonConvergence { .. } => Status::MaxIter,
                        _ => Status::Diverged,
                    };
                    return (state, finish(records, status, Some(e.to_string())));
                }
            };
            match self.solve_extended(&g, &state.xe.clone(), 10.0 * opts.tol) {
                Ok(xe) => state.xe = xe,
                Err(e) => return (state, finish(records, Status::Diverged, Some(e.to_string()))),
            }
            let energy = match solvation_energy(&state, self, self.model) {
                Ok(e) if e.total.is_finite() => e,
                Ok(_) => {
                    return (state, finish(records, Status::Diverged, Some("energy is not finite".into())))
                }
                Err(e) => return (state, finish(records, Status::Diverged, Some(e.to_string()))),
            };
            g = self.coupling_value(&state);
            let inc = if energy.total == 0.0 && prev_energy == 0.0 {
                0.0
            } else {
                increment(energy.total, prev_energy).unwrap_or(f64::INFINITY)
            };
            if let Some(last) = records.last() {
                if inc > last.increment {
                    rising += 1;
                } else {
                    rising = 0;
                }
            }
            records.push(IterationRecord {
                k,
                energy,
                increment: inc,
                dd_loops: dd,
                fp_loops: fp,
                fp_max_local: fp_max,
            });
            prev_energy = energy.total;
            if inc <= opts.tol && k >= opts.min_outer {
                return (state, finish(records, Status::Converged, None));
            }
            if rising >= 5 {
                return (
                    state,
                    finish(records, Status::Oscillating, Some("energy increment grew for 5 consecutive iterations".into())),
                );
            }
        }
        (state, finish(records, Status::MaxIter, None))
    }

    /// Largest mismatch between `g` and the boundary values of `ψ_e` and of
    /// `ψ_r + ψ0` on the exposed Lebedev images.
    pub fn boundary_residual(&self, state: &GlobalUnknowns, g: &[f64]) -> (f64, f64) {
        let disc = &self.disc;
        let nl = disc.n_leb();
        let mut worst_e = 0.0f64;
        let mut worst_r = 0.0f64;
        for j in 0..self.cavity.len() {
            let xe = DVector::from_column_slice(state.extended(disc, j));
            let ue = &disc.y * xe;
            let ur = &disc.y * DVector::from_column_slice(state.lift(disc, j));
            for n in 0..nl {
                if self.spheres[j].chi_e[n] == 0.0 {
                    continue;
                }
                let gv = g[j * nl + n];
                worst_e = worst_e.max((ue[n] - gv).abs());
                worst_r = worst_r.max((ur[n] + self.spheres[j].psi0[n] - gv).abs());
            }
        }
        (worst_e, worst_r)
    }
}

fn assemble_coupling_from(
    cav: &CavityModel,
    disc: &Discretization,
    spheres: &[SphereData],
    exec: Execution,
) -> CouplingOperators {
    let m = cav.len();
    let nb = disc.n_harmonics();
    let nl = disc.n_leb();
    let kappa = Screened::new(cav.params.kappa);
    let mut b = DMatrix::<f64>::identity(m * nb, m * nb);
    for (j, sp) in spheres.iter().enumerate() {
        for (i, blk) in &sp.hsp {
            let mut view = b.view_mut((j * nb, i * nb), (nb, nb));
            view -= blk;
        }
    }
    let p_chi: Vec<DMatrix<f64>> = spheres
        .iter()
        .map(|sp| {
            let w: Vec<f64> = (0..nl).map(|n| disc.leb.weights[n] * sp.chi_e[n]).collect();
            let mut yw = disc.y.clone();
            for (n, wn) in w.iter().enumerate() {
                yw.row_mut(n).scale_mut(*wn);
            }
            disc.y.tr_mul(&yw)
        })
        .collect();
    let c_ik: Vec<Vec<f64>> = (0..m)
        .map(|j| (0..=disc.lmax).map(|l| kappa.single_layer(l, cav.radii[j])).collect())
        .collect();
    // single layer: rows (i, n) exposed, columns (j, p)
    let rows = map_indexed(exec, m, |i| {
        let mut blk = DMatrix::<f64>::zeros(nl, m * nb);
        let ci = cav.atoms[i].center;
        for (n, s) in disc.leb.points.iter().enumerate() {
            if spheres[i].chi_e[n] == 0.0 {
                continue;
            }
            let x = [ci[0] + cav.radii[i] * s[0], ci[1] + cav.radii[i] * s[1], ci[2] + cav.radii[i] * s[2]];
            for j in 0..m {
                let (r, sj) = if j == i { (cav.radii[i], *s) } else { local_coords(cav, j, x) };
                let ratios = kappa.exterior_ratios(disc.lmax, r, cav.radii[j]);
                let y = if j == i { disc.y.row(n).iter().copied().collect() } else { sph_harm_all(disc.lmax, sj) };
                for p in 0..nb {
                    let l = disc.degrees[p];
                    blk[(n, j * nb + p)] = c_ik[j][l] * ratios[l] * y[p];
                }
            }
        }
        blk
    });
    let mut single_layer = DMatrix::<f64>::zeros(m * nl, m * nb);
    for (i, blk) in rows.into_iter().enumerate() {
        single_layer.view_mut((i * nl, 0), (nl, m * nb)).copy_from(&blk);
    }
    let mut c0 = DVector::<f64>::zeros(m * nb);
    for (j, sp) in spheres.iter().enumerate() {
        let dn: Vec<f64> = (0..nl).map(|n| sp.chi_e[n] * sp.dn_psi0[n]).collect();
        c0.rows_mut(j * nb, nb).copy_from_slice(&disc.project(&dn));
    }
    CouplingOperators {
        b,
        p_chi,
        c_ik,
        single_layer,
        c0,
    }
}

impl System {
    /// Dense form of the coupling map; see [`ExplicitCoupling`].
    pub fn explicit_coupling(&self) -> ExplicitCoupling {
        let cav = &self.cavity;
        let disc = &self.disc;
        let co = &self.coupling;
        let m = cav.len();
        let nb = disc.n_harmonics();
        let nl = disc.n_leb();
        let nloc = disc.n_local();
        let kappa = Screened::new(cav.params.kappa);
        let mut proj_chi = DMatrix::<f64>::zeros(m * nb, m * nl);
        let mut psi0_chi = DVector::<f64>::zeros(m * nl);
        for (i, sp) in self.spheres.iter().enumerate() {
            for n in 0..nl {
                psi0_chi[i * nl + n] = sp.psi0[n];
                for p in 0..nb {
                    proj_chi[(i * nb + p, i * nl + n)] = disc.leb.weights[n] * sp.chi_e[n] * disc.y[(n, p)];
                }
            }
        }
        let mut pblk = DMatrix::<f64>::zeros(m * nb, m * nb);
        for (j, p) in co.p_chi.iter().enumerate() {
            pblk.view_mut((j * nb, j * nb), (nb, nb)).copy_from(p);
        }
        let q = (&co.single_layer * &pblk).transpose();
        let gx_from_sigma = &proj_chi * &co.single_layer;
        let width = nloc + nb;
        let mut d_e = DMatrix::<f64>::zeros(m * nb, m * nb);
        let mut d_r = DMatrix::<f64>::zeros(m * nb, m * width);
        for j in 0..m {
            let rj = cav.radii[j];
            let (_, d1) = radial_basis_all(disc.n_radial, cav.deltas[j], 1.0);
            for p in 0..nb {
                let l = disc.degrees[p];
                d_e[(j * nb + p, j * nb + p)] = kappa.interior_dlog(l, rj);
                for i in 0..disc.n_radial {
                    d_r[(j * nb + p, j * width + disc.n_radial * p + i)] = d1[i] / rj;
                }
                d_r[(j * nb + p, j * width + nloc + p)] = l as f64 / rj;
            }
        }
        let gp = &gx_from_sigma * &pblk;
        ExplicitCoupling {
            q,
            c1_bar: &gp * &d_r,
            c2_bar: -(&gp * &d_e),
            f0_bar: -(&gx_from_sigma * &co.c0),
            g0_bar: -(&proj_chi * psi0_chi),
        }
    }
}

/// HSP coupling matrix `B`.
pub fn assemble_b(system: &System) -> DMatrix<f64> {
    system.coupling.b.clone()
}

/// Local system of one sphere together with its neighbor trace couplings.
#[derive(Debug, Clone)]
pub struct ABlock {
    /// `Ā_j` linearized at the given state.
    pub matrix: DMatrix<f64>,
    /// `(i, E_ji)` mapping `[X_r,i; lift_i]` to the projected trace on `Γ_j`.
    pub neighbor_trace: Vec<(usize, DMatrix<f64>)>,
}

/// Per-sphere blocks of the reaction-potential system at `state`.
pub fn assemble_a_blocks(system: &System, state: &GlobalUnknowns) -> Result<Vec<ABlock>> {
    let disc = &system.disc;
    (0..system.cavity.len())
        .map(|j| {
            let (matrix, _) = system.locals[j].assemble(disc, state.lift(disc, j), state.galerkin(disc, j))?;
            Ok(ABlock {
                matrix,
                neighbor_trace: system.spheres[j].trace.clone(),
            })
        })
        .collect()
}

/// Coupling operators of an assembled system.
pub fn assemble_coupling(system: &System) -> &CouplingOperators {
    &system.coupling
}

impl LinearOperator for CouplingOperators {
    fn dim(&self) -> usize {
        self.b.nrows()
    }

    fn apply(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.b * x
    }
}
