//! Vacuum potential of the solute charges and the solvation-energy functionals.

use crate::ball::{eval_local, Model};
use crate::cavity::{build_cavity, dist, Atom, CavityParams};
use crate::disc::Discretization;
use crate::error::{Error, Result};
use crate::global::{GlobalUnknowns, SolverOptions, Status, System};
use std::f64::consts::PI;

/// Energy split into the charge interaction and the two ion terms.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EnergyBreakdown {
    pub coulomb: f64,
    pub stress: f64,
    pub osmotic: f64,
    pub total: f64,
}

impl EnergyBreakdown {
    pub fn new(coulomb: f64, stress: f64, osmotic: f64) -> Self {
        Self {
            coulomb,
            stress,
            osmotic,
            total: coulomb + stress + osmotic,
        }
    }
}

/// `Σ q_i / (β |x - x_i|)`.
pub fn psi0(atoms: &[Atom], beta: f64, x: [f64; 3]) -> Result<f64> {
    let mut total = 0.0;
    for (i, at) in atoms.iter().enumerate() {
        let d = dist(x, at.center);
        if d == 0.0 {
            return Err(Error::Domain(format!("potential evaluated at atom {i}")));
        }
        total += at.charge / (beta * d);
    }
    Ok(total)
}

/// Gradient of [`psi0`].
pub fn grad_psi0(atoms: &[Atom], beta: f64, x: [f64; 3]) -> Result<[f64; 3]> {
    let mut g = [0.0; 3];
    for (i, at) in atoms.iter().enumerate() {
        let d = dist(x, at.center);
        if d == 0.0 {
            return Err(Error::Domain(format!("gradient evaluated at atom {i}")));
        }
        let c = -at.charge / (beta * d * d * d);
        for k in 0..3 {
            g[k] += c * (x[k] - at.center[k]);
        }
    }
    Ok(g)
}

/// `ψ sinh ψ - 2(cosh ψ - 1)`, split as (stress, osmotic) integrands.
pub fn ion_integrands(psi: f64) -> Result<(f64, f64)> {
    if !psi.is_finite() || psi.abs() > 700.0 {
        return Err(Error::Overflow(format!("potential {psi} too large for ion energy")));
    }
    let a = psi.abs();
    if a < 1e-3 {
        let p2 = psi * psi;
        // series of ψ sinh ψ and 2(cosh ψ - 1) to keep their difference exact
        let stress = p2 * (1.0 + p2 / 6.0 * (1.0 + p2 / 20.0));
        let osm = -p2 * (1.0 + p2 / 12.0 * (1.0 + p2 / 30.0));
        return Ok((stress, osm));
    }
    Ok((psi * psi.sinh(), -2.0 * (psi.cosh() - 1.0)))
}

/// Reaction potential at atom `i`'s center.
pub fn reaction_at_center(system: &System, state: &GlobalUnknowns, i: usize) -> f64 {
    let disc = system.disc();
    let gamma = crate::ball::inner_trace(disc, system.cavity().deltas[i], state.galerkin(disc, i));
    (gamma[0] + state.lift(disc, i)[0]) * 0.5 / PI.sqrt()
}

/// Solvation energy: charge interaction plus electrostatic stress and osmotic
/// pressure integrals (both zero unless the model is NPB).
pub fn solvation_energy(state: &GlobalUnknowns, system: &System, model: Model) -> Result<EnergyBreakdown> {
    if state.has_non_finite() {
        return Err(Error::Divergence("state contains non-finite values".into()));
    }
    let cav = system.cavity();
    let p = cav.params;
    let coulomb: f64 = (0..cav.len())
        .map(|i| 0.5 * p.beta * cav.atoms[i].charge * reaction_at_center(system, state, i))
        .sum();
    if model != Model::Npb || p.kappa == 0.0 {
        return Ok(EnergyBreakdown::new(coulomb, 0.0, 0.0));
    }
    let disc = system.disc();
    let scale = p.beta * p.beta * p.kappa * p.kappa * p.eps_s / (8.0 * PI);
    let nl = disc.n_leb();
    let mut stress = 0.0;
    let mut osmotic = 0.0;
    for j in 0..cav.len() {
        let local = system.local(j);
        let psi = local.reaction_at_nodes(disc, state.galerkin(disc, j), state.lift(disc, j));
        let r3 = cav.radii[j].powi(3);
        let centre = cav.atoms[j].center;
        let (mut sj, mut oj) = (0.0, 0.0);
        for (m, &r) in local.rule.radii.iter().enumerate() {
            let wr = local.rule.radial_weights[m];
            for (n, s) in disc.leb.points.iter().enumerate() {
                let idx = m * nl + n;
                let lam = local.samples()[idx].lam;
                if lam == 0.0 {
                    continue;
                }
                let x = [
                    centre[0] + cav.radii[j] * r * s[0],
                    centre[1] + cav.radii[j] * r * s[1],
                    centre[2] + cav.radii[j] * r * s[2],
                ];
                let cover = 1 + cav.neighbors[j].iter().filter(|&&k| cav.inside(k, x)).count();
                let w = wr * disc.leb.weights[n] * lam / cover as f64;
                let (a, b) = ion_integrands(psi[idx])?;
                sj += w * a;
                oj += w * b;
            }
        }
        stress += scale * r3 * sj;
        osmotic += scale * r3 * oj;
    }
    Ok(EnergyBreakdown::new(coulomb, stress, osmotic))
}

/// Lebedev-projected one-atom energy `Σ_n q ω_n ψ_r(ρ s_n) Y_00(s_n)` with
/// `ρ` the sampling radius in unit-ball coordinates (`0` is the center).
pub fn one_atom_test_energy(state: &GlobalUnknowns, system: &System, radius: f64) -> Result<f64> {
    let cav = system.cavity();
    if cav.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "one-atom energy needs exactly one atom, got {}",
            cav.len()
        )));
    }
    let disc = system.disc();
    let q = cav.atoms[0].charge;
    let y00 = 0.5 / PI.sqrt();
    let mut total = 0.0;
    for (s, w) in disc.leb.points.iter().zip(&disc.leb.weights) {
        let v = eval_local(
            disc,
            cav.deltas[0],
            state.galerkin(disc, 0),
            state.lift(disc, 0),
            radius,
            *s,
        )?;
        total += q * w * v * y00;
    }
    Ok(total)
}

/// Relative increment `|E_k - E_{k-1}| / |E_k|`.
pub fn increment(e_k: f64, e_km1: f64) -> Result<f64> {
    if e_k == 0.0 {
        return Err(Error::Domain("relative increment undefined for zero energy".into()));
    }
    Ok((e_k - e_km1).abs() / e_k.abs())
}

/// Reaction potentials of both models at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelGap {
    pub r: f64,
    pub npb: f64,
    pub lpb: f64,
    /// `|npb - lpb|`.
    pub var: f64,
}

/// Solve a one-atom system with both ion models and sample the reaction
/// potentials along `+z` at the given radii, which must lie in `[r_1, R_1]`.
pub fn compare_npb_lpb(
    atom: Atom,
    params: CavityParams,
    disc: &Discretization,
    opts: &SolverOptions,
    radii: &[f64],
) -> Result<Vec<ModelGap>> {
    let cav = build_cavity(&[atom], params)?;
    let big_r = cav.radii[0];
    // unit conversion can push the ends of a user range off by an ulp
    let slack = 1e-12 * big_r;
    if let Some(r) = radii.iter().find(|r| !(atom.radius - slack..=big_r + slack).contains(*r)) {
        return Err(Error::Domain(format!(
            "radius {r} outside [{}, {big_r}]",
            atom.radius
        )));
    }
    let radii: Vec<f64> = radii.iter().map(|r| r.clamp(atom.radius, big_r)).collect();
    let delta = cav.deltas[0];
    let mut profiles = Vec::with_capacity(2);
    for model in [Model::Npb, Model::Lpb] {
        let sys = System::new(cav.clone(), disc.clone(), model, opts.execution)?;
        let (state, trace) = sys.solve(opts);
        if trace.status != Status::Converged {
            return Err(Error::NonConvergence {
                iterations: trace.records.len(),
                residual: trace.records.last().map_or(f64::NAN, |r| r.increment),
            });
        }
        let vals = radii
            .iter()
            .map(|&r| {
                eval_local(disc, delta, state.galerkin(disc, 0), state.lift(disc, 0), r / big_r, [0.0, 0.0, 1.0])
            })
            .collect::<Result<Vec<f64>>>()?;
        profiles.push(vals);
    }
    Ok(radii
        .iter()
        .enumerate()
        .map(|(k, &r)| ModelGap {
            r,
            npb: profiles[0][k],
            lpb: profiles[1][k],
            var: (profiles[0][k] - profiles[1][k]).abs(),
        })
        .collect())
}
