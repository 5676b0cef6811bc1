//! Drivers behind the `ddpb` subcommands and their JSON/CSV reports.

use ddpb_core::cavity::{build_cavity, Atom};
use ddpb_core::disc::Discretization;
use ddpb_core::energy::{compare_npb_lpb, one_atom_test_energy, EnergyBreakdown, ModelGap};
use ddpb_core::global::{SolveTrace, Status, System};
use ddpb_core::io::{convert_units, parse_config, parse_pqr, EvalRadius, RawAtom, RunConfig};
use ddpb_core::par::{map_indexed, Execution};
use ddpb_core::{Error, Result};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

pub const EXIT_CONVERGED: i32 = 0;
pub const EXIT_MAX_ITER: i32 = 2;
pub const EXIT_DIVERGED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Exit code for a final solver status.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Converged => EXIT_CONVERGED,
        Status::MaxIter => EXIT_MAX_ITER,
        Status::Diverged | Status::Oscillating => EXIT_DIVERGED,
    }
}

/// Exit code for an error raised before or outside the outer iteration.
pub fn error_exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_) | Error::UnsupportedLebedev { .. } | Error::Domain(_) => EXIT_USAGE,
        Error::NonConvergence { .. } | Error::Stagnation { .. } => EXIT_MAX_ITER,
        _ => EXIT_DIVERGED,
    }
}

/// Read a PQR file and a config file. An empty config path means defaults.
pub fn load_inputs(pqr: &Path, config: Option<&Path>) -> Result<(RunConfig, Vec<RawAtom>)> {
    let read = |p: &Path| {
        std::fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))
    };
    let cfg = match config {
        Some(p) => parse_config(&read(p)?)?,
        None => RunConfig::default(),
    };
    let atoms = parse_pqr(&read(pqr)?)?;
    Ok((cfg, atoms))
}

/// SHA-256 of the serialized effective configuration, hex encoded.
pub fn config_hash(cfg: &RunConfig) -> String {
    let digest = Sha256::digest(cfg.serialize().as_bytes());
    digest.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Result of one solve.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub trace: SolveTrace,
    pub energy: Option<EnergyBreakdown>,
    /// Reduced single-atom energy, present for one-atom molecules.
    pub one_atom_energy: Option<f64>,
    pub wall_time: f64,
}

impl SolveOutcome {
    pub fn status(&self) -> Status {
        self.trace.status
    }

    /// Total energy, NaN unless converged.
    pub fn reported_energy(&self) -> f64 {
        match (self.trace.status, self.energy) {
            (Status::Converged, Some(e)) => e.total,
            _ => f64::NAN,
        }
    }
}

/// Solve for atoms already in atomic units.
pub fn solve_atoms(cfg: &RunConfig, atoms: &[Atom], exec: Execution) -> Result<SolveOutcome> {
    let start = Instant::now();
    cfg.validate()?;
    let cavity = build_cavity(atoms, cfg.cavity_params())?;
    let disc = Discretization::new(cfg.lmax, cfg.n_radial, cfg.n_leb, cfg.n_lgl)?;
    let system = System::new(cavity, disc, cfg.model, exec)?;
    let (state, trace) = system.solve(&cfg.solver_options(exec));
    let one_atom_energy = if atoms.len() == 1 && trace.status == Status::Converged {
        let radius = match cfg.eval_radius {
            EvalRadius::Center => 0.0,
            EvalRadius::Radius(r) => r,
        };
        Some(one_atom_test_energy(&state, &system, radius)?)
    } else {
        None
    };
    Ok(SolveOutcome {
        energy: trace.energy(),
        trace,
        one_atom_energy,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Solve for atoms as read from a PQR file.
pub fn solve(cfg: &RunConfig, atoms: &[RawAtom], exec: Execution) -> Result<SolveOutcome> {
    solve_atoms(cfg, &convert_units(atoms, cfg.length_unit), exec)
}

fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

fn config_json(cfg: &RunConfig) -> Value {
    let mut map = Map::new();
    for key in ddpb_core::io::KEYS {
        let text = cfg.get(key).unwrap_or_default();
        let v = if let Ok(i) = text.parse::<i64>() {
            json!(i)
        } else if let Ok(f) = text.parse::<f64>() {
            num(f)
        } else {
            json!(text)
        };
        map.insert(key.to_string(), v);
    }
    Value::Object(map)
}

fn energy_json(e: &EnergyBreakdown) -> Value {
    json!({
        "coulomb": num(e.coulomb),
        "stress": num(e.stress),
        "osmotic": num(e.osmotic),
        "total": num(e.total),
    })
}

/// JSON report of a single solve.
pub fn solve_report(cfg: &RunConfig, atoms: &[RawAtom], out: &SolveOutcome) -> Value {
    let iterations: Vec<Value> = out
        .trace
        .records
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "energy": num(r.energy.total),
                "increment": num(r.increment),
                "dd_loops": r.dd_loops,
                "fp_loops": r.fp_loops,
            })
        })
        .collect();
    json!({
        "command": "solve",
        "config": config_json(cfg),
        "config_hash": config_hash(cfg),
        "molecule": {
            "atoms": atoms.len(),
            "total_charge": num(atoms.iter().map(|a| a.charge).sum()),
        },
        "status": out.trace.status.name(),
        "message": out.trace.message,
        "energy": out.energy.as_ref().map(energy_json),
        "one_atom_energy": out.one_atom_energy.map(num),
        "trace": iterations,
        "wall_time_s": num(out.wall_time),
    })
}

/// JSON report for a failure before the outer iteration started.
pub fn error_report(cfg: Option<&RunConfig>, err: &Error) -> Value {
    json!({
        "command": "solve",
        "config": cfg.map(config_json),
        "status": if error_exit_code(err) == EXIT_USAGE { "usage_error" } else { "diverged" },
        "message": err.to_string(),
    })
}

/// One row of a parameter sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub value: String,
    pub outcome: std::result::Result<SolveOutcome, String>,
}

impl SweepRow {
    pub fn status(&self) -> Status {
        match &self.outcome {
            Ok(o) => o.status(),
            Err(_) => Status::Diverged,
        }
    }
}

/// Run one solve per value of `key`. Values are validated up front; solver
/// failures are recorded per row.
pub fn sweep(cfg: &RunConfig, atoms: &[RawAtom], key: &str, values: &[String], exec: Execution) -> Result<Vec<SweepRow>> {
    if values.is_empty() {
        return Err(Error::InvalidInput("empty values list".into()));
    }
    let configs = values
        .iter()
        .map(|v| {
            let mut c = cfg.clone();
            c.set(key, v)?;
            c.validate()?;
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(map_indexed(exec, values.len(), |k| SweepRow {
        value: values[k].clone(),
        outcome: solve(&configs[k], atoms, exec).map_err(|e| e.to_string()),
    }))
}

/// Worst status over rows, for the process exit code.
pub fn worst_status<I: IntoIterator<Item = Status>>(statuses: I) -> Status {
    let rank = |s: Status| match s {
        Status::Converged => 0,
        Status::MaxIter => 1,
        Status::Oscillating => 2,
        Status::Diverged => 3,
    };
    statuses.into_iter().max_by_key(|s| rank(*s)).unwrap_or(Status::Converged)
}

fn csv_preamble(out: &mut String, cfg: &RunConfig, extra: &str) {
    let _ = writeln!(out, "# config_hash={}{extra}", config_hash(cfg));
}

fn row_fields(o: &std::result::Result<SolveOutcome, String>) -> String {
    match o {
        Ok(o) => {
            let e = match (o.status(), o.energy) {
                (Status::Converged, Some(e)) => e,
                _ => EnergyBreakdown::new(f64::NAN, f64::NAN, f64::NAN),
            };
            let dd: usize = o.trace.records.iter().map(|r| r.dd_loops).sum();
            let fp: usize = o.trace.records.iter().map(|r| r.fp_loops).sum();
            let one = o.one_atom_energy.unwrap_or(f64::NAN);
            format!(
                "{},{},{},{},{one},{},{},{dd},{fp}",
                e.total,
                e.coulomb,
                e.stress,
                e.osmotic,
                o.status().name(),
                o.trace.records.len()
            )
        }
        Err(_) => "NaN,NaN,NaN,NaN,NaN,diverged,0,0,0".to_string(),
    }
}

const ROW_HEADER: &str = "energy,coulomb,stress,osmotic,one_atom_energy,status,outer_iterations,dd_loops,fp_loops";

/// CSV of a parameter sweep: hash line, header, one row per value.
pub fn sweep_csv(cfg: &RunConfig, key: &str, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    csv_preamble(&mut out, cfg, &format!(" vary={key}"));
    let _ = writeln!(out, "{key},{ROW_HEADER}");
    for r in rows {
        let _ = writeln!(out, "{},{}", r.value, row_fields(&r.outcome));
    }
    out
}

/// Default sampling radii for `compare`: 11 points from `r_1` to `R_1`.
pub fn default_radii(cfg: &RunConfig, atom: &RawAtom) -> Vec<f64> {
    let big_r = atom.radius + cfg.r_p + cfg.a + cfg.r_0;
    (0..11).map(|k| atom.radius + (big_r - atom.radius) * k as f64 / 10.0).collect()
}

/// NPB and LPB reaction potentials of a one-atom molecule. Radii are in the
/// configured length unit.
pub fn compare(cfg: &RunConfig, atoms: &[RawAtom], radii: &[f64], exec: Execution) -> Result<Vec<ModelGap>> {
    if atoms.len() != 1 {
        return Err(Error::InvalidInput(format!("compare needs a one-atom molecule, got {}", atoms.len())));
    }
    if radii.is_empty() {
        return Err(Error::InvalidInput("empty radii list".into()));
    }
    let s = cfg.length_unit.to_bohr();
    let atom = convert_units(atoms, cfg.length_unit)[0];
    let disc = Discretization::new(cfg.lmax, cfg.n_radial, cfg.n_leb, cfg.n_lgl)?;
    let scaled: Vec<f64> = radii.iter().map(|r| r * s).collect();
    let mut gaps = compare_npb_lpb(atom, cfg.cavity_params(), &disc, &cfg.solver_options(exec), &scaled)?;
    for (g, r) in gaps.iter_mut().zip(radii) {
        g.r = *r;
    }
    Ok(gaps)
}

pub fn compare_csv(cfg: &RunConfig, gaps: &[ModelGap]) -> String {
    let mut out = String::new();
    csv_preamble(&mut out, cfg, "");
    out.push_str("r,psi_npb,psi_lpb,var\n");
    for g in gaps {
        let _ = writeln!(out, "{},{},{},{}", g.r, g.npb, g.lpb, g.var);
    }
    out
}

/// Coordinate plane of a rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plane {
    Xy,
    Yz,
    Xz,
}

impl Plane {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "xy" => Some(Plane::Xy),
            "yz" => Some(Plane::Yz),
            "xz" => Some(Plane::Xz),
            _ => None,
        }
    }

    fn axes(self) -> (usize, usize) {
        match self {
            Plane::Xy => (0, 1),
            Plane::Yz => (1, 2),
            Plane::Xz => (0, 2),
        }
    }
}

/// `n` equispaced angles covering `[0, 2π]`, endpoints included.
pub fn rotation_angles(n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![0.0];
    }
    (0..n).map(|k| 2.0 * PI * k as f64 / (n - 1) as f64).collect()
}

/// Copy of `atoms` with atom 2 rotated about atom 1 by `theta` in `plane`.
pub fn rotate_second(atoms: &[RawAtom], theta: f64, plane: Plane) -> Vec<RawAtom> {
    let mut out = atoms.to_vec();
    if theta == 0.0 {
        return out;
    }
    let (a, b) = plane.axes();
    let c = atoms[0].position;
    let p = atoms[1].position;
    let (u, v) = (p[a] - c[a], p[b] - c[b]);
    let (sn, cs) = theta.sin_cos();
    out[1].position[a] = c[a] + cs * u - sn * v;
    out[1].position[b] = c[b] + sn * u + cs * v;
    out
}

/// Energies of a two-atom molecule over rotations of its second atom.
pub fn rotate(
    cfg: &RunConfig,
    atoms: &[RawAtom],
    n_angles: usize,
    plane: Plane,
    exec: Execution,
) -> Result<Vec<(f64, SweepRow)>> {
    if atoms.len() != 2 {
        return Err(Error::InvalidInput(format!("rotate needs a two-atom molecule, got {}", atoms.len())));
    }
    let angles = rotation_angles(n_angles);
    Ok(map_indexed(exec, angles.len(), |k| {
        let theta = angles[k];
        let moved = rotate_second(atoms, theta, plane);
        (
            theta,
            SweepRow {
                value: theta.to_string(),
                outcome: solve(cfg, &moved, exec).map_err(|e| e.to_string()),
            },
        )
    }))
}

pub fn rotate_csv(cfg: &RunConfig, plane: Plane, rows: &[(f64, SweepRow)]) -> String {
    let mut out = String::new();
    let name = match plane {
        Plane::Xy => "xy",
        Plane::Yz => "yz",
        Plane::Xz => "xz",
    };
    csv_preamble(&mut out, cfg, &format!(" plane={name}"));
    let _ = writeln!(out, "angle,{ROW_HEADER}");
    for (theta, r) in rows {
        let _ = writeln!(out, "{theta},{}", row_fields(&r.outcome));
    }
    out
}

/// Largest relative deviation from the mean, `max|E - Ē| / |Ē|`.
pub fn relative_spread(values: &[f64]) -> f64 {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max) / mean.abs()
}
