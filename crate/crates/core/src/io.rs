//! PQR ingestion, unit conversion and flat `key = value` run configurations.

use crate::ball::Model;
use crate::cavity::{Atom, CavityParams};
use crate::error::{Error, Result};
use crate::global::SolverOptions;
use crate::par::Execution;
use std::fmt::Write as _;

/// Bohr per Ångström.
pub const BOHR_PER_ANGSTROM: f64 = 1.8897261246;
/// Boltzmann constant in Hartree per Kelvin.
pub const BOLTZMANN_HARTREE: f64 = 3.166_811_563e-6;
/// Room temperature in Kelvin.
pub const ROOM_TEMPERATURE: f64 = 298.15;

/// Atom as read from a PQR file, in the file's length unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawAtom {
    pub position: [f64; 3],
    pub charge: f64,
    pub radius: f64,
}

/// Read `ATOM`/`HETATM` records, taking x, y, z, charge and radius from the
/// last five numeric fields.
pub fn parse_pqr(text: &str) -> Result<Vec<RawAtom>> {
    const NAMES: [&str; 5] = ["x", "y", "z", "charge", "radius"];
    let mut atoms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            Some(&"ATOM") | Some(&"HETATM") => {}
            _ => continue,
        }
        let n = lineno + 1;
        if fields.len() < 6 {
            return Err(Error::InvalidInput(format!("line {n}: expected x y z charge radius")));
        }
        let tail = &fields[fields.len() - 5..];
        let mut v = [0.0; 5];
        for (k, (field, name)) in tail.iter().zip(NAMES).enumerate() {
            v[k] = field
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::InvalidInput(format!("line {n}: field {name} is not a number: {field:?}")))?;
        }
        if v[4] <= 0.0 {
            return Err(Error::InvalidInput(format!("line {n}: radius must be > 0, got {}", v[4])));
        }
        atoms.push(RawAtom {
            position: [v[0], v[1], v[2]],
            charge: v[3],
            radius: v[4],
        });
    }
    if atoms.is_empty() {
        return Err(Error::InvalidInput("no atoms".into()));
    }
    Ok(atoms)
}

/// Length unit of the PQR file and of the length-valued config keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthUnit {
    Angstrom,
    Bohr,
}

impl LengthUnit {
    pub fn to_bohr(self) -> f64 {
        match self {
            LengthUnit::Angstrom => BOHR_PER_ANGSTROM,
            LengthUnit::Bohr => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LengthUnit::Angstrom => "angstrom",
            LengthUnit::Bohr => "bohr",
        }
    }
}

/// Where the one-atom energy samples the reaction potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalRadius {
    /// Atom center, from the harmonic inner extension.
    Center,
    /// Unit-ball radius in `[0, 1]`.
    Radius(f64),
}

/// Everything a run needs besides the molecule.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub lmax: usize,
    pub n_leb: usize,
    pub n_radial: usize,
    pub n_lgl: usize,
    pub r_p: f64,
    pub a: f64,
    pub r_0: f64,
    pub eps_s: f64,
    /// Inverse length, in `length_unit`⁻¹.
    pub kappa: f64,
    pub beta: f64,
    pub tol: f64,
    pub max_outer: usize,
    pub max_dd: usize,
    pub max_fp: usize,
    pub damping: f64,
    pub model: Model,
    pub eval_radius: EvalRadius,
    pub length_unit: LengthUnit,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            lmax: 6,
            n_leb: 110,
            n_radial: 20,
            n_lgl: 50,
            r_p: 1.4,
            a: 1.0,
            r_0: 5.0,
            eps_s: 78.54,
            kappa: 0.104,
            beta: BOLTZMANN_HARTREE * ROOM_TEMPERATURE,
            tol: 1e-6,
            max_outer: 30,
            max_dd: 15,
            max_fp: 50,
            damping: 0.5,
            model: Model::Npb,
            eval_radius: EvalRadius::Center,
            length_unit: LengthUnit::Angstrom,
        }
    }
}

/// Config keys in serialization order.
pub const KEYS: [&str; 18] = [
    "lmax",
    "n_leb",
    "n_radial",
    "n_lgl",
    "r_p",
    "a",
    "r_0",
    "eps_s",
    "kappa",
    "beta",
    "tol",
    "max_outer",
    "max_dd",
    "max_fp",
    "damping",
    "model",
    "eval_radius",
    "length_unit",
];

fn parse_model(v: &str) -> Option<Model> {
    match v {
        "npb" => Some(Model::Npb),
        "lpb" => Some(Model::Lpb),
        "frozen" => Some(Model::Frozen),
        _ => None,
    }
}

impl RunConfig {
    /// Set one key from its textual value, validating the value alone.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::InvalidInput(format!("{key}: {what}, got {value:?}"));
        let count = || -> Result<usize> {
            match value.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(bad("expected an integer >= 1")),
            }
        };
        let real = || -> Result<f64> {
            value
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| bad("expected a finite number"))
        };
        match key {
            "lmax" => {
                self.lmax = value.parse().map_err(|_| bad("expected an integer >= 0"))?;
            }
            "n_leb" => self.n_leb = count()?,
            "n_radial" => self.n_radial = count()?,
            "n_lgl" => self.n_lgl = count()?,
            "r_p" => self.r_p = real()?,
            "a" => self.a = real()?,
            "r_0" => self.r_0 = real()?,
            "eps_s" => self.eps_s = real()?,
            "kappa" => self.kappa = real()?,
            "beta" => self.beta = real()?,
            "tol" => self.tol = real()?,
            "max_outer" => self.max_outer = count()?,
            "max_dd" => self.max_dd = count()?,
            "max_fp" => self.max_fp = count()?,
            "damping" => self.damping = real()?,
            "model" => {
                self.model = parse_model(value)
                    .ok_or_else(|| Error::InvalidInput(format!("model must be npb|lpb (or frozen), got {value:?}")))?
            }
            "eval_radius" => {
                self.eval_radius = if value == "center" {
                    EvalRadius::Center
                } else {
                    match value.parse::<f64>() {
                        Ok(r) if (0.0..=1.0).contains(&r) => EvalRadius::Radius(r),
                        _ => return Err(bad("expected center or a radius in [0, 1]")),
                    }
                }
            }
            "length_unit" => {
                self.length_unit = match value {
                    "angstrom" => LengthUnit::Angstrom,
                    "bohr" => LengthUnit::Bohr,
                    _ => return Err(bad("expected angstrom or bohr")),
                }
            }
            _ => return Err(Error::InvalidInput(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    /// Textual value of a key.
    pub fn get(&self, key: &str) -> Option<String> {
        Some(match key {
            "lmax" => self.lmax.to_string(),
            "n_leb" => self.n_leb.to_string(),
            "n_radial" => self.n_radial.to_string(),
            "n_lgl" => self.n_lgl.to_string(),
            "r_p" => self.r_p.to_string(),
            "a" => self.a.to_string(),
            "r_0" => self.r_0.to_string(),
            "eps_s" => self.eps_s.to_string(),
            "kappa" => self.kappa.to_string(),
            "beta" => self.beta.to_string(),
            "tol" => self.tol.to_string(),
            "max_outer" => self.max_outer.to_string(),
            "max_dd" => self.max_dd.to_string(),
            "max_fp" => self.max_fp.to_string(),
            "damping" => self.damping.to_string(),
            "model" => self.model.name().to_string(),
            "eval_radius" => match self.eval_radius {
                EvalRadius::Center => "center".to_string(),
                EvalRadius::Radius(r) => r.to_string(),
            },
            "length_unit" => self.length_unit.name().to_string(),
            _ => return None,
        })
    }

    /// Cross-key constraints.
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.r_p > 0.0, "r_p", "must be > 0"),
            (self.a >= 0.0, "a", "must be >= 0"),
            (self.r_0 >= 0.0, "r_0", "must be >= 0"),
            (self.eps_s >= 1.0, "eps_s", "must be >= 1"),
            (self.kappa >= 0.0, "kappa", "must be >= 0"),
            (self.beta > 0.0, "beta", "must be > 0"),
            (self.tol > 0.0, "tol", "must be > 0"),
            (self.damping > 0.0 && self.damping <= 1.0, "damping", "must lie in (0, 1]"),
        ];
        for (ok, key, msg) in checks {
            if !ok {
                return Err(Error::InvalidInput(format!("{key} {msg}")));
            }
        }
        Ok(())
    }

    /// Effective configuration as `key = value` lines.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for key in KEYS {
            let _ = writeln!(out, "{key} = {}", self.get(key).unwrap_or_default());
        }
        out
    }

    /// Cavity parameters in atomic units.
    pub fn cavity_params(&self) -> CavityParams {
        let s = self.length_unit.to_bohr();
        CavityParams {
            r_p: self.r_p * s,
            a: self.a * s,
            r_0: self.r_0 * s,
            eps_s: self.eps_s,
            kappa: self.kappa / s,
            beta: self.beta,
        }
    }

    pub fn solver_options(&self, execution: Execution) -> SolverOptions {
        SolverOptions {
            tol: self.tol,
            max_outer: self.max_outer,
            min_outer: 1,
            max_dd: self.max_dd,
            max_fp: self.max_fp,
            damping: self.damping,
            execution,
        }
    }
}

/// Parse `key = value` lines; `#` starts a comment. Absent keys keep their
/// defaults.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("line {}: expected key = value", lineno + 1)))?;
        cfg.set(key.trim(), value.trim())?;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Atoms in atomic units.
pub fn convert_units(atoms: &[RawAtom], unit: LengthUnit) -> Vec<Atom> {
    let s = unit.to_bohr();
    atoms
        .iter()
        .map(|a| Atom {
            center: [a.position[0] * s, a.position[1] * s, a.position[2] * s],
            charge: a.charge,
            radius: a.radius * s,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pqr_examples() {
        let atoms = parse_pqr("ATOM 1 H RES 1 0.0 0.0 0.0 0.417 1.2").unwrap();
        assert_eq!(
            atoms,
            vec![RawAtom { position: [0.0; 3], charge: 0.417, radius: 1.2 }]
        );
        let e = parse_pqr("").unwrap_err().to_string();
        assert!(e.contains("no atoms"), "{e}");
        let e = parse_pqr("REMARK x\nATOM 1 H RES 1 0.0 0.0 0.0 abc 1.2").unwrap_err().to_string();
        assert!(e.contains("charge") && e.contains("line 2"), "{e}");
        assert!(parse_pqr("HETATM 1 H RES 1 0 0 0 1 -1").is_err());
    }

    #[test]
    fn unit_examples() {
        let a = [RawAtom { position: [1.0, 0.0, 0.0], charge: 0.5, radius: 1.0 }];
        let c = convert_units(&a, LengthUnit::Angstrom);
        assert_eq!(c[0].center[0], 1.8897261246);
        assert_eq!(c[0].center[1], 0.0);
        assert_eq!(c[0].charge, 0.5);
        let p = RunConfig::default().cavity_params();
        assert_eq!(p.kappa, 0.104 / 1.8897261246);
        assert_eq!(convert_units(&a, LengthUnit::Bohr)[0].radius, 1.0);
    }

    #[test]
    fn config_examples() {
        assert_eq!(parse_config("").unwrap(), RunConfig::default());
        let c = parse_config("lmax = 7").unwrap();
        assert_eq!(c.lmax, 7);
        assert_eq!(RunConfig { lmax: 6, ..c }, RunConfig::default());
        let e = parse_config("model = quadratic").unwrap_err().to_string();
        assert!(e.contains("model must be npb|lpb"), "{e}");
        assert!(parse_config("colour = red").unwrap_err().to_string().contains("colour"));
        assert!(parse_config("tol = -1").unwrap_err().to_string().contains("tol"));
        assert!(parse_config("n_radial = 0").unwrap_err().to_string().contains("n_radial"));
    }

    #[test]
    fn config_round_trip() {
        let text = "lmax = 11\nkappa = 1e-5 # comment\nmodel = lpb\neval_radius = 0.25\nlength_unit = bohr\nbeta = 1";
        let c = parse_config(text).unwrap();
        assert_eq!(parse_config(&c.serialize()).unwrap(), c);
        assert_eq!(c.eval_radius, EvalRadius::Radius(0.25));
    }
}
