//! Molecular geometry, enlarged-ball decomposition, the dielectric and
//! ion-exclusion profiles, and the Schwarz partition weights on sphere
//! boundaries.

use crate::error::{Error, Result};

/// Tolerance for "strictly inside" a ball and "on" a sphere.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// One atom in atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub center: [f64; 3],
    pub charge: f64,
    pub radius: f64,
}

/// Physical parameters of the cavity and solvent, in atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityParams {
    /// Probe radius.
    pub r_p: f64,
    /// Stern layer length.
    pub a: f64,
    /// Width of the nonlinear region added to each ball.
    pub r_0: f64,
    pub eps_s: f64,
    pub kappa: f64,
    pub beta: f64,
}

impl CavityParams {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.r_p > 0.0, "r_p must be > 0"),
            (self.a >= 0.0, "a must be >= 0"),
            (self.r_0 >= 0.0, "r_0 must be >= 0"),
            (self.eps_s >= 1.0, "eps_s must be >= 1"),
            (self.kappa >= 0.0, "kappa must be >= 0"),
            (self.beta > 0.0, "beta must be > 0"),
        ];
        for (ok, msg) in checks {
            if !ok {
                return Err(Error::InvalidInput(msg.into()));
            }
        }
        Ok(())
    }
}

pub(crate) fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

/// Enlarged balls covering the cavity together with the profile evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct CavityModel {
    pub atoms: Vec<Atom>,
    pub params: CavityParams,
    /// Enlarged radii `r_i + r_p + a + r_0`.
    pub radii: Vec<f64>,
    /// Inner ratios `r_i / R_i`.
    pub deltas: Vec<f64>,
    pub neighbors: Vec<Vec<usize>>,
}

/// Weights of a point on sphere `j` among the balls containing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub weights: Vec<(usize, f64)>,
    pub chi_e: f64,
}

/// `ξ(t) = t³(10 + 3t(2t - 5))`, the C¹ switching polynomial on `[0, 1]`.
pub fn switching_xi(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("switching argument {t} outside [0,1]")));
    }
    Ok(t * t * t * (10.0 + 3.0 * t * (-5.0 + 2.0 * t)))
}

impl CavityModel {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `min_i(|x - x_i| - (r_i + r_p + a))`.
    pub fn f_sas(&self, x: [f64; 3]) -> f64 {
        let shift = self.params.r_p + self.params.a;
        self.atoms
            .iter()
            .map(|at| dist(x, at.center) - (at.radius + shift))
            .fold(f64::INFINITY, f64::min)
    }

    /// Relative permittivity at `x`.
    pub fn permittivity(&self, x: [f64; 3]) -> f64 {
        self.permittivity_from_f(self.f_sas(x))
    }

    /// Ion-exclusion function at `x`.
    pub fn ion_exclusion(&self, x: [f64; 3]) -> f64 {
        self.ion_exclusion_from_f(self.f_sas(x))
    }

    pub fn permittivity_from_f(&self, f: f64) -> f64 {
        let p = &self.params;
        if f <= -p.r_p - p.a {
            1.0
        } else if f >= -p.a {
            p.eps_s
        } else {
            let t = ((f + p.r_p + p.a) / p.r_p).clamp(0.0, 1.0);
            1.0 + (p.eps_s - 1.0) * switching_xi(t).expect("clamped")
        }
    }

    pub fn ion_exclusion_from_f(&self, f: f64) -> f64 {
        let p = &self.params;
        if f <= -p.r_p {
            0.0
        } else if f >= 0.0 {
            1.0
        } else {
            let t = ((f + p.r_p) / p.r_p).clamp(0.0, 1.0);
            switching_xi(t).expect("clamped")
        }
    }

    /// Whether `x` lies strictly inside ball `i`.
    pub fn inside(&self, i: usize, x: [f64; 3]) -> bool {
        dist(x, self.atoms[i].center) < self.radii[i] - MEMBERSHIP_TOL
    }

    /// Number of balls strictly containing `x`.
    pub fn coverage(&self, x: [f64; 3]) -> usize {
        (0..self.len()).filter(|&i| self.inside(i, x)).count()
    }

    /// Partition weights `ω_jk` and `χ_j^e` at a point of sphere `j`.
    pub fn partition_weights(&self, j: usize, x: [f64; 3]) -> Result<Partition> {
        let r = dist(x, self.atoms[j].center);
        if (r - self.radii[j]).abs() > MEMBERSHIP_TOL * self.radii[j].max(1.0) {
            return Err(Error::Domain(format!(
                "point at distance {r} is not on sphere {j} of radius {}",
                self.radii[j]
            )));
        }
        Ok(self.partition_unchecked(j, x))
    }

    pub(crate) fn partition_unchecked(&self, j: usize, x: [f64; 3]) -> Partition {
        let members: Vec<usize> = self.neighbors[j]
            .iter()
            .copied()
            .filter(|&k| self.inside(k, x))
            .collect();
        if members.is_empty() {
            return Partition {
                weights: Vec::new(),
                chi_e: 1.0,
            };
        }
        let w = 1.0 / members.len() as f64;
        Partition {
            weights: members.into_iter().map(|k| (k, w)).collect(),
            chi_e: 0.0,
        }
    }
}

/// Build the enlarged-ball decomposition of a molecule.
pub fn build_cavity(atoms: &[Atom], params: CavityParams) -> Result<CavityModel> {
    if atoms.is_empty() {
        return Err(Error::InvalidInput("molecule has no atoms".into()));
    }
    params.validate()?;
    for (i, at) in atoms.iter().enumerate() {
        if !(at.radius > 0.0) {
            return Err(Error::InvalidInput(format!("atom {i} has radius {}", at.radius)));
        }
        if at.center.iter().chain([&at.charge]).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!("atom {i} has non-finite data")));
        }
        for (k, other) in atoms.iter().enumerate().take(i) {
            if dist(at.center, other.center) < 1e-8 {
                return Err(Error::InvalidInput(format!("atoms {k} and {i} coincide")));
            }
        }
    }
    let radii: Vec<f64> = atoms
        .iter()
        .map(|at| at.radius + params.r_p + params.a + params.r_0)
        .collect();
    let deltas = atoms.iter().zip(&radii).map(|(at, r)| at.radius / r).collect();
    let neighbors = (0..atoms.len())
        .map(|i| {
            (0..atoms.len())
                .filter(|&j| j != i && dist(atoms[i].center, atoms[j].center) < radii[i] + radii[j])
                .collect()
        })
        .collect();
    Ok(CavityModel {
        atoms: atoms.to_vec(),
        params,
        radii,
        deltas,
        neighbors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params() -> CavityParams {
        CavityParams {
            r_p: 0.3,
            a: 0.2,
            r_0: 1.5,
            eps_s: 10.0,
            kappa: 1.0,
            beta: 1.0,
        }
    }

    fn atom(x: f64, r: f64) -> Atom {
        Atom {
            center: [x, 0.0, 0.0],
            charge: 1.0,
            radius: r,
        }
    }

    #[test]
    fn one_atom_radii() {
        let m = build_cavity(&[atom(0.0, 0.5)], params()).unwrap();
        assert_relative_eq!(m.radii[0], 2.5, epsilon = 1e-15);
        assert_relative_eq!(m.deltas[0], 0.2, epsilon = 1e-15);
        assert!(m.neighbors[0].is_empty());
    }

    #[test]
    fn neighbor_detection() {
        let p = CavityParams { r_p: 0.5, a: 0.0, r_0: 0.5, ..params() };
        let far = build_cavity(&[atom(0.0, 1.0), atom(10.0, 1.0)], p).unwrap();
        assert!(far.neighbors.iter().all(|n| n.is_empty()));
        let near = build_cavity(&[atom(0.0, 1.0), atom(1.0, 1.0)], p).unwrap();
        assert_eq!(near.neighbors, vec![vec![1], vec![0]]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(build_cavity(&[], params()).is_err());
        assert!(build_cavity(&[atom(0.0, 0.0)], params()).is_err());
        assert!(build_cavity(&[atom(0.0, 1.0), atom(0.0, 1.0)], params()).is_err());
    }

    #[test]
    fn sas_distance() {
        let p = CavityParams { r_p: 1.4, a: 0.0, ..params() };
        let m = build_cavity(&[atom(0.0, 2.0)], p).unwrap();
        assert_relative_eq!(m.f_sas([3.4, 0.0, 0.0]), 0.0, epsilon = 1e-15);
        assert_relative_eq!(m.f_sas([0.0, 5.4, 0.0]), 2.0, epsilon = 1e-15);
        let two = build_cavity(&[atom(0.0, 2.0), atom(2.0, 1.5)], p).unwrap();
        let mid = [1.0, 0.0, 0.0];
        let depth0 = 2.0 + 1.4 - 1.0;
        let depth1 = 1.5 + 1.4 - 1.0;
        assert_relative_eq!(two.f_sas(mid), -f64::max(depth0, depth1), epsilon = 1e-15);
    }

    #[test]
    fn xi_values() {
        assert_eq!(switching_xi(0.0).unwrap(), 0.0);
        assert_eq!(switching_xi(1.0).unwrap(), 1.0);
        assert_relative_eq!(switching_xi(0.5).unwrap(), 0.5, epsilon = 1e-15);
        let h = 1e-6;
        let fd = (switching_xi(0.25 + h).unwrap() - switching_xi(0.25 - h).unwrap()) / (2.0 * h);
        assert_relative_eq!(fd, 30.0 * 0.0625 * 0.5625, epsilon = 1e-8);
        assert!(switching_xi(1.1).is_err());
    }

    #[test]
    fn profiles() {
        let m = build_cavity(&[atom(0.0, 0.5)], params()).unwrap();
        assert_eq!(m.permittivity([0.0; 3]), 1.0);
        assert_eq!(m.ion_exclusion([0.0; 3]), 0.0);
        let p = m.params;
        let at = |f: f64| [0.5 + p.r_p + p.a + f, 0.0, 0.0];
        assert_relative_eq!(m.permittivity(at(-p.a - p.r_p / 2.0)), 5.5, epsilon = 1e-12);
        assert_relative_eq!(m.ion_exclusion(at(-p.r_p / 2.0)), 0.5, epsilon = 1e-12);
        assert_eq!(m.permittivity(at(0.1)), 10.0);
        assert_eq!(m.ion_exclusion(at(0.1)), 1.0);
    }

    #[test]
    fn partition_cases() {
        let p = CavityParams { r_p: 0.5, a: 0.0, r_0: 0.5, ..params() };
        let iso = build_cavity(&[atom(0.0, 1.0)], p).unwrap();
        let w = iso.partition_weights(0, [2.0, 0.0, 0.0]).unwrap();
        assert!(w.weights.is_empty() && w.chi_e == 1.0);
        assert!(iso.partition_weights(0, [1.0, 0.0, 0.0]).is_err());

        let pair = build_cavity(&[atom(0.0, 1.0), atom(1.0, 1.0)], p).unwrap();
        let w = pair.partition_weights(0, [2.0, 0.0, 0.0]).unwrap();
        assert_eq!(w.weights, vec![(1, 1.0)]);
        assert_eq!(w.chi_e, 0.0);

        let tri = build_cavity(
            &[atom(0.0, 1.0), Atom { center: [0.5, 0.5, 0.0], ..atom(0.0, 1.0) }, Atom { center: [0.5, -0.5, 0.0], ..atom(0.0, 1.0) }],
            p,
        )
        .unwrap();
        let w = tri.partition_weights(0, [2.0, 0.0, 0.0]).unwrap();
        assert_eq!(w.weights, vec![(1, 0.5), (2, 0.5)]);
    }

    #[test]
    fn tangent_spheres_do_not_couple() {
        let p = CavityParams { r_p: 0.5, a: 0.0, r_0: 0.5, ..params() };
        let pair = build_cavity(&[atom(0.0, 1.0), atom(4.0 - 1e-12, 1.0)], p).unwrap();
        let w = pair.partition_weights(0, [2.0, 0.0, 0.0]).unwrap();
        assert_eq!(w.chi_e, 1.0);
    }
}
