//! Lebedev spherical rules, Legendre-Gauss-Lobatto rules and the composite
//! annulus rule built from both.

mod lebedev_data;

use crate::error::{Error, Result};
use crate::specfun::legendre_all;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OrbitKind {
    A1,
    A2,
    A3,
    B,
    C,
    D,
}

/// Quadrature on the unit sphere with weights summing to `4π`.
#[derive(Debug, Clone, PartialEq)]
pub struct LebedevRule {
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
    /// Highest polynomial degree integrated exactly.
    pub order: usize,
}

impl LebedevRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Point counts with an embedded Lebedev rule.
pub fn lebedev_sizes() -> Vec<usize> {
    lebedev_data::RULES.iter().map(|r| r.0).collect()
}

fn signs(v: [f64; 3]) -> Vec<[f64; 3]> {
    let mut out = Vec::with_capacity(8);
    for sx in [1.0, -1.0] {
        if sx < 0.0 && v[0] == 0.0 {
            continue;
        }
        for sy in [1.0, -1.0] {
            if sy < 0.0 && v[1] == 0.0 {
                continue;
            }
            for sz in [1.0, -1.0] {
                if sz < 0.0 && v[2] == 0.0 {
                    continue;
                }
                out.push([sx * v[0], sy * v[1], sz * v[2]]);
            }
        }
    }
    out
}

fn expand(kind: OrbitKind, u: f64, v: f64) -> Vec<[f64; 3]> {
    let perms3 = |a: f64, b: f64, c: f64| -> Vec<[f64; 3]> {
        vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
    };
    let bases: Vec<[f64; 3]> = match kind {
        OrbitKind::A1 => vec![[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        OrbitKind::A2 => {
            let a = 0.5f64.sqrt();
            vec![[0.0, a, a], [a, 0.0, a], [a, a, 0.0]]
        }
        OrbitKind::A3 => {
            let a = (1.0f64 / 3.0).sqrt();
            vec![[a, a, a]]
        }
        OrbitKind::B => vec![[u, u, v], [u, v, u], [v, u, u]],
        OrbitKind::C => perms3(u, v, 0.0),
        OrbitKind::D => {
            let w = (1.0 - u * u - v * v).max(0.0).sqrt();
            perms3(u, v, w)
        }
    };
    let mut pts: Vec<[f64; 3]> = bases.into_iter().flat_map(signs).collect();
    pts.dedup();
    pts
}

/// Embedded Lebedev rule with `n_points` nodes.
pub fn lebedev(n_points: usize) -> Result<LebedevRule> {
    let (_, order, gens) = lebedev_data::RULES
        .iter()
        .find(|r| r.0 == n_points)
        .ok_or_else(|| Error::UnsupportedLebedev {
            requested: n_points,
            supported: lebedev_sizes(),
        })?;
    let mut points = Vec::with_capacity(n_points);
    let mut weights = Vec::with_capacity(n_points);
    for &(kind, u, v, w) in gens.iter() {
        for p in expand(kind, u, v) {
            let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            points.push([p[0] / n, p[1] / n, p[2] / n]);
            weights.push(w);
        }
    }
    debug_assert_eq!(points.len(), n_points);
    let total: f64 = weights.iter().sum();
    let scale = 4.0 * PI / total;
    weights.iter_mut().for_each(|w| *w *= scale);
    Ok(LebedevRule {
        points,
        weights,
        order: *order,
    })
}

/// Legendre-Gauss-Lobatto rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LglRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl LglRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// `n`-point Legendre-Gauss-Lobatto rule, exact to degree `2n-3`.
pub fn lgl(n: usize) -> Result<LglRule> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("LGL rule needs n >= 2, got {n}")));
    }
    let deg = n - 1;
    let mut nodes = vec![0.0; n];
    nodes[0] = -1.0;
    nodes[n - 1] = 1.0;
    // Interior nodes: roots of L'_{n-1}, found by Newton from Chebyshev points.
    for j in 1..n - 1 {
        let mut x = -(PI * j as f64 / deg as f64).cos();
        for _ in 0..100 {
            let (v, d, _) = legendre_all(deg, x);
            // (1-x^2) L'' = 2x L' - k(k+1) L
            let dd = (2.0 * x * d[deg] - (deg * (deg + 1)) as f64 * v[deg]) / (1.0 - x * x);
            let step = d[deg] / dd;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[j] = x;
    }
    // Enforce exact symmetry.
    for j in 0..n / 2 {
        let a = 0.5 * (nodes[n - 1 - j] - nodes[j]);
        nodes[j] = -a;
        nodes[n - 1 - j] = a;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let c = 2.0 / (n * deg) as f64;
    let weights = nodes
        .iter()
        .map(|&x| {
            let (v, _, _) = legendre_all(deg, x);
            c / (v[deg] * v[deg])
        })
        .collect();
    Ok(LglRule { nodes, weights })
}

/// Tensor-product rule on the annulus `δ ≤ r ≤ 1`, with the `r²` Jacobian and
/// the affine factor folded into `radial_weights`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnulusRule {
    pub delta: f64,
    pub radii: Vec<f64>,
    pub radial_weights: Vec<f64>,
}

impl AnnulusRule {
    pub fn new(delta: f64, lgl: &LglRule) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::Domain(format!("inner radius {delta} outside (0,1)")));
        }
        let half = 0.5 * (1.0 - delta);
        let radii: Vec<f64> = lgl.nodes.iter().map(|t| delta + half * (t + 1.0)).collect();
        let radial_weights = radii
            .iter()
            .zip(&lgl.weights)
            .map(|(r, w)| half * w * r * r)
            .collect();
        Ok(Self {
            delta,
            radii,
            radial_weights,
        })
    }
}

/// `((1-δ)/2) Σ_m Σ_n ω_m ω_n r_m² h(r_m, s_n)`.
pub fn annulus_integrate<F>(h: F, delta: f64, leb: &LebedevRule, lgl: &LglRule) -> Result<f64>
where
    F: Fn(f64, [f64; 3]) -> Result<f64>,
{
    let rule = AnnulusRule::new(delta, lgl)?;
    let mut total = 0.0;
    for (r, wr) in rule.radii.iter().zip(&rule.radial_weights) {
        let mut shell = 0.0;
        for (s, ws) in leb.points.iter().zip(&leb.weights) {
            shell += ws * h(*r, *s)?;
        }
        total += wr * shell;
    }
    Ok(total)
}
