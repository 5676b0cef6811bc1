//! Real spherical harmonics, modified spherical Bessel functions, Legendre
//! polynomials and the annulus radial basis.
//!
//! Harmonics are real, orthonormal on the unit sphere and carry no
//! Condon-Shortley phase:
//! `Y_l^m = sqrt(2) N_lm P_l^m(z) cos(m phi)` for `m > 0`,
//! `Y_l^m = sqrt(2) N_l|m| P_l^|m|(z) sin(|m| phi)` for `m < 0`.
//!
//! Bessel functions follow `i_0(x) = sinh(x)/x` and `k_0(x) = exp(-x)/x`, with
//! the recurrences `f_{l-1} - f_{l+1} = (2l+1)/x f_l` for `i` and
//! `k_{l+1} - k_{l-1} = (2l+1)/x k_l` for `k`. Values are produced in log form
//! internally so ratios stay finite for any argument.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Degree/order pair of a real spherical harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HarmonicIndex {
    pub l: usize,
    pub m: i64,
}

impl HarmonicIndex {
    pub fn new(l: usize, m: i64) -> Result<Self> {
        if m.unsigned_abs() as usize > l {
            return Err(Error::Domain(format!("|m|={} exceeds l={}", m.abs(), l)));
        }
        Ok(Self { l, m })
    }

    /// Flat index `l^2 + l + m`.
    pub fn flat(self) -> usize {
        ((self.l * self.l + self.l) as i64 + self.m) as usize
    }

    pub fn from_flat(p: usize) -> Self {
        let l = (p as f64).sqrt() as usize;
        let l = if (l + 1) * (l + 1) <= p { l + 1 } else if l * l > p { l - 1 } else { l };
        Self {
            l,
            m: p as i64 - (l * l + l) as i64,
        }
    }
}

/// Number of harmonics up to and including degree `lmax`.
pub fn n_harmonics(lmax: usize) -> usize {
    (lmax + 1) * (lmax + 1)
}

/// Degree of each flat harmonic index.
pub fn degrees(lmax: usize) -> Vec<usize> {
    (0..=lmax).flat_map(|l| std::iter::repeat_n(l, 2 * l + 1)).collect()
}

fn check_unit(s: [f64; 3]) -> Result<()> {
    let n = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!("direction has norm {n}, expected 1")));
    }
    Ok(())
}

/// Single real spherical harmonic at a unit vector.
pub fn sph_harm(idx: HarmonicIndex, s: [f64; 3]) -> Result<f64> {
    check_unit(s)?;
    Ok(sph_harm_all(idx.l, s)[idx.flat()])
}

// Normalisation sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!), times sqrt(2) for m > 0.
fn norm_factor(l: usize, m: usize) -> f64 {
    let mut ratio = 1.0;
    for k in (l - m + 1)..=(l + m) {
        ratio /= k as f64;
    }
    let base = ((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt();
    if m == 0 {
        base
    } else {
        base * 2f64.sqrt()
    }
}

// q[m][l] = d^m P_l / dz^m for m in 0..=mmax, l in 0..=lmax.
fn legendre_derivative_table(lmax: usize, mmax: usize, z: f64) -> Vec<Vec<f64>> {
    let mut q = vec![vec![0.0; lmax + 1]; mmax + 1];
    for (m, row) in q.iter_mut().enumerate() {
        if m > lmax {
            break;
        }
        let mut dfact = 1.0;
        for k in 1..=m {
            dfact *= (2 * k - 1) as f64;
        }
        row[m] = dfact;
        if m < lmax {
            row[m + 1] = z * (2 * m + 1) as f64 * dfact;
        }
        for l in (m + 2)..=lmax {
            row[l] = ((2 * l - 1) as f64 * z * row[l - 1] - (l + m - 1) as f64 * row[l - 2])
                / (l - m) as f64;
        }
    }
    q
}

/// All real harmonics up to `lmax` at `s`, ordered by flat index.
pub fn sph_harm_all(lmax: usize, s: [f64; 3]) -> Vec<f64> {
    let [x, y, z] = s;
    let q = legendre_derivative_table(lmax, lmax, z);
    let mut out = vec![0.0; n_harmonics(lmax)];
    let (mut re, mut im) = (1.0, 0.0);
    for m in 0..=lmax {
        if m > 0 {
            let nr = re * x - im * y;
            im = re * y + im * x;
            re = nr;
        }
        for l in m..=lmax {
            let c = norm_factor(l, m) * q[m][l];
            let base = l * l + l;
            if m == 0 {
                out[base] = c;
            } else {
                out[base + m] = c * re;
                out[base - m] = c * im;
            }
        }
    }
    out
}

/// Harmonics and their surface gradients at `s`.
pub fn sph_harm_grad_all(lmax: usize, s: [f64; 3]) -> (Vec<f64>, Vec<[f64; 3]>) {
    let [x, y, z] = s;
    let q = legendre_derivative_table(lmax, lmax + 1, z);
    let nb = n_harmonics(lmax);
    let mut val = vec![0.0; nb];
    let mut grad = vec![[0.0; 3]; nb];
    // powers (x+iy)^m as (re, im)
    let mut pw = vec![(1.0, 0.0); lmax + 1];
    for m in 1..=lmax {
        let (r, i) = pw[m - 1];
        pw[m] = (r * x - i * y, r * y + i * x);
    }
    let project = |g: [f64; 3]| {
        let d = g[0] * x + g[1] * y + g[2] * z;
        [g[0] - d * x, g[1] - d * y, g[2] - d * z]
    };
    for m in 0..=lmax {
        let (re, im) = pw[m];
        let (dre, dim) = if m > 0 {
            let (r, i) = pw[m - 1];
            (m as f64 * r, m as f64 * i)
        } else {
            (0.0, 0.0)
        };
        for l in m..=lmax {
            let c = norm_factor(l, m);
            let qv = q[m][l];
            let qd = if m < l { q[m + 1][l] } else { 0.0 };
            let base = l * l + l;
            if m == 0 {
                val[base] = c * qv;
                grad[base] = project([0.0, 0.0, c * qd]);
            } else {
                val[base + m] = c * qv * re;
                grad[base + m] = project([c * qv * dre, -c * qv * dim, c * qd * re]);
                val[base - m] = c * qv * im;
                grad[base - m] = project([c * qv * dim, c * qv * dre, c * qd * im]);
            }
        }
    }
    (val, grad)
}

/// Legendre polynomial `L_k(t)` and its derivative.
pub fn legendre(k: usize, t: f64) -> Result<(f64, f64)> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("Legendre argument {t} outside [-1,1]")));
    }
    let (v, d, _) = legendre_all(k, t);
    Ok((v[k], d[k]))
}

/// Values, first and second derivatives of `L_0..=L_kmax` at `t`.
pub fn legendre_all(kmax: usize, t: f64) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; kmax + 2];
    let mut d = vec![0.0; kmax + 2];
    let mut dd = vec![0.0; kmax + 2];
    v[0] = 1.0;
    v[1] = t;
    d[1] = 1.0;
    for k in 1..=kmax {
        v[k + 1] = ((2 * k + 1) as f64 * t * v[k] - k as f64 * v[k - 1]) / (k + 1) as f64;
        d[k + 1] = d[k - 1] + (2 * k + 1) as f64 * v[k];
        dd[k + 1] = dd[k - 1] + (2 * k + 1) as f64 * d[k];
    }
    v.truncate(kmax + 1);
    d.truncate(kmax + 1);
    dd.truncate(kmax + 1);
    (v, d, dd)
}

/// Radial basis function `(1-r) L_i'(2(r-delta)/(1-delta) - 1)` and its
/// derivative in `r`.
pub fn radial_basis(i: usize, delta: f64, r: f64) -> Result<(f64, f64)> {
    if i == 0 {
        return Err(Error::Domain("radial basis index starts at 1".into()));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Domain(format!("inner radius {delta} outside (0,1)")));
    }
    if r < delta || r > 1.0 {
        return Err(Error::Domain(format!("radius {r} outside [{delta}, 1]")));
    }
    let (v, d) = radial_basis_all(i, delta, r);
    Ok((v[i - 1], d[i - 1]))
}

/// `rho_1..=rho_n` and derivatives at `r`; no range checks.
pub fn radial_basis_all(n: usize, delta: f64, r: f64) -> (Vec<f64>, Vec<f64>) {
    let scale = 2.0 / (1.0 - delta);
    let t = (scale * (r - delta) - 1.0).clamp(-1.0, 1.0);
    let (_, d, dd) = legendre_all(n, t);
    let one_minus = 1.0 - r;
    let vals = (1..=n).map(|i| one_minus * d[i]).collect();
    let ders = (1..=n).map(|i| -d[i] + one_minus * dd[i] * scale).collect();
    (vals, ders)
}

// ln(sinh(x)/x) for x >= 0.
fn ln_i0(x: f64) -> f64 {
    if x < 1e-4 {
        let x2 = x * x;
        x2 / 6.0 - x2 * x2 / 180.0
    } else if x < 20.0 {
        (x.sinh() / x).ln()
    } else {
        x - (2.0 * x).ln() + (-(-2.0 * x).exp()).ln_1p()
    }
}

// Ratios r_l = i_l(x)/i_{l-1}(x) for l = 1..=lmax (index l), by backward
// recurrence of the continued fraction r_l = x / (2l+1 + x r_{l+1}).
fn i_ratios(lmax: usize, x: f64) -> Vec<f64> {
    let mut r = vec![0.0; lmax + 1];
    let start = lmax + 40 + (2.0 * x.min(1e5)) as usize;
    let mut next = 0.0;
    for l in (1..=start).rev() {
        let cur = x / ((2 * l + 1) as f64 + x * next);
        if l <= lmax {
            r[l] = cur;
        }
        next = cur;
    }
    r
}

// Ratios s_l = k_l(x)/k_{l-1}(x) for l = 1..=lmax (index l).
fn k_ratios(lmax: usize, x: f64) -> Vec<f64> {
    let mut s = vec![0.0; lmax + 1];
    if lmax >= 1 {
        s[1] = 1.0 + 1.0 / x;
    }
    for l in 1..lmax {
        s[l + 1] = 1.0 / s[l] + (2 * l + 1) as f64 / x;
    }
    s
}

/// `ln i_l(x)` for `l = 0..=lmax`, `x > 0`.
pub fn ln_bessel_i_all(lmax: usize, x: f64) -> Vec<f64> {
    let r = i_ratios(lmax, x);
    let mut out = vec![ln_i0(x); lmax + 1];
    for l in 1..=lmax {
        out[l] = out[l - 1] + r[l].ln();
    }
    out
}

/// `ln k_l(x)` for `l = 0..=lmax`, `x > 0`.
pub fn ln_bessel_k_all(lmax: usize, x: f64) -> Vec<f64> {
    let s = k_ratios(lmax, x);
    let mut out = vec![-x - x.ln(); lmax + 1];
    for l in 1..=lmax {
        out[l] = out[l - 1] + s[l].ln();
    }
    out
}

/// Logarithmic derivative `x i_l'(x) / i_l(x)`; equals `l` at `x = 0`.
pub fn i_dlog(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return l as f64;
    }
    let r = i_ratios(l + 1, x);
    if l == 0 {
        x * r[1]
    } else {
        x * (l as f64 / r[l] + (l + 1) as f64 * r[l + 1]) / (2 * l + 1) as f64
    }
}

/// Logarithmic derivative `x k_l'(x) / k_l(x)`; equals `-(l+1)` at `x = 0`.
pub fn k_dlog(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return -((l + 1) as f64);
    }
    let s = k_ratios(l + 1, x);
    if l == 0 {
        -x * s[1]
    } else {
        -x * (l as f64 / s[l] + (l + 1) as f64 * s[l + 1]) / (2 * l + 1) as f64
    }
}

/// `i_l(x)` and `i_l'(x)`.
pub fn bessel_i(l: usize, x: f64) -> Result<(f64, f64)> {
    if x < 0.0 || x.is_nan() {
        return Err(Error::Domain(format!("bessel_i argument {x} must be >= 0")));
    }
    if x == 0.0 {
        let v = if l == 0 { 1.0 } else { 0.0 };
        let d = if l == 1 { 1.0 / 3.0 } else { 0.0 };
        return Ok((v, d));
    }
    let v = ln_bessel_i_all(l, x)[l].exp();
    if !v.is_finite() {
        return Err(Error::Overflow(format!(
            "i_{l}({x}) exceeds f64 range; use log-scaled ratios"
        )));
    }
    Ok((v, v * i_dlog(l, x) / x))
}

/// `k_l(x)` and `k_l'(x)` under `k_0(x) = exp(-x)/x`.
pub fn bessel_k(l: usize, x: f64) -> Result<(f64, f64)> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::Domain(format!("bessel_k argument {x} must be > 0")));
    }
    let v = ln_bessel_k_all(l, x)[l].exp();
    if !v.is_finite() {
        return Err(Error::Overflow(format!("k_{l}({x}) exceeds f64 range")));
    }
    Ok((v, v * k_dlog(l, x) / x))
}

/// Radial profiles of the screened equation `-Δu + κ²u = 0` on a sphere of
/// radius `big_r`: interior `i_l(κr)/i_l(κR)` and exterior `k_l(κr)/k_l(κR)`,
/// with their `κ → 0` harmonic limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Screened {
    pub kappa: f64,
}

impl Screened {
    pub fn new(kappa: f64) -> Self {
        Self { kappa }
    }

    /// `i_l(κr)/i_l(κR)` for `l = 0..=lmax`.
    pub fn interior_ratios(&self, lmax: usize, r: f64, big_r: f64) -> Vec<f64> {
        if self.kappa == 0.0 || r == 0.0 {
            let t = r / big_r;
            if r == 0.0 && self.kappa > 0.0 {
                let mut out = vec![0.0; lmax + 1];
                out[0] = (-ln_i0(self.kappa * big_r)).exp();
                return out;
            }
            return (0..=lmax).map(|l| t.powi(l as i32)).collect();
        }
        let a = ln_bessel_i_all(lmax, self.kappa * r);
        let b = ln_bessel_i_all(lmax, self.kappa * big_r);
        a.iter().zip(&b).map(|(x, y)| (x - y).exp()).collect()
    }

    /// `k_l(κr)/k_l(κR)` for `l = 0..=lmax`, `r > 0`.
    pub fn exterior_ratios(&self, lmax: usize, r: f64, big_r: f64) -> Vec<f64> {
        if self.kappa == 0.0 {
            let t = big_r / r;
            return (0..=lmax).map(|l| t.powi(l as i32 + 1)).collect();
        }
        let a = ln_bessel_k_all(lmax, self.kappa * r);
        let b = ln_bessel_k_all(lmax, self.kappa * big_r);
        a.iter().zip(&b).map(|(x, y)| (x - y).exp()).collect()
    }

    /// `d/dr ln i_l(κr)` at `r = big_r`.
    pub fn interior_dlog(&self, l: usize, big_r: f64) -> f64 {
        i_dlog(l, self.kappa * big_r) / big_r
    }

    /// `d/dr ln k_l(κr)` at `r = big_r`.
    pub fn exterior_dlog(&self, l: usize, big_r: f64) -> f64 {
        k_dlog(l, self.kappa * big_r) / big_r
    }

    /// Single-layer eigenvalue `1/(d/dr ln i_l - d/dr ln k_l)` at `R`;
    /// tends to `R/(2l+1)` as `κ → 0`.
    pub fn single_layer(&self, l: usize, big_r: f64) -> f64 {
        1.0 / (self.interior_dlog(l, big_r) - self.exterior_dlog(l, big_r))
    }
}

/// `sinh(phi)/phi`, even and at least one.
pub fn sinh_ratio(phi: f64) -> Result<f64> {
    if phi.is_nan() {
        return Err(Error::Divergence("potential is NaN".into()));
    }
    let a = phi.abs();
    if a > 700.0 {
        return Err(Error::Overflow(format!("|potential| = {a} exceeds 700")));
    }
    if a < 1e-3 {
        let x2 = a * a;
        return Ok(1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0)));
    }
    Ok(a.sinh() / a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn flat_index_roundtrip() {
        for p in 0..400 {
            assert_eq!(HarmonicIndex::from_flat(p).flat(), p);
        }
        assert!(HarmonicIndex::new(1, 2).is_err());
    }

    #[test]
    fn low_order_harmonics() {
        let y00 = sph_harm(HarmonicIndex { l: 0, m: 0 }, [0.6, 0.0, 0.8]).unwrap();
        assert_relative_eq!(y00, 0.5 / PI.sqrt(), epsilon = 1e-15);
        let y10 = sph_harm(HarmonicIndex { l: 1, m: 0 }, [0.0, 0.0, 1.0]).unwrap();
        assert_relative_eq!(y10, (3.0 / (4.0 * PI)).sqrt(), epsilon = 1e-15);
        assert!(sph_harm(HarmonicIndex { l: 0, m: 0 }, [1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn harmonics_match_closed_forms() {
        let s = [0.48, -0.6, 0.64];
        let y = sph_harm_all(2, s);
        let c1 = (3.0 / (4.0 * PI)).sqrt();
        assert_relative_eq!(y[3], c1 * s[0], epsilon = 1e-14);
        assert_relative_eq!(y[1], c1 * s[1], epsilon = 1e-14);
        let c2 = 0.5 * (15.0 / PI).sqrt();
        assert_relative_eq!(y[4], c2 * s[0] * s[1], epsilon = 1e-14);
        assert_relative_eq!(y[7], c2 * s[0] * s[2], epsilon = 1e-14);
        assert_relative_eq!(y[8], 0.5 * c2 * (s[0] * s[0] - s[1] * s[1]), epsilon = 1e-14);
    }

    #[test]
    fn surface_gradient_matches_finite_difference() {
        let s = [0.3f64, -0.5, 0.8];
        let n = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
        let s = [s[0] / n, s[1] / n, s[2] / n];
        let lmax = 6;
        let (_, g) = sph_harm_grad_all(lmax, s);
        let t1 = {
            let a = [s[1], -s[0], 0.0];
            let n = (a[0] * a[0] + a[1] * a[1]).sqrt();
            [a[0] / n, a[1] / n, 0.0]
        };
        let h = 1e-6;
        let along = |t: f64| {
            let p = [s[0] + t * t1[0], s[1] + t * t1[1], s[2] + t * t1[2]];
            let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            sph_harm_all(lmax, [p[0] / n, p[1] / n, p[2] / n])
        };
        let (yp, ym) = (along(h), along(-h));
        for p in 0..n_harmonics(lmax) {
            let fd = (yp[p] - ym[p]) / (2.0 * h);
            let an = g[p][0] * t1[0] + g[p][1] * t1[1] + g[p][2] * t1[2];
            assert!((fd - an).abs() < 1e-6 * (1.0 + an.abs()), "p={p}: {fd} vs {an}");
        }
    }

    #[test]
    fn bessel_closed_forms() {
        let (i0, _) = bessel_i(0, 1.0).unwrap();
        assert_relative_eq!(i0, 1f64.sinh(), epsilon = 1e-14);
        let (i1, _) = bessel_i(1, 1.0).unwrap();
        assert_relative_eq!(i1, 1f64.cosh() - 1f64.sinh(), epsilon = 1e-14);
        let (k0, _) = bessel_k(0, 1.0).unwrap();
        assert_relative_eq!(k0, (-1f64).exp(), epsilon = 1e-15);
        let ratio = bessel_k(0, 2.0).unwrap().0 / k0;
        assert_relative_eq!(ratio, (-1f64).exp() / 2.0, epsilon = 1e-14);
        assert_eq!(bessel_i(0, 0.0).unwrap().0, 1.0);
        assert_eq!(bessel_i(3, 0.0).unwrap().0, 0.0);
        assert!(bessel_k(0, 0.0).is_err());
        assert!(matches!(bessel_i(2, 800.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn bessel_derivatives_match_finite_differences() {
        for &x in &[0.05f64, 0.5, 1.0, 3.0, 12.0, 40.0] {
            for l in 0..8 {
                let h = 1e-6 * x.max(1.0);
                let (_, di) = bessel_i(l, x).unwrap();
                let fi = (bessel_i(l, x + h).unwrap().0 - bessel_i(l, x - h).unwrap().0) / (2.0 * h);
                assert!((di - fi).abs() <= 1e-5 * di.abs().max(1e-300), "i l={l} x={x}");
                let (_, dk) = bessel_k(l, x).unwrap();
                let fk = (bessel_k(l, x + h).unwrap().0 - bessel_k(l, x - h).unwrap().0) / (2.0 * h);
                assert!((dk - fk).abs() <= 1e-5 * dk.abs(), "k l={l} x={x}");
            }
        }
    }

    #[test]
    fn bessel_recurrences_hold() {
        let x = 2.7;
        let i: Vec<f64> = (0..10).map(|l| bessel_i(l, x).unwrap().0).collect();
        let k: Vec<f64> = (0..10).map(|l| bessel_k(l, x).unwrap().0).collect();
        for l in 1..9 {
            let c = (2 * l + 1) as f64 / x;
            assert_relative_eq!(i[l - 1] - i[l + 1], c * i[l], max_relative = 1e-12);
            assert_relative_eq!(k[l + 1] - k[l - 1], c * k[l], max_relative = 1e-12);
        }
    }

    #[test]
    fn interior_ratio_against_series() {
        // i_l(x) = x^l/(2l+1)!! sum_k (x^2/2)^k / (k! (2l+2k+1)!!/(2l+1)!!)
        fn series(l: usize, x: f64) -> f64 {
            let mut df = 1.0;
            for k in 1..=l {
                df *= (2 * k + 1) as f64;
            }
            let mut term = x.powi(l as i32) / df;
            let mut sum = term;
            for k in 1..60 {
                term *= x * x / (2.0 * k as f64 * (2 * l + 2 * k + 1) as f64);
                sum += term;
            }
            sum
        }
        let sc = Screened::new(1.0);
        let ratios = sc.interior_ratios(8, 1.0, 2.0);
        let mut prev = f64::INFINITY;
        for l in 0..=8 {
            assert_relative_eq!(ratios[l], series(l, 1.0) / series(l, 2.0), max_relative = 1e-12);
            assert!(ratios[l] > 0.0 && ratios[l] < 1.0 && ratios[l] < prev);
            prev = ratios[l];
        }
    }

    #[test]
    fn single_layer_positive_and_harmonic_limit() {
        for &big_r in &[0.5, 1.0, 3.0] {
            for l in 0..=6 {
                assert!(Screened::new(1.0).single_layer(l, big_r) > 0.0);
                let c0 = Screened::new(0.0).single_layer(l, big_r);
                assert_relative_eq!(c0, big_r / (2 * l + 1) as f64, max_relative = 1e-14);
                let c_small = Screened::new(1e-7).single_layer(l, big_r);
                assert_relative_eq!(c_small, c0, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn screened_ratios_have_harmonic_limits() {
        let tiny = Screened::new(1e-9);
        let zero = Screened::new(0.0);
        let a = tiny.interior_ratios(6, 0.7, 2.0);
        let b = zero.interior_ratios(6, 0.7, 2.0);
        let c = tiny.exterior_ratios(6, 3.0, 2.0);
        let d = zero.exterior_ratios(6, 3.0, 2.0);
        for l in 0..=6 {
            assert_relative_eq!(a[l], b[l], max_relative = 1e-9);
            assert_relative_eq!(c[l], d[l], max_relative = 1e-9);
        }
        let big = Screened::new(1.0).interior_ratios(4, 900.0, 1000.0);
        assert!(big.iter().all(|v| v.is_finite() && *v > 0.0));
    }

    #[test]
    fn legendre_values() {
        assert_relative_eq!(legendre(2, 0.5).unwrap().0, -0.125, epsilon = 1e-15);
        for k in 0..=20 {
            assert_relative_eq!(legendre(k, 1.0).unwrap().0, 1.0, epsilon = 1e-13);
            let (_, d) = legendre(k, 1.0).unwrap();
            assert_relative_eq!(d, (k * (k + 1)) as f64 / 2.0, max_relative = 1e-13);
        }
        assert!(legendre(1, 1.5).is_err());
    }

    #[test]
    fn radial_basis_properties() {
        let delta = 0.3;
        for i in 1..=8 {
            assert_eq!(radial_basis(i, delta, 1.0).unwrap().0, 0.0);
        }
        assert_relative_eq!(radial_basis(1, delta, delta).unwrap().0, 1.0 - delta, epsilon = 1e-15);
        let mid = 0.5 * (1.0 + delta);
        let h = 1e-6;
        for i in 1..=8 {
            let (_, d) = radial_basis(i, delta, mid).unwrap();
            let fd = (radial_basis(i, delta, mid + h).unwrap().0
                - radial_basis(i, delta, mid - h).unwrap().0)
                / (2.0 * h);
            assert!((d - fd).abs() < 1e-8 * (1.0 + d.abs()), "i={i}");
        }
        assert!(radial_basis(1, delta, 0.1).is_err());
    }

    #[test]
    fn sinh_ratio_values() {
        assert_eq!(sinh_ratio(0.0).unwrap(), 1.0);
        assert_relative_eq!(sinh_ratio(1.0).unwrap(), 1f64.sinh(), epsilon = 1e-15);
        assert_eq!(sinh_ratio(1e-8).unwrap(), 1.0 + 1e-16 / 6.0);
        assert_eq!(sinh_ratio(-2.5).unwrap(), sinh_ratio(2.5).unwrap());
        assert!(sinh_ratio(701.0).is_err());
    }
}
