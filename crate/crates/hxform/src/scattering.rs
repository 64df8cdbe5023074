//! Dirac and Schrödinger systems in u = log a, Jost functions, scattering phase and zeros of ℬ.

use crate::discretize::{closed_phi, nystrom, KernelId, Sign};
use crate::quad::{composite, integrate_c, panels_for};
use crate::spectral::{chi, rep_kernel, spectral_point, SpectralPoint};
use crate::specfun::{exp_integral_e1, gamma_complex, ln_gamma_right};
use crate::{Complex, Error, Result};
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt::Write as _;

/// (V₊, V₋) = (μ² − μ′, μ² + μ′) with μ = 2eᵘ.
pub fn potentials(u: f64) -> (f64, f64) {
    let e = u.exp();
    (4.0 * e * e - 2.0 * e, 4.0 * e * e + 2.0 * e)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct OdeResidual {
    pub u: f64,
    pub gamma: Complex,
    pub residual_a: f64,
    pub residual_b: f64,
    pub step: f64,
}

fn crit(gamma: Complex) -> Complex {
    Complex::new(0.5, 0.0) + Complex::i() * gamma
}

fn stencil(a: f64, gamma: Complex, h: f64) -> Result<[SpectralPoint; 5]> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("a must be positive, got {a}")));
    }
    if !(h > 1e-5 && h <= 1e-2) {
        return Err(Error::AccuracyLoss { func: "finite difference step", estimate: h });
    }
    let u = a.ln();
    let s = crit(gamma);
    let mut pts = Vec::with_capacity(5);
    for k in -2..=2 {
        pts.push(spectral_point((u + k as f64 * h).exp(), s)?);
    }
    Ok([pts[0], pts[1], pts[2], pts[3], pts[4]])
}

fn d1(f: [Complex; 5], h: f64) -> Complex {
    (f[0] - f[1] * 8.0 + f[3] * 8.0 - f[4]) / (12.0 * h)
}

fn d2(f: [Complex; 5], h: f64) -> Complex {
    (-f[0] + f[1] * 16.0 - f[2] * 30.0 + f[3] * 16.0 - f[4]) / (12.0 * h * h)
}

/// Residuals of −y″ + V₊𝒜 − γ²𝒜 and −y″ + V₋ℬ − γ²ℬ, relative to max(|𝒜|, |ℬ|).
pub fn schrodinger_residual(a: f64, gamma: Complex, h: f64) -> Result<OdeResidual> {
    let p = stencil(a, gamma, h)?;
    let av = p.map(|q| q.A);
    let bv = p.map(|q| q.B);
    let u = a.ln();
    let (vp, vm) = potentials(u);
    let g2 = gamma * gamma;
    let norm = p[2].A.norm().max(p[2].B.norm());
    let ra = -d2(av, h) + av[2] * vp - g2 * av[2];
    let rb = -d2(bv, h) + bv[2] * vm - g2 * bv[2];
    Ok(OdeResidual { u, gamma, residual_a: ra.norm() / norm, residual_b: rb.norm() / norm, step: h })
}

/// Residuals of 𝒜′ = −μ𝒜 − γℬ and ℬ′ = μℬ + γ𝒜, relative to max(|𝒜|, |ℬ|).
pub fn dirac_residual(a: f64, gamma: Complex, h: f64) -> Result<OdeResidual> {
    let p = stencil(a, gamma, h)?;
    let av = p.map(|q| q.A);
    let bv = p.map(|q| q.B);
    let mu = 2.0 * a;
    let norm = p[2].A.norm().max(p[2].B.norm());
    let ra = d1(av, h) + av[2] * mu + gamma * bv[2];
    let rb = d1(bv, h) - bv[2] * mu - gamma * av[2];
    Ok(OdeResidual { u: a.ln(), gamma, residual_a: ra.norm() / norm, residual_b: rb.norm() / norm, step: h })
}

/// ∫₀^a φ_a^±(x) x^{−s} dx with x = a·e^{−v}.
fn phi_mellin(a: f64, sign: Sign, s: Complex) -> Result<Complex> {
    let one = Complex::new(1.0, 0.0);
    let decay = 1.0 - s.re;
    let v_max = 80.0_f64.min(45.0 / decay.max(1e-300)).max(0.0);
    if decay * v_max < 36.0 {
        return Err(Error::AccuracyLoss { func: "jost", estimate: (-decay * v_max).exp() });
    }
    let width = 0.5_f64.min(1.0 / s.im.abs().max(1e-300));
    let panels = panels_for(0.0, v_max, width);
    let ap = Complex::new(a, 0.0).powc(one - s);
    Ok(ap * integrate_c(|v| (-(one - s) * v).exp() * closed_phi(a, sign, a * (-v).exp()), 0.0, v_max, panels, 16))
}

/// (ĵ_a(s), k̂_a(s)) with ĵ = √a(a^{−s} − ∫φ⁺x^{−s}) and k̂ = i√a(a^{−s} + ∫φ⁻x^{−s}).
pub fn jost(a: f64, s: Complex) -> Result<(Complex, Complex)> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("a must be positive, got {a}")));
    }
    if s.re >= 1.0 {
        return Err(Error::AccuracyLoss { func: "jost", estimate: f64::INFINITY });
    }
    let ra = a.sqrt();
    let am = Complex::new(a, 0.0).powc(-s);
    let j = (am - phi_mellin(a, Sign::Plus, s)?) * ra;
    let k = Complex::i() * (am + phi_mellin(a, Sign::Minus, s)?) * ra;
    Ok((j, k))
}

/// (𝒜, ℬ) rebuilt from Jost functions at s and 1−s.
pub fn jost_ab(a: f64, s: Complex) -> Result<(Complex, Complex)> {
    let one = Complex::new(1.0, 0.0);
    let (j1, k1) = jost(a, s)?;
    let (j2, k2) = jost(a, one - s)?;
    let (g1, g2) = (gamma_complex(s)?, gamma_complex(one - s)?);
    Ok(((g1 * j1 + g2 * j2) * 0.5, (g1 * k1 - g2 * k2) * 0.5))
}

/// 𝒜_a(½) by three routes: K-Bessel, √π·det(1−H_a)/det(1+H_a) from Nyström, and √π·ĵ_a(½).
pub fn a_half_routes(a: f64, n: usize) -> Result<[f64; 3]> {
    let half = Complex::new(0.5, 0.0);
    let k = spectral_point(a, half)?.A.re;
    let op = nystrom(a, n, KernelId::Standard)?;
    let d = PI.sqrt() * op.det(Sign::Minus) / op.det(Sign::Plus);
    let j = PI.sqrt() * jost(a, half)?.0.re;
    Ok([k, d, j])
}

/// arg χ(½+iγ), continuous with phase(0) = 0.
pub fn phase(gamma: f64) -> f64 {
    let s = Complex::new(0.5, gamma);
    let t = Complex::new(0.5, -gamma);
    (ln_gamma_right(t) - ln_gamma_right(s)).im
}

/// ℬ_a(½+iγ), real on the critical line.
pub fn b_on_line(a: f64, gamma: f64) -> Result<f64> {
    Ok(spectral_point(a, Complex::new(0.5, gamma))?.B.re)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Zero {
    pub a: f64,
    pub gamma: f64,
    pub derivative: f64,
}

/// Real zeros of γ ↦ ℬ_a(½+iγ) in [lo, hi] by bracketing on a 0.05 grid and bisection.
pub fn find_b_zeros(a: f64, lo: f64, hi: f64) -> Result<Vec<Zero>> {
    if lo.abs() > 50.0 || hi.abs() > 50.0 || lo >= hi {
        return Err(Error::Bounds(format!("gamma range [{lo}, {hi}] must lie in [-50, 50]")));
    }
    let step = 0.05;
    let n = ((hi - lo) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| (lo + k as f64 * step).min(hi)).collect();
    let vals: Vec<f64> = grid.iter().map(|&g| b_on_line(a, g)).collect::<Result<_>>()?;
    let mut roots = Vec::new();
    for k in 0..grid.len() {
        if vals[k] == 0.0 {
            roots.push(grid[k]);
            continue;
        }
        if k + 1 < grid.len() && vals[k + 1] != 0.0 && vals[k].signum() != vals[k + 1].signum() {
            let (mut x0, mut x1, mut f0) = (grid[k], grid[k + 1], vals[k]);
            while x1 - x0 > 1e-11 {
                let m = 0.5 * (x0 + x1);
                let fm = b_on_line(a, m)?;
                if fm == 0.0 {
                    x0 = m;
                    x1 = m;
                    break;
                }
                if fm.signum() == f0.signum() {
                    x0 = m;
                    f0 = fm;
                } else {
                    x1 = m;
                }
            }
            roots.push(0.5 * (x0 + x1));
        }
    }
    let h = 1e-5;
    roots
        .into_iter()
        .map(|g| {
            let d = (b_on_line(a, g + h)? - b_on_line(a, g - h)?) / (2.0 * h);
            Ok(Zero { a, gamma: g, derivative: d })
        })
        .collect()
}

pub fn zeros_csv(zeros: &[Zero]) -> String {
    let mut out = String::from("a,gamma_root,derivative_at_root\n");
    for z in zeros {
        let _ = writeln!(out, "{},{:.15e},{:.15e}", z.a, z.gamma, z.derivative);
    }
    out
}

/// 2∫_{a₀}^{∞} (𝒜_b(s₁)𝒜_b(s₂) + ℬ_b(s₁)ℬ_b(s₂)) db/b for s_k = ½ + iγ_k, with upper limit where the
/// integrand is negligible.
pub fn pairing_integral(a0: f64, g1: f64, g2: f64) -> Result<Complex> {
    let (s1, s2) = (Complex::new(0.5, g1), Complex::new(0.5, g2));
    let hi = a0 + 11.0;
    let width = 0.05_f64.min(0.5 * a0 / (1.0 + g1.abs().max(g2.abs())));
    let panels = panels_for(a0, hi, width);
    let (bs, ws) = composite(a0, hi, panels, 10);
    let mut acc = Complex::new(0.0, 0.0);
    for (b, w) in bs.iter().zip(&ws) {
        let p1 = spectral_point(*b, s1)?;
        let p2 = spectral_point(*b, s2)?;
        acc += (p1.A * p2.A + p1.B * p2.B) * (w / b);
    }
    Ok(acc * 2.0)
}

/// (quadrature of the pairing, closed 𝒳_{a₀}(s̄₁, s₂), leading magnitude √(‖·‖₁‖·‖₂)).
pub fn orthogonality(a0: f64, g1: f64, g2: f64) -> Result<(Complex, Complex, f64)> {
    let (s1, s2) = (Complex::new(0.5, g1), Complex::new(0.5, g2));
    let q = pairing_integral(a0, g1, g2)?;
    let closed = rep_kernel(a0, s1.conj(), s2)?;
    let n1 = pairing_integral(a0, g1, g1)?.re;
    let n2 = pairing_integral(a0, g2, g2)?.re;
    Ok((q, closed, (n1 * n2).sqrt()))
}

/// (2π(E₁(4a) − E₁(4A)), quadrature of 2∫_a^A (𝒜(½)² + ℬ(½)²) db/b).
pub fn norm_difference(a: f64, big_a: f64) -> Result<(f64, f64)> {
    let closed = 2.0 * PI * (exp_integral_e1(4.0 * a)? - exp_integral_e1(4.0 * big_a)?);
    let half = Complex::new(0.5, 0.0);
    let panels = panels_for(a, big_a, 0.1);
    let (bs, ws) = composite(a, big_a, panels, 16);
    let mut acc = 0.0;
    for (b, w) in bs.iter().zip(&ws) {
        let p = spectral_point(*b, half)?;
        acc += (p.A.norm_sqr() + p.B.norm_sqr()) * w / b;
    }
    Ok((closed, 2.0 * acc))
}

/// Largest jump of phase on [lo, hi] with the given step.
pub fn max_phase_jump(lo: f64, hi: f64, step: f64) -> f64 {
    let n = ((hi - lo) / step).round() as usize;
    let mut prev = phase(lo);
    let mut worst: f64 = 0.0;
    for k in 1..=n {
        let p = phase(lo + k as f64 * step);
        worst = worst.max((p - prev).abs());
        prev = p;
    }
    worst
}

/// arg of χ(½+iγ) from the principal-branch χ value, for comparison with [`phase`].
pub fn phase_principal(gamma: f64) -> Result<f64> {
    Ok(chi(Complex::new(0.5, gamma))?.arg())
}
