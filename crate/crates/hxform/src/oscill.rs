//! Semi-infinite oscillatory integrals.
//!
//! A tail ∫_T^∞ F(u) du is split by the caller into pieces G_k(u) ~ e^{iω_k u}·(slowly varying),
//! each analytic near the ray. Pieces with ω > 0 are integrated up the ray T + it,
//! pieces with ω < 0 down the ray T − it, and ω = 0 pieces along the real axis.

use crate::quad::gauss_legendre;
use crate::specfun::{hankel1_asym, hankel2_asym, hankel_asym_envelope};
use crate::Complex;

pub struct Wave<'a> {
    pub freq: f64,
    pub f: Box<dyn Fn(Complex) -> Complex + 'a>,
}

impl<'a> Wave<'a> {
    pub fn new<F: Fn(Complex) -> Complex + 'a>(freq: f64, f: F) -> Self {
        Wave { freq, f: Box::new(f) }
    }
}

const ORDER: usize = 20;

/// ∫_T^∞ Σ_k G_k(u) du.
pub fn tail(t0: f64, waves: &[Wave]) -> Complex {
    waves.iter().map(|w| tail_one(t0, w)).sum()
}

fn tail_one(t0: f64, w: &Wave) -> Complex {
    let rule = gauss_legendre(ORDER);
    let mut sum = Complex::new(0.0, 0.0);
    if w.freq == 0.0 {
        // u = T/σ², σ ∈ (0, 1]
        let panels = 24;
        let h = 1.0 / panels as f64;
        for p in 0..panels {
            let mid = h * (p as f64 + 0.5);
            for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
                let sg = mid + 0.5 * h * t;
                let u = t0 / (sg * sg);
                let jac = 2.0 * t0 / (sg * sg * sg);
                sum += (w.f)(Complex::new(u, 0.0)) * (jac * wt * 0.5 * h);
            }
        }
        return sum;
    }
    let dir = w.freq.signum();
    let om = w.freq.abs();
    let len = 45.0 / om;
    // panels grow with distance; the integrand is smooth on the scale of |u|
    let base = (1.0 / om).min(0.25 * t0.max(1.0));
    let mut lo = 0.0;
    while lo < len {
        let h = (base.max(0.25 * lo)).min(1.0 / om).min(len - lo);
        let mid = lo + 0.5 * h;
        for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
            let s = mid + 0.5 * h * t;
            let u = Complex::new(t0, dir * s);
            sum += (w.f)(u) * (wt * 0.5 * h);
        }
        lo += h;
    }
    sum * Complex::new(0.0, dir)
}

/// The two Hankel halves of J_ν(cu) = ½(H¹ + H²) as (H¹(cu)/2, H²(cu)/2).
pub fn j_halves(nu: u32, c: f64, u: Complex) -> (Complex, Complex) {
    let z = u * c;
    (hankel1_asym(nu, z) * 0.5, hankel2_asym(nu, z) * 0.5)
}

/// Waves for ∫_T^∞ J_ν(c·u)·g(u) du, g analytic and slowly varying.
pub fn bessel_waves<'a, G>(nu: u32, c: f64, g: G) -> Vec<Wave<'a>>
where
    G: Fn(Complex) -> Complex + Clone + 'a,
{
    let g2 = g.clone();
    vec![
        Wave::new(c, move |u| hankel1_asym(nu, u * c) * 0.5 * g(u)),
        Wave::new(-c, move |u| hankel2_asym(nu, u * c) * 0.5 * g2(u)),
    ]
}

/// Waves for ∫_T^∞ J_μ(φ₁(u))·J_ν(φ₂(u))·g(u) du where φᵢ(u) ≈ cᵢu for large u.
pub fn bessel_pair_waves<'a, P1, P2, G>(
    mu: u32,
    c1: f64,
    phi1: P1,
    nu: u32,
    c2: f64,
    phi2: P2,
    g: G,
) -> Vec<Wave<'a>>
where
    P1: Fn(Complex) -> Complex + Clone + 'a,
    P2: Fn(Complex) -> Complex + Clone + 'a,
    G: Fn(Complex) -> Complex + Clone + 'a,
{
    let mut out = Vec::with_capacity(4);
    for (s1, s2) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        let (p1, p2, gg) = (phi1.clone(), phi2.clone(), g.clone());
        let freq = s1 * c1 + s2 * c2;
        let freq = if freq.abs() < 1e-12 { 0.0 } else { freq };
        out.push(Wave::new(freq, move |u| {
            // combine the exponentials first: each alone can overflow when c₁ ≈ c₂
            let (z1, z2) = (p1(u), p2(u));
            let env = hankel_asym_envelope(mu, z1, s1) * hankel_asym_envelope(nu, z2, s2);
            env * (Complex::i() * (z1 * s1 + z2 * s2)).exp() * 0.25 * gg(u)
        }));
    }
    out
}

/// √(u² + d) = u·√(1 + d/u²), continuous for large |u| in the right half-plane.
pub fn sqrt_shift(u: Complex, d: f64) -> Complex {
    u * (Complex::new(1.0, 0.0) + d / (u * u)).sqrt()
}

/// Smallest T ≥ t_min with c·T ≥ 35.
pub fn tail_start(c: f64, t_min: f64) -> f64 {
    (35.0 / c).max(t_min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;
    use crate::specfun::j0;

    #[test]
    fn j0_integral_is_one() {
        // ∫₀^∞ J₀(u) du = 1
        let t = 40.0;
        let head = integrate(j0, 0.0, t, 40, 20);
        let w = bessel_waves(0, 1.0, |_| Complex::new(1.0, 0.0));
        let v = head + tail(t, &w).re;
        assert!((v - 1.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn weber_sonine() {
        // ∫₀^∞ J₁(u)J₁(2u)/u du = 1/4
        use crate::specfun::j1;
        let t = 40.0;
        let head = integrate(|u| j1(u) * j1(2.0 * u) / u, 0.0, t, 60, 20);
        let w = bessel_pair_waves(1, 1.0, |u| u, 1, 2.0, |u| u * 2.0, |u| u.inv());
        let v = head + tail(t, &w).re;
        assert!((v - 0.25).abs() < 1e-11, "{v}");
    }
}
