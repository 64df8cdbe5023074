//! Isometric expansion k ↔ (f, g), the ψ-map, the Laguerre route and elements of K_a.

use crate::oscill::{sqrt_shift, tail, Wave};
use crate::quad::{composite, gauss_legendre, integrate, panels_for};
use crate::specfun::{hankel1_asym, hankel2_asym, i0_entire, i1_entire, laguerre_all};
use crate::{Complex, Error, Result};
use std::fmt::Write as _;

const PANEL: f64 = 0.5;
const ORDER: usize = 16;

/// Piecewise polynomial interpolant through Gauss nodes on equal panels of [lo, hi].
#[derive(Debug, Clone)]
pub struct PanelFn {
    pub lo: f64,
    pub hi: f64,
    pub panels: usize,
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub values: Vec<f64>,
    bary: Vec<f64>,
}

impl PanelFn {
    /// Same panels, new node values.
    pub fn with_values(&self, values: Vec<f64>) -> PanelFn {
        PanelFn { values, ..self.clone() }
    }

    pub fn sample<F: FnMut(f64) -> f64>(lo: f64, hi: f64, width: f64, order: usize, mut f: F) -> PanelFn {
        let panels = panels_for(lo, hi, width);
        let (nodes, weights) = composite(lo, hi, panels, order);
        let values = nodes.iter().map(|&x| f(x)).collect();
        let rule = gauss_legendre(order);
        let bary = (0..order)
            .map(|j| {
                let xj = rule.nodes[j];
                1.0 / (0..order).filter(|&k| k != j).map(|k| xj - rule.nodes[k]).product::<f64>()
            })
            .collect();
        PanelFn { lo, hi, panels, order, nodes, weights, values, bary }
    }

    pub fn zero(lo: f64, hi: f64) -> PanelFn {
        PanelFn::sample(lo, hi, PANEL, ORDER, |_| 0.0)
    }

    /// Value at x; zero outside [lo, hi].
    pub fn eval(&self, x: f64) -> f64 {
        if x < self.lo || x > self.hi {
            return 0.0;
        }
        let h = (self.hi - self.lo) / self.panels as f64;
        let p = (((x - self.lo) / h) as usize).min(self.panels - 1);
        let t = 2.0 * (x - self.lo - (p as f64 + 0.5) * h) / h;
        let rule = gauss_legendre(self.order);
        let vals = &self.values[p * self.order..(p + 1) * self.order];
        let (mut num, mut den) = (0.0, 0.0);
        for j in 0..self.order {
            let d = t - rule.nodes[j];
            if d == 0.0 {
                return vals[j];
            }
            let c = self.bary[j] / d;
            num += c * vals[j];
            den += c;
        }
        num / den
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.iter().zip(&self.weights).map(|(v, w)| w * v * v).sum()
    }

    pub fn sup(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// (f, g) on (0, 2B).
#[derive(Debug, Clone)]
pub struct ExpansionPair {
    pub f: PanelFn,
    pub g: PanelFn,
}

impl ExpansionPair {
    pub fn norm_sq(&self) -> f64 {
        self.f.norm_sq() + self.g.norm_sq()
    }

    pub fn negate_g(&self) -> ExpansionPair {
        let mut g = self.g.clone();
        g.values.iter_mut().for_each(|v| *v = -*v);
        ExpansionPair { f: self.f.clone(), g }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("y,f_re,g_re\n");
        for ((y, f), g) in self.f.nodes.iter().zip(&self.f.values).zip(&self.g.values) {
            let _ = writeln!(out, "{y:.17e},{f:.17e},{g:.17e}");
        }
        out
    }
}

/// J₀(v) and y·J₁(v)/v with v² = y(2x − y); both entire in x and y.
fn kernels(x: f64, y: f64) -> (f64, f64) {
    let z = -y * (2.0 * x - y) / 4.0;
    (i0_entire(z), 0.5 * y * i1_entire(z))
}

/// Forward map for k negligible beyond `b`.
pub fn forward<K: Fn(f64) -> f64>(k: K, b: f64) -> Result<ExpansionPair> {
    if !(b > 0.0) {
        return Err(Error::Support(format!("support bound must be positive, got {b}")));
    }
    let edge = k(b).abs().max(k(0.999 * b).abs());
    if edge > 1e-10 {
        return Err(Error::Support(format!("k not negligible at B={b}: |k|={edge:.3e}")));
    }
    let np = panels_for(0.0, b, 0.25);
    let hp = b / np as f64;
    let (xs, ws) = composite(0.0, b, np, 20);
    let kv: Vec<f64> = xs.iter().map(|&x| k(x)).collect();
    let mut gv = Vec::new();
    let f = PanelFn::sample(0.0, 2.0 * b, PANEL, ORDER, |y| {
        let lo = 0.5 * y;
        let (mut s0, mut s1) = (0.0, 0.0);
        // partial first panel handled separately so the lower limit is exact
        let first = xs.partition_point(|&x| x < lo);
        let cut = ((lo / hp).ceil() * hp).min(b);
        if cut > lo {
            let (p0, p1) = integrate_pair(|x| k(x), y, lo, cut);
            s0 += p0;
            s1 += p1;
        }
        for i in first..xs.len() {
            if xs[i] < cut {
                continue;
            }
            let (j0v, j1v) = kernels(xs[i], y);
            s0 += ws[i] * j0v * kv[i];
            s1 += ws[i] * j1v * kv[i];
        }
        let half = 0.5 * k(0.5 * y);
        gv.push(half - 0.5 * (s0 + s1));
        half + 0.5 * (s0 - s1)
    });
    let mut g = f.clone();
    g.values = gv;
    Ok(ExpansionPair { f, g })
}

fn integrate_pair<K: Fn(f64) -> f64>(k: K, y: f64, lo: f64, hi: f64) -> (f64, f64) {
    let (xs, ws) = composite(lo, hi, 1, 20);
    xs.iter().zip(&ws).fold((0.0, 0.0), |(a, b), (&x, &w)| {
        let (j0v, j1v) = kernels(x, y);
        let kv = k(x);
        (a + w * j0v * kv, b + w * j1v * kv)
    })
}

fn half_transform(f: &PanelFn, x: f64, sign: f64) -> f64 {
    let hi = 2.0 * x;
    if hi <= 0.0 {
        return 0.0;
    }
    integrate(
        |y| {
            let (j0v, j1v) = kernels(x, y);
            (j0v + sign * j1v) * f.eval(y)
        },
        0.0,
        hi,
        panels_for(0.0, hi, 0.25),
        20,
    )
}

/// k(x) = ψ(f)(x) + w·ψ(g)(x).
pub fn inverse_at(pair: &ExpansionPair, x: f64) -> f64 {
    psi_at(&pair.f, x) + pair.g.eval(2.0 * x) - 0.5 * half_transform(&pair.g, x, 1.0)
}

pub fn inverse(pair: &ExpansionPair, xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|&x| inverse_at(pair, x)).collect()
}

/// ψ(f)(x) = (1 + d/dx)·½∫₀^{2x} J₀(√(y(2x−y)))f(y) dy, derivative expanded.
pub fn psi_at(f: &PanelFn, x: f64) -> f64 {
    f.eval(2.0 * x) + 0.5 * half_transform(f, x, -1.0)
}

/// ψ(f) sampled on (0, B) with B half the extent of f.
pub fn psi_map(f: &PanelFn) -> PanelFn {
    PanelFn::sample(0.0, 0.5 * f.hi, PANEL, ORDER, |x| psi_at(f, x))
}

/// Leftmost point where |v| exceeds `thresh` on the sample nodes.
pub fn support_start(f: &PanelFn, thresh: f64) -> f64 {
    f.nodes.iter().zip(&f.values).find(|(_, v)| v.abs() > thresh).map(|(x, _)| *x).unwrap_or(f.hi)
}

/// kₙ(x) = Lₙ(2x)e^{−x}.
pub fn laguerre_fn(n: usize, x: f64) -> f64 {
    laguerre_all(n, 2.0 * x)[n] * (-x).exp()
}

#[derive(Debug, Clone)]
pub struct LaguerreResult {
    pub pair: ExpansionPair,
    pub coeffs: Vec<f64>,
    /// 2‖k‖² − Σ|cₙ|².
    pub tail: f64,
    pub truncated: bool,
}

/// cₙ = 2∫k·kₙ, f = Σc₂ₙkₙ, g = Σc₂ₙ₊₁kₙ.
pub fn laguerre_oracle<K: Fn(f64) -> f64>(k: K, b: f64, n_max: usize) -> Result<LaguerreResult> {
    if n_max > 200 {
        return Err(Error::Bounds(format!("N={n_max} exceeds 200")));
    }
    let (xs, ws) = composite(0.0, b, panels_for(0.0, b, 0.1), 20);
    let mut coeffs = vec![0.0; n_max + 1];
    let mut norm = 0.0;
    for (&x, &w) in xs.iter().zip(&ws) {
        let kv = k(x);
        norm += w * kv * kv;
        let ls = laguerre_all(n_max, 2.0 * x);
        let e = 2.0 * w * kv * (-x).exp();
        for (c, l) in coeffs.iter_mut().zip(&ls) {
            *c += e * l;
        }
    }
    let tail = 2.0 * norm - coeffs.iter().map(|c| c * c).sum::<f64>();
    let series = |parity: usize, y: f64| {
        let m = n_max / 2 + 1;
        let ls = laguerre_all(m, 2.0 * y);
        let e = (-y).exp();
        (0..=m).filter_map(|n| coeffs.get(2 * n + parity).map(|c| c * ls[n] * e)).sum::<f64>()
    };
    let f = PanelFn::sample(0.0, 2.0 * b, PANEL, ORDER, |y| series(0, y));
    let g = PanelFn::sample(0.0, 2.0 * b, PANEL, ORDER, |y| series(1, y));
    Ok(LaguerreResult { pair: ExpansionPair { f, g }, coeffs, tail, truncated: tail.abs() > 1e-10 })
}

/// f_t^a(x) = h(x−a) − ∫₀^{x−a} f_a(x−a−y)h(y) dy, h(y) = e^{−a(t+1/t)}e^{−ty}.
#[derive(Debug, Clone, Copy)]
pub struct KaElement {
    pub a: f64,
    pub t: f64,
    /// Beyond this h is below 1e−13 of its start.
    pub cut: f64,
}

pub fn make_ka_element(a: f64, t: f64) -> Result<KaElement> {
    if !(a > 0.0 && t > 0.0) {
        return Err(Error::Domain(format!("need a, t > 0, got a={a}, t={t}")));
    }
    Ok(KaElement { a, t, cut: 30.0 / t })
}

impl KaElement {
    fn h(&self, y: f64) -> f64 {
        (-self.a * (self.t + 1.0 / self.t) - self.t * y).exp()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let xx = x - self.a;
        if xx <= 0.0 {
            return 0.0;
        }
        let up = xx.min(self.cut);
        let a = self.a;
        let conv = integrate(|y| a * i1_entire(-a * (xx - y)) * self.h(y), 0.0, up, panels_for(0.0, up, 2.0), 20);
        self.h(xx) - conv
    }

    /// Closed Laplace transform e^{−a(t+1/t+τ+1/τ)}/(t+τ).
    pub fn laplace_closed(&self, tau: f64) -> f64 {
        let (a, t) = (self.a, self.t);
        (-a * (t + 1.0 / t + tau + 1.0 / tau)).exp() / (t + tau)
    }

    pub fn laplace(&self, tau: f64) -> f64 {
        let hi = self.a + 36.0 / tau;
        integrate(|x| self.eval(x) * (-tau * x).exp(), self.a, hi, panels_for(self.a, hi, 0.25), 20)
    }

    /// Hankel half (kind 1 or 2) of −∫₀^{cut} f_a(u²−a−z)h(z) dz at complex u.
    fn conv_half(&self, u: Complex, first: bool) -> Complex {
        let a = self.a;
        let ra = a.sqrt();
        let (zs, ws) = composite(0.0, self.cut, panels_for(0.0, self.cut, 2.0), 16);
        let mut s = Complex::new(0.0, 0.0);
        for (&z, &w) in zs.iter().zip(&ws) {
            let r = sqrt_shift(u, -a - z);
            let arg = r * (2.0 * ra);
            let hk = if first { hankel1_asym(1, arg) } else { hankel2_asym(1, arg) };
            s += hk * 0.5 * a / (r * ra) * (w * self.h(z));
        }
        -s
    }

    /// ∫_a^∞ K(x)f_t^a(x) dx with x = u², where `head` is K at real u and `half`
    /// returns the kind-1 or kind-2 Hankel half of K at complex u with frequency c.
    fn bessel_pairing<H, Q>(&self, c: f64, head: H, half: Q) -> f64
    where
        H: Fn(f64) -> f64,
        Q: Fn(Complex, bool) -> Complex + Clone,
    {
        let a = self.a;
        let ra = a.sqrt();
        let u_f = ((17.5 * 17.5) / a + a + self.cut).sqrt();
        let t0 = (35.0 / c).max(u_f) + 1.0;
        let width = 1.0 / (c + 2.0 * ra);
        let hv = integrate(|u| head(u) * self.eval(u * u) * 2.0 * u, ra, t0, panels_for(ra, t0, width), 20);
        let mut waves = Vec::new();
        for s1 in [true, false] {
            for s2 in [true, false] {
                let f1 = if s1 { c } else { -c };
                let f2 = if s2 { 2.0 * ra } else { -2.0 * ra };
                let fr = f1 + f2;
                let fr = if fr.abs() < 1e-12 { 0.0 } else { fr };
                let q = half.clone();
                waves.push(Wave::new(fr, move |u: Complex| q(u, s1) * self.conv_half(u, s2) * u * 2.0));
            }
        }
        hv + tail(t0, &waves).re
    }

    /// ℋ(f_t^a)(x).
    pub fn h_transform_at(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("x must be positive, got {x}")));
        }
        let c = 2.0 * x.sqrt();
        Ok(self.bessel_pairing(
            c,
            |u| i0_entire(-x * u * u),
            move |u, first| {
                let z = u * c;
                0.5 * if first { hankel1_asym(0, z) } else { hankel2_asym(0, z) }
            },
        ))
    }

    /// Components of forward(f_t^a) at y (the k(y/2) term vanishes for y < 2a).
    pub fn forward_at(&self, y: f64) -> Result<(f64, f64)> {
        if !(y > 0.0 && y < 2.0 * self.a) {
            return Err(Error::Domain(format!("y must lie in (0, 2a), got {y}")));
        }
        let c = (2.0 * y).sqrt();
        let part = |sign: f64| {
            self.bessel_pairing(
                c,
                move |u| {
                    let (j0v, j1v) = kernels(u * u, y);
                    j0v + sign * j1v
                },
                move |u, first| {
                    let v = sqrt_shift(u, -0.5 * y) * c;
                    let (h0, h1) = if first {
                        (hankel1_asym(0, v), hankel1_asym(1, v))
                    } else {
                        (hankel2_asym(0, v), hankel2_asym(1, v))
                    };
                    0.5 * (h0 + h1 * y / v * sign)
                },
            )
        };
        Ok((0.5 * part(-1.0), -0.5 * part(1.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_is_fixed() {
        let p = forward(|x: f64| (-x).exp(), 40.0).unwrap();
        assert!(p.g.sup() < 1e-6, "{}", p.g.sup());
        assert!((p.norm_sq() - 0.5).abs() < 1e-6);
        for y in [0.3, 1.0, 4.0] {
            assert!((p.f.eval(y) - (-y).exp()).abs() < 1e-6);
        }
    }

    #[test]
    fn first_laguerre_goes_to_g() {
        let p = forward(|x: f64| (1.0 - 2.0 * x) * (-x).exp(), 45.0).unwrap();
        for y in [0.3, 1.0, 4.0] {
            assert!(p.f.eval(y).abs() < 1e-6, "{}", p.f.eval(y));
            assert!((p.g.eval(y) - (-y).exp()).abs() < 1e-6, "{}", p.g.eval(y));
        }
    }

    #[test]
    fn bump_round_trip() {
        let k = |x: f64| (-(x - 3.0).powi(2) / (2.0 * 0.25)).exp();
        let p = forward(k, 7.5).unwrap();
        let nk = integrate(|x| k(x) * k(x), 0.0, 7.5, 30, 20);
        assert!((p.norm_sq() / nk - 1.0).abs() < 1e-6);
        for x in [1.0, 2.5, 3.0, 4.2] {
            assert!((inverse_at(&p, x) - k(x)).abs() < 1e-6);
        }
        let lg = laguerre_oracle(k, 7.5, 120).unwrap();
        for y in [2.0, 5.0, 6.0, 8.0] {
            assert!((lg.pair.f.eval(y) - p.f.eval(y)).abs() < 1e-4);
            assert!((lg.pair.g.eval(y) - p.g.eval(y)).abs() < 1e-4);
        }
    }

    #[test]
    fn psi_maps_laguerre() {
        let f = PanelFn::sample(0.0, 80.0, PANEL, ORDER, |y| laguerre_fn(1, y));
        for x in [0.2, 1.0, 3.0] {
            assert!((psi_at(&f, x) - laguerre_fn(2, x)).abs() < 1e-6);
        }
    }

    #[test]
    fn ka_element() {
        let el = make_ka_element(1.0, 1.0).unwrap();
        let l = el.laplace(1.0);
        assert!((l / ((-4.0f64).exp() / 2.0) - 1.0).abs() < 1e-5, "{l}");
        for x in [0.2, 0.6] {
            let v = el.h_transform_at(x).unwrap();
            assert!(v.abs() < 1e-5, "x={x} {v}");
        }
        let (f, g) = el.forward_at(0.8).unwrap();
        assert!(f.abs() < 1e-4 && g.abs() < 1e-4, "{f} {g}");
    }
}
