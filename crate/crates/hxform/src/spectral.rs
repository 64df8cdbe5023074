//! χ(s), g_s, the Mellin data 𝒜, ℬ, ℰ, the reproducing kernel 𝒳 and the evaluator norm.

use crate::discretize::{apply_h_decaying, Sign};
use crate::fredholm::log_det_closed;
use crate::oscill::{bessel_waves, tail, tail_start};
use crate::quad::{composite, integrate, integrate_c, panels_for};
use crate::report::{params, CheckReport};
use crate::specfun::{bessel_k_complex, exp_integral_e1, gamma_complex, j0, j1, ln_gamma_right};
use crate::{Complex, Error, Result};
use serde::Serialize;
use std::fmt::Write as _;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn one() -> Complex {
    c(1.0, 0.0)
}

fn is_nonpositive_integer(s: Complex) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// 1/Γ(s), zero at the poles.
pub fn rgamma(s: Complex) -> Complex {
    if is_nonpositive_integer(s) {
        return c(0.0, 0.0);
    }
    gamma_complex(s).map(|g| g.inv()).unwrap_or(c(0.0, 0.0))
}

/// χ(s) = Γ(1−s)/Γ(s).
pub fn chi(s: Complex) -> Result<Complex> {
    let t = one() - s;
    if is_nonpositive_integer(t) {
        return Err(Error::Pole { func: "chi", at: format!("{s}") });
    }
    if is_nonpositive_integer(s) {
        return Ok(c(0.0, 0.0));
    }
    if s.re > 0.0 && t.re > 0.0 {
        return Ok((ln_gamma_right(t) - ln_gamma_right(s)).exp());
    }
    Ok(gamma_complex(t)? * rgamma(s))
}

/// ∫_L^∞ J₀(c·v) v^p dv (L = 0 allowed when Re p > −1; needs Re p < −½).
pub fn j0_power_integral(cf: f64, lower: f64, p: Complex) -> Complex {
    let mut total = c(0.0, 0.0);
    let mut start = lower;
    if lower == 0.0 {
        let b0 = 2.4 / cf;
        let mut coef = 1.0;
        for k in 0..60usize {
            if k > 0 {
                let kf = k as f64;
                coef *= -(0.5 * cf) * (0.5 * cf) / (kf * kf);
            }
            let e = p + (2 * k + 1) as f64;
            let term = c(b0, 0.0).powc(e) / e * coef;
            total += term;
            if term.norm() < 1e-18 && k > 4 {
                break;
            }
        }
        start = b0;
    }
    let t = tail_start(cf, start + 1.0);
    let panels = panels_for(start, t, 1.5 / cf);
    total += integrate_c(|v| c(v, 0.0).powc(p) * j0(cf * v), start, t, panels, 20);
    let w = bessel_waves(0, cf, move |u: Complex| u.powc(p));
    total + tail(t, &w)
}

/// ∫₀^∞ J₀(2√t) t^{−s} dt for ¾ < Re s < 1.
pub fn chi_integral(s: Complex) -> Result<Complex> {
    if !(s.re > 0.75 && s.re < 1.0) {
        return Err(Error::Domain(format!("Re s must lie in (3/4, 1), got {s}")));
    }
    let p = one() - s * 2.0;
    Ok(c(2.0, 0.0).powc(s * 2.0 - 1.0) * j0_power_integral(1.0, 0.0, p))
}

pub fn chi_integral_check(s: Complex, tol: f64) -> Result<CheckReport> {
    let lhs = chi_integral(s)?;
    let rhs = chi(s)?;
    Ok(CheckReport::relative("spectral.chi_integral", params(&[("s_re", s.re), ("s_im", s.im)]), lhs, rhs, tol))
}

fn g_s_direct(a: f64, s: Complex, x: f64) -> Result<Complex> {
    let mut series = c(0.0, 0.0);
    let mut coef = 1.0;
    for n in 0..200usize {
        if n > 0 {
            let nf = n as f64;
            coef *= -x / (nf * nf);
        }
        let e = one() * (n as f64 + 1.0) - s;
        let term = c(a, 0.0).powc(e) / e * coef;
        series += term;
        if term.norm() < 1e-17 * series.norm().max(1e-300) && n > 2 && (n as f64) > a * x {
            break;
        }
    }
    Ok(chi(s)? * c(x, 0.0).powc(s - 1.0) - series)
}

/// g_s(x) = χ(s)x^{s−1} − Σ (−1)ⁿ xⁿ a^{n+1−s}/(n!²(n+1−s)) = ∫_a^∞ J₀(2√(xy)) y^{−s} dy.
pub fn g_s(a: f64, s: Complex, x: f64) -> Result<Complex> {
    if !(s.re > 0.5) {
        return Err(Error::Domain(format!("g_s needs Re s > 1/2, got {s}")));
    }
    if !(x > 0.0 && a > 0.0) {
        return Err(Error::Domain("g_s needs a, x > 0".into()));
    }
    let m = s.re.round();
    if m >= 1.0 && (s - m).norm() < 1e-3 {
        // removable singularity: mean over a small circle
        let r = 0.05;
        let k = 32;
        let mut acc = c(0.0, 0.0);
        for j in 0..k {
            let th = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / k as f64;
            acc += g_s_direct(a, s + Complex::from_polar(r, th), x)?;
        }
        return Ok(acc / k as f64);
    }
    g_s_direct(a, s, x)
}

/// ∫_a^∞ J₀(2√(xy)) y^{−s} dy by oscillatory quadrature.
pub fn g_s_quadrature(a: f64, s: Complex, x: f64) -> Complex {
    let p = one() - s * 2.0;
    j0_power_integral(2.0 * x.sqrt(), a.sqrt(), p) * 2.0
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralPoint {
    pub a: f64,
    pub s: Complex,
    pub A: Complex,
    pub B: Complex,
    pub E: Complex,
}

/// ℰ_a(s) = 2√a K_s(2a).
pub fn cal_e(a: f64, s: Complex) -> Result<Complex> {
    Ok(bessel_k_complex(s, 2.0 * a)? * (2.0 * a.sqrt()))
}

pub fn spectral_point(a: f64, s: Complex) -> Result<SpectralPoint> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("a must be positive, got {a}")));
    }
    let ks = bessel_k_complex(s, 2.0 * a)?;
    let km = bessel_k_complex(s - 1.0, 2.0 * a)?;
    let ra = a.sqrt();
    let amp = (ks + km) * ra;
    let minus_ib = (ks - km) * ra;
    Ok(SpectralPoint { a, s, A: amp, B: minus_ib * Complex::i(), E: ks * (2.0 * ra) })
}

/// Ê_a(s) = √a(a^{−s} − 2√a∫₀^∞ J₁(2√a·u)(a+u²)^{−s} du), to be compared with ℰ_a(s)/Γ(s).
pub fn mellin_e_quadrature(a: f64, s: Complex) -> Result<Complex> {
    if !(s.re > 0.25) {
        return Err(Error::Domain(format!("Re s must exceed 1/4, got {s}")));
    }
    let cf = 2.0 * a.sqrt();
    let t = tail_start(cf, 2.0 * (1.0 + a.sqrt()));
    let g = move |u: Complex| (u * u + a).powc(-s);
    let head = integrate_c(|u| g(c(u, 0.0)) * j1(cf * u), 0.0, t, panels_for(0.0, t, 1.5 / cf), 20);
    let w = {
        use crate::oscill::Wave;
        use crate::specfun::{hankel1_asym, hankel2_asym};
        vec![
            Wave::new(cf, move |u| hankel1_asym(1, u * cf) * 0.5 * g(u)),
            Wave::new(-cf, move |u| hankel2_asym(1, u * cf) * 0.5 * g(u)),
        ]
    };
    let integral = head + tail(t, &w);
    let ra = a.sqrt();
    Ok((c(a, 0.0).powc(-s) - integral * (2.0 * ra)) * ra)
}

const DIAG_EPS: f64 = 1e-6;
const DIAG_STEP: f64 = 1e-4;

fn rep_numerator(a: f64, s: Complex, z: Complex) -> Result<Complex> {
    Ok(cal_e(a, s)? * cal_e(a, z)? - cal_e(a, one() - s)? * cal_e(a, one() - z)?)
}

/// 𝒳_a(s,z) = (ℰ(s)ℰ(z) − ℰ(1−s)ℰ(1−z))/(s+z−1).
pub fn rep_kernel(a: f64, s: Complex, z: Complex) -> Result<Complex> {
    let d = s + z - 1.0;
    if d.norm() < DIAG_EPS {
        let z0 = one() - s;
        let h = c(DIAG_STEP, 0.0);
        return Ok((rep_numerator(a, s, z0 + h)? - rep_numerator(a, s, z0 - h)?) / (h * 2.0));
    }
    Ok(rep_numerator(a, s, z)? / d)
}

/// ∬ e^{−2a cosh v − 2a cosh w} e^{sv+zw}/(e^v+e^w) dv dw.
pub fn rep_kernel_oracle(a: f64, s: Complex, z: Complex) -> Result<Complex> {
    if (s.re - 0.5).abs() > 2.0 || (z.re - 0.5).abs() > 2.0 {
        return Err(Error::Domain("rep_kernel_oracle needs |Re − 1/2| <= 2".into()));
    }
    let grow = s.re.abs().max(z.re.abs()) + 1.0;
    let mut v_max = 1.0;
    while 2.0 * a * f64::cosh(v_max) - grow * v_max < 45.0 {
        v_max += 0.05;
    }
    let width = 0.2_f64.min(1.0 / (1.0 + s.im.abs().max(z.im.abs())));
    let panels = panels_for(-v_max, v_max, width);
    let (vs, ws) = composite(-v_max, v_max, panels, 16);
    let fs: Vec<Complex> = vs.iter().map(|&v| (s * v - 2.0 * a * v.cosh()).exp()).collect();
    let fz: Vec<Complex> = vs.iter().map(|&w| (z * w - 2.0 * a * w.cosh()).exp()).collect();
    let ev: Vec<f64> = vs.iter().map(|v| v.exp()).collect();
    let mut sum = c(0.0, 0.0);
    for i in 0..vs.len() {
        let mut row = c(0.0, 0.0);
        for j in 0..vs.len() {
            row += fz[j] * (ws[j] / (ev[i] + ev[j]));
        }
        sum += fs[i] * ws[i] * row;
    }
    Ok(sum)
}

/// (2E₁(4a), 2∫_a^∞ (det(1−H_b)/det(1+H_b))² db/b).
pub fn evaluator_norm_half(a: f64) -> Result<(f64, f64)> {
    let closed = 2.0 * exp_integral_e1(4.0 * a)?;
    let ratio = |b: f64| (log_det_closed(b, Sign::Minus) - log_det_closed(b, Sign::Plus)).exp();
    let len = 12.0;
    let quad = 2.0 * integrate(|t| ratio(a + t).powi(2) / (a + t), 0.0, len, 48, 20);
    Ok((closed, quad))
}

fn log_mellin<F: Fn(f64) -> f64>(f: F, s: Complex, v_lo: f64, v_hi: f64) -> Complex {
    // ∫₀^∞ f(x) x^{−s} dx with x = e^v
    let panels = panels_for(v_lo, v_hi, 0.5 / (1.0 + s.im.abs()).max(1.0));
    integrate_c(|v| ((one() - s) * v).exp() * f(v.exp()), v_lo, v_hi, panels, 16)
}

/// Mellin transform of ℋ(e^{−tx}) at s against χ(s)·(Mellin of e^{−tx} at 1−s), both by quadrature.
pub fn mellin_functional_check(t: f64, s: Complex, tol: f64) -> Result<CheckReport> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let v_hi = (45.0 * t).ln();
    let v_lo = -2.0 * 28.0 / (1.0 - s.re).min(s.re).max(0.1);
    let panels = panels_for(v_lo, v_hi, 0.5 / (1.0 + s.im.abs()));
    let (vs, ws) = composite(v_lo, v_hi, panels, 16);
    let xs: Vec<f64> = vs.iter().map(|v| v.exp()).collect();
    let hf = apply_h_decaying(|y| (-t * y).exp(), t, &xs)?;
    let mut lhs = c(0.0, 0.0);
    for ((v, w), h) in vs.iter().zip(&ws).zip(&hf) {
        lhs += ((one() - s) * *v).exp() * (w * h);
    }
    let v_hi_f = (45.0 / t).ln();
    let rhs = chi(s)? * log_mellin(|x| (-t * x).exp(), one() - s, v_lo, v_hi_f);
    Ok(CheckReport::relative(
        "spectral.mellin_functional",
        params(&[("t", t), ("s_re", s.re), ("s_im", s.im)]),
        lhs,
        rhs,
        tol,
    ))
}

pub fn sweep_csv(points: &[SpectralPoint]) -> String {
    let mut out = String::from("a,sigma,gamma,A_re,A_im,B_re,B_im,E_re,E_im\n");
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}",
            p.a, p.s.re, p.s.im, p.A.re, p.A.im, p.B.re, p.B.im, p.E.re, p.E.im
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn chi_values() {
        assert!((chi(c(0.5, 0.0)).unwrap() - one()).norm() < 1e-14);
        assert!((chi(c(0.5, 1.0)).unwrap().norm() - 1.0).abs() < 1e-12);
        let v = chi(c(0.8, 0.0)).unwrap().re;
        let g = gamma_complex(c(0.2, 0.0)).unwrap().re / gamma_complex(c(0.8, 0.0)).unwrap().re;
        assert!((v - g).abs() < 1e-12 * g);
        assert!(chi(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn chi_integral_matches() {
        for s in [c(0.8, 0.0), c(0.9, 0.0), c(0.85, 0.1)] {
            let r = chi_integral_check(s, 1e-6).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn g_s_consistency() {
        let (a, s, x) = (1.0, c(0.9, 0.3), 0.7);
        let v = g_s(a, s, x).unwrap();
        let q = g_s_quadrature(a, s, x);
        assert!((v - q).norm() < 1e-8 * v.norm(), "{v} {q}");
        let near = g_s(a, c(1.0, 0.0), x).unwrap();
        let q1 = g_s_quadrature(a, c(1.0, 0.0), x);
        assert!((near - q1).norm() < 1e-8, "{near} {q1}");
    }

    #[test]
    fn spectral_point_half() {
        let p = spectral_point(1.0, c(0.5, 0.0)).unwrap();
        let want = PI.sqrt() * (-2f64).exp();
        assert!((p.E.re - want).abs() < 1e-12);
        assert!((p.A.re - want).abs() < 1e-12);
        assert!(p.B.norm() < 1e-14);
    }

    #[test]
    fn mellin_e_matches_k() {
        for (a, s) in [(1.0, c(0.9, 0.0)), (1.0, c(0.5, 0.5)), (2.0, c(1.5, 0.0))] {
            let q = mellin_e_quadrature(a, s).unwrap();
            let e = cal_e(a, s).unwrap() / gamma_complex(s).unwrap();
            assert!((q - e).norm() < 1e-8 * e.norm(), "a={a} s={s}: {q} vs {e}");
        }
    }

    #[test]
    fn kernel_vs_oracle() {
        for (s, z) in [(c(0.6, 0.0), c(0.7, 0.0)), (c(0.5, 0.3), c(0.5, -0.3))] {
            let k = rep_kernel(1.0, s, z).unwrap();
            let o = rep_kernel_oracle(1.0, s, z).unwrap();
            assert!((k - o).norm() < 1e-8 * k.norm(), "{k} {o}");
        }
    }

    #[test]
    fn kernel_near_diagonal() {
        let s = c(0.3, 0.2);
        let z = c(0.7, -0.2);
        let k = rep_kernel(1.0, s, z).unwrap();
        let o = rep_kernel_oracle(1.0, s, z).unwrap();
        assert!((k - o).norm() < 1e-6 * k.norm(), "{k} {o}");
    }

    #[test]
    fn norm_half() {
        let (cl, q) = evaluator_norm_half(1.0).unwrap();
        assert!((cl - 0.0075587).abs() < 1e-6);
        assert!((cl - q).abs() < 1e-8 * cl);
    }

    #[test]
    fn mellin_functional() {
        for (t, s) in [(1.0, c(0.5, 1.0)), (2.0, c(0.5, 0.0))] {
            let r = mellin_functional_check(t, s, 1e-6).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}
