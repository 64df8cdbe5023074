//! The extended spaces: r, s, p, q, α, β, μ^ext, extended determinants and spectral data.

use crate::discretize::{kernel_extended, nystrom, Grid, KernelId, Sign};
use crate::quad::integrate;
use crate::spectral::{cal_e, rep_kernel, spectral_point};
use crate::specfun::{exp_integral_e1, i0, i1};
use crate::{Complex, Result};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtendedState {
    pub a: f64,
    pub r: f64,
    pub s: f64,
    pub p: f64,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub mu_ext: f64,
}

impl ExtendedState {
    /// (r′, s′, p′, q′).
    pub fn derivatives(&self) -> (f64, f64, f64, f64) {
        let (r, s) = (self.r, self.s);
        (2.0 * s, 2.0 * r - s / self.a, r * r + s * s, 2.0 * r * s)
    }
}

/// q = ½(r² − 1) holds only for this kernel, where μ = 2a.
pub fn ext_state(a: f64) -> ExtendedState {
    let r = i0(2.0 * a);
    let s = i1(2.0 * a);
    let p = a * (r * r - s * s);
    let q = 0.5 * (r * r - 1.0);
    let d = p * p - q * q;
    let mu_ext = 2.0 * a + a * (r - s).powi(2) / (p - q) - a * (r + s).powi(2) / (p + q);
    ExtendedState { a, r, s, p, q, alpha: p / d, beta: q / d, mu_ext }
}

pub fn ext_kernel(u: f64) -> f64 {
    kernel_extended(u)
}

/// e^{±a−a²/2}·(p ∓ q)/a.
pub fn ext_det_closed(a: f64, sign: Sign) -> f64 {
    let st = ext_state(a);
    let pq = st.p - sign.f() * st.q;
    (sign.f() * a - 0.5 * a * a).exp() * pq / a
}

pub fn ext_det_nystrom(a: f64, sign: Sign, n: usize) -> Result<f64> {
    Ok(nystrom(a, n, KernelId::Extended)?.det(sign))
}

/// (ℋ^ext v)(xᵢ) on a grid.
pub fn apply_ext(grid: &Grid, values: &[f64]) -> Vec<f64> {
    grid.nodes
        .iter()
        .map(|&x| {
            grid.nodes
                .iter()
                .zip(&grid.weights)
                .zip(values)
                .map(|((y, w), v)| w * kernel_extended(x * y) * v)
                .sum()
        })
        .collect()
}

/// (A_ext, B_ext, E_ext) at z.
pub fn ext_spectral(a: f64, z: Complex) -> Result<(Complex, Complex, Complex)> {
    let st = ext_state(a);
    let (p, q) = (st.p, st.q);
    let (_, _, dp, dq) = st.derivatives();
    let sp = spectral_point(a, z)?;
    let minus_ib = -Complex::i() * sp.B;
    let h = z - 0.5;
    let dlog_pm = a * (dp - dq) / (p - q);
    let dlog_pp = a * (dp + dq) / (p + q);
    let amp = (h * h + 0.25 * (p + q) / (p - q)) * sp.A + h * dlog_pm * minus_ib;
    let mib = (h * h + 0.25 * (p - q) / (p + q)) * minus_ib + h * dlog_pp * sp.A;
    let e = e_ext(a, z)?;
    Ok((amp, Complex::i() * mib, e))
}

/// E_ext(z) from ℰ(z) and ℰ(1−z).
pub fn e_ext(a: f64, z: Complex) -> Result<Complex> {
    let st = ext_state(a);
    let (p, q) = (st.p, st.q);
    let (_, _, dp, dq) = st.derivatives();
    let h = z - 0.5;
    let dlog_d = a * (2.0 * p * dp - 2.0 * q * dq) / (p * p - q * q);
    let dlog_ratio = a * ((dp + dq) / (p + q) - (dp - dq) / (p - q));
    let c1 = z * (z - 1.0) + 0.5 * dlog_d * h + 0.5 * p * st.alpha;
    let c2 = 0.5 * dlog_ratio * h + 0.5 * p * st.beta;
    Ok(c1 * cal_e(a, z)? + c2 * cal_e(a, Complex::new(1.0, 0.0) - z)?)
}

fn t_fn(a: f64, st: &ExtendedState, s: Complex) -> Result<Complex> {
    let one = Complex::new(1.0, 0.0);
    Ok(s * a.sqrt() * (cal_e(a, s)? * st.r + cal_e(a, one - s)? * st.s))
}

/// 𝒴_a(s,z) = s(s−1)z(z−1)𝒳_a(s,z) + [T(s),T(1−s)]·[[α,β],[β,α]]·[T(z),T(1−z)]ᵀ.
pub fn y_kernel(a: f64, s: Complex, z: Complex) -> Result<Complex> {
    let st = ext_state(a);
    let one = Complex::new(1.0, 0.0);
    let (ts, ts1) = (t_fn(a, &st, s)?, t_fn(a, &st, one - s)?);
    let (tz, tz1) = (t_fn(a, &st, z)?, t_fn(a, &st, one - z)?);
    let gram = ts * (st.alpha * tz + st.beta * tz1) + ts1 * (st.beta * tz + st.alpha * tz1);
    Ok(s * (s - 1.0) * z * (z - 1.0) * rep_kernel(a, s, z)? + gram)
}

/// (E_ext(s)E_ext(z) − E_ext(1−s)E_ext(1−z))/(s+z−1).
pub fn y_kernel_ratio(a: f64, s: Complex, z: Complex) -> Result<Complex> {
    let one = Complex::new(1.0, 0.0);
    let num = e_ext(a, s)? * e_ext(a, z)? - e_ext(a, one - s)? * e_ext(a, one - z)?;
    Ok(num / (s + z - 1.0))
}

/// (single-integral form, closed combination) of the extended evaluator norm at ½.
pub fn ext_norm_half(a: f64) -> Result<(f64, f64)> {
    let ratio = |b: f64| {
        let st = ext_state(b);
        (st.p + st.q) / (st.p - st.q)
    };
    // e^{−4b} factored against the growth of the ratio
    let len = 16.0;
    let integral = 2.0 * integrate(|t| ratio(a + t).powi(2) * (-4.0 * (a + t)).exp() / (a + t), 0.0, len, 64, 20);
    let st = ext_state(a);
    let closed = 2.0 * exp_integral_e1(4.0 * a)? + 8.0 * a * (st.r + st.s).powi(2) * (-4.0 * a).exp() / (st.p - st.q);
    Ok((integral, closed))
}

pub fn sweep_csv(values: &[f64]) -> String {
    let mut out = String::from("a,r,s,p,q,alpha,beta,mu_ext,det_plus_ext,det_minus_ext\n");
    for &a in values {
        let st = ext_state(a);
        let _ = writeln!(
            out,
            "{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}",
            a,
            st.r,
            st.s,
            st.p,
            st.q,
            st.alpha,
            st.beta,
            st.mu_ext,
            ext_det_closed(a, Sign::Plus),
            ext_det_closed(a, Sign::Minus)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn state_values() {
        let st = ext_state(1.0);
        assert!((st.r - 2.2795853).abs() < 1e-7);
        assert!((st.s - 1.5906369).abs() < 1e-7);
        assert!((st.p - 2.66638).abs() < 1e-5);
        assert!((st.q - 2.09825).abs() < 1e-5);
        assert!((st.mu_ext + 0.3082).abs() < 1e-4, "{}", st.mu_ext);
        assert!((st.p * st.alpha - st.q * st.beta - 1.0).abs() < 1e-12);
        assert!((ext_state(10.0).mu_ext - 17.883919347528576).abs() < 1e-7);
        assert!((ext_state(40.0).mu_ext - 78.0).abs() < 0.05);
        let h = 1e-5;
        let lr = |b: f64| {
            let t = ext_state(b);
            ((t.p - t.q) / (t.p + t.q)).ln()
        };
        let fd = 2.0 + (lr(1.0 + h) - lr(1.0 - h)) / (2.0 * h);
        assert!((fd - st.mu_ext).abs() < 1e-8);
    }

    #[test]
    fn determinants() {
        assert!((ext_det_closed(1.0, Sign::Plus) - 0.936686320608997).abs() < 1e-12);
        assert!((ext_det_closed(1.0, Sign::Minus) - 1.06313446734715).abs() < 1e-12);
        for sign in [Sign::Plus, Sign::Minus] {
            let n = ext_det_nystrom(1.0, sign, 64).unwrap();
            let cl = ext_det_closed(1.0, sign);
            assert!((n / cl - 1.0).abs() < 1e-6, "{n} {cl}");
        }
    }

    #[test]
    fn spectral_forms_agree() {
        for z in [c(0.5, 0.0), c(0.7, 0.3), c(0.5, 2.0), c(1.3, -0.4)] {
            let (amp, b, e) = ext_spectral(1.0, z).unwrap();
            assert!((amp - Complex::i() * b - e).norm() < 1e-12 * e.norm(), "z={z}");
        }
        let st = ext_state(1.0);
        let e_half = e_ext(1.0, c(0.5, 0.0)).unwrap();
        let want = 0.25 * (st.p + st.q) / (st.p - st.q) * cal_e(1.0, c(0.5, 0.0)).unwrap();
        assert!((e_half - want).norm() < 1e-13);
    }

    #[test]
    fn y_kernel_matches_ratio() {
        let (s, z) = (c(0.6, 0.0), c(0.8, 0.0));
        let y = y_kernel(1.0, s, z).unwrap();
        let r = y_kernel_ratio(1.0, s, z).unwrap();
        assert!((y - r).norm() < 1e-8 * r.norm(), "{y} {r}");
    }

    #[test]
    fn norms_agree() {
        for a in [0.5, 1.0] {
            let (i, cl) = ext_norm_half(a).unwrap();
            assert!((i - cl).abs() < 1e-6 * cl, "a={a} {i} {cl}");
        }
    }
}
