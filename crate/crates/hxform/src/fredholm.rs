//! Fredholm determinants of H_a, μ(a) and the log-derivative identities.

use crate::discretize::{closed_phi, nystrom, KernelId, KernelOp, Sign, DEFAULT_N};
use crate::report::{params, CheckReport};
use crate::{Complex, Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct DetRecord {
    pub a: f64,
    pub kernel_id: KernelId,
    pub det_plus: f64,
    pub det_minus: f64,
    pub det_d: f64,
    pub closed_plus: f64,
    pub closed_minus: f64,
}

impl DetRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a,
            "kernel": self.kernel_id.name(),
            "det_plus": self.det_plus,
            "det_minus": self.det_minus,
            "closed_plus": self.closed_plus,
            "closed_minus": self.closed_minus,
            "abs_err_plus": (self.det_plus - self.closed_plus).abs(),
            "abs_err_minus": (self.det_minus - self.closed_minus).abs(),
        })
    }
}

/// ∏(1 ± λᵢ) for the n = 64 Nyström operator.
pub fn fredholm_det(a: f64, sign: Sign, kernel_id: KernelId) -> Result<f64> {
    fredholm_det_n(a, sign, kernel_id, DEFAULT_N)
}

pub fn fredholm_det_n(a: f64, sign: Sign, kernel_id: KernelId, n: usize) -> Result<f64> {
    Ok(nystrom(a, n, kernel_id)?.det(sign))
}

pub fn log_det_n(a: f64, sign: Sign, kernel_id: KernelId, n: usize) -> Result<f64> {
    Ok(nystrom(a, n, kernel_id)?.log_det(sign))
}

/// Closed log det(1 ± H_a) = ±a − a²/2.
pub fn log_det_closed(a: f64, sign: Sign) -> f64 {
    sign.f() * a - 0.5 * a * a
}

pub fn det_closed(a: f64, sign: Sign, kernel_id: KernelId) -> f64 {
    match kernel_id {
        KernelId::Standard => log_det_closed(a, sign).exp(),
        KernelId::Extended => crate::extended::ext_det_closed(a, sign),
        KernelId::Custom => f64::NAN,
    }
}

pub fn det_record_from(op: &KernelOp) -> DetRecord {
    let a = op.grid.a;
    DetRecord {
        a,
        kernel_id: op.kernel_id,
        det_plus: op.det(Sign::Plus),
        det_minus: op.det(Sign::Minus),
        det_d: op.eigenvalues.iter().map(|l| 1.0 - l * l).product(),
        closed_plus: det_closed(a, Sign::Plus, op.kernel_id),
        closed_minus: det_closed(a, Sign::Minus, op.kernel_id),
    }
}

pub fn det_record(a: f64, kernel_id: KernelId, n: usize) -> Result<DetRecord> {
    Ok(det_record_from(&nystrom(a, n, kernel_id)?))
}

/// μ(a) = a·φ_a^+(a) + a·φ_a^−(a).
pub fn mu(a: f64) -> Result<f64> {
    if !(a >= 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("mu needs a >= 0, got {a}")));
    }
    Ok(a * closed_phi(a, Sign::Plus, a) + a * closed_phi(a, Sign::Minus, a))
}

pub fn fd_step(a: f64) -> f64 {
    1e-3 * a.max(1.0)
}

/// a·d/da log(det₊/det₋) by central differences of the Nyström determinants.
pub fn mu_fd(a: f64, n: usize) -> Result<f64> {
    let h = fd_step(a);
    let lr = |b: f64| -> Result<f64> {
        let op = nystrom(b, n, KernelId::Standard)?;
        Ok(op.log_det(Sign::Plus) - op.log_det(Sign::Minus))
    };
    Ok(a * (lr(a + h)? - lr(a - h)?) / (2.0 * h))
}

/// ±d/da log det(1 ± H_a), which equals φ_a^±(a).
pub fn phi_endpoint_fd(a: f64, sign: Sign, n: usize) -> Result<f64> {
    let h = fd_step(a);
    let d = (log_det_n(a + h, sign, KernelId::Standard, n)?
        - log_det_n(a - h, sign, KernelId::Standard, n)?)
        / (2.0 * h);
    Ok(sign.f() * d)
}

/// −(a d/da)² log det(1 − D_a) by second central differences.
pub fn mu_squared_fd(a: f64, n: usize) -> Result<f64> {
    let h = fd_step(a);
    let ld = |b: f64| -> Result<f64> {
        let op = nystrom(b, n, KernelId::Standard)?;
        Ok(op.log_det(Sign::Plus) + op.log_det(Sign::Minus))
    };
    let (lm, l0, lp) = (ld(a - h)?, ld(a)?, ld(a + h)?);
    let d1 = (lp - lm) / (2.0 * h);
    let d2 = (lp - 2.0 * l0 + lm) / (h * h);
    Ok(-(a * a * d2 + a * d1))
}

/// (δ f, δ² f) with δ = a d/da, for f = log det(1 ± H_a) in closed form.
fn closed_log_derivs(a: f64, sign: Sign) -> (f64, f64) {
    let d1 = sign.f() - a;
    let d2 = -1.0;
    (a * d1, a * a * d2 + a * d1)
}

/// Both second-order log-determinant identities, with R = det₊/det₋:
/// −2δ² log det₊ = (δ log R)² − δ² log R and −2δ² log det₋ = (δ log R)² + δ² log R.
pub fn gaudin_check(a: f64, tol: f64) -> (CheckReport, CheckReport) {
    let (p1, p2) = closed_log_derivs(a, Sign::Plus);
    let (m1, m2) = closed_log_derivs(a, Sign::Minus);
    let (r1, r2) = (p1 - m1, p2 - m2);
    let pr = params(&[("a", a)]);
    let plus = CheckReport::absolute(
        "fredholm.gaudin_plus",
        pr.clone(),
        Complex::new(-2.0 * p2, 0.0),
        Complex::new(r1 * r1 - r2, 0.0),
        tol,
    );
    let minus = CheckReport::absolute(
        "fredholm.gaudin_minus",
        pr,
        Complex::new(-2.0 * m2, 0.0),
        Complex::new(r1 * r1 + r2, 0.0),
        tol,
    );
    (plus, minus)
}

/// The same identities with every derivative taken numerically from Nyström determinants.
pub fn gaudin_check_numeric(a: f64, n: usize, tol: f64) -> Result<(CheckReport, CheckReport)> {
    let h = fd_step(a);
    let mut lp = [0.0; 3];
    let mut lm = [0.0; 3];
    for (k, b) in [a - h, a, a + h].into_iter().enumerate() {
        let op = nystrom(b, n, KernelId::Standard)?;
        lp[k] = op.log_det(Sign::Plus);
        lm[k] = op.log_det(Sign::Minus);
    }
    let derivs = |f: [f64; 3]| {
        let d1 = (f[2] - f[0]) / (2.0 * h);
        let d2 = (f[2] - 2.0 * f[1] + f[0]) / (h * h);
        (a * d1, a * a * d2 + a * d1)
    };
    let (_, p2) = derivs(lp);
    let (_, m2) = derivs(lm);
    let (r1, r2) = derivs([lp[0] - lm[0], lp[1] - lm[1], lp[2] - lm[2]]);
    let pr = params(&[("a", a), ("n", n as f64)]);
    Ok((
        CheckReport::absolute(
            "fredholm.gaudin_plus_numeric",
            pr.clone(),
            Complex::new(-2.0 * p2, 0.0),
            Complex::new(r1 * r1 - r2, 0.0),
            tol,
        ),
        CheckReport::absolute(
            "fredholm.gaudin_minus_numeric",
            pr,
            Complex::new(-2.0 * m2, 0.0),
            Complex::new(r1 * r1 + r2, 0.0),
            tol,
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants_match_closed_forms() {
        for a in [0.25, 0.5, 1.0, 2.0, 4.0] {
            let r = det_record(a, KernelId::Standard, 64).unwrap();
            assert!((r.det_plus / r.closed_plus - 1.0).abs() < 1e-8, "a={a}");
            assert!((r.det_minus / r.closed_minus - 1.0).abs() < 1e-8, "a={a}");
            assert!((r.det_d / (r.det_plus * r.det_minus) - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn mu_closed_and_fd() {
        assert_eq!(mu(1.0).unwrap(), 2.0);
        assert_eq!(mu(0.0).unwrap(), 0.0);
        for a in [0.5, 1.0, 2.0] {
            assert!((mu_fd(a, 64).unwrap() - 2.0 * a).abs() < 1e-4);
        }
        assert!((mu_squared_fd(1.0, 64).unwrap() - 4.0).abs() < 1e-3);
    }

    #[test]
    fn endpoint_derivatives() {
        for a in [0.5, 1.0] {
            for sign in [Sign::Plus, Sign::Minus] {
                let v = phi_endpoint_fd(a, sign, 64).unwrap();
                assert!((v - (1.0 - sign.f() * a)).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn gaudin() {
        for a in [0.5, 1.0, 1e-9] {
            let (p, m) = gaudin_check(a, 1e-10);
            assert!(p.pass && m.pass);
        }
        let (p, m) = gaudin_check_numeric(1.0, 64, 1e-4).unwrap();
        assert!(p.pass && m.pass, "{p:?} {m:?}");
    }
}
