//! Resolvent of the sine kernel on (−1,1) and the reproducing kernel of PW_s normed on ℝ∖(−1,1).

use crate::quad::gauss_legendre;
use crate::report::{params, CheckReport};
use crate::{Complex, Error, Result};
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;
use std::fmt::Write as _;

/// sin(s(x−y))/(π(x−y)).
pub fn sine_kernel(s: f64, x: f64, y: f64) -> f64 {
    let d = x - y;
    if (s * d).abs() < 1e-8 {
        return s / PI * (1.0 - (s * d).powi(2) / 6.0);
    }
    (s * d).sin() / (PI * d)
}

#[derive(Debug, Clone)]
pub struct ResolventDisc {
    pub s: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Kernel values R(xᵢ, xⱼ).
    pub r: DMatrix<f64>,
    /// W^{½}(I − M)^{−1}W^{½}.
    inner: DMatrix<f64>,
}

pub fn dirichlet_resolvent(s: f64, n: usize) -> Result<ResolventDisc> {
    if !(s > 0.0) || s > PI * n as f64 / 8.0 {
        return Err(Error::Bounds(format!("need 0 < s <= pi*n/8, got s={s}, n={n}")));
    }
    let rule = gauss_legendre(n);
    let (nodes, weights) = (rule.nodes.clone(), rule.weights.clone());
    let sw: Vec<f64> = weights.iter().map(|w| w.sqrt()).collect();
    let m = DMatrix::from_fn(n, n, |i, j| sw[i] * sw[j] * sine_kernel(s, nodes[i], nodes[j]));
    let a = DMatrix::identity(n, n) - &m;
    let inv = a.try_inverse().ok_or_else(|| Error::Singular("I - D is not invertible".into()))?;
    let top = m.clone().symmetric_eigenvalues().max();
    if top > 1.0 - 1e-12 {
        return Err(Error::Singular(format!("top eigenvalue {top} too close to 1")));
    }
    let inner = DMatrix::from_fn(n, n, |i, j| sw[i] * inv[(i, j)] * sw[j]);
    let r = DMatrix::from_fn(n, n, |i, j| {
        let v = inv[(i, j)] - if i == j { 1.0 } else { 0.0 };
        v / (sw[i] * sw[j])
    });
    Ok(ResolventDisc { s, nodes, weights, r, inner })
}

impl ResolventDisc {
    /// R(x,y) = D(x,y) + d_xᵀ·W^{½}(I−M)^{−1}W^{½}·d_y.
    pub fn at(&self, x: f64, y: f64) -> f64 {
        let dx = DVector::from_iterator(self.nodes.len(), self.nodes.iter().map(|&t| sine_kernel(self.s, x, t)));
        let dy = DVector::from_iterator(self.nodes.len(), self.nodes.iter().map(|&t| sine_kernel(self.s, t, y)));
        sine_kernel(self.s, x, y) + dx.dot(&(&self.inner * dy))
    }

    /// max |(I−D̃)(I+R̃) − I| at the discrete level.
    pub fn identity_residual(&self) -> f64 {
        let n = self.nodes.len();
        let sw: Vec<f64> = self.weights.iter().map(|w| w.sqrt()).collect();
        let m = DMatrix::from_fn(n, n, |i, j| sw[i] * sw[j] * sine_kernel(self.s, self.nodes[i], self.nodes[j]));
        let rt = DMatrix::from_fn(n, n, |i, j| sw[i] * sw[j] * self.r[(i, j)]);
        let id = DMatrix::<f64>::identity(n, n);
        let p = (&id - m) * (&id + rt) - id;
        p.amax()
    }
}

/// (s/π)·sinc basis e_k(t) = sin(s(t − kπ/s))/(π(t − kπ/s)).
pub fn sinc_basis(s: f64, k: i64, t: f64) -> f64 {
    sine_kernel(s, t, k as f64 * PI / s)
}

#[derive(Debug, Clone)]
pub struct MpwKernel {
    pub s: f64,
    pub m: usize,
    chol: nalgebra::Cholesky<f64, nalgebra::Dyn>,
}

impl MpwKernel {
    /// Gram Gₖₗ = ∫_{ℝ∖(−1,1)} eₖeₗ = (s/π)δₖₗ − ∫₋₁¹ eₖeₗ.
    pub fn new(s: f64, m: usize) -> Result<MpwKernel> {
        if !(s > 0.0) || m == 0 {
            return Err(Error::Domain(format!("need s > 0 and M >= 1, got s={s}, M={m}")));
        }
        let rule = gauss_legendre(96);
        let dim = 2 * m + 1;
        let basis = DMatrix::from_fn(dim, rule.nodes.len(), |k, j| {
            sinc_basis(s, k as i64 - m as i64, rule.nodes[j]) * rule.weights[j].sqrt()
        });
        let b = &basis * basis.transpose();
        let g = DMatrix::identity(dim, dim) * (s / PI) - b;
        let chol = g.cholesky().ok_or_else(|| Error::Singular("Gram matrix not positive definite".into()))?;
        let diag = chol.l_dirty().diagonal();
        let (lo, hi) = diag.iter().fold((f64::MAX, 0.0f64), |(l, h), v| (l.min(*v), h.max(*v)));
        if (hi / lo).powi(2) > 1e12 {
            return Err(Error::Singular(format!("Gram condition {:.2e}", (hi / lo).powi(2))));
        }
        Ok(MpwKernel { s, m, chol })
    }

    fn vec(&self, x: f64) -> DVector<f64> {
        let dim = 2 * self.m + 1;
        DVector::from_fn(dim, |k, _| sinc_basis(self.s, k as i64 - self.m as i64, x))
    }

    pub fn at(&self, x: f64, y: f64) -> f64 {
        let ey = self.vec(y);
        self.vec(x).dot(&self.chol.solve(&ey))
    }
}

/// Reproducing-kernel value at (x,y) with M doubled until it moves < 1e−4 (M ≤ 640).
pub fn mpw_kernel_oracle(s: f64, x: f64, y: f64, m: usize) -> Result<f64> {
    if x.abs() >= 1.0 || y.abs() >= 1.0 {
        return Err(Error::Domain(format!("x, y must lie in (-1,1), got {x}, {y}")));
    }
    let mut m = m.max(1);
    let mut prev = MpwKernel::new(s, m)?.at(x, y);
    while m < 640 {
        m *= 2;
        let v = MpwKernel::new(s, m)?.at(x, y);
        if (v - prev).abs() < 1e-4 {
            return Ok(v);
        }
        prev = v;
    }
    Err(Error::Truncation(format!("sinc basis not converged at M={m}")))
}

pub const SAMPLE: [f64; 5] = [-0.8, -0.4, 0.0, 0.4, 0.8];

#[derive(Debug, Clone, Copy)]
pub struct Comparison {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub resolvent: f64,
    pub repkernel: f64,
    pub rel_err: f64,
}

/// Resolvent vs reproducing kernel on the 5×5 sample grid.
pub fn compare_grid(s: f64, n: usize, m: usize) -> Result<Vec<Comparison>> {
    let res = dirichlet_resolvent(s, n)?;
    let mut out = Vec::new();
    let mut mm = m;
    let mut ker = MpwKernel::new(s, mm)?;
    // fix M once on the diagonal corner, where the basis converges slowest
    loop {
        let next = MpwKernel::new(s, 2 * mm)?;
        let moved = SAMPLE.iter().map(|&x| (next.at(x, x) - ker.at(x, x)).abs()).fold(0.0, f64::max);
        ker = next;
        mm *= 2;
        if moved < 1e-4 || mm >= 640 {
            break;
        }
    }
    for &x in &SAMPLE {
        for &y in &SAMPLE {
            let r = res.at(x, y);
            let k = ker.at(x, y);
            out.push(Comparison { s, x, y, resolvent: r, repkernel: k, rel_err: (r - k).abs() / r.abs() });
        }
    }
    Ok(out)
}

pub fn comparison_csv(rows: &[Comparison]) -> String {
    let mut out = String::from("s,x,y,resolvent,repkernel,rel_err\n");
    for c in rows {
        let _ = writeln!(out, "{},{},{},{:.17e},{:.17e},{:.6e}", c.s, c.x, c.y, c.resolvent, c.repkernel, c.rel_err);
    }
    out
}

/// X(x,t_j) − ∫₋₁¹ e_j X(x,·) − e_j(x), with X taken from the resolvent and extended off (−1,1)
/// by X(x,t) = D(x,t) + ∫₋₁¹X(x,u)D(u,t) du.
pub fn reproduction_residual(res: &ResolventDisc, x: f64, j: i64) -> f64 {
    let s = res.s;
    let tj = j as f64 * PI / s;
    let ext = |t: f64| {
        if t.abs() < 1.0 {
            return res.at(x, t);
        }
        sine_kernel(s, x, t)
            + res.nodes.iter().zip(&res.weights).map(|(&u, &w)| w * res.at(x, u) * sine_kernel(s, u, t)).sum::<f64>()
    };
    let inside: f64 = res.nodes.iter().zip(&res.weights).map(|(&u, &w)| w * sinc_basis(s, j, u) * res.at(x, u)).sum();
    ext(tj) - inside - sinc_basis(s, j, x)
}

/// X(x,y) − D(x,y) − ∫₋₁¹ X(x,t)D(t,y) dt with X from the sinc-basis kernel.
pub fn resolvent_equation_residual(ker: &MpwKernel, x: f64, y: f64) -> f64 {
    let rule = gauss_legendre(96);
    let int: f64 = rule.nodes.iter().zip(&rule.weights).map(|(&t, &w)| w * ker.at(x, t) * sine_kernel(ker.s, t, y)).sum();
    ker.at(x, y) - sine_kernel(ker.s, x, y) - int
}

pub fn comparison_reports(rows: &[Comparison], tol: f64) -> Vec<CheckReport> {
    rows.iter()
        .map(|c| {
            CheckReport::relative(
                "dirichlet.resolvent_kernel",
                params(&[("s", c.s), ("x", c.x), ("y", c.y)]),
                Complex::new(c.resolvent, 0.0),
                Complex::new(c.repkernel, 0.0),
                tol,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolvent_basics() {
        let r = dirichlet_resolvent(1.0, 64).unwrap();
        assert!(r.identity_residual() < 1e-10);
        assert!((r.at(0.3, -0.5) - r.at(-0.5, 0.3)).abs() < 1e-12);
        assert!(r.at(0.0, 0.0) > r.at(0.0, 0.9));
        assert!(r.at(0.0, 0.0) >= 1.0 / PI);
        let small = dirichlet_resolvent(1e-3, 64).unwrap();
        assert!((small.at(0.0, 0.0) / (1e-3 / PI) - 1.0).abs() < 1e-3);
        assert!(dirichlet_resolvent(30.0, 64).is_err());
    }

    #[test]
    fn kernel_matches_resolvent() {
        let res = dirichlet_resolvent(1.0, 200).unwrap();
        let k = mpw_kernel_oracle(1.0, 0.2, -0.4, 40).unwrap();
        let r = res.at(0.2, -0.4);
        assert!((k - r).abs() / r.abs() < 1e-3, "{k} {r}");
        for s in [0.5, 2.0] {
            let rows = compare_grid(s, 64, 40).unwrap();
            let worst = rows.iter().map(|c| c.rel_err).fold(0.0, f64::max);
            assert!(worst < 1e-3, "s={s} worst={worst}");
        }
    }

    #[test]
    fn reproduction() {
        let res = dirichlet_resolvent(1.0, 64).unwrap();
        for j in [-2, 0, 1, 3] {
            assert!(reproduction_residual(&res, 0.3, j).abs() < 1e-3);
        }
        let ker = MpwKernel::new(1.0, 80).unwrap();
        assert!(resolvent_equation_residual(&ker, 0.2, -0.4).abs() < 1e-3);
    }
}
