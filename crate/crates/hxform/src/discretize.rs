//! Grids, application of ℋ, Nyström operators and the φ/ψ solvers.

use crate::quad::{composite, gauss_legendre};
use crate::specfun::{i0_entire, i1_entire, j0, j1};
use crate::{Complex, Error, Result};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub const DEFAULT_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn f(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(format!("unknown sign '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub a: f64,
    pub n: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss–Legendre grid on (0, a).
pub fn make_grid(a: f64, n: usize) -> Result<Grid> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Bounds(format!("grid endpoint a={a} must be positive")));
    }
    if !(4..=4096).contains(&n) {
        return Err(Error::Bounds(format!("grid size n={n} outside [4, 4096]")));
    }
    let rule = gauss_legendre(n);
    let nodes = rule.nodes.iter().map(|t| 0.5 * a * (t + 1.0)).collect();
    let weights = rule.weights.iter().map(|w| 0.5 * a * w).collect();
    Ok(Grid { a, n, nodes, weights })
}

impl Grid {
    /// Composite grid on (0, b) with `panels` panels of `order` nodes each.
    pub fn composite(b: f64, panels: usize, order: usize) -> Result<Grid> {
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::Bounds(format!("grid endpoint b={b} must be positive")));
        }
        let n = panels * order;
        if !(4..=4096).contains(&n) {
            return Err(Error::Bounds(format!("grid size n={n} outside [4, 4096]")));
        }
        let (nodes, weights) = composite(0.0, b, panels, order);
        Ok(Grid { a: b, n, nodes, weights })
    }

    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    pub fn sample<F: Fn(f64) -> f64>(&self, f: F) -> GridFn {
        GridFn::real(self.clone(), self.nodes.iter().map(|&x| f(x)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFn {
    pub grid: Grid,
    pub values: Vec<Complex>,
}

impl GridFn {
    pub fn new(grid: Grid, values: Vec<Complex>) -> Result<GridFn> {
        if values.len() != grid.n {
            return Err(Error::Bounds(format!("{} values for {} nodes", values.len(), grid.n)));
        }
        Ok(GridFn { grid, values })
    }

    pub fn real(grid: Grid, values: Vec<f64>) -> GridFn {
        let values = values.into_iter().map(|v| Complex::new(v, 0.0)).collect();
        GridFn { grid, values }
    }

    pub fn re(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn integral(&self) -> Complex {
        self.grid.weights.iter().zip(&self.values).map(|(w, v)| v * w).sum()
    }

    /// Nyström interpolant of a solution of v ± H v = rhs, valid at any x ≥ 0.
    pub fn extend<F: Fn(f64) -> f64>(&self, sign: Sign, rhs: F, x: f64) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for ((y, w), v) in self.grid.nodes.iter().zip(&self.grid.weights).zip(&self.values) {
            acc += v * (w * kernel_standard(x * y));
        }
        Complex::new(rhs(x), 0.0) - acc * sign.f()
    }

    pub fn to_csv(&self) -> String {
        let complex = self.values.iter().any(|v| v.im != 0.0);
        let mut s = String::from(if complex { "x,re,im\n" } else { "x,re\n" });
        for (x, v) in self.grid.nodes.iter().zip(&self.values) {
            if complex {
                let _ = writeln!(s, "{x:.17e},{:.17e},{:.17e}", v.re, v.im);
            } else {
                let _ = writeln!(s, "{x:.17e},{:.17e}", v.re);
            }
        }
        s
    }
}

/// J₀(2√u).
pub fn kernel_standard(u: f64) -> f64 {
    j0(2.0 * u.max(0.0).sqrt())
}

/// Σ (−1)ⁿ n² uⁿ / ((n+1)!)².
pub fn kernel_extended(u: f64) -> f64 {
    if u.abs() < 2.0 {
        let mut term = 1.0;
        let mut sum = 0.0;
        for n in 1..60 {
            let nf = n as f64;
            term *= -u / (nf * nf);
            let t = term * nf * nf / ((nf + 1.0) * (nf + 1.0));
            sum += t;
            if t.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        let r = u.sqrt();
        let z = 2.0 * r;
        let j0v = j0(z);
        j0v - 2.0 * j1(z) / r + (1.0 - j0v) / u
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelId {
    Standard,
    Extended,
    Custom,
}

impl KernelId {
    pub fn name(self) -> &'static str {
        match self {
            KernelId::Standard => "standard",
            KernelId::Extended => "extended",
            KernelId::Custom => "custom",
        }
    }
}

impl std::str::FromStr for KernelId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "standard" => Ok(KernelId::Standard),
            "extended" => Ok(KernelId::Extended),
            "custom" => Ok(KernelId::Custom),
            _ => Err(format!("unknown kernel '{s}'")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct KernelOp {
    pub grid: Grid,
    pub kernel_id: KernelId,
    pub matrix: DMatrix<f64>,
    pub eigenvalues: Vec<f64>,
}

impl KernelOp {
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.first().map_or(0.0, |l| l.abs())
    }

    /// ∏(1 ± λᵢ).
    pub fn det(&self, sign: Sign) -> f64 {
        self.eigenvalues.iter().map(|l| 1.0 + sign.f() * l).product()
    }

    /// Σ log(1 ± λᵢ).
    pub fn log_det(&self, sign: Sign) -> f64 {
        self.eigenvalues.iter().map(|l| (1.0 + sign.f() * l).ln()).sum()
    }

    /// Solves v ± K v = rhs on the grid nodes.
    pub fn solve(&self, sign: Sign, rhs: &[f64]) -> Result<Vec<f64>> {
        let n = self.grid.n;
        let sw: Vec<f64> = self.grid.weights.iter().map(|w| w.sqrt()).collect();
        let mut m = self.matrix.scale(sign.f());
        for i in 0..n {
            m[(i, i)] += 1.0;
        }
        let b = DVector::from_iterator(n, rhs.iter().zip(&sw).map(|(r, s)| r * s));
        let lu = m.lu();
        let sol = lu
            .solve(&b)
            .ok_or_else(|| Error::Singular(format!("1 {} K on n={n}", sign.symbol())))?;
        if sol.iter().any(|v| !v.is_finite()) {
            return Err(Error::Singular("non-finite solution".into()));
        }
        Ok(sol.iter().zip(&sw).map(|(v, s)| v / s).collect())
    }
}

pub fn nystrom(a: f64, n: usize, kernel_id: KernelId) -> Result<KernelOp> {
    let grid = make_grid(a, n)?;
    match kernel_id {
        KernelId::Standard => nystrom_with(grid, kernel_id, kernel_standard),
        KernelId::Extended => nystrom_with(grid, kernel_id, kernel_extended),
        KernelId::Custom => Err(Error::Domain("custom kernels need nystrom_with".into())),
    }
}

/// Symmetrized matrix √(wᵢwⱼ)·k(xᵢxⱼ) and its eigenvalues.
pub fn nystrom_with<K: Fn(f64) -> f64>(grid: Grid, kernel_id: KernelId, k: K) -> Result<KernelOp> {
    let n = grid.n;
    let sw: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
    let mut matrix = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = sw[i] * sw[j] * k(grid.nodes[i] * grid.nodes[j]);
            matrix[(i, j)] = v;
            matrix[(j, i)] = v;
        }
    }
    if matrix.iter().any(|v| !v.is_finite()) {
        return Err(Error::Eigen("non-finite kernel entries".into()));
    }
    let eig = matrix.clone().symmetric_eigen();
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    if eigenvalues.iter().any(|v| !v.is_finite()) {
        return Err(Error::Eigen("non-finite eigenvalues".into()));
    }
    eigenvalues.sort_by(|x, y| y.abs().total_cmp(&x.abs()));
    Ok(KernelOp { grid, kernel_id, matrix, eigenvalues })
}

/// (ℋf)(x) = ∫ J₀(2√(xy)) f(y) dy by the quadrature of f's grid.
pub fn apply_h(f: &GridFn, x_out: &[f64]) -> Vec<Complex> {
    x_out
        .iter()
        .map(|&x| {
            let mut acc = Complex::new(0.0, 0.0);
            for ((y, w), v) in f.grid.nodes.iter().zip(&f.grid.weights).zip(&f.values) {
                acc += v * (w * kernel_standard(x * y));
            }
            acc
        })
        .collect()
}

/// ℋf for |f(y)| ≲ e^{−rate·y}: truncates where the tail is below 1e−10 and
/// resolves the kernel oscillation up to the largest requested x.
pub fn apply_h_decaying<F: Fn(f64) -> f64>(f: F, rate: f64, x_out: &[f64]) -> Result<Vec<f64>> {
    if !(rate > 0.0) {
        return Err(Error::Domain(format!("decay rate {rate} must be positive")));
    }
    let b = (10.0 * std::f64::consts::LN_10 + 2.0) / rate;
    let xmax = x_out.iter().copied().fold(0.0, f64::max);
    let osc = 2.0 * (xmax * b).sqrt() / std::f64::consts::PI;
    let panels = ((osc / 2.0).ceil() as usize + 8).min(4096 / 24);
    let grid = Grid::composite(b, panels, 24)?;
    let gf = grid.sample(f);
    Ok(apply_h(&gf, x_out).into_iter().map(|v| v.re).collect())
}

fn check_grid(a: f64, grid: &Grid) -> Result<()> {
    if (grid.a - a).abs() > 1e-14 * a.max(1.0) {
        return Err(Error::Bounds(format!("grid on (0,{}) used for a={a}", grid.a)));
    }
    Ok(())
}

fn standard_op(grid: &Grid) -> Result<KernelOp> {
    nystrom_with(grid.clone(), KernelId::Standard, kernel_standard)
}

/// φ ± H_a φ = J₀(2√(a·)).
pub fn solve_phi(a: f64, sign: Sign, grid: &Grid) -> Result<GridFn> {
    check_grid(a, grid)?;
    let op = standard_op(grid)?;
    let rhs: Vec<f64> = grid.nodes.iter().map(|&x| kernel_standard(a * x)).collect();
    Ok(GridFn::real(grid.clone(), op.solve(sign, &rhs)?))
}

/// ψ ± H_a ψ = 1.
pub fn solve_psi(a: f64, sign: Sign, grid: &Grid) -> Result<GridFn> {
    check_grid(a, grid)?;
    let op = standard_op(grid)?;
    let rhs = vec![1.0; grid.n];
    Ok(GridFn::real(grid.clone(), op.solve(sign, &rhs)?))
}

/// φ_a^±(x) = I₀(2√(a(a−x))) ∓ a·I₁(2√(a(a−x)))/√(a(a−x)).
pub fn closed_phi(a: f64, sign: Sign, x: f64) -> f64 {
    let z = a * (a - x);
    i0_entire(z) - sign.f() * a * i1_entire(z)
}

/// ψ_a^±(a) from the Nyström interpolant.
pub fn psi_at_endpoint(a: f64, sign: Sign, n: usize) -> Result<f64> {
    let grid = make_grid(a, n)?;
    let psi = solve_psi(a, sign, &grid)?;
    Ok(psi.extend(sign, |_| 1.0, a).re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{i0, i1};

    #[test]
    fn grid_invariants() {
        let g = make_grid(2.0, 16).unwrap();
        let s: f64 = g.weights.iter().sum();
        assert!((s - 2.0).abs() < 1e-13);
        assert!(g.nodes.windows(2).all(|w| w[0] < w[1]));
        let v = g.integrate(&g.nodes.iter().map(|x| x * x).collect::<Vec<_>>());
        assert!((v - 8.0 / 3.0).abs() < 1e-12);
        assert!(make_grid(1.0, 3).is_err());
        assert!(make_grid(-1.0, 8).is_err());
    }

    #[test]
    fn kernel_integral() {
        let g = make_grid(1.0, 64).unwrap();
        let v = g.integrate(&g.nodes.iter().map(|&x| kernel_standard(x)).collect::<Vec<_>>());
        assert!((v - j1(2.0)).abs() < 1e-13);
    }

    #[test]
    fn self_reciprocal_exponentials() {
        let v = apply_h_decaying(|y| (-y).exp(), 1.0, &[1.0]).unwrap();
        assert!((v[0] - (-1f64).exp()).abs() < 1e-8);
        let v = apply_h_decaying(|y| (-2.0 * y).exp(), 2.0, &[1.0]).unwrap();
        assert!((v[0] - 0.5 * (-0.5f64).exp()).abs() < 1e-8);
    }

    #[test]
    fn extended_kernel_branches_agree() {
        for u in [1.9, 2.0, 2.1, 5.0] {
            let mut term = 1.0;
            let mut sum = 0.0;
            for n in 1..80 {
                let nf = n as f64;
                term *= -u / (nf * nf);
                sum += term * nf * nf / ((nf + 1.0) * (nf + 1.0));
            }
            assert!((kernel_extended(u) - sum).abs() < 1e-12, "u={u}");
        }
        assert_eq!(kernel_extended(0.0), 0.0);
    }

    #[test]
    fn phi_matches_closed_form() {
        for a in [0.25, 0.5, 1.0, 2.0] {
            let g = make_grid(a, 64).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let phi = solve_phi(a, sign, &g).unwrap();
                for (x, v) in g.nodes.iter().zip(&phi.values) {
                    assert!((v.re - closed_phi(a, sign, *x)).abs() < 1e-8);
                }
                let end = phi.extend(sign, |x| kernel_standard(a * x), a).re;
                assert!((end - (1.0 - sign.f() * a)).abs() < 1e-8);
            }
        }
        assert!((closed_phi(1.0, Sign::Plus, 0.0) - (i0(2.0) - i1(2.0))).abs() < 1e-14);
    }

    #[test]
    fn mean_identities() {
        for a in [0.5, 1.0, 2.0] {
            let g = make_grid(a, 64).unwrap();
            let p = solve_phi(a, Sign::Plus, &g).unwrap().integral().re;
            let m = solve_phi(a, Sign::Minus, &g).unwrap().integral().re;
            assert!((1.0 + 0.5 * (m - p) - i0(2.0 * a)).abs() < 1e-8 * i0(2.0 * a));
            assert!((0.5 * (p + m) - i1(2.0 * a)).abs() < 1e-8 * i1(2.0 * a));
        }
    }
}
