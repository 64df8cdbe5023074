//! Gauss–Legendre rules and composite panel integration.

use crate::Complex;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes and weights on [-1, 1], nodes ascending.
#[derive(Debug, Clone)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Rule>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Rule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss–Legendre rule of order `n` by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Arc<Rule> {
    assert!(n >= 1);
    if let Some(r) = cache().lock().unwrap().get(&n) {
        return r.clone();
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pd(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-14 {
                let (p, d) = legendre_pd(n, x);
                x -= p / d;
                dp = d;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let rule = Arc::new(Rule { nodes, weights });
    cache().lock().unwrap().insert(n, rule.clone());
    rule
}

fn legendre_pd(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes and weights of a composite rule: `panels` equal panels of order `order` on [a, b].
pub fn composite(a: f64, b: f64, panels: usize, order: usize) -> (Vec<f64>, Vec<f64>) {
    let rule = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut xs = Vec::with_capacity(panels * order);
    let mut ws = Vec::with_capacity(panels * order);
    for p in 0..panels {
        let lo = a + h * p as f64;
        let mid = lo + 0.5 * h;
        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
            xs.push(mid + 0.5 * h * t);
            ws.push(0.5 * h * w);
        }
    }
    (xs, ws)
}

/// Composite rule over consecutive breakpoints.
pub fn composite_breaks(breaks: &[f64], order: usize) -> (Vec<f64>, Vec<f64>) {
    let rule = gauss_legendre(order);
    let mut xs = Vec::new();
    let mut ws = Vec::new();
    for win in breaks.windows(2) {
        let (lo, hi) = (win[0], win[1]);
        let mid = 0.5 * (lo + hi);
        let h = hi - lo;
        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
            xs.push(mid + 0.5 * h * t);
            ws.push(0.5 * h * w);
        }
    }
    (xs, ws)
}

pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let rule = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        let mut s = 0.0;
        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
            s += w * f(mid + 0.5 * h * t);
        }
        sum += 0.5 * h * s;
    }
    sum
}

pub fn integrate_c<F: FnMut(f64) -> Complex>(
    mut f: F,
    a: f64,
    b: f64,
    panels: usize,
    order: usize,
) -> Complex {
    let rule = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut sum = Complex::new(0.0, 0.0);
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        let mut s = Complex::new(0.0, 0.0);
        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
            s += f(mid + 0.5 * h * t) * *w;
        }
        sum += s * (0.5 * h);
    }
    sum
}

/// Panel count so that each panel is at most `width` long.
pub fn panels_for(a: f64, b: f64, width: f64) -> usize {
    (((b - a).abs() / width).ceil() as usize).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 16, 64, 257] {
            let r = gauss_legendre(n);
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n} sum={s}");
        }
    }

    #[test]
    fn exact_for_polynomials() {
        let r = gauss_legendre(6);
        let v: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.powi(10)).sum();
        assert!((v - 2.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn composite_exp() {
        let v = integrate(|x| x.exp(), 0.0, 3.0, 4, 12);
        assert!((v - (3f64.exp() - 1.0)).abs() < 1e-12);
    }
}
