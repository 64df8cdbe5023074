use hxform::discretize::{make_grid, nystrom, KernelId, Sign};
use hxform::fredholm::{det_closed, log_det_closed};
use hxform::report::CheckReport;
use hxform::specfun::{bessel_k_complex, gamma_complex, i0_entire};
use hxform::{dirichlet, extended, scattering, spectral, Complex};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn rel(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn k_is_even_in_order(re in -3.0..3.0f64, im in -5.0..5.0f64, x in 0.1..20.0f64) {
        let s = c(re, im);
        let k1 = bessel_k_complex(s, x).unwrap();
        let k2 = bessel_k_complex(-s, x).unwrap();
        prop_assert!(rel(k1, k2) <= 1e-10, "{k1} {k2}");
    }

    #[test]
    fn k_order_recurrence(re in -3.0..3.0f64, im in -5.0..5.0f64, x in 0.1..20.0f64) {
        let s = c(re, im);
        let one = c(1.0, 0.0);
        let lhs = bessel_k_complex(s - one, x).unwrap() - bessel_k_complex(s + one, x).unwrap();
        let rhs = -(s * 2.0 / x) * bessel_k_complex(s, x).unwrap();
        let scale = bessel_k_complex(s + one, x).unwrap().norm();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * scale.max(rhs.norm()));
    }

    #[test]
    fn gamma_recurrence(re in -4.5..6.0f64, im in 0.05..10.0f64) {
        let s = c(re, im);
        let g1 = gamma_complex(s + 1.0).unwrap();
        let g0 = gamma_complex(s).unwrap();
        prop_assert!(rel(g1, s * g0) <= 1e-12);
    }

    #[test]
    fn gamma_conjugate_symmetry(re in -4.5..6.0f64, im in 0.05..10.0f64) {
        let s = c(re, im);
        prop_assert!(rel(gamma_complex(s.conj()).unwrap(), gamma_complex(s).unwrap().conj()) <= 1e-14);
    }

    #[test]
    fn grid_is_a_quadrature_on_the_interval(a in 0.05..8.0f64, n in 4usize..160) {
        let g = make_grid(a, n).unwrap();
        prop_assert_eq!(g.nodes.len(), n);
        prop_assert!(g.nodes.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.nodes[0] > 0.0 && g.nodes[n - 1] < a);
        prop_assert!(g.weights.iter().all(|&w| w > 0.0));
        let sum: f64 = g.weights.iter().sum();
        prop_assert!((sum - a).abs() <= 1e-12 * a);
    }

    #[test]
    fn chi_reflection(re in -2.0..3.0f64, im in 0.1..6.0f64) {
        let s = c(re, im);
        let one = c(1.0, 0.0);
        let p = spectral::chi(s).unwrap() * spectral::chi(one - s).unwrap();
        prop_assert!(rel(p, one) <= 1e-12);
    }

    #[test]
    fn a_and_b_from_e(a in 0.1..4.0f64, re in -2.0..3.0f64, im in -6.0..6.0f64) {
        let s = c(re, im);
        let one = c(1.0, 0.0);
        let sp = spectral::spectral_point(a, s).unwrap();
        let e = spectral::cal_e(a, s).unwrap();
        let e1 = spectral::cal_e(a, one - s).unwrap();
        let scale = e.norm().max(e1.norm());
        prop_assert!((sp.A * 2.0 - (e + e1)).norm() <= 1e-12 * scale);
        prop_assert!((sp.B * c(0.0, -2.0) - (e - e1)).norm() <= 1e-12 * scale);
    }

    #[test]
    fn e_dominates_its_reflection(a in 0.1..4.0f64, re in 0.55..4.0f64, im in -8.0..8.0f64) {
        let s = c(re, im);
        let e = spectral::cal_e(a, s).unwrap();
        let e1 = spectral::cal_e(a, c(1.0, 0.0) - s).unwrap();
        prop_assert!(e.norm() > e1.norm());
    }

    #[test]
    fn phase_is_odd(g in 0.0..30.0f64) {
        prop_assert!((scattering::phase(g) + scattering::phase(-g)).abs() <= 1e-12 * (1.0 + scattering::phase(g).abs()));
    }

    #[test]
    fn extended_gram_inverse(a in 0.05..6.0f64) {
        let st = extended::ext_state(a);
        prop_assert!((st.p * st.alpha - st.q * st.beta - 1.0).abs() <= 1e-12);
        prop_assert!(st.p > st.q.abs());
    }

    #[test]
    fn sine_kernel_resolvent_is_symmetric(x in -0.95..0.95f64, y in -0.95..0.95f64) {
        let r = dirichlet::dirichlet_resolvent(1.0, 48).unwrap();
        prop_assert!((r.at(x, y) - r.at(y, x)).abs() <= 1e-12 * r.at(x, y).abs().max(1e-3));
    }

    #[test]
    fn report_pass_matches_errors(l in -10.0..10.0f64, r in -10.0..10.0f64, tol in 1e-6..1.0f64) {
        let rep = CheckReport::real("p", Default::default(), l, r, tol);
        prop_assert_eq!(rep.pass, rep.abs_err <= tol || rep.rel_err <= tol);
        prop_assert_eq!(rep.abs_err, (l - r).abs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn det_matches_closed_form(a in 0.1..3.0f64) {
        let op = nystrom(a, 64, KernelId::Standard).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let d = op.det(sign);
            prop_assert!((d / det_closed(a, sign, KernelId::Standard) - 1.0).abs() <= 1e-8);
            prop_assert!((op.log_det(sign) - log_det_closed(a, sign)).abs() <= 1e-8);
        }
    }

    #[test]
    fn det_d_factorizes(a in 0.1..2.5f64) {
        // D(x,y) = ∫₀^a J₀(2√(xt))J₀(2√(ty)) dt is the square of H_a, so det(1−D) = det₊·det₋
        let grid = make_grid(a, 48).unwrap();
        let sw: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
        let m = nalgebra::DMatrix::from_fn(48, 48, |i, j| {
            let (x, y) = (grid.nodes[i], grid.nodes[j]);
            let d: f64 = grid.nodes.iter().zip(&grid.weights).map(|(t, w)| w * i0_entire(-x * t) * i0_entire(-t * y)).sum();
            (if i == j { 1.0 } else { 0.0 }) - sw[i] * sw[j] * d
        });
        let want = det_closed(a, Sign::Plus, KernelId::Standard) * det_closed(a, Sign::Minus, KernelId::Standard);
        prop_assert!((m.determinant() / want - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn extended_det_matches_closed_form(a in 0.1..2.0f64) {
        for sign in [Sign::Plus, Sign::Minus] {
            let v = extended::ext_det_nystrom(a, sign, 64).unwrap();
            prop_assert!((v / extended::ext_det_closed(a, sign) - 1.0).abs() <= 1e-6);
        }
    }
}
