//! Check reports, suite results and tolerance profiles.

use crate::Complex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type Params = BTreeMap<String, f64>;

pub fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub params: Params,
    pub lhs: Complex,
    pub rhs: Complex,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(id: impl Into<String>, params: Params, lhs: Complex, rhs: Complex, tol: f64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_err = if scale > 0.0 {
            abs_err / scale
        } else if abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        let pass = abs_err.is_finite() && (abs_err <= tol || rel_err <= tol);
        CheckReport { id: id.into(), params, lhs, rhs, abs_err, rel_err, tol, pass }
    }

    pub fn real(id: impl Into<String>, params: Params, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::new(id, params, Complex::new(lhs, 0.0), Complex::new(rhs, 0.0), tol)
    }

    /// Pass decided on relative error only.
    pub fn relative(id: impl Into<String>, params: Params, lhs: Complex, rhs: Complex, tol: f64) -> Self {
        let mut r = Self::new(id, params, lhs, rhs, tol);
        r.pass = r.rel_err.is_finite() && r.rel_err <= tol;
        r
    }

    /// Pass decided on absolute error only.
    pub fn absolute(id: impl Into<String>, params: Params, lhs: Complex, rhs: Complex, tol: f64) -> Self {
        let mut r = Self::new(id, params, lhs, rhs, tol);
        r.pass = r.abs_err.is_finite() && r.abs_err <= tol;
        r
    }

    /// A check whose computation failed; recorded as a failing case.
    pub fn failed(id: impl Into<String>, params: Params, tol: f64) -> Self {
        let nan = Complex::new(f64::NAN, f64::NAN);
        CheckReport {
            id: id.into(),
            params,
            lhs: nan,
            rhs: nan,
            abs_err: f64::INFINITY,
            rel_err: f64::INFINITY,
            tol,
            pass: false,
        }
    }

    pub fn params_string(&self) -> String {
        let mut s = String::new();
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                s.push(';');
            }
            let _ = write!(s, "{k}={v}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: Vec<CheckReport>,
    pub summary: Summary,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>, mut cases: Vec<CheckReport>, seconds: f64) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params_string().cmp(&b.params_string())));
        let pass = cases.iter().filter(|c| c.pass).count();
        let fail = cases.len() - pass;
        SuiteResult { suite: suite.into(), cases, summary: Summary { pass, fail, seconds } }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    /// JSON with the wall time zeroed, for byte-stable output.
    pub fn to_json(&self, include_time: bool) -> String {
        let v = serde_json::json!({
            "suite": self.suite,
            "cases": self.cases.iter().map(case_json).collect::<Vec<_>>(),
            "summary": {
                "pass": self.summary.pass,
                "fail": self.summary.fail,
                "seconds": if include_time { self.summary.seconds } else { 0.0 },
            }
        });
        serde_json::to_string_pretty(&v).unwrap_or_default()
    }

    pub fn to_csv(&self) -> String {
        reports_csv(&self.cases)
    }
}

fn num(x: f64) -> serde_json::Value {
    if x.is_finite() {
        serde_json::json!(x)
    } else {
        serde_json::json!(format!("{x}"))
    }
}

fn case_json(c: &CheckReport) -> serde_json::Value {
    serde_json::json!({
        "id": c.id,
        "params": c.params,
        "lhs": {"re": num(c.lhs.re), "im": num(c.lhs.im)},
        "rhs": {"re": num(c.rhs.re), "im": num(c.rhs.im)},
        "abs_err": num(c.abs_err),
        "rel_err": num(c.rel_err),
        "tol": c.tol,
        "pass": c.pass,
    })
}

pub fn reports_csv(cases: &[CheckReport]) -> String {
    let mut s = String::from("id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass\n");
    for c in cases {
        let _ = writeln!(
            s,
            "{},{},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{}",
            c.id,
            c.params_string(),
            c.lhs.re,
            c.lhs.im,
            c.rhs.re,
            c.rhs.im,
            c.abs_err,
            c.rel_err,
            c.tol,
            c.pass
        );
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Profile {
    Default,
    Strict,
    Fast,
}

impl std::str::FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "default" => Ok(Profile::Default),
            "strict" => Ok(Profile::Strict),
            "fast" => Ok(Profile::Fast),
            _ => Err(format!("unknown tolerance profile '{s}'")),
        }
    }
}

/// Every tolerance used by the verification suites.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    pub n: usize,
    pub specfun_rel: f64,
    pub grid_rel: f64,
    pub det_rel: f64,
    pub phi_abs: f64,
    pub rs_rel: f64,
    pub mu_fd_abs: f64,
    pub log_det_deriv_abs: f64,
    pub mu_sq_abs: f64,
    pub gaudin_abs: f64,
    pub unitarity_rel: f64,
    pub reciprocity_abs: f64,
    pub kernel_rel: f64,
    pub chi_rel: f64,
    pub mellin_rel: f64,
    pub eq71_rel: f64,
    pub norm_rel: f64,
    pub symmetry_abs: f64,
    pub identity_abs: f64,
    pub oscill_abs: f64,
    pub group_abs: f64,
    pub hyper_abs: f64,
    pub ode_rel: f64,
    pub jost_rel: f64,
    pub jost_limit_abs: f64,
    pub ortho_rel: f64,
    pub ext_fd_abs: f64,
    pub ext_exact: f64,
    pub ext_det_rel: f64,
    pub ext_norm_rel: f64,
    pub mu_ext_abs: f64,
    pub ykernel_rel: f64,
    pub ext_dirac_abs: f64,
    pub ext_reciprocity_abs: f64,
    pub parseval_rel: f64,
    pub roundtrip_abs: f64,
    pub involution_abs: f64,
    pub membership_abs: f64,
    pub laplace_rel: f64,
    pub laguerre_abs: f64,
    pub dirichlet_rel: f64,
}

impl Tolerances {
    pub fn profile(p: Profile) -> Self {
        let base = Tolerances {
            n: 64,
            specfun_rel: 1e-10,
            grid_rel: 1e-12,
            det_rel: 1e-8,
            phi_abs: 1e-8,
            rs_rel: 1e-8,
            mu_fd_abs: 1e-4,
            log_det_deriv_abs: 1e-5,
            mu_sq_abs: 1e-3,
            gaudin_abs: 1e-10,
            unitarity_rel: 1e-8,
            reciprocity_abs: 1e-6,
            kernel_rel: 1e-6,
            chi_rel: 1e-6,
            mellin_rel: 1e-6,
            eq71_rel: 1e-6,
            norm_rel: 1e-8,
            symmetry_abs: 1e-12,
            identity_abs: 1e-7,
            oscill_abs: 1e-6,
            group_abs: 1e-7,
            hyper_abs: 1e-3,
            ode_rel: 1e-6,
            jost_rel: 1e-6,
            jost_limit_abs: 1e-2,
            ortho_rel: 1e-4,
            ext_fd_abs: 1e-6,
            ext_exact: 1e-12,
            ext_det_rel: 1e-6,
            ext_norm_rel: 1e-6,
            mu_ext_abs: 0.05,
            ykernel_rel: 1e-8,
            ext_dirac_abs: 1e-4,
            ext_reciprocity_abs: 1e-5,
            parseval_rel: 1e-6,
            roundtrip_abs: 1e-6,
            involution_abs: 1e-5,
            membership_abs: 1e-5,
            laplace_rel: 1e-5,
            laguerre_abs: 1e-4,
            dirichlet_rel: 1e-3,
        };
        match p {
            Profile::Default => base,
            Profile::Strict => base.scaled(0.1, 96),
            Profile::Fast => base.scaled(10.0, 48),
        }
    }

    fn scaled(self, f: f64, n: usize) -> Self {
        let mut t = self;
        t.n = n;
        for v in [
            &mut t.specfun_rel,
            &mut t.grid_rel,
            &mut t.det_rel,
            &mut t.phi_abs,
            &mut t.rs_rel,
            &mut t.mu_fd_abs,
            &mut t.log_det_deriv_abs,
            &mut t.mu_sq_abs,
            &mut t.gaudin_abs,
            &mut t.unitarity_rel,
            &mut t.reciprocity_abs,
            &mut t.kernel_rel,
            &mut t.chi_rel,
            &mut t.mellin_rel,
            &mut t.eq71_rel,
            &mut t.norm_rel,
            &mut t.symmetry_abs,
            &mut t.identity_abs,
            &mut t.oscill_abs,
            &mut t.group_abs,
            &mut t.hyper_abs,
            &mut t.ode_rel,
            &mut t.jost_rel,
            &mut t.jost_limit_abs,
            &mut t.ortho_rel,
            &mut t.ext_fd_abs,
            &mut t.ext_exact,
            &mut t.ext_det_rel,
            &mut t.ext_norm_rel,
            &mut t.mu_ext_abs,
            &mut t.ykernel_rel,
            &mut t.ext_dirac_abs,
            &mut t.ext_reciprocity_abs,
            &mut t.parseval_rel,
            &mut t.roundtrip_abs,
            &mut t.involution_abs,
            &mut t.membership_abs,
            &mut t.laplace_rel,
            &mut t.laguerre_abs,
            &mut t.dirichlet_rel,
        ] {
            *v *= f;
        }
        t
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::profile(Profile::Default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_abs_or_rel() {
        let r = CheckReport::real("x", params(&[]), 1000.0, 1000.5, 1e-3);
        assert!(r.pass);
        let r = CheckReport::real("x", params(&[]), 1e-9, 0.0, 1e-8);
        assert!(r.pass);
        let r = CheckReport::real("x", params(&[]), 1.0, 2.0, 1e-3);
        assert!(!r.pass);
    }

    #[test]
    fn suite_sorted_and_counted() {
        let cases = vec![
            CheckReport::real("b", params(&[]), 1.0, 1.0, 1e-9),
            CheckReport::real("a", params(&[]), 1.0, 2.0, 1e-9),
        ];
        let s = SuiteResult::new("t", cases, 0.0);
        assert_eq!(s.cases[0].id, "a");
        assert_eq!(s.summary.pass, 1);
        assert_eq!(s.summary.fail, 1);
        assert!(s.to_csv().starts_with("id,params,lhs_re"));
    }
}
