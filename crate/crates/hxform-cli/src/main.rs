use clap::{Args, Parser, Subcommand, ValueEnum};
use hxform::discretize::{closed_phi, make_grid, solve_phi, KernelId, Sign};
use hxform::report::{params, CheckReport, Profile, SuiteResult, Tolerances};
use hxform::suite::{run_suite, SUITES};
use hxform::{dirichlet, expansion, extended, fredholm, scattering, spectral, Complex};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

/// Default directory for reports when `--out` is not given.
const OUT_DIR_ENV: &str = "HXFORM_OUT_DIR";

#[derive(Parser)]
#[command(name = "hxform", version, about = "Numerical checks for the J0 Hankel-type transform and its determinants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    /// Interval length a.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    a: f64,
    /// Quadrature nodes.
    #[arg(long, default_value_t = 64)]
    n: usize,
    /// Spectral parameter, `re` or `re,im`.
    #[arg(long, default_value = "0.5", value_parser = parse_complex, allow_hyphen_values = true)]
    s: Complex,
    /// Tolerance override for this command's checks.
    #[arg(long)]
    tol: Option<f64>,
    /// Output file; defaults to $HXFORM_OUT_DIR/<command>.<ext>, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "default", value_parser = parse_profile)]
    tol_profile: Profile,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fredholm determinants det(1 ± H_a).
    Det {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "standard", value_parser = parse_kernel)]
        kernel: KernelId,
    },
    /// Solutions of φ ± H_a φ = J₀(2√(a·)) on the grid.
    Phi {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
    },
    /// μ(a) closed form and finite difference.
    Mu {
        #[command(flatten)]
        c: Common,
    },
    /// 𝒜, ℬ, ℰ at (a, s).
    Spectral {
        #[command(flatten)]
        c: Common,
    },
    /// Reproducing kernel at (a, s, z).
    Kernel {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "0.7", value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex,
        /// Also run the quadrature oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Identity catalog with seeded parameter draws.
    Identities {
        #[command(flatten)]
        c: Common,
    },
    /// Extended state, determinants and μ^ext.
    Extended {
        #[command(flatten)]
        c: Common,
    },
    /// Zeros of ℬ on the critical line and Jost data at s.
    Scatter {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value_t = 12.0)]
        gamma_max: f64,
    },
    /// Forward expansion of a built-in test function.
    Expand {
        #[command(flatten)]
        c: Common,
        #[arg(long, value_enum, default_value_t = TestFn::Bump)]
        k: TestFn,
    },
    /// Sine-kernel resolvent against the sinc-basis kernel.
    Dirichlet {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value_t = 40)]
        m: usize,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Include wall time in the JSON summary.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TestFn {
    /// exp(−(x−3)²/0.5) on (0, 7.5).
    Bump,
    /// e^{−x} on (0, 40).
    Exp,
    /// x·e^{−x} on (0, 45).
    Xexp,
}

fn parse_complex(s: &str) -> Result<Complex, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("bad number '{t}': {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex::new(num(re)?, num(im)?)),
        _ => Err(format!("expected re[,im], got '{s}'")),
    }
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse()
}

fn parse_kernel(s: &str) -> Result<KernelId, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse()
}

fn cj(z: Complex) -> Value {
    json!({ "re": z.re, "im": z.im })
}

/// Payload plus the checks that decide the exit code.
struct Output {
    name: &'static str,
    json: Value,
    csv: String,
    checks: Vec<CheckReport>,
    /// Failures already counted inside `json`.
    suite_fail: usize,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv.clone(),
            Format::Json => {
                let mut v = self.json.clone();
                if !self.checks.is_empty() {
                    let sr = SuiteResult::new(self.name, self.checks.clone(), 0.0);
                    let parsed: Value = serde_json::from_str(&sr.to_json(false)).unwrap_or(Value::Null);
                    v["checks"] = parsed["cases"].clone();
                    v["summary"] = json!({ "pass": sr.summary.pass, "fail": sr.summary.fail });
                }
                serde_json::to_string_pretty(&v).unwrap_or_default() + "\n"
            }
        }
    }
}

fn suite_output(name: &'static str, sr: SuiteResult, timing: bool) -> Output {
    let json: Value = serde_json::from_str(&sr.to_json(timing)).unwrap_or(Value::Null);
    Output { name, json, csv: sr.to_csv(), checks: Vec::new(), suite_fail: sr.summary.fail }
}

impl Output {
    fn failed(&self) -> bool {
        self.suite_fail > 0 || self.checks.iter().any(|c| !c.pass)
    }
}

fn run(cmd: Cmd) -> hxform::Result<(Output, Common)> {
    match cmd {
        Cmd::Det { c, kernel } => {
            let t = tols(&c);
            let tol = c.tol.unwrap_or(if kernel == KernelId::Extended { t.ext_det_rel } else { t.det_rel });
            let rec = fredholm::det_record(c.a, kernel, c.n)?;
            let mut checks = Vec::new();
            if kernel != KernelId::Custom {
                for (sign, v, cl) in [(Sign::Plus, rec.det_plus, rec.closed_plus), (Sign::Minus, rec.det_minus, rec.closed_minus)] {
                    checks.push(CheckReport::real("det", params(&[("a", c.a), ("n", c.n as f64), ("sign", sign.f())]), v, cl, tol));
                }
            }
            let csv = format!(
                "a,kernel,n,det_plus,det_minus,closed_plus,closed_minus\n{},{},{},{:.17e},{:.17e},{:.17e},{:.17e}\n",
                c.a,
                kernel.name(),
                c.n,
                rec.det_plus,
                rec.det_minus,
                rec.closed_plus,
                rec.closed_minus
            );
            let mut json = rec.to_json();
            json["n"] = json!(c.n);
            Ok((Output { name: "det", json, csv, checks, suite_fail: 0 }, c))
        }
        Cmd::Phi { c, sign } => {
            let tol = c.tol.unwrap_or(tols(&c).phi_abs);
            let grid = make_grid(c.a, c.n)?;
            let phi = solve_phi(c.a, sign, &grid)?;
            let a = c.a;
            let closed: Vec<f64> = grid.nodes.iter().map(|&x| closed_phi(a, sign, x)).collect();
            let err = phi.values.iter().zip(&closed).map(|(v, w)| (v - w).norm()).fold(0.0, f64::max);
            let end = phi.extend(sign, |t| hxform::specfun::i0_entire(-a * t), a);
            let pr = params(&[("a", a), ("sign", sign.f())]);
            let checks = vec![
                CheckReport::real("phi.nodes", pr.clone(), err, 0.0, tol),
                CheckReport::absolute("phi.endpoint", pr, end, Complex::new(1.0 - sign.f() * a, 0.0), tol),
            ];
            let json = json!({
                "a": a,
                "sign": sign.symbol(),
                "n": c.n,
                "nodes": grid.nodes,
                "values": phi.values.iter().map(|v| v.re).collect::<Vec<_>>(),
                "closed": closed,
                "max_abs_err": err,
                "endpoint": end.re,
            });
            Ok((Output { name: "phi", json, csv: phi.to_csv(), checks, suite_fail: 0 }, c))
        }
        Cmd::Mu { c } => {
            let tol = c.tol.unwrap_or(tols(&c).mu_fd_abs);
            let m = fredholm::mu(c.a)?;
            let fd = fredholm::mu_fd(c.a, c.n)?;
            let checks = vec![CheckReport::real("mu.fd", params(&[("a", c.a)]), fd, m, tol)];
            let json = json!({ "a": c.a, "mu": m, "mu_fd": fd, "abs_err": (fd - m).abs() });
            let csv = format!("a,mu,mu_fd\n{},{:.17e},{:.17e}\n", c.a, m, fd);
            Ok((Output { name: "mu", json, csv, checks, suite_fail: 0 }, c))
        }
        Cmd::Spectral { c } => {
            let p = spectral::spectral_point(c.a, c.s)?;
            let json = json!({ "a": c.a, "s": cj(c.s), "A": cj(p.A), "B": cj(p.B), "E": cj(p.E) });
            Ok((Output { name: "spectral", json, csv: spectral::sweep_csv(&[p]), checks: Vec::new(), suite_fail: 0 }, c))
        }
        Cmd::Kernel { c, z, oracle } => {
            let tol = c.tol.unwrap_or(tols(&c).kernel_rel);
            let k = spectral::rep_kernel(c.a, c.s, z)?;
            let mut json = json!({ "a": c.a, "s": cj(c.s), "z": cj(z), "kernel": cj(k) });
            let mut checks = Vec::new();
            let mut csv = String::from("a,s_re,s_im,z_re,z_im,kernel_re,kernel_im");
            if oracle {
                let o = spectral::rep_kernel_oracle(c.a, c.s, z)?;
                json["oracle"] = cj(o);
                checks.push(CheckReport::relative(
                    "kernel.oracle",
                    params(&[("a", c.a), ("s_re", c.s.re), ("s_im", c.s.im), ("z_re", z.re), ("z_im", z.im)]),
                    k,
                    o,
                    tol,
                ));
                csv += &format!(",oracle_re,oracle_im\n{},{},{},{},{},{:.17e},{:.17e},{:.17e},{:.17e}\n", c.a, c.s.re, c.s.im, z.re, z.im, k.re, k.im, o.re, o.im);
            } else {
                csv += &format!("\n{},{},{},{},{},{:.17e},{:.17e}\n", c.a, c.s.re, c.s.im, z.re, z.im, k.re, k.im);
            }
            Ok((Output { name: "kernel", json, csv, checks, suite_fail: 0 }, c))
        }
        Cmd::Identities { c } => {
            let sr = run_suite("identities", &tols(&c), c.seed).expect("identities suite");
            Ok((suite_output("identities", sr, false), c))
        }
        Cmd::Extended { c } => {
            let t = tols(&c);
            let tol = c.tol.unwrap_or(t.ext_det_rel);
            let st = extended::ext_state(c.a);
            let mut checks = Vec::new();
            let mut dets = serde_json::Map::new();
            for (sign, key) in [(Sign::Plus, "plus"), (Sign::Minus, "minus")] {
                let num = extended::ext_det_nystrom(c.a, sign, c.n)?;
                let cl = extended::ext_det_closed(c.a, sign);
                dets.insert(key.into(), json!({ "nystrom": num, "closed": cl }));
                checks.push(CheckReport::real("extended.det", params(&[("a", c.a), ("sign", sign.f())]), num, cl, tol));
            }
            let json = json!({
                "a": c.a,
                "r": st.r, "s": st.s, "p": st.p, "q": st.q,
                "alpha": st.alpha, "beta": st.beta,
                "mu_ext": st.mu_ext,
                "det": Value::Object(dets),
            });
            Ok((Output { name: "extended", json, csv: extended::sweep_csv(&[c.a]), checks, suite_fail: 0 }, c))
        }
        Cmd::Scatter { c, gamma_max } => {
            let zeros = scattering::find_b_zeros(c.a, -0.2, gamma_max)?;
            let (amp, b) = scattering::jost_ab(c.a, c.s)?;
            let json = json!({
                "a": c.a,
                "s": cj(c.s),
                "jost_A": cj(amp),
                "jost_B": cj(b),
                "zeros": zeros.iter().map(|z| json!({ "gamma": z.gamma, "derivative": z.derivative })).collect::<Vec<_>>(),
            });
            let checks = zeros
                .iter()
                .map(|z| {
                    let mut r = CheckReport::real("scatter.zero_simple", params(&[("a", c.a), ("gamma", z.gamma)]), z.derivative.abs(), 0.0, 0.0);
                    r.pass = z.derivative.abs() > 0.0;
                    r
                })
                .collect();
            Ok((Output { name: "scatter", json, csv: scattering::zeros_csv(&zeros), checks, suite_fail: 0 }, c))
        }
        Cmd::Expand { c, k } => {
            let tol = c.tol.unwrap_or(tols(&c).parseval_rel);
            let (f, b): (Box<dyn Fn(f64) -> f64>, f64) = match k {
                TestFn::Bump => (Box::new(|x: f64| (-(x - 3.0).powi(2) / 0.5).exp()), 7.5),
                TestFn::Exp => (Box::new(|x: f64| (-x).exp()), 40.0),
                TestFn::Xexp => (Box::new(|x: f64| x * (-x).exp()), 45.0),
            };
            let pair = expansion::forward(&f, b)?;
            let norm_k = hxform::quad::integrate(|x| f(x) * f(x), 0.0, b, hxform::quad::panels_for(0.0, b, 0.1), 20);
            let norm_pair = pair.norm_sq();
            let checks = vec![CheckReport::real("expand.parseval", params(&[("B", b)]), norm_pair, norm_k, tol)];
            let json = json!({
                "B": b,
                "norm_k": norm_k,
                "norm_pair": norm_pair,
                "y": pair.f.nodes,
                "f": pair.f.values,
                "g": pair.g.values,
            });
            Ok((Output { name: "expand", json, csv: pair.to_csv(), checks, suite_fail: 0 }, c))
        }
        Cmd::Dirichlet { c, m } => {
            let tol = c.tol.unwrap_or(tols(&c).dirichlet_rel);
            let rows = dirichlet::compare_grid(c.s.re, c.n.max(128), m)?;
            let checks = dirichlet::comparison_reports(&rows, tol);
            let json = json!({
                "s": c.s.re,
                "rows": rows.iter().map(|r| json!({ "x": r.x, "y": r.y, "resolvent": r.resolvent, "repkernel": r.repkernel, "rel_err": r.rel_err })).collect::<Vec<_>>(),
            });
            Ok((Output { name: "dirichlet", json, csv: dirichlet::comparison_csv(&rows), checks, suite_fail: 0 }, c))
        }
        Cmd::Verify { c, suite, timing } => {
            let sr = run_suite(&suite, &tols(&c), c.seed).expect("suite name validated by clap");
            Ok((suite_output("verify", sr, timing), c))
        }
    }
}

fn tols(c: &Common) -> Tolerances {
    let mut t = Tolerances::profile(c.tol_profile);
    if c.n != 64 {
        t.n = c.n;
    }
    t
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, common) = match run(cli.cmd) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = out.render(common.format);
    let ext = if common.format == Format::Csv { "csv" } else { "json" };
    let path = common.out.clone().or_else(|| std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(format!("{}.{ext}", out.name))));
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                if let Err(e) = std::fs::create_dir_all(dir) {
                    eprintln!("error: {}: {e}", dir.display());
                    return ExitCode::from(2);
                }
            }
            if let Err(e) = std::fs::write(&p, &text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if out.failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
