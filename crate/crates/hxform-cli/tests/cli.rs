use std::process::{Command, Output};

fn hx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hxform")).args(args).env_remove("HXFORM_OUT_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn det_reports_closed_form() {
    let o = hx(&["det", "--a", "1.0", "--n", "64"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["det_plus"].as_f64().unwrap() - 1.6487213).abs() < 1e-7);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn spectral_at_half() {
    let o = hx(&["spectral", "--a", "1", "--s", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want = std::f64::consts::PI.sqrt() * (-2.0f64).exp();
    assert!((v["E"]["re"].as_f64().unwrap() - want).abs() < 1e-14);
}

#[test]
fn complex_parameter_and_csv() {
    let o = hx(&["kernel", "--s", "0.5,0.3", "--z", "0.5,-0.3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("a,s_re,s_im,z_re,z_im,kernel_re,kernel_im\n"));
    assert!(text.contains(",0.5,0.3,0.5,-0.3,"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["identities", "--seed", "3"][..], &["dirichlet", "--s", "1", "--format", "csv"][..], &["phi", "--a", "2", "--sign", "-"][..]] {
        let a = hx(args);
        let b = hx(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn failing_check_exits_one() {
    let o = hx(&["det", "--a", "2", "--n", "4", "--tol", "1e-15"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hx(&["nope"]).status.code(), Some(2));
    assert_eq!(hx(&["det", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(hx(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(hx(&["det", "--a", "-1"]).status.code(), Some(2));
    assert_eq!(hx(&["spectral", "--s", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn env_var_sets_output_directory() {
    let dir = std::env::temp_dir().join(format!("hxform-cli-test-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_hxform")).args(["mu", "--a", "0.5"]).env("HXFORM_OUT_DIR", &dir).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.join("mu.json")).unwrap();
    assert!(text.contains("\"mu\": 1.0"));
    let explicit = dir.join("x").join("mu.csv");
    let o = hx(&["mu", "--format", "csv", "--out", explicit.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&explicit).unwrap().starts_with("a,mu,mu_fd\n"));
    let _ = std::fs::remove_dir_all(&dir);
}
