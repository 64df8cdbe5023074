use hxform::report::{Profile, Tolerances};
use hxform::suite::run_suite;

fn check(name: &str) {
    let tol = Tolerances::profile(Profile::Default);
    let res = run_suite(name, &tol, 7).expect("known suite");
    let failed: Vec<String> = res
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} [{}] lhs={} rhs={} abs={:.3e} rel={:.3e} tol={:.1e}", c.id, c.params_string(), c.lhs, c.rhs, c.abs_err, c.rel_err, c.tol))
        .collect();
    assert!(failed.is_empty(), "{name}: {} failures\n{}", failed.len(), failed.join("\n"));
    assert!(!res.cases.is_empty());
}

#[test]
fn specfun() {
    check("specfun");
}

#[test]
fn discretize() {
    check("discretize");
}

#[test]
fn fredholm() {
    check("fredholm");
}

#[test]
fn spectral() {
    check("spectral");
}

#[test]
fn identities() {
    check("identities");
}

#[test]
fn extended() {
    check("extended");
}

#[test]
fn scattering() {
    check("scattering");
}

#[test]
fn expansion() {
    check("expansion");
}

#[test]
fn dirichlet() {
    check("dirichlet");
}

#[test]
fn unknown_suite() {
    assert!(run_suite("nope", &Tolerances::profile(Profile::Default), 0).is_none());
}
