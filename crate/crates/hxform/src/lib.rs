//! Numerical laboratory for the transform with kernel J₀(2√(xy)) on the half-line.

pub mod dirichlet;
pub mod discretize;
pub mod error;
pub mod expansion;
pub mod extended;
pub mod fredholm;
pub mod identities;
pub mod oscill;
pub mod quad;
pub mod report;
pub mod scattering;
pub mod spectral;
pub mod specfun;
pub mod suite;

pub use error::{Error, Result};

pub type Complex = num_complex::Complex64;
