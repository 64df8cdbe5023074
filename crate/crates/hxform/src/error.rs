use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of {func} at {at}")]
    Pole { func: &'static str, at: String },
    #[error("accuracy loss in {func}: estimated relative error {estimate:e}")]
    AccuracyLoss { func: &'static str, estimate: f64 },
    #[error("singular system: {0}")]
    Singular(String),
    #[error("eigensolver failure: {0}")]
    Eigen(String),
    #[error("support violation: {0}")]
    Support(String),
    #[error("truncation bound not met: {0}")]
    Truncation(String),
    #[error("bounds violation: {0}")]
    Bounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
