use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zeta pole at s = 1")]
    PoleAtOne,
    #[error("gamma pole at nonpositive integer {0}")]
    PoleAtNonpositiveInteger(i64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("accuracy loss: estimated error {estimate:e} exceeds {requested:e}")]
    AccuracyLoss { estimate: f64, requested: f64 },
    #[error("quadrature did not converge after {0} subdivisions")]
    NonConvergence(usize),
    #[error("non-finite integrand sample at v = {0}")]
    SingularSample(String),
    #[error("unresolved residue at {0}")]
    UnresolvedResidue(String),
    #[error("catalog validation: {0}")]
    Validation(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
