//! Crate-wide error type. Every math-domain rejection names the violated
//! precondition so the CLI can map it to an exit code and a message.

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),

    #[error("element is numerically singular (smallest singular value ratio {0:.3e})")]
    SingularElement(f64),

    #[error("element is not in the (closed) cone: eigenvalue {0:.6e} below tolerance")]
    NotInCone(f64),

    #[error("principal minor Δ_{0} vanishes; generalized power branch undefined")]
    MinorVanishes(usize),

    #[error("argument lies outside the domain component containing 0 (Det B(w,w) ≤ 0)")]
    OutsideDomain,

    #[error("gamma pole hit: {0}")]
    PoleHit(String),

    #[error("partition weight {0} exceeds table maximum {1}")]
    WeightTooLarge(usize, usize),

    #[error("dimension d_m evaluated to {0}, not a positive integer; spherical engine inconsistency")]
    NonIntegerDimension(f64),

    #[error("argument has {found} nonzero singular values but the variety for this λ allows {allowed}")]
    ArgumentOffVariety { found: usize, allowed: usize },

    #[error("Pochhammer symbol (λ)_m vanishes for admissible partition {0}; check rank λ")]
    PochhammerZero(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("operation supports only {required}, got {got}")]
    UnsupportedAlgebra { required: String, got: String },

    #[error("growth class {growth} incompatible with Re t = {re_t}")]
    GrowthIncompatible { growth: String, re_t: f64 },

    #[error("quadrature did not converge: {0}")]
    QuadratureNotConverged(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
