//! Secrecy capacities and capacity bounds for wiretap channels with
//! transmitter side information.
//!
//! The crate covers three layers of the same communication problem:
//!
//! * **Linear deterministic model** ([`det`]): exact secrecy and secret-key
//!   capacities of the noise-free GF(2) wiretap channel, computed both from
//!   the explicit piecewise formula and from a rank expression built on
//!   [`gf2`], plus exhaustive entropy oracles that certify the two routes
//!   against each other.
//! * **Degraded Gaussian model** ([`gauss`]): closed-form achievable rates
//!   and upper bounds with provable half-bit gaps, the maximizing dirty-paper
//!   coefficient, secret-key bounds, and an independent mutual-information
//!   oracle based on covariance determinants.
//! * **Finite blocklength** ([`binning`]): a random double-binning
//!   encoder/decoder over the deterministic channel with exact,
//!   enumeration-based decoding error and eavesdropper leakage accounting.
//!
//! Every closed form is paired with an independent check; the [`verify`]
//! module packages those checks into named suites that the `wiretap` binary
//! and the acceptance tests both run.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod binning;
pub mod cli;
pub mod det;
pub mod gauss;
pub mod gf2;
pub mod manifest;
pub mod pmf;
pub mod verify;

use thiserror::Error;

/// Hard cap on the number of outcomes any exhaustive enumeration may visit.
/// Operations refuse (rather than sample) beyond this; it can only be
/// lowered, never raised, via the `WIRETAP_DET_BUDGET` environment variable
/// on the command line.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 24;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shift: k = {shift} out of range for dimension q = {dim}")]
    InvalidShift { shift: usize, dim: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("enumeration budget exceeded: {what} needs {needed} outcomes, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
    },

    #[error("invalid probability table: {0}")]
    InvalidPmf(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate mutual information: joint covariance is singular (one group determines the other)")]
    DegenerateMi,

    #[error("undefined rate: {0}")]
    UndefinedRate(String),

    #[error(
        "rho* does not exist: h1^2 = {h1_sq} is below the threshold h1T^2 = {threshold}"
    )]
    RhoStarUndefined { h1_sq: f64, threshold: f64 },

    #[error("channel model error: {0}")]
    ModelError(String),

    #[error("alphabet budget exceeded: {0}")]
    AlphabetTooLarge(String),

    #[error("unknown curve identifier: {0}")]
    UnknownCurve(String),

    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use binning::{encode, evaluate, generate_codebook, rate_region_probe, BinningConfig, Codebook, SimReport};
pub use det::{
    det_dpc_capacity, det_secrecy_capacity_cases, det_secrecy_capacity_rank,
    det_secret_key_capacity, exhaustive_cond_entropy, max_cond_entropy_formula,
    semidet_capacity_search, CapacityCase, DetWiretapParams, SemiDetChannel,
};
pub use gauss::{
    alpha_star, costa_capacity, costa_suboptimal_rate, mi_gaussian, rho_star, secrecy_bounds,
    secrecy_rate_achievable, secret_key_bounds, sweep, CovarianceMatrix, GaussWiretapParams,
    RateBounds, SecretKeyBounds, SweepCurve, SweepPoint,
};
pub use gf2::{downshift_power, hstack, solve_in_affine, vstack, Gf2Matrix, Gf2Solver, Gf2Vector};
pub use pmf::JointPmf;
