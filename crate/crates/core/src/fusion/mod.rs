//! Fusion-category side: ring data and dimensions, closed-form `F^{qqq}_q`,
//! the jack algebra on `End(q ⊗ q)` with its rotation, and the braiding
//! eigenvalue relations. All numerics are `f64`.

mod consistency;
mod endq2;
mod fmatrix;
mod ring;

use num_complex::Complex64;
use thiserror::Error;

pub use consistency::{
    random_admissible_k2, skein_consistency_k1, skein_consistency_k2, K1Consistency, K2Consistency,
};
pub use endq2::{
    bone_in_jacks, gram_determinant, jj, jj_dual, jj_pm, new_bases, pretzel, span_rank,
    vertex_normalization, EndQ2Element,
};
pub use fmatrix::{cycle_type, f_matrix, verify_f_identities, FVariant, QqqFMatrix};
pub use ring::{qdims, FusionRingData, QDimVector, MAX_RANK};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FusionError {
    #[error("invalid fusion ring JSON: {0}")]
    Json(String),
    #[error("invalid fusion ring: {0}")]
    InvalidRing(String),
    #[error("power iteration did not converge in {0} iterations")]
    NotConverged(usize),
    #[error("quantum dimensions must be positive")]
    NonPositive,
    #[error("d_q^2 - 1 - sum d_x = {excess:e}, must vanish")]
    DimensionConstraint { excess: f64 },
    #[error("antisymmetric self-duality excluded: q x q = 1 + x + y forces kappa = 1")]
    AntisymmetricK2,
    #[error("kappa must be 1 or -1, got {0}")]
    BadKappa(i8),
    #[error("closed forms exist for k = 0, 1, 2 only, got k = {0}")]
    UnsupportedRank(usize),
    #[error("unknown F-matrix variant `{0}` (dubrovnik or kauffman)")]
    UnknownVariant(String),
    #[error("elements live over different dimensions")]
    DimsMismatch,
    #[error("label index {0} out of range")]
    BadLabel(usize),
    #[error("eigenvalue must have modulus 1, got {0}")]
    NotUnit(f64),
    #[error("d_q = {0} is not a positive real")]
    NotPositiveDim(f64),
    #[error("d_q = {0} lies in the forbidden interval (1, sqrt 2)")]
    ForbiddenDim(f64),
    #[error("beta and gamma must differ")]
    EqualEigenvalues,
    #[error("beta * gamma = {0} is neither 1 nor -1")]
    NotEigenPair(Complex64),
    #[error("d_q formulas disagree: {0:?}")]
    Disagree([f64; 3]),
}
