//! Error types shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("table is not a Latin square ({line} {index} repeats a value)")]
    NotLatinSquare { line: &'static str, index: usize },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cap exceeded for {what}: need {needed}, limit {limit}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("group has odd order, no index-2 subgroups exist")]
    OddOrder,

    #[error("homomorphisms do not share domain and codomain")]
    DomainMismatch,

    #[error("pair of homomorphisms is not fixed point free (coincide at {at})")]
    NotFpf { at: usize },

    #[error("domain order {domain} does not match permutation degree {degree}")]
    OrderMismatch { domain: usize, degree: usize },

    #[error("group has a nontrivial center (order {center_order})")]
    NotCenterless { center_order: usize },

    #[error("|T| = {n} is too small, need |T| > 2")]
    TTooSmall { n: usize },

    #[error("p = {p} is too small, need p > {min}")]
    PTooSmall { p: u64, min: u64 },

    #[error("modulus p = {p} is unsupported, truncated multiplication needs p >= 5")]
    BadModulus { p: u64 },

    #[error("Lie vectors belong to different bases or moduli")]
    BasisMismatch,

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("target degree m = {m} is too small, need m >= {min}")]
    DegreeTooSmall { m: usize, min: usize },

    #[error("group is abelian, the construction collapses")]
    Abelian,

    #[error("subgroup is not normal in its own normalizer (internal invariant broke)")]
    NotNormalInNormalizer,

    #[error("certificate check failed: {check}")]
    CertificateFailed { check: String },
}

impl Error {
    /// Process exit code mandated for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 2,
            Error::CertificateFailed { .. } => 3,
            _ => 1,
        }
    }
}
