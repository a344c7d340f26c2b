use thiserror::Error;

/// Errors raised by the checkers, constructions and campaigns.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index pair ({k}, {l}) is not positive; indices are 1-based")]
    InvalidIndex { k: u64, l: u64 },

    #[error("invalid window: horizon {horizon} must exceed threshold {threshold}")]
    InvalidWindow { threshold: u64, horizon: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown gallery name `{0}`")]
    UnknownName(String),

    #[error("point ({x}, {y}) at index ({k}, {l}) lies outside the domain {domain}")]
    Domain {
        k: u64,
        l: u64,
        x: f64,
        y: f64,
        domain: String,
    },

    #[error("limit point ({x}, {y}) lies outside the domain {domain}")]
    LimitOutsideDomain { x: f64, y: f64, domain: String },

    #[error("selector is not strictly increasing at j = {j}")]
    InvalidSelector { j: u64 },

    #[error("function family kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },

    #[error("domain {0} is unbounded")]
    UnboundedDomain(String),

    #[error("family member {index} has domain {found}, expected {expected}")]
    FamilyDomain {
        index: String,
        found: String,
        expected: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
