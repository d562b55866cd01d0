use alloc::string::String;

/// Everything that can go wrong inside the core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: left operand has n = {left}, right operand has n = {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("element is not a member of {0}")]
    NotInGroup(String),

    #[error("rank {index} out of range for a group of order {order}")]
    RankOutOfRange { index: u64, order: u64 },

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("k = {k} is below the validity threshold {threshold:.4} of this bound")]
    Domain { k: u64, threshold: f64 },

    #[error("distributions live on different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
