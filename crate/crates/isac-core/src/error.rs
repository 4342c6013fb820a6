use alloc::string::String;

/// Errors reported by the engine.
///
/// Variants separate caller mistakes (mismatched alphabets, bad selections,
/// out-of-range parameters) from configured size guards, so callers can tell
/// "fix the input" apart from "this instance is too large for exact
/// computation".
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("invalid factor selection: {0}")]
    InvalidSelection(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = core::result::Result<T, Error>;
