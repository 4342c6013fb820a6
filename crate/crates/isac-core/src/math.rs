//! Thin wrappers over `libm` so the whole crate uses one software float
//! implementation. This keeps results bit-identical across platforms and
//! keeps the crate `no_std`-clean.

/// Probability vectors are accepted when their sum is within this tolerance
/// of one, then renormalized.
pub(crate) const INPUT_SUM_TOL: f64 = 1e-9;

/// Tolerance for internal consistency checks on already-normalized data.
pub(crate) const INTERNAL_SUM_TOL: f64 = 1e-12;

/// Entries more negative than this are rejected; tiny negative rounding
/// residue is clamped to zero.
pub(crate) const NEG_CLAMP: f64 = -1e-12;

#[inline]
pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn exp2(x: f64) -> f64 {
    libm::exp2(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

#[inline]
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `p * log2(p)` with the convention `0 * log 0 = 0`.
#[inline]
pub(crate) fn xlog2x(p: f64) -> f64 {
    if p > 0.0 {
        p * log2(p)
    } else {
        0.0
    }
}
