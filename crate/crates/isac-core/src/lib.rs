//! Finite-alphabet engine for secure integrated sensing and communication
//! (ISAC) analysis.
//!
//! An ISAC transmitter steers channel statistics through an action sequence,
//! communicates with a legitimate receiver, and senses a target that doubles
//! as an eavesdropper. This crate provides the computational pieces needed to
//! study what such a system can achieve over finite alphabets:
//!
//! - [`prob`] — exact probability calculus: distributions, kernels,
//!   entropies, information densities, variational distance.
//! - [`channel`] — the channel model (actions, states, two receivers),
//!   joint-law construction, and the physical-degradedness check.
//! - [`estimator`] — optimal deterministic per-letter state estimators and
//!   expected distortions.
//! - [`region`] — asymptotic secrecy-distortion region points and a
//!   multi-start simplex search that traces the frontier.
//! - [`fbl`] — finite-blocklength achievable rates: Gaussian (dispersion)
//!   approximation and fully explicit epsilon terms from exact tail
//!   probabilities of information-density sums.
//! - [`sim`] — an operational random-binning simulator measuring
//!   reliability, secrecy, and distortion at small blocklengths.
//! - [`presets`] — ready-made channel fixtures used in tests and docs.
//!
//! All computations are deterministic: randomized procedures take explicit
//! 64-bit seeds and use a counter-based substream scheme, so results are
//! reproducible across runs, platforms, and degrees of parallelism.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only toggles the standard library for convenience.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod channel;
mod error;
pub mod estimator;
pub mod fbl;
mod math;
pub mod presets;
pub mod prob;
pub mod region;
pub mod rng;
pub mod sim;

pub use error::{Error, Result};
