//! Bistatic Doppler estimation toolkit for asynchronous, moving ISAC devices.
//!
//! The crate covers the full simulation-to-analysis loop:
//!
//! - [`scene`] — 2D bistatic scene geometry: angles of departure, bistatic
//!   angles, TX-motion and target-motion Doppler shifts, path delays, plus a
//!   finite-difference oracle used to validate every closed-form expression.
//! - [`channel`] — synthesis of multipath CIR frame sequences with
//!   carrier-frequency/phase/timing offsets, additive noise, irregular frame
//!   timing and optional Golay-waveform fidelity ([`golay`]).
//! - [`estimator`] — the phase-based pipeline: LoS-referenced offset
//!   cancellation, wrapped time-domain differencing, AoD-based model
//!   reduction, closed-form solve, Levenberg-Marquardt refinement, the
//!   reduced solve with a known device speed, and Savitzky-Golay smoothing.
//! - [`crlb`] — noise propagation model, Fisher information matrix and
//!   Cramér-Rao bounds with an independent numerical oracle.
//! - [`baseline`] — conjugate-LoS mixing + DFT peak picking, the reference
//!   method for static devices.
//! - [`harness`] — seeded Monte Carlo runner, parameter sweeps, metrics.
//! - [`trace`] — JSONL frame trace import/export.
//! - [`cli`] — the `asymov` command line entry points.

pub mod angles;
pub mod baseline;
pub mod channel;
pub mod cli;
pub mod crlb;
pub mod estimator;
pub mod golay;
pub mod harness;
pub mod scene;
pub mod trace;

mod error;

pub use error::{Error, Result};

/// Complex sample type used throughout the crate.
pub type Complex64 = num_complex::Complex64;
