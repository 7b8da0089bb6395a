//! Core models for detecting and quarantining malicious IoT devices behind
//! aggregated SDN flows in a sliced mobile core.
//!
//! The crate covers four areas:
//!
//! * [`catalog`] — device type specifications (periodic transmitters) and
//!   their legitimate data rates.
//! * [`traffic`] / [`detection`] / [`montecarlo`] — sampled aggregated-flow
//!   traffic, threshold-based flow flagging and Monte Carlo experiments over
//!   independent flow rounds.
//! * [`analytics`] — closed-form detection probabilities computed by exact
//!   convolution of per-device rate distributions, plus a small brute-force
//!   oracle for cross-checking.
//! * [`quarantine`] — a discrete-event emulation of moving a flow between a
//!   serving slice and a quarantine slice (gateway lifecycle, context
//!   replication, rule reconfiguration).
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `sliceguard-cli` crate. Every randomized routine
//! takes an explicit RNG so results are reproducible bit-for-bit.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analytics;
pub mod catalog;
pub mod detection;
pub mod error;
pub mod montecarlo;
pub mod quarantine;
pub mod stats;
pub mod traffic;

pub use catalog::{builtin_factory_catalog, Catalog, DeviceTypeSpec};
pub use detection::{classify_flow, threshold_detection_limit, DetectionVerdict};
pub use error::{Error, Result};
pub use montecarlo::{run_experiment, sweep, ExperimentMetrics, ExperimentSpec, SweepParameter};
pub use traffic::{sample_population, Device, FlowPopulation, ScenarioParams};
