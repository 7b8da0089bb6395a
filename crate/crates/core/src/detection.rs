//! Threshold-based flow flagging.
//!
//! A flow is flagged when its measured traffic strictly exceeds
//! `threshold_ratio` times the expected traffic of its window. Ties are not
//! flagged: with integer rates a measurement can land exactly on the
//! threshold, and the strict comparison is what the closed forms in
//! [`crate::analytics`] assume.

use crate::error::{Error, Result};
use crate::traffic::{FlowMeasurement, ScenarioParams};

/// Outcome of comparing one flow window against the detection threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionVerdict {
    pub flagged: bool,
    /// Measured throughput in bits per second.
    pub measured_rate_bps: f64,
    /// Expected throughput in bits per second.
    pub expected_rate_bps: f64,
    /// `measured / expected`.
    pub ratio: f64,
}

/// Classifies one window measurement. Verdicts are independent per window;
/// there is no hysteresis or smoothing.
pub fn classify_flow(
    measured_bits: f64,
    expected_bits: f64,
    params: &ScenarioParams,
) -> Result<DetectionVerdict> {
    if !(expected_bits > 0.0) || !expected_bits.is_finite() {
        return Err(Error::InvalidInput(alloc::format!(
            "expected traffic must be positive, got {expected_bits}"
        )));
    }
    let to_bps = 1000.0 / params.sampling_period_ms;
    Ok(DetectionVerdict {
        flagged: measured_bits > params.threshold_ratio * expected_bits,
        measured_rate_bps: measured_bits * to_bps,
        expected_rate_bps: expected_bits * to_bps,
        ratio: measured_bits / expected_bits,
    })
}

/// [`classify_flow`] over a [`FlowMeasurement`].
pub fn classify_measurement(
    measurement: &FlowMeasurement,
    params: &ScenarioParams,
) -> Result<DetectionVerdict> {
    classify_flow(measurement.measured_bits, measurement.expected_bits, params)
}

/// Threshold ratio above which a single malicious device of the given type
/// can no longer lift its flow over the detection threshold:
///
/// `1 + r(x) * (freq_ratio - 1) / (mean_rate * n)`
///
/// where the denominator is the catalog-mean expected traffic of an n-device
/// flow. Detection of that type collapses once `threshold_ratio` passes this
/// value.
pub fn threshold_detection_limit(type_index: usize, params: &ScenarioParams) -> f64 {
    let excess = params.catalog.spec(type_index).legit_rate_bps() * (params.freq_ratio - 1.0);
    let expected = params.catalog.mean_rate_bps() * params.devices_per_flow as f64;
    1.0 + excess / expected
}
